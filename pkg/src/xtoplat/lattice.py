"""Finite bounded lattices with verified meet/join tables.

All lattices here are finite, hence complete; finite meets and joins
materialize every infinitary operation, so no separate completeness
machinery exists.  ("Finitely joinable" is likewise vacuous at this scale:
any join that reaches the top element already does so over finitely many
terms.)  The empty meet is the top element and the empty join the bottom,
which is what makes irredundance tests over Max(X)\\{q} behave when X has
a single maximal element.

:func:`upset_lattice` realizes any finite poset P inside a lattice: the
elements are the up-closed subsets of P ordered by *reverse* inclusion,
so meet is set union, join is set intersection, the top is ∅ and the
bottom is all of P.  Under this convention the varieties of the embedded
copy of P are exactly the up-sets, i.e. closed = up-closed (the Alexandrov
picture with the specialization order equal to the original order).

Construction verifies the tables completely: the quadratic pointwise
checks (bounds, commutativity, idempotence, absorption, agreement with
the order) plus glb/lub universality, which reduces to one bitmask test
per pair over the down-/up-set rows.  A table that is the greatest lower
bound for every pair is automatically associative, so no cubic check is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyPosetError, NotALatticeError, SubsetViolationError
from .poset import FinitePoset, _mask_to_set


class FiniteLattice:
    """A finite bounded lattice: a poset plus total meet/join tables."""

    __slots__ = ("poset", "meet_table", "join_table", "bottom", "top")

    def __init__(
        self,
        poset: FinitePoset,
        meet_table: Sequence[Sequence[int]],
        join_table: Sequence[Sequence[int]],
    ):
        n = poset.n
        if n == 0:
            raise EmptyPosetError("a lattice needs at least one element")
        meet = tuple(tuple(row) for row in meet_table)
        join = tuple(tuple(row) for row in join_table)
        if len(meet) != n or len(join) != n or any(len(r) != n for r in meet + join):
            raise ValueError("meet/join tables must be total n×n tables")
        self.poset = poset
        self.meet_table = meet
        self.join_table = join
        full = (1 << n) - 1
        down = poset.down_rows()
        bottoms = [i for i in range(n) if poset._up[i] == full]
        tops = [i for i in range(n) if down[i] == full]
        if len(bottoms) != 1 or len(tops) != 1:
            raise NotALatticeError(
                "meet" if len(bottoms) != 1 else "join",
                poset.labels[0],
                poset.labels[-1],
            )
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.validate()

    def validate(self) -> None:
        """Verify the tables are exactly the glb/lub for every pair.

        down(meet[a][b]) == down(a) ∩ down(b) says precisely "c <= meet
        iff c is a common lower bound", i.e. the meet is the greatest
        lower bound; dually for the join.  Commutativity, idempotence,
        absorption and agreement with the order are consequences of
        glb/lub-ness, as is associativity, so the two row equalities per
        unordered pair are a complete axiom check.
        """
        P = self.poset
        n = P.n
        up = P._up
        down = P.down_rows()
        meet, join = self.meet_table, self.join_table
        for a in range(n):
            meets_a, joins_a = meet[a], join[a]
            down_a, up_a = down[a], up[a]
            for b in range(a, n):
                m, j = meets_a[b], joins_a[b]
                if (
                    m != meet[b][a]
                    or j != join[b][a]
                    or down[m] != down_a & down[b]
                    or up[j] != up_a & up[b]
                ):
                    raise NotALatticeError("meet", P.labels[a], P.labels[b])

    # -- queries ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_all(self, elems: Iterable[int]) -> int:
        """Greatest lower bound of a set; the empty meet is the top."""
        acc = self.top
        for e in elems:
            acc = self.meet_table[acc][e]
        return acc

    def join_all(self, elems: Iterable[int]) -> int:
        """Least upper bound of a set; the empty join is the bottom."""
        acc = self.bottom
        for e in elems:
            acc = self.join_table[acc][e]
        return acc

    def maximals_of(self, members: Iterable[int]) -> frozenset[int]:
        """Maximal elements of a subset under the lattice order."""
        ms = set(members)
        return frozenset(a for a in ms if not any(self.poset.lt(a, b) for b in ms))

    def minimals_of(self, members: Iterable[int]) -> frozenset[int]:
        ms = set(members)
        return frozenset(a for a in ms if not any(self.poset.lt(b, a) for b in ms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (
            self.poset == other.poset
            and self.meet_table == other.meet_table
            and self.join_table == other.join_table
        )

    def __hash__(self) -> int:
        return hash((self.poset, self.meet_table, self.join_table))

    def __repr__(self) -> str:
        return f"FiniteLattice({self.n} elements, bottom={self.labels[self.bottom]!r}, top={self.labels[self.top]!r})"


@dataclass(frozen=True)
class EmbeddedSubset:
    """A subset X ⊆ L \\ {top}: the candidate carrier of a Zariski-like topology."""

    lattice: FiniteLattice
    members: frozenset[int]

    def __post_init__(self):
        for x in self.members:
            self.lattice.poset._check(x)
        if self.lattice.top in self.members:
            raise SubsetViolationError("the top element cannot belong to X")


def lattice_from_poset(P: FinitePoset) -> FiniteLattice:
    """Fill meet/join tables by exhaustive glb/lub search over P.

    Raises :class:`NotALatticeError` naming a witness pair as soon as some
    pair has no greatest lower bound or least upper bound.
    """
    if P.n == 0:
        raise EmptyPosetError("a lattice needs at least one element")
    n = P.n
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if P.leq(c, a) and P.leq(c, b)]
            glb = [c for c in lower if all(P.leq(d, c) for d in lower)]
            if len(glb) != 1:
                raise NotALatticeError("meet", P.labels[a], P.labels[b])
            upper = [c for c in range(n) if P.leq(a, c) and P.leq(b, c)]
            lub = [c for c in upper if all(P.leq(c, d) for d in upper)]
            if len(lub) != 1:
                raise NotALatticeError("join", P.labels[a], P.labels[b])
            meet[a][b] = glb[0]
            join[a][b] = lub[0]
    return FiniteLattice(P, meet, join)


def upset_lattice(P: FinitePoset) -> tuple[FiniteLattice, dict[int, int]]:
    """The lattice of up-sets of P under reverse inclusion, plus the embedding.

    Meet is set union and join set intersection (reverse inclusion swaps
    them); the embedding sends x to its principal up-set ↑x and is
    order-preserving and injective.  Principal up-sets keep the original
    element's label; other up-sets are labelled with set notation.
    """
    if P.n == 0:
        raise EmptyPosetError("the empty poset has no up-set lattice")
    masks = sorted(P.upset_masks(), key=lambda m: (bin(m).count("1"), m))
    position = {m: k for k, m in enumerate(masks)}
    principal = {P.up_mask(x): x for x in range(P.n)}
    labels = []
    for m in masks:
        if m in principal:
            labels.append(P.labels[principal[m]])
        else:
            members = ",".join(P.labels[i] for i in sorted(_mask_to_set(m)))
            labels.append("{" + members + "}")
    # reverse inclusion: A <= B  iff  A ⊇ B
    up_rows = []
    for a in masks:
        row = 0
        for k, b in enumerate(masks):
            if a | b == a:
                row |= 1 << k
        up_rows.append(row)
    order = FinitePoset(labels, up_rows)
    k = len(masks)
    meet = [[position[masks[a] | masks[b]] for b in range(k)] for a in range(k)]
    join = [[position[masks[a] & masks[b]] for b in range(k)] for a in range(k)]
    lattice = FiniteLattice(order, meet, join)
    embedding = {x: position[P.up_mask(x)] for x in range(P.n)}
    return lattice, embedding


def is_distributive(L: FiniteLattice) -> bool:
    """a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for all triples."""
    n = L.n
    return all(
        L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c))
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


def has_complete_max_property(L: FiniteLattice, X: EmbeddedSubset) -> bool:
    """Every q maximal in X satisfies ⋀(Max(X) \\ {q}) ≰ q."""
    maxima = L.maximals_of(X.members)
    return all(
        not L.leq(L.meet_all(maxima - {q}), q) for q in maxima
    )


def _require_between(L: FiniteLattice, X: EmbeddedSubset, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(A)
    for a in A:
        L.poset._check(a)
    if not X.members <= A:
        raise SubsetViolationError("X must be contained in A")
    return A


def is_coatomic(L: FiniteLattice, X: EmbeddedSubset, A: Iterable[int]) -> bool:
    """Every a ∈ A lies below some maximal element of X."""
    A = _require_between(L, X, A)
    maxima = L.maximals_of(X.members)
    return all(any(L.leq(a, m) for m in maxima) for a in A)


def is_atomic(L: FiniteLattice, X: EmbeddedSubset, A: Iterable[int]) -> bool:
    """Every a ∈ A lies above some minimal element of X."""
    A = _require_between(L, X, A)
    minima = L.minimals_of(X.members)
    return all(any(L.leq(m, a) for m in minima) for a in A)
