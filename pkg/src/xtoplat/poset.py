"""Finite partially ordered sets.

Elements are dense indices ``0..n-1`` with a label table; subsets are
``frozenset[int]``.  The order is stored as a full n×n boolean relation,
kept internally as one bitmask row per element (bit ``j`` of ``up[i]`` is
set iff ``i <= j``).  The reflexive-transitive closure is computed eagerly
at construction, so all queries are O(1) table lookups.

Constructors cover the shapes used throughout: chains C_k, antichains,
trees T_n (one maximal element over n pairwise-incomparable minimals),
dual trees V_m (one minimal element under m maximals), and forests
(disjoint unions of those, labels suffixed with ``#<component>`` to stay
distinct).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    CycleError,
    DuplicateLabelError,
    EmptyPosetError,
    EmptySpecError,
    ZeroSizeError,
)

ForestComponent = tuple[str, int]  # ("T" | "V" | "C", parameter)


def _letters(k: int) -> list[str]:
    """k distinct labels: a, b, ..., z, aa, ab, ... (spreadsheet style)."""
    out = []
    for i in range(k):
        name = ""
        j = i
        while True:
            name = chr(ord("a") + j % 26) + name
            j = j // 26 - 1
            if j < 0:
                break
        out.append(name)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """An immutable finite poset over labelled elements."""

    __slots__ = ("labels", "_up", "_index", "_down")

    def __init__(self, labels: Sequence[str], up_masks: Sequence[int]):
        labels = tuple(labels)
        up = tuple(up_masks)
        if len(set(labels)) != len(labels):
            seen: set[str] = set()
            for name in labels:
                if name in seen:
                    raise DuplicateLabelError(f"duplicate label {name!r}")
                seen.add(name)
        if len(up) != len(labels):
            raise ValueError("one relation row per label required")
        n = len(labels)
        full = (1 << n) - 1
        for i, row in enumerate(up):
            if row & ~full:
                raise ValueError("relation row mentions elements out of range")
            if not row >> i & 1:
                raise ValueError(f"relation is not reflexive at {labels[i]!r}")
        for i in range(n):
            strict = up[i] & ~(1 << i)
            for j in _bits(strict):
                if up[j] >> i & 1:
                    raise CycleError(labels[i], labels[j])
                if up[j] & ~up[i]:
                    raise ValueError(
                        f"relation is not transitive at {labels[i]!r} <= {labels[j]!r}"
                    )
        self.labels = labels
        self._up = up
        self._index = {name: i for i, name in enumerate(labels)}
        self._down: tuple[int, ...] | None = None

    # -- basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.labels, self._up))

    def __repr__(self) -> str:
        return f"FinitePoset({self.n} elements: {', '.join(self.labels[:8])}{'...' if self.n > 8 else ''})"

    def index(self, label: str) -> int:
        return self._index[label]

    def leq(self, i: int, j: int) -> bool:
        """i <= j."""
        self._check(i)
        self._check(j)
        return bool(self._up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def incomparable(self, i: int, j: int) -> bool:
        """i ∥ j: neither i <= j nor j <= i."""
        return not self.leq(i, j) and not self.leq(j, i)

    @property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        """Full boolean view of the relation; entry [i][j] is i <= j."""
        n = self.n
        return tuple(tuple(bool(row >> j & 1) for j in range(n)) for row in self._up)

    def up_mask(self, i: int) -> int:
        self._check(i)
        return self._up[i]

    def down_rows(self) -> tuple[int, ...]:
        """Transpose of the relation: bit i of row j is set iff i <= j."""
        if self._down is None:
            down = [0] * self.n
            for i, row in enumerate(self._up):
                bit = 1 << i
                for j in _bits(row):
                    down[j] |= bit
            self._down = tuple(down)
        return self._down

    def down_mask(self, i: int) -> int:
        self._check(i)
        return self.down_rows()[i]

    def up_set(self, i: int) -> frozenset[int]:
        """↑i = {j : i <= j}."""
        return _mask_to_set(self.up_mask(i))

    def down_set(self, i: int) -> frozenset[int]:
        """↓i = {j : j <= i}."""
        return _mask_to_set(self.down_mask(i))

    def _check(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"element index {i} out of range 0..{self.n - 1}")

    # -- order statistics ---------------------------------------------------

    def heights(self) -> tuple[int, ...]:
        """Height of every element: longest strict chain ending there."""
        down = self.down_rows()
        order = sorted(range(self.n), key=lambda i: bin(down[i]).count("1"))
        ht = [0] * self.n
        for i in order:
            below = down[i] & ~(1 << i)
            ht[i] = 1 + max((ht[j] for j in _bits(below)), default=-1)
        return tuple(ht)

    def height(self, x: int) -> int:
        """Length of the longest strictly ascending chain ending at x."""
        self._check(x)
        return self.heights()[x]

    def krull_dim(self) -> int:
        """Maximum height over all elements."""
        if self.n == 0:
            raise EmptyPosetError("Krull dimension of the empty poset is undefined")
        return max(self.heights())

    def minimals(self) -> frozenset[int]:
        down = self.down_rows()
        return frozenset(i for i in range(self.n) if down[i] == 1 << i)

    def maximals(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self._up[i] == 1 << i)

    def extremes(self) -> tuple[frozenset[int], frozenset[int]]:
        """(Min, Max) as index sets."""
        return self.minimals(), self.maximals()

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (i, j): i < j with nothing strictly between."""
        down = self.down_rows()
        out = []
        for i in range(self.n):
            strict_up = self._up[i] & ~(1 << i)
            for j in _bits(strict_up):
                if strict_up & down[j] & ~(1 << j) == 0:
                    out.append((i, j))
        return tuple(sorted(out))

    # -- up-sets ------------------------------------------------------------

    def upsets(self) -> tuple[frozenset[int], ...]:
        """All up-closed subsets, including ∅ and the full set.

        Generated recursively (an up-set either contains a chosen maximal
        element m, or avoids ↓m entirely), so the cost is proportional to
        the output rather than 2^n.
        """
        masks = sorted(self.upset_masks())
        return tuple(_mask_to_set(m) for m in masks)

    def upset_masks(self) -> list[int]:
        down = [self.down_mask(i) for i in range(self.n)]

        @lru_cache(maxsize=None)
        def gen(alive: int) -> tuple[int, ...]:
            if alive == 0:
                return (0,)
            # any element maximal inside `alive`
            m = next(
                i
                for i in range(self.n)
                if alive >> i & 1 and self._up[i] & alive == 1 << i
            )
            with_m = tuple(u | 1 << m for u in gen(alive & ~(1 << m)))
            without_m = gen(alive & ~down[m])
            return with_m + without_m

        result = list(gen((1 << self.n) - 1))
        gen.cache_clear()
        return result

    # -- structure ----------------------------------------------------------

    def order_components(self) -> tuple[frozenset[int], ...]:
        """Connected components of the comparability graph, sorted."""
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                i = frontier.pop()
                for j in range(self.n):
                    if j not in comp and (self.leq(i, j) or self.leq(j, i)):
                        comp.add(j)
                        frontier.append(j)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(sorted(comps, key=lambda c: min(c)))

    def restrict(self, members: Iterable[int]) -> "FinitePoset":
        """Induced subposet on the given elements (original label text kept)."""
        idx = sorted(set(members))
        for i in idx:
            self._check(i)
        pos = {i: p for p, i in enumerate(idx)}
        labels = [self.labels[i] for i in idx]
        up = []
        for i in idx:
            row = 0
            for j in idx:
                if self.leq(i, j):
                    row |= 1 << pos[j]
            up.append(row)
        return FinitePoset(labels, up)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _from_pairs(labels: Sequence[str], index_pairs: Iterable[tuple[int, int]]) -> FinitePoset:
    """Poset from (i <= j) index pairs; reflexive-transitive closure applied."""
    n = len(labels)
    up = [1 << i for i in range(n)]
    for i, j in index_pairs:
        up[i] |= 1 << j
    changed = True
    while changed:  # Warshall closure on mask rows
        changed = False
        for i in range(n):
            row = up[i]
            for j in range(n):
                if row >> j & 1 and up[j] & ~row:
                    row |= up[j]
            if row != up[i]:
                up[i] = row
                changed = True
    return FinitePoset(labels, up)


def poset_from_relation(
    labels: Sequence[str], pairs: Iterable[tuple[str, str]]
) -> FinitePoset:
    """Build a poset from named pairs, each meaning ``first <= second``.

    The order is the reflexive-transitive closure of the pairs; a closure
    that violates antisymmetry raises :class:`CycleError`.
    """
    labels = tuple(labels)
    seen: set[str] = set()
    for name in labels:
        if name in seen:
            raise DuplicateLabelError(f"duplicate label {name!r}")
        seen.add(name)
    index = {name: i for i, name in enumerate(labels)}
    index_pairs = []
    for a, b in pairs:
        if a not in index or b not in index:
            missing = a if a not in index else b
            raise ValueError(f"pair mentions unknown label {missing!r}")
        index_pairs.append((index[a], index[b]))
    return _from_pairs(labels, index_pairs)


def chain(k: int) -> FinitePoset:
    """Totally ordered poset x0 < x1 < ... with k elements (length k-1)."""
    if k < 1:
        raise ZeroSizeError("a chain needs at least one element")
    labels = [f"x{i}" for i in range(k)]
    return _from_pairs(labels, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> FinitePoset:
    """k pairwise-incomparable elements."""
    if k < 1:
        raise ZeroSizeError("an antichain needs at least one element")
    return _from_pairs([f"a{i}" for i in range(k)], [])


def tree(n: int) -> FinitePoset:
    """T_n: one maximal element ``m`` over n pairwise-incomparable minimals."""
    if n < 1:
        raise ZeroSizeError("a tree needs at least one minimal element")
    labels = _letters(n) + ["m"]
    return _from_pairs(labels, [(i, n) for i in range(n)])


def dual_tree(m: int) -> FinitePoset:
    """V_m: one minimal element ``r`` under m pairwise-incomparable maximals."""
    if m < 1:
        raise ZeroSizeError("a dual tree needs at least one maximal element")
    labels = ["r"] + _letters(m)
    return _from_pairs(labels, [(0, i) for i in range(1, m + 1)])


def forest(spec: Sequence[ForestComponent]) -> FinitePoset:
    """Disjoint union of T/V/C components; labels get a ``#<k>`` suffix."""
    if not spec:
        raise EmptySpecError("a forest needs at least one component")
    builders = {"T": tree, "V": dual_tree, "C": chain}
    labels: list[str] = []
    pairs: list[tuple[int, int]] = []
    for k, (kind, size) in enumerate(spec, start=1):
        kind = kind.upper()
        if kind not in builders:
            raise ValueError(f"unknown forest component kind {kind!r}")
        part = builders[kind](size)
        offset = len(labels)
        labels.extend(f"{name}#{k}" for name in part.labels)
        pairs.extend((offset + i, offset + j) for i, j in part.covers())
    return _from_pairs(labels, pairs)


# -- component shape classification ----------------------------------------


def component_shape(P: FinitePoset, component: frozenset[int]) -> ForestComponent | None:
    """Classify one order-component as ("C", k), ("T", n) or ("V", m).

    A 2-chain reports as ("C", 2) even though T_1 = C_2 = V_1; callers that
    care about the coincidence should test with :func:`is_tree_component`
    and :func:`is_dual_tree_component` instead.  Returns None for any other
    shape.
    """
    comp = sorted(component)
    k = len(comp)
    if all(P.leq(a, b) or P.leq(b, a) for a in comp for b in comp):
        return ("C", k)
    n = is_tree_component(P, component)
    if n is not None:
        return ("T", n)
    m = is_dual_tree_component(P, component)
    if m is not None:
        return ("V", m)
    return None


def is_tree_component(P: FinitePoset, component: frozenset[int]) -> int | None:
    """n if the component is a T_n (n >= 1), else None."""
    comp = sorted(component)
    tops = [i for i in comp if not any(P.lt(i, j) for j in comp)]
    if len(tops) != 1:
        return None
    top = tops[0]
    base = [i for i in comp if i != top]
    if not base:
        return None
    for i in base:
        if not P.lt(i, top):
            return None
        if any(P.lt(j, i) or (j != i and P.lt(i, j) and j != top) for j in comp):
            return None
    return len(base)


def is_dual_tree_component(P: FinitePoset, component: frozenset[int]) -> int | None:
    """m if the component is a V_m (m >= 1), else None."""
    comp = sorted(component)
    bottoms = [i for i in comp if not any(P.lt(j, i) for j in comp)]
    if len(bottoms) != 1:
        return None
    bottom = bottoms[0]
    cover = [i for i in comp if i != bottom]
    if not cover:
        return None
    for i in cover:
        if not P.lt(bottom, i):
            return None
        if any(P.lt(i, j) or (j != i and P.lt(j, i) and j != bottom) for j in comp):
            return None
    return len(cover)


def is_forest_of_trees(P: FinitePoset, min_base: int = 2) -> bool:
    """True iff every order-component is a T_n with n >= min_base."""
    if P.n == 0:
        return False
    return all(
        (n := is_tree_component(P, comp)) is not None and n >= min_base
        for comp in P.order_components()
    )


def has_dual_tree_component(P: FinitePoset) -> bool:
    """True iff some order-component is a V_m, m >= 1 (2-chains included)."""
    return any(
        is_dual_tree_component(P, comp) is not None for comp in P.order_components()
    )
