"""Finite commutative semirings, their ideals and prime spectra.

A semiring here is a finite set with two tables: (R, +, 0) a commutative
monoid, (R, ·, 1) a commutative monoid, multiplication distributing over
addition, 0 absorbing, and 1 ≠ 0.  All five axioms are re-verified on
every construction path, including the generated B(n, i) tables.

Ideals are plain ``frozenset[int]`` of element indices.  Enumeration runs
the principal-ideal sum closure to a fixpoint (every ideal is the sum of
its principal subideals, so the closure is complete); the test-suite
checks it against an exhaustive subset scan for small carriers.  A prime
ideal is a proper ideal P with ab ∈ P ⇒ a ∈ P or b ∈ P: elementwise and
idealwise primality coincide for commutative semirings and the
elementwise form is directly checkable.

The B(n, i) family lives on {0, ..., n-1} with sums/products wrapped into
[i, n-1] modulo n-i on overflow; B(n, 0) is the ring of integers mod n
and B(2, 1) the Boolean semiring.  The closed-form description of
Spec(B(n, i)) used by :func:`verify_bni` is stated for 1 <= i <= n-1 with
a separate zero-dimensionality clause covering i = 0; this module accepts
the full range 0 <= i <= n-1 and verifies the i = 0 column against the
integers-mod-n behavior.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import AxiomError, NotAnIdealError, RangeError
from .lattice import EmbeddedSubset, FiniteLattice
from .poset import FinitePoset
from .topology import XTopSpace, build_space


@dataclass(frozen=True)
class FiniteSemiring:
    """Element labels plus total addition/multiplication tables."""

    labels: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def add_(self, a: int, b: int) -> int:
        return self.add[a][b]

    def mul_(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def elements(self) -> range:
        return range(self.n)


def _resolve(labels: Sequence[str], entry) -> int:
    if isinstance(entry, str):
        try:
            return labels.index(entry)
        except ValueError:
            raise ValueError(f"unknown element label {entry!r}") from None
    return int(entry)


def semiring_from_tables(
    labels: Sequence[str],
    add: Sequence[Sequence],
    mul: Sequence[Sequence],
    zero,
    one,
) -> FiniteSemiring:
    """Validate the five semiring axioms and return the semiring.

    Table entries and ``zero``/``one`` may be given as labels or indices.
    Raises :class:`AxiomError` naming the violated axiom and a witness.
    """
    labels = tuple(labels)
    n = len(labels)
    if n == 0:
        raise ValueError("a semiring needs at least one element")
    if len(set(labels)) != n:
        raise ValueError("element labels must be pairwise distinct")
    if len(add) != n or len(mul) != n or any(len(r) != n for r in list(add) + list(mul)):
        raise ValueError("add/mul tables must be total n×n tables")
    add_t = tuple(tuple(_resolve(labels, e) for e in row) for row in add)
    mul_t = tuple(tuple(_resolve(labels, e) for e in row) for row in mul)
    z = _resolve(labels, zero)
    o = _resolve(labels, one)
    for table in (add_t, mul_t):
        for row in table:
            for e in row:
                if not 0 <= e < n:
                    raise ValueError("table entry out of range")

    def witness(*idx: int) -> tuple[str, ...]:
        return tuple(labels[i] for i in idx)

    # one pass per axiom so the reported violation is deterministic
    if z == o:
        raise AxiomError("distinct-identities", witness(z))
    for a in range(n):
        if add_t[a][z] != a or add_t[z][a] != a:
            raise AxiomError("additive-identity", witness(a))
    for a in range(n):
        if mul_t[a][o] != a or mul_t[o][a] != a:
            raise AxiomError("multiplicative-identity", witness(a))
    for a in range(n):
        if mul_t[a][z] != z or mul_t[z][a] != z:
            raise AxiomError("absorption", witness(a))
    for a in range(n):
        for b in range(n):
            if add_t[a][b] != add_t[b][a]:
                raise AxiomError("additive-commutativity", witness(a, b))
            if mul_t[a][b] != mul_t[b][a]:
                raise AxiomError("multiplicative-commutativity", witness(a, b))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if add_t[add_t[a][b]][c] != add_t[a][add_t[b][c]]:
                    raise AxiomError("additive-associativity", witness(a, b, c))
                if mul_t[mul_t[a][b]][c] != mul_t[a][mul_t[b][c]]:
                    raise AxiomError("multiplicative-associativity", witness(a, b, c))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul_t[a][add_t[b][c]] != add_t[mul_t[a][b]][mul_t[a][c]]:
                    raise AxiomError("distributivity", witness(a, b, c))
    return FiniteSemiring(labels, add_t, mul_t, z, o)


def bni(n: int, i: int) -> FiniteSemiring:
    """The B(n, i) semiring on {0..n-1} with wrap-into-[i, n-1] overflow.

    A value v > n-1 maps to the unique u with i <= u <= n-1 and
    v ≡ u (mod n-i).  B(n, 0) gives integers mod n, B(2, 1) the Boolean
    semiring.  The generated tables are re-validated against all five
    axioms, guarding the overflow rule against off-by-one errors.
    """
    if n < 2:
        raise RangeError("B(n, i) needs n >= 2")
    if not 0 <= i <= n - 1:
        raise RangeError("B(n, i) needs 0 <= i <= n-1")

    def wrap(v: int) -> int:
        if v <= n - 1:
            return v
        return i + (v - i) % (n - i)

    labels = [str(v) for v in range(n)]
    add = [[wrap(a + b) for b in range(n)] for a in range(n)]
    mul = [[wrap(a * b) for b in range(n)] for a in range(n)]
    return semiring_from_tables(labels, add, mul, 0, 1)


def s3() -> FiniteSemiring:
    """The three-element semiring {0, a, 1} with a + a = a and 1 + a = 1."""
    labels = ["0", "a", "1"]
    add = [
        ["0", "a", "1"],
        ["a", "a", "1"],
        ["1", "1", "1"],
    ]
    mul = [
        ["0", "0", "0"],
        ["0", "a", "a"],
        ["0", "a", "1"],
    ]
    return semiring_from_tables(labels, add, mul, "0", "1")


def omega(k: int) -> int:
    """Number of distinct prime divisors of k >= 2."""
    if k < 2:
        raise RangeError("omega(k) needs k >= 2")
    count = 0
    d = 2
    while d * d <= k:
        if k % d == 0:
            count += 1
            while k % d == 0:
                k //= d
        d += 1
    return count + (1 if k > 1 else 0)


def prime_divisors(k: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return tuple(out)


# -- ideals -----------------------------------------------------------------


def principal_ideal(R: FiniteSemiring, a: int) -> frozenset[int]:
    """(a) = {r·a : r ∈ R}; closed under sums by distributivity."""
    return frozenset(R.mul[r][a] for r in R.elements())


def is_ideal(R: FiniteSemiring, members: frozenset[int]) -> bool:
    """Nonempty, contains zero, closed under + and under r·(-)."""
    if not members or R.zero not in members:
        return False
    return all(
        R.add[a][b] in members for a in members for b in members
    ) and all(R.mul[r][a] in members for r in R.elements() for a in members)


def ideal_sum(R: FiniteSemiring, I: frozenset[int], J: frozenset[int]) -> frozenset[int]:
    add = R.add
    return frozenset(add[a][b] for a in I for b in J)


@lru_cache(maxsize=64)
def ideals(R: FiniteSemiring) -> tuple[frozenset[int], ...]:
    """All ideals: the sum-closure of the principal ideals, to a fixpoint.

    Closing under sums with principal ideals suffices: every ideal is the
    sum of the principal ideals of its members.
    """
    principals = {principal_ideal(R, a) for a in R.elements()}
    found = set(principals)
    frontier = list(found)
    while frontier:
        new: list[frozenset[int]] = []
        for I in frontier:
            for J in principals:
                s = ideal_sum(R, I, J)
                if s not in found:
                    found.add(s)
                    new.append(s)
        frontier = new
    for I in found:
        assert is_ideal(R, I)
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def is_subtractive(R: FiniteSemiring, I: frozenset[int]) -> bool:
    """r + a ∈ I with a ∈ I forces r ∈ I."""
    if not is_ideal(R, I):
        raise NotAnIdealError(f"{sorted(I)} is not an ideal")
    return all(
        r in I
        for r in R.elements()
        for a in I
        if R.add[r][a] in I
    )


def is_subtractive_semiring(R: FiniteSemiring) -> bool:
    return all(is_subtractive(R, I) for I in ideals(R))


def is_prime_ideal(R: FiniteSemiring, I: frozenset[int]) -> bool:
    """Proper, and ab ∈ I implies a ∈ I or b ∈ I."""
    if len(I) == R.n:
        return False
    return all(
        a in I or b in I
        for a in R.elements()
        for b in R.elements()
        if R.mul[a][b] in I
    )


def nilradical(R: FiniteSemiring) -> frozenset[int]:
    """Elements with a^k = 0 for some k >= 1 (powers cycle within |R| steps)."""
    out = set()
    for a in R.elements():
        power = a
        seen = set()
        while power not in seen:
            seen.add(power)
            if power == R.zero:
                out.add(a)
                break
            power = R.mul[power][a]
    return frozenset(out)


@dataclass(frozen=True)
class SpectrumReport:
    """All ideals, the prime/maximal/minimal spectra and algebraic flags."""

    ideals: tuple[frozenset[int], ...]
    spec: tuple[frozenset[int], ...]
    max: tuple[frozenset[int], ...]
    min_primes: tuple[frozenset[int], ...]
    jacobson: frozenset[int]
    nilradical: frozenset[int]
    prime_radical: frozenset[int]
    kdim: int
    is_local: bool
    is_reduced: bool
    is_vnr: bool
    is_pi_regular: bool
    is_add_idempotent: bool
    is_mul_idempotent: bool
    is_idempotent: bool
    is_subtractive_semiring: bool
    is_semidomain: bool
    is_fmax: bool
    is_fmin: bool
    is_bmax: bool
    is_amin: bool
    is_pamin: bool
    is_pbmax: bool


def _chain_dim(sets: Sequence[frozenset[int]]) -> int:
    """Length of the longest strict ⊆-chain, counted in steps."""
    order = sorted(sets, key=len)
    best = {i: 0 for i in range(len(order))}
    for i, small in enumerate(order):
        for j in range(i + 1, len(order)):
            if small < order[j]:
                best[j] = max(best[j], best[i] + 1)
    return max(best.values(), default=0)


@lru_cache(maxsize=64)
def spectrum(R: FiniteSemiring) -> SpectrumReport:
    """Definition scans over the enumerated ideals; no theorem shortcuts."""
    all_ideals = ideals(R)
    full = frozenset(R.elements())
    proper = [I for I in all_ideals if I != full]
    spec = tuple(I for I in all_ideals if is_prime_ideal(R, I))
    maximal = tuple(
        I for I in proper if not any(I < J for J in proper)
    )
    min_primes = tuple(
        P for P in spec if not any(Q < P for Q in spec)
    )
    jacobson = full
    for I in maximal:
        jacobson &= I
    prime_radical = full
    for P in spec:
        prime_radical &= P
    nil = nilradical(R)

    def absolutely_minimal(P: frozenset[int]) -> bool:
        rest = [Q for Q in min_primes if Q != P]
        inter = full
        for Q in rest:
            inter &= Q
        return P in min_primes and not inter <= P

    def barely_maximal(P: frozenset[int]) -> bool:
        rest = [Q for Q in maximal if Q != P]
        inter = full
        for Q in rest:
            inter &= Q
        return P in maximal and not inter <= P

    els = R.elements()
    is_vnr = all(
        any(R.mul[R.mul[a][b]][a] == a for b in els) for a in els
    )

    def pi_regular(a: int) -> bool:
        power = R.one
        for _ in range(R.n):
            power = R.mul[power][a]
            if any(R.mul[R.mul[power][b]][power] == power for b in els):
                return True
        return False

    add_idem = all(R.add[a][a] == a for a in els)
    mul_idem = all(R.mul[a][a] == a for a in els)
    return SpectrumReport(
        ideals=all_ideals,
        spec=spec,
        max=maximal,
        min_primes=min_primes,
        jacobson=jacobson,
        nilradical=nil,
        prime_radical=prime_radical,
        kdim=_chain_dim(spec),
        is_local=len(maximal) == 1,
        is_reduced=nil == frozenset({R.zero}),
        is_vnr=is_vnr,
        is_pi_regular=all(pi_regular(a) for a in els),
        is_add_idempotent=add_idem,
        is_mul_idempotent=mul_idem,
        is_idempotent=add_idem and mul_idem,
        is_subtractive_semiring=is_subtractive_semiring(R),
        is_semidomain=all(
            R.mul[a][b] != R.zero
            for a in els
            for b in els
            if a != R.zero and b != R.zero
        ),
        is_fmax=True,  # finite carrier: finitely many maximal ideals
        is_fmin=True,
        is_bmax=all(barely_maximal(P) for P in maximal),
        is_amin=all(absolutely_minimal(P) for P in min_primes),
        is_pamin=all(absolutely_minimal(P) for P in spec),
        is_pbmax=all(barely_maximal(P) for P in spec),
    )


def ideal_label(R: FiniteSemiring, I: frozenset[int]) -> str:
    return "{" + ",".join(R.labels[a] for a in sorted(I)) + "}"


@lru_cache(maxsize=64)
def ideal_lattice(R: FiniteSemiring) -> tuple[FiniteLattice, tuple[frozenset[int], ...]]:
    """The lattice of all ideals under inclusion: meet = ∩, join = ideal sum.

    The meet table comes from intersecting element bitmasks; the join
    I + J is the least ideal above both, found through the up-set rows
    (the sum is generated by the union, so it is that least upper bound).
    """
    all_ideals = ideals(R)
    k = len(all_ideals)
    elem_mask = [sum(1 << e for e in I) for I in all_ideals]
    by_elem_mask = {m: idx for idx, m in enumerate(elem_mask)}
    labels = [ideal_label(R, I) for I in all_ideals]
    rows = []
    for a in range(k):
        row = 0
        bit = 1
        mask_a = elem_mask[a]
        for b in range(k):
            if mask_a & ~elem_mask[b] == 0:
                row |= bit
            bit <<= 1
        rows.append(row)
    poset = FinitePoset(labels, rows)
    by_up_row = {row: idx for idx, row in enumerate(rows)}
    meet = [[0] * k for _ in range(k)]
    join = [[0] * k for _ in range(k)]
    for a in range(k):
        mask_a, row_a = elem_mask[a], rows[a]
        meet_a, join_a = meet[a], join[a]
        for b in range(a, k):
            m = by_elem_mask[mask_a & elem_mask[b]]
            j = by_up_row[row_a & rows[b]]
            meet_a[b] = meet[b][a] = m
            join_a[b] = join[b][a] = j
    lattice = FiniteLattice(poset, tuple(map(tuple, meet)), tuple(map(tuple, join)))
    return lattice, all_ideals


def embedded_spectrum(
    R: FiniteSemiring, which: str = "all"
) -> tuple[FiniteLattice, EmbeddedSubset]:
    """The ideal lattice with X = Spec(R), Max(R) or Min(R) embedded."""
    report = spectrum(R)
    chosen = {"all": report.spec, "max": report.max, "min": report.min_primes}
    if which not in chosen:
        raise ValueError("subspace selector must be one of 'all', 'max', 'min'")
    lattice, all_ideals = ideal_lattice(R)
    position = {I: k for k, I in enumerate(all_ideals)}
    members = frozenset(position[I] for I in chosen[which])
    return lattice, EmbeddedSubset(lattice, members)


def spec_space(R: FiniteSemiring, which: str = "all") -> XTopSpace:
    """The Zariski topology on the selected part of Spec(R).

    Always satisfies the union-closure criterion; a NotXTopError here
    would indicate a bug, so it is allowed to propagate.
    """
    lattice, embedded = embedded_spectrum(R, which)
    return build_space(lattice, embedded)


@dataclass(frozen=True)
class BniVerification:
    """Predicted vs computed spectrum of one B(n, i)."""

    n: int
    i: int
    case: str
    predicted_kdim: int
    predicted_spec: frozenset[frozenset[int]]
    computed_kdim: int
    computed_spec: frozenset[frozenset[int]]

    @property
    def match(self) -> bool:
        return (
            self.predicted_kdim == self.computed_kdim
            and self.predicted_spec == self.computed_spec
        )


def verify_bni(n: int, i: int) -> BniVerification:
    """Compare spectrum(B(n, i)) with the closed-form description.

    Cases: i = 0 behaves as integers mod n ({pB : p | n}, dimension 0);
    n = 2, i = 1 is the Boolean semiring ({0}, dimension 0); i = 1 gives
    {0} ∪ {pB : p | n-1} in dimension 1; i = n-1 gives {0, m_n} in
    dimension 1, where m_n = {0, 2, ..., n-1}; the middle range
    2 <= i <= n-2 gives {0, m_n} ∪ {pB : p | n-i} in dimension 2.
    """
    R = bni(n, i)
    computed = spectrum(R)
    zero_ideal = frozenset({0})
    m_n = frozenset({0}) | frozenset(range(2, n))
    if i == 0:
        case = "integers-mod-n"
        predicted_kdim = 0
        # p == n only when n is prime, and then (p) = (0) in Z_n
        predicted = {principal_ideal(R, p % n) for p in prime_divisors(n)}
    elif n == 2:
        case = "boolean"
        predicted_kdim = 0
        predicted = {zero_ideal}
    elif i == 1:
        case = "i=1"
        predicted_kdim = 1
        predicted = {zero_ideal} | {
            principal_ideal(R, p) for p in prime_divisors(n - 1)
        }
    elif i == n - 1:
        case = "i=n-1"
        predicted_kdim = 1
        predicted = {zero_ideal, m_n}
    else:
        case = "2<=i<=n-2"
        predicted_kdim = 2
        predicted = {zero_ideal, m_n} | {
            principal_ideal(R, p) for p in prime_divisors(n - i)
        }
    return BniVerification(
        n=n,
        i=i,
        case=case,
        predicted_kdim=predicted_kdim,
        predicted_spec=frozenset(predicted),
        computed_kdim=computed.kdim,
        computed_spec=frozenset(computed.spec),
    )
