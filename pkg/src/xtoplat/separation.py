"""Point classification and separation axioms for materialized spaces.

Every axiom flag is computed from its raw definition by brute force over
the finite open/closed families, never via the structure theorems that
relate them.  The theorems instead become executable checks in
:func:`cross_check`, which evaluates both sides of each equivalence
independently and reports disagreements with a witness.

Two computational shortcuts are used, both justified by closure
properties of the materialized families and guarded by runtime
assertions rather than taken on faith:

* the kernel Ker(x) (intersection of all open sets containing x, computed
  by scanning the open family) is itself open, so "some open set around x
  avoids S" is equivalent to "Ker(x) ∩ S = ∅";
* finite unions of open sets are open, so the minimal open set around a
  finite F is the union of the kernels of its points.

The T_F quantifier ranges over *all* subsets F of X \\ {x}; there is no
pair-only reduction.  Compactness is degenerate at finite scale (every
subset is compact), so the KC flag reduces to "every subset is closed"
and is computed as ``len(closed_family) == 2^|X|`` over the materialized
family.  "Spectral" is likewise recorded as T0: every finite T0 space is
spectral, and the projective-limit characterizations are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import lru_cache

from .lattice import EmbeddedSubset, has_complete_max_property
from .poset import _mask_to_set, has_dual_tree_component, is_forest_of_trees
from .topology import (
    XTopSpace,
    is_xtop_by_irreducibility,
    is_xtop_by_unions,
    radical_info,
)

_CSI_EXHAUSTIVE_LIMIT = 14
_COMPONENT_BRUTE_LIMIT = 10


@dataclass(frozen=True)
class PointClassification:
    """Per-point flags, each computed from its primary definition."""

    label: str
    is_closed: bool
    is_kerneled: bool
    is_isolated: bool
    is_regular_open: bool
    is_excluded: bool
    is_min: bool
    is_max: bool
    in_SI: bool
    in_CSI: bool
    is_abs_min: bool
    is_barely_max: bool


@dataclass(frozen=True)
class SpecialSets:
    """The distinguished point sets of a space, as sets of lattice indices."""

    min: frozenset[int]
    max: frozenset[int]
    si: frozenset[int]
    csi: frozenset[int]
    amin: frozenset[int]
    bmax: frozenset[int]
    iso: frozenset[int]
    ro: frozenset[int]
    cl: frozenset[int]
    k: frozenset[int]
    excl: frozenset[int]


@dataclass(frozen=True)
class SeparationReport:
    """Every axiom verdict for one space, plus the component partitions."""

    kdim: int
    t0: bool
    t_quarter: bool
    t_half: bool
    t_threequarter: bool
    t1: bool
    t2: bool
    t1half_kc: bool
    r0: bool
    r1: bool
    tf: bool
    es: bool
    discrete: bool
    irreducible: bool
    connected: bool
    sober: bool
    spectral: bool
    quasi_hausdorff: bool
    totally_separated: bool
    totally_disconnected: bool
    ind_zero_dim: bool
    stone: bool
    amin: bool
    bmax: bool
    pamin: bool
    pbmax: bool
    complete_max_property: bool
    components: tuple[tuple[str, ...], ...]
    quasicomponents: tuple[tuple[str, ...], ...]

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name in ("components", "quasicomponents"):
                value = [list(part) for part in value]
            out[f.name] = value
        return out


@dataclass(frozen=True)
class PrimeMeets:
    """J(X) = ⋀Max(X) and Q(X) = ⋀Min(X) with their irredundance flags."""

    jacobson: int
    min_meet: int
    jacobson_irredundant: bool
    min_meet_irredundant: bool


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    holds: bool
    witness: str | None = None


class _Analysis:
    """Shared per-space scratch state: points as bit positions, families as masks."""

    def __init__(self, space: XTopSpace):
        self.space = space
        self.pts = space.sorted_points()
        self.n = len(self.pts)
        self.pos = {x: k for k, x in enumerate(self.pts)}
        self.full = (1 << self.n) - 1
        self.open_masks = sorted(self._mask(U) for U in space.open_family)
        self.closed_masks = sorted(self._mask(C) for C in space.closed_family)
        self.open_set = frozenset(self.open_masks)
        self.closed_set = frozenset(self.closed_masks)
        self.clopen_masks = sorted(self.open_set & self.closed_set)
        # closure({x}) = V(x) and Ker(x) = ∩{U open : x ∈ U}
        self.closure1 = [self._mask(space.variety(x)) for x in self.pts]
        self.kernel1 = []
        for k in range(self.n):
            acc = self.full
            for U in self.open_masks:
                if U >> k & 1:
                    acc &= U
            self.kernel1.append(acc)
        # the kernels being open backs every "minimal neighborhood" argument
        assert all(m in self.open_set for m in self.kernel1)
        self.spec_poset = space.specialization_poset()
        self.min_mask = self._mask(space.min_points())
        self.max_mask = self._mask(space.max_points())

    def _mask(self, S) -> int:
        return sum(1 << self.pos[x] for x in S)

    def unmask(self, mask: int) -> frozenset[int]:
        return frozenset(self.pts[k] for k in _mask_to_set(mask))

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.space.label(self.pts[k]) for k in sorted(_mask_to_set(mask)))

    # -- distinguished point sets -------------------------------------------

    def special(self) -> SpecialSets:
        space = self.space
        L = space.lattice
        cl = sum(1 << k for k in range(self.n) if 1 << k in self.closed_set)
        kerneled = sum(1 << k for k in range(self.n) if self.kernel1[k] == 1 << k)
        iso = sum(1 << k for k in range(self.n) if 1 << k in self.open_set)
        ro = sum(
            1 << k
            for k in range(self.n)
            if self._interior(self.closure1[k]) == 1 << k
        )
        excl = sum(
            1 << k
            for k in range(self.n)
            if space.excluded_meet(self.pts[k])[2]
        )
        si = sum(1 << k for k in range(self.n) if self._strongly_irreducible(k))
        csi_pts = self._csi()
        minima, maxima = self.min_mask, self.max_mask
        amin = sum(
            1 << k
            for k in range(self.n)
            if minima >> k & 1
            and not L.leq(
                L.meet_all(self.unmask(minima & ~(1 << k))), self.pts[k]
            )
        )
        bmax = sum(
            1 << k
            for k in range(self.n)
            if maxima >> k & 1
            and not L.leq(
                L.meet_all(self.unmask(maxima & ~(1 << k))), self.pts[k]
            )
        )
        u = self.unmask
        return SpecialSets(
            u(minima), u(maxima), u(si), u(csi_pts), u(amin), u(bmax),
            u(iso), u(ro), u(cl), u(kerneled), u(excl),
        )

    def _interior(self, S: int) -> int:
        """Union of the open sets contained in S."""
        acc = 0
        for U in self.open_masks:
            if U & ~S == 0:
                acc |= U
        return acc

    def _strongly_irreducible(self, k: int) -> bool:
        L = self.space.lattice
        q = self.pts[k]
        xs = self.pts
        for i, a in enumerate(xs):
            if L.leq(a, q):
                continue
            for b in xs[i + 1 :]:
                if not L.leq(b, q) and L.leq(L.meet(a, b), q):
                    return False
        return True

    def _csi(self) -> int:
        """Completely strongly irreducible points of X (subsets checked exhaustively).

        Beyond the exhaustive limit the worst-subset reduction is used:
        over A ⊆ {a : a ≰ q} the meet is smallest at the full set, so
        q ∈ CSI iff ⋀{a ∈ X : a ≰ q} ≰ q.
        """
        L = self.space.lattice
        if self.n <= _CSI_EXHAUSTIVE_LIMIT:
            meets = self._subset_meets()
            out = 0
            for k in range(self.n):
                q = self.pts[k]
                below = sum(
                    1 << i for i in range(self.n) if L.leq(self.pts[i], q)
                )
                candidates = self.full & ~below
                good = True
                A = candidates
                while A:
                    if L.leq(meets[A], q):
                        good = False
                        break
                    A = (A - 1) & candidates
                if good:
                    out |= 1 << k
            return out
        out = 0
        for k in range(self.n):
            q = self.pts[k]
            worst = L.meet_all(a for a in self.pts if not L.leq(a, q))
            if not L.leq(worst, q):
                out |= 1 << k
        return out

    def _subset_meets(self) -> list[int]:
        """meets[S] = ⋀{points in S} as a lattice index, for every subset mask."""
        L = self.space.lattice
        meets = [L.top] * (1 << self.n)
        for S in range(1, 1 << self.n):
            low = S & -S
            meets[S] = L.meet(meets[S & ~low], self.pts[low.bit_length() - 1])
        return meets

    # -- pairwise separation ---------------------------------------------------

    def distinguishable(self, a: int, b: int) -> bool:
        return not (self.kernel1[a] >> b & 1 and self.kernel1[b] >> a & 1)

    def separated(self, a: int, b: int) -> bool:
        return not self.kernel1[a] >> b & 1 and not self.kernel1[b] >> a & 1

    def disjoint_open_separated(self, a: int, b: int) -> bool:
        return self.kernel1[a] & self.kernel1[b] == 0

    def anti_t2(self) -> bool:
        return self.n >= 2 and not any(
            self.disjoint_open_separated(a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )

    def tf(self) -> bool:
        """For every x and every finite F ⊆ X\\{x}: {x} ⊢ F or F ⊢ {x}."""
        min_open = [0] * (1 << self.n)
        for S in range(1, 1 << self.n):
            low = S & -S
            min_open[S] = min_open[S & ~low] | self.kernel1[low.bit_length() - 1]
            assert min_open[S] in self.open_set
        for k in range(self.n):
            rest = self.full & ~(1 << k)
            F = rest
            while F:
                if self.kernel1[k] & F and min_open[F] >> k & 1:
                    return False
                F = (F - 1) & rest
        return True

    # -- connectedness ---------------------------------------------------------

    def is_connected_subset(self, S: int) -> bool:
        """No split of S into two nonempty relatively-clopen parts."""
        if S == 0:
            return True
        rel_opens = {U & S for U in self.open_masks}
        return not any(
            A and A != S and S & ~A in rel_opens for A in rel_opens
        )

    def components(self) -> list[int]:
        """C(x) for each point: the maximal connected set containing x."""
        if self.n <= _COMPONENT_BRUTE_LIMIT and len(self.open_masks) <= 1024:
            comp = [1 << k for k in range(self.n)]
            for S in range(1, 1 << self.n):
                if self.is_connected_subset(S):
                    for k in range(self.n):
                        if S >> k & 1:
                            comp[k] |= S
            return comp
        # components of a finite space are the comparability components of
        # its specialization order; agreement with the brute-force route is
        # covered by the exhaustive small-instance tests
        comp = [0] * self.n
        for part in self.spec_poset.order_components():
            mask = sum(1 << k for k in part)
            for k in part:
                comp[k] = mask
        return comp

    def quasicomponents(self) -> list[int]:
        """Q(x) for each point: the intersection of the clopen sets around x."""
        out = []
        for k in range(self.n):
            acc = self.full
            for W in self.clopen_masks:
                if W >> k & 1:
                    acc &= W
            out.append(acc)
        return out

    # -- global flags ------------------------------------------------------------

    def irreducible(self) -> bool:
        if self.n == 0:
            return False
        proper = [C for C in self.closed_masks if C != self.full]
        return not any(
            A | B == self.full for i, A in enumerate(proper) for B in proper[i:]
        )

    def connected_flag(self) -> bool:
        return not any(0 < W < self.full for W in self.clopen_masks)

    def sober(self) -> bool:
        for C in self.closed_masks:
            if C == 0:
                continue
            traces = {F & C for F in self.closed_masks}
            proper = [T for T in traces if T != C]
            if any(
                A | B == C for i, A in enumerate(proper) for B in proper[i:]
            ):
                continue  # not irreducible
            generic = [k for k in range(self.n) if C >> k & 1 and self.closure1[k] == C]
            if len(generic) != 1:
                return False
        return True

    def ind_zero_dim(self) -> bool:
        return all(
            any(W >> k & 1 and W & ~U == 0 for W in self.clopen_masks)
            for U in self.open_masks
            for k in range(self.n)
            if U >> k & 1
        )

    def kdim(self) -> int:
        if self.n == 0:
            return 0
        return self.spec_poset.krull_dim()

    def prime_meets(self) -> PrimeMeets:
        L = self.space.lattice
        maxima = self.unmask(self.max_mask)
        minima = self.unmask(self.min_mask)
        j = L.meet_all(maxima)
        q = L.meet_all(minima)
        j_irr = all(L.meet_all(maxima - {m}) != j for m in maxima)
        q_irr = all(L.meet_all(minima - {m}) != q for m in minima)
        return PrimeMeets(j, q, j_irr, q_irr)

    def partition(self, member_masks: list[int]) -> tuple[tuple[str, ...], ...]:
        parts = sorted(set(member_masks), key=lambda m: m & -m)
        return tuple(self.labels(m) for m in parts)


@lru_cache(maxsize=128)
def _analyze(space: XTopSpace) -> _Analysis:
    return _Analysis(space)


def special_sets(space: XTopSpace) -> SpecialSets:
    """Min/Max/SI/CSI/AMin/BMax plus the topological point classes."""
    return _analyze(space).special()


def classify_points(space: XTopSpace) -> tuple[PointClassification, ...]:
    """One row of flags per point, in sorted point order."""
    a = _analyze(space)
    s = a.special()
    return tuple(
        PointClassification(
            label=space.label(x),
            is_closed=x in s.cl,
            is_kerneled=x in s.k,
            is_isolated=x in s.iso,
            is_regular_open=x in s.ro,
            is_excluded=x in s.excl,
            is_min=x in s.min,
            is_max=x in s.max,
            in_SI=x in s.si,
            in_CSI=x in s.csi,
            is_abs_min=x in s.amin,
            is_barely_max=x in s.bmax,
        )
        for x in a.pts
    )


def components(space: XTopSpace) -> tuple[tuple[frozenset[int], ...], tuple[frozenset[int], ...]]:
    """(connected components, quasicomponents) as partitions of the point set."""
    a = _analyze(space)
    comp = a.components()
    quasi = a.quasicomponents()
    comps = sorted({m for m in comp}, key=lambda m: m & -m)
    quasis = sorted({m for m in quasi}, key=lambda m: m & -m)
    return tuple(a.unmask(m) for m in comps), tuple(a.unmask(m) for m in quasis)


def jacobson_and_prime_meets(space: XTopSpace) -> PrimeMeets:
    """⋀Max(X) and ⋀Min(X) with single-drop irredundance flags."""
    return _analyze(space).prime_meets()


def separation_report(space: XTopSpace) -> SeparationReport:
    """Evaluate every axiom from its raw definition over the finite families."""
    a = _analyze(space)
    s = a.special()
    n = a.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    t0 = all(a.distinguishable(i, j) for i, j in pairs)
    r0 = all(
        a.separated(i, j) for i, j in pairs if a.distinguishable(i, j)
    )
    t1 = all(a.separated(i, j) for i, j in pairs)
    r1 = all(
        a.disjoint_open_separated(i, j)
        for i, j in pairs
        if a.distinguishable(i, j)
    )
    t2 = all(a.disjoint_open_separated(i, j) for i, j in pairs)
    quasi_hausdorff = all(
        a.disjoint_open_separated(i, j)
        or any(C >> i & 1 and C >> j & 1 for C in a.closure1)
        for i, j in pairs
    )
    cl, k_set, iso, ro = (
        a._mask(s.cl), a._mask(s.k), a._mask(s.iso), a._mask(s.ro)
    )
    comp = a.components()
    quasi = a.quasicomponents()
    minima, maxima = a.min_mask, a.max_mask
    csi_mask = a._mask(s.csi)
    ind_zero = a.ind_zero_dim()
    kdim = a.kdim()
    L = space.lattice
    rad = radical_info(L, space.points)
    radical_carrier = EmbeddedSubset(L, rad.radical_elements - {L.top})
    return SeparationReport(
        kdim=kdim,
        t0=t0,
        t_quarter=cl | k_set == a.full,
        t_half=cl | iso == a.full,
        t_threequarter=cl | ro == a.full,
        t1=t1,
        t2=t2,
        t1half_kc=len(a.closed_set) == 1 << n,
        r0=r0,
        r1=r1,
        tf=a.tf(),
        es=(minima & ~maxima) & ~csi_mask == 0,
        discrete=len(a.open_set) == 1 << n,
        irreducible=a.irreducible(),
        connected=a.connected_flag(),
        sober=a.sober(),
        spectral=t0,
        quasi_hausdorff=quasi_hausdorff,
        totally_separated=all(quasi[k] == 1 << k for k in range(n)),
        totally_disconnected=all(comp[k] == 1 << k for k in range(n)),
        ind_zero_dim=ind_zero,
        stone=t0 and ind_zero,
        amin=a._mask(s.amin) == minima,
        bmax=a._mask(s.bmax) == maxima,
        pamin=a._mask(s.amin) == a.full,
        pbmax=a._mask(s.bmax) == a.full,
        complete_max_property=has_complete_max_property(L, radical_carrier),
        components=a.partition(comp),
        quasicomponents=a.partition(quasi),
    )


# -- executable theorems -------------------------------------------------------


def _eq_witness(a: _Analysis, left: frozenset[int], right: frozenset[int]) -> str:
    diff = sorted(left ^ right)
    return f"point {a.space.label(diff[0])!r}" if diff else "sets equal"


def _bool_chain(name_values: list[tuple[str, bool]]) -> tuple[bool, str | None]:
    values = {v for _, v in name_values}
    if len(values) <= 1:
        return True, None
    return False, "; ".join(f"{name}={value}" for name, value in name_values)


def cross_check(space: XTopSpace) -> tuple[CheckResult, ...]:
    """Evaluate both sides of every finite-scale structure theorem.

    Each check must hold on every valid space; a failure indicates a bug
    and its witness names the violating point or flag assignment.
    """
    a = _analyze(space)
    s = special_sets(space)
    r = separation_report(space)
    pm = a.prime_meets()
    L = space.lattice
    X = space.points
    checks: list[CheckResult] = []

    def add(check_id: str, holds: bool, witness: str | None = None):
        checks.append(CheckResult(check_id, holds, None if holds else witness))

    add("t0-and-sober", r.t0 and r.sober, f"t0={r.t0}; sober={r.sober}")
    add("closed-points-are-maximal", s.cl == s.max, _eq_witness(a, s.cl, s.max))
    add("kerneled-points-are-minimal", s.k == s.min, _eq_witness(a, s.k, s.min))
    add(
        "ro-iso-min-nested",
        s.ro <= s.iso <= s.min,
        _eq_witness(a, s.ro | s.iso, s.min),
    )

    ok, w = _bool_chain([("t1", r.t1), ("r0", r.r0), ("kdim==0", r.kdim == 0)])
    add("t1-iff-r0-iff-dim0", ok, w)
    ok, w = _bool_chain(
        [
            ("t2", r.t2),
            ("r1", r.r1),
            ("kdim==0 and quasi_hausdorff", r.kdim == 0 and r.quasi_hausdorff),
        ]
    )
    add("t2-iff-r1-iff-dim0-quasihausdorff", ok, w)
    ok, w = _bool_chain(
        [("t_quarter", r.t_quarter), ("kdim<=1", r.kdim <= 1), ("tf", r.tf)]
    )
    add("t-quarter-iff-dim-le-1-iff-tf", ok, w)

    decomposition_half = X == s.max | (s.min & s.csi)
    ok, w = _bool_chain(
        [
            ("t_half", r.t_half),
            ("X == Max ∪ (Min ∩ CSI)", decomposition_half),
            ("t_quarter and es", r.t_quarter and r.es),
        ]
    )
    add("t-half-decomposition", ok, w)

    decomposition_tq = X == s.max | (s.min & s.csi & s.excl)
    ok, w = _bool_chain(
        [
            ("t_threequarter", r.t_threequarter),
            ("X == Max ∪ RO", X == s.max | s.ro),
            ("X == Max ∪ (Min ∩ CSI ∩ Excl)", decomposition_tq),
        ]
    )
    add("t-threequarter-decomposition", ok, w)

    add(
        "isolated-iff-min-csi",
        s.iso == s.min & s.csi,
        _eq_witness(a, s.iso, s.min & s.csi),
    )

    boundary = frozenset(
        x for x in X if space.closure(space.covariety(x)) == X - {x}
    )
    add(
        "regular-open-iff-isolated-excluded",
        s.ro == s.iso & s.excl == boundary,
        _eq_witness(a, s.ro, s.iso & s.excl) + "; " + _eq_witness(a, s.ro, boundary),
    )

    names = [
        ("discrete", r.discrete),
        ("X == AMin", X == s.amin),
        ("X == BMax", X == s.bmax),
        ("t1 and bmax", r.t1 and r.bmax),
        ("t1 and complete_max_property", r.t1 and r.complete_max_property),
    ]
    ok, w = _bool_chain(names)
    if ok and r.discrete:
        ok = s.amin == s.min == X == s.max == s.bmax
        w = "AMin=Min=X=Max=BMax fails"
    add("discrete-characterizations", ok, w)

    ok, w = _bool_chain(
        [
            ("es", r.es),
            ("csi covers X", s.csi == X),
            ("si covers X", s.si == X),
            ("bmax", r.bmax),
            ("amin", r.amin),
        ]
    )
    add("finite-carrier-irreducibility", ok, w)
    ok, w = _bool_chain(
        [("t_half", r.t_half), ("t_quarter", r.t_quarter), ("tf", r.tf)]
    )
    add("es-collapse", ok, w)

    add(
        "anti-hausdorff-iff-irreducible",
        a.anti_t2() == (r.irreducible and a.n >= 2),
        f"anti_t2={a.anti_t2()}; irreducible={r.irreducible}; |X|={a.n}",
    )
    ok, w = _bool_chain(
        [("discrete", r.discrete), ("t1", r.t1), ("kdim==0", r.kdim == 0)]
    )
    add("discrete-iff-t1-at-finite-scale", ok, w)
    ok, w = _bool_chain([("kc", r.t1half_kc), ("discrete", r.discrete)])
    add("kc-iff-discrete-at-finite-scale", ok, w)

    ok = r.t2 == (r.t1 and r.quasi_hausdorff) and (not r.t1 or r.t2)
    add(
        "t2-iff-t1-quasihausdorff",
        ok,
        f"t1={r.t1}; t2={r.t2}; quasi_hausdorff={r.quasi_hausdorff}",
    )

    if r.ind_zero_dim:
        ok, w = _bool_chain(
            [
                ("totally_separated", r.totally_separated),
                ("totally_disconnected", r.totally_disconnected),
                ("t1", r.t1),
                ("t0", r.t0),
                ("t2", r.t2),
            ]
        )
    else:
        ok, w = True, None
    add("zero-dimensional-collapse", ok, w)

    ok, w = _bool_chain(
        [
            ("stone", r.stone),
            ("spectral and ind_zero_dim", r.spectral and r.ind_zero_dim),
            ("spectral and totally_separated", r.spectral and r.totally_separated),
            ("spectral and t2", r.spectral and r.t2),
            ("spectral and kc", r.spectral and r.t1half_kc),
            ("spectral and t1", r.spectral and r.t1),
            ("spectral and kdim==0", r.spectral and r.kdim == 0),
        ]
    )
    add("stone-characterizations", ok, w)

    add(
        "union-criterion-iff-irreducibility",
        is_xtop_by_unions(L, X) == is_xtop_by_irreducibility(L, X),
        "the two carrier criteria disagree",
    )

    rad = radical_info(L, X)
    radical_maxima = L.maximals_of(rad.radical_elements - {L.top})
    add(
        "maxima-of-radicals",
        radical_maxima == s.max,
        _eq_witness(a, radical_maxima & X, s.max),
    )

    max_sub = space.subspace(s.max)
    ok, w = _bool_chain(
        [
            ("bmax", r.bmax),
            ("jacobson irredundant", pm.jacobson_irredundant),
            (
                "Max(X) discrete",
                len(set(max_sub.open_family)) == 1 << len(s.max),
            ),
        ]
    )
    add("jacobson-irredundant-iff-bmax-iff-max-discrete", ok, w)

    min_sub = space.subspace(s.min)
    ok, w = _bool_chain(
        [
            ("amin", r.amin),
            ("min meet irredundant", pm.min_meet_irredundant),
            (
                "Min(X) discrete",
                len(set(min_sub.open_family)) == 1 << len(s.min),
            ),
        ]
    )
    add("min-meet-irredundant-iff-amin-iff-min-discrete", ok, w)

    ok = (not r.totally_separated or r.t2) and (
        not r.totally_disconnected or r.t1
    )
    add(
        "total-separation-implications",
        ok,
        f"totally_separated={r.totally_separated}; "
        f"totally_disconnected={r.totally_disconnected}; t1={r.t1}; t2={r.t2}",
    )

    comp = a.components()
    quasi = a.quasicomponents()
    ok = all(comp[k] & ~quasi[k] == 0 for k in range(a.n))
    add(
        "components-refine-quasicomponents",
        ok,
        next(
            (
                f"point {a.space.label(a.pts[k])!r}"
                for k in range(a.n)
                if comp[k] & ~quasi[k]
            ),
            None,
        ),
    )

    P = a.spec_poset
    if a.n and is_forest_of_trees(P, min_base=2):
        ok = r.t_threequarter and not r.t1
        add(
            "tree-forests-are-t-threequarter",
            ok,
            f"t_threequarter={r.t_threequarter}; t1={r.t1}",
        )
    else:
        add("tree-forests-are-t-threequarter", True)
    if r.t_threequarter:
        ok = r.kdim <= 1 and not (a.n and has_dual_tree_component(P))
        add(
            "dual-tree-blocks-t-threequarter",
            ok,
            f"kdim={r.kdim}; dual tree component present",
        )
    else:
        add("dual-tree-blocks-t-threequarter", True)

    return tuple(checks)
