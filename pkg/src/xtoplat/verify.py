"""Exhaustive, seed-free verification suites.

Each suite sweeps a family of instances generated within explicit bounds
and re-checks a group of structure theorems on every one, reporting
failures with minimal witnesses.  Suites:

* ``xct``: both carrier criteria (union closure vs strong irreducibility
  over radical elements) agree on every (lattice, X) pair up to the size
  bound;
* ``quarter``: the quarter-axiom identities over every poset-induced
  space up to the size bound;
* ``discrete``: the discreteness/T1/Stone identities over the same sweep;
* ``forest``: shape predictions for T/V/C forests (which are and are not
  T¾/T½/T¼) plus the full cross-check;
* ``bni``: the B(n, i) spectrum grid against its closed form, plus the
  downstream separation verdicts;
* ``all``: everything above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import (
    all_lattices_upto,
    all_posets_upto,
    canonical_form,
    forest_specs,
)
from .poset import chain, dual_tree, forest, tree
from .semiring import bni, omega, spec_space, verify_bni
from .separation import cross_check, jacobson_and_prime_meets, separation_report
from .topology import from_poset, is_xtop_by_irreducibility, is_xtop_by_unions

QUARTER_CHECKS = frozenset(
    {
        "closed-points-are-maximal",
        "kerneled-points-are-minimal",
        "ro-iso-min-nested",
        "t-quarter-iff-dim-le-1-iff-tf",
        "t-half-decomposition",
        "t-threequarter-decomposition",
        "isolated-iff-min-csi",
        "regular-open-iff-isolated-excluded",
        "es-collapse",
        "tree-forests-are-t-threequarter",
        "dual-tree-blocks-t-threequarter",
    }
)

DISCRETE_CHECKS = frozenset(
    {
        "t0-and-sober",
        "t1-iff-r0-iff-dim0",
        "t2-iff-r1-iff-dim0-quasihausdorff",
        "discrete-characterizations",
        "finite-carrier-irreducibility",
        "anti-hausdorff-iff-irreducible",
        "discrete-iff-t1-at-finite-scale",
        "kc-iff-discrete-at-finite-scale",
        "t2-iff-t1-quasihausdorff",
        "zero-dimensional-collapse",
        "stone-characterizations",
        "union-criterion-iff-irreducibility",
        "maxima-of-radicals",
        "jacobson-irredundant-iff-bmax-iff-max-discrete",
        "min-meet-irredundant-iff-amin-iff-min-discrete",
        "components-refine-quasicomponents",
    }
)


@dataclass(frozen=True)
class SuiteFailure:
    instance: str
    check: str
    witness: str | None = None

    def __str__(self) -> str:
        text = f"{self.instance}: {self.check}"
        return text + (f" [{self.witness}]" if self.witness else "")


@dataclass
class SuiteResult:
    suite: str
    instances: int
    checks: int
    failures: list[SuiteFailure]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{status} {self.suite}: {self.instances} instances, "
            f"{self.checks} checks, {len(self.failures)} failures"
        )


def verify_xct(max_size: int = 5) -> SuiteResult:
    """Union-closure vs irreducibility on every (lattice, X) pair."""
    failures: list[SuiteFailure] = []
    instances = checks = 0
    for L in all_lattices_upto(max_size):
        candidates = [i for i in range(L.n) if i != L.top]
        for mask in range(1 << len(candidates)):
            X = frozenset(c for k, c in enumerate(candidates) if mask >> k & 1)
            instances += 1
            checks += 1
            by_unions = is_xtop_by_unions(L, X)
            by_irred = is_xtop_by_irreducibility(L, X)
            if by_unions != by_irred:
                failures.append(
                    SuiteFailure(
                        f"lattice({L.n} elements, covers={L.poset.covers()}) "
                        f"X={sorted(L.labels[x] for x in X)}",
                        "union-criterion-iff-irreducibility",
                        f"unions={by_unions}; irreducibility={by_irred}",
                    )
                )
    return SuiteResult("xct", instances, checks, failures)


def _cross_check_sweep(suite: str, max_size: int, selected: frozenset[str]) -> SuiteResult:
    failures: list[SuiteFailure] = []
    instances = checks = 0
    for P in all_posets_upto(max_size):
        space = from_poset(P)
        instances += 1
        name = f"poset(n={P.n}, covers={P.covers()})"
        for result in cross_check(space):
            if result.check_id not in selected:
                continue
            checks += 1
            if not result.holds:
                failures.append(SuiteFailure(name, result.check_id, result.witness))
    return SuiteResult(suite, instances, checks, failures)


def verify_quarter(max_size: int = 5) -> SuiteResult:
    return _cross_check_sweep("quarter", max_size, QUARTER_CHECKS)


def verify_discrete(max_size: int = 5) -> SuiteResult:
    return _cross_check_sweep("discrete", max_size, DISCRETE_CHECKS)


def verify_forest(max_size: int = 8) -> SuiteResult:
    """Shape-level predictions plus the full cross-check on every forest."""
    failures: list[SuiteFailure] = []
    instances = checks = 0
    for spec in forest_specs(max_size, kinds="TVC"):
        instances += 1
        name = "+".join(f"{kind}{k}" for kind, k in spec)
        space = from_poset(forest(spec))
        report = separation_report(space)

        def expect(condition: bool, check: str, witness: str):
            nonlocal checks
            checks += 1
            if not condition:
                failures.append(SuiteFailure(name, check, witness))

        expected_kdim = max(k - 1 if kind == "C" else 1 for kind, k in spec)
        expect(
            report.kdim == expected_kdim,
            "forest-kdim",
            f"kdim={report.kdim}, expected {expected_kdim}",
        )
        all_trees = all(kind == "T" and k >= 2 for kind, k in spec)
        has_dual = any(
            (kind == "V" and k >= 1) or (kind == "C" and k == 2) for kind, k in spec
        )
        has_long_chain = any(kind == "C" and k >= 3 for kind, k in spec)
        only_tv = all(
            (kind in "TV") or (kind == "C" and k == 2) for kind, k in spec
        )
        if all_trees:
            expect(
                report.t_threequarter and not report.t1,
                "tree-forest-is-t-threequarter-not-t1",
                f"t_threequarter={report.t_threequarter}, t1={report.t1}",
            )
        if has_dual:
            expect(
                not report.t_threequarter,
                "dual-tree-component-blocks-t-threequarter",
                "t_threequarter=True",
            )
        if only_tv:
            expect(
                report.t_half and not report.t1,
                "tv-forest-is-t-half-not-t1",
                f"t_half={report.t_half}, t1={report.t1}",
            )
        if has_long_chain:
            expect(not report.t_quarter, "long-chain-blocks-t-quarter", "t_quarter=True")
        for result in cross_check(space):
            checks += 1
            if not result.holds:
                failures.append(SuiteFailure(name, result.check_id, result.witness))
    return SuiteResult("forest", instances, checks, failures)


def verify_bni_grid(max_n: int = 20) -> SuiteResult:
    """Spectrum closed form plus downstream separation axioms on B(n, i)."""
    failures: list[SuiteFailure] = []
    instances = checks = 0
    for n in range(2, max_n + 1):
        for i in range(n):
            instances += 1
            name = f"B({n},{i})"
            verdict = verify_bni(n, i)

            def expect(condition: bool, check: str, witness: str):
                nonlocal checks
                checks += 1
                if not condition:
                    failures.append(SuiteFailure(name, check, witness))

            expect(
                verdict.match,
                "spectrum-closed-form",
                f"kdim {verdict.computed_kdim} vs {verdict.predicted_kdim}; "
                f"spec sizes {sorted(len(P) for P in verdict.computed_spec)} vs "
                f"{sorted(len(P) for P in verdict.predicted_spec)}",
            )
            R = bni(n, i)
            space = spec_space(R)
            report = separation_report(space)
            spec_shape = canonical_form(space.specialization_poset())
            if i == 0 or n == 2:
                expect(report.discrete, "zero-dimensional-spectrum-discrete", "not discrete")
                expect(
                    jacobson_and_prime_meets(space).jacobson_irredundant,
                    "jacobson-irredundant",
                    "redundant maximal ideal",
                )
            elif i == 1:
                expect(
                    report.t_half and not report.t_threequarter,
                    "i1-spectrum-t-half-not-t-threequarter",
                    f"t_half={report.t_half}, t_threequarter={report.t_threequarter}",
                )
                expect(
                    spec_shape == canonical_form(dual_tree(omega(n - 1))),
                    "i1-spectrum-is-dual-tree",
                    "spectrum shape is not V_omega(n-1)",
                )
            elif i == n - 1:
                expect(
                    report.t_half and not report.t_threequarter,
                    "top-i-spectrum-t-half-not-t-threequarter",
                    f"t_half={report.t_half}, t_threequarter={report.t_threequarter}",
                )
                expect(
                    spec_shape == canonical_form(chain(2)),
                    "top-i-spectrum-is-two-chain",
                    "spectrum shape is not C_2",
                )
            else:
                expect(
                    report.t0 and not report.t_quarter,
                    "middle-i-spectrum-t0-not-t-quarter",
                    f"t0={report.t0}, t_quarter={report.t_quarter}",
                )
                zero_ideal_index = next(
                    x for x in space.points if space.lattice.poset.labels[x] == "{0}"
                )
                punctured = space.subspace(space.points - {zero_ideal_index})
                punctured_report = separation_report(punctured)
                w = omega(n - i)
                expect(
                    canonical_form(punctured.specialization_poset())
                    == canonical_form(tree(w)),
                    "punctured-middle-spectrum-is-tree",
                    f"shape is not T_omega(n-i)=T_{w}",
                )
                if w == 1:
                    expect(
                        punctured_report.t_half and not punctured_report.t_threequarter,
                        "punctured-prime-gap-t-half",
                        f"t_half={punctured_report.t_half}, "
                        f"t_threequarter={punctured_report.t_threequarter}",
                    )
                else:
                    expect(
                        punctured_report.t_threequarter and not punctured_report.t1,
                        "punctured-composite-gap-t-threequarter",
                        f"t_threequarter={punctured_report.t_threequarter}, "
                        f"t1={punctured_report.t1}",
                    )
            for result in cross_check(space):
                checks += 1
                if not result.holds:
                    failures.append(SuiteFailure(name, result.check_id, result.witness))
    return SuiteResult("bni", instances, checks, failures)


_SUITES = {
    "xct": lambda max_size, max_n: verify_xct(max_size or 5),
    "quarter": lambda max_size, max_n: verify_quarter(max_size or 5),
    "discrete": lambda max_size, max_n: verify_discrete(max_size or 5),
    "forest": lambda max_size, max_n: verify_forest(max_size or 8),
    "bni": lambda max_size, max_n: verify_bni_grid(max_n or 20),
}


def run_suites(
    suite: str, max_size: int | None = None, max_n: int | None = None
) -> list[SuiteResult]:
    """Run one named suite, or all of them."""
    if suite == "all":
        names = ["xct", "quarter", "discrete", "forest", "bni"]
    elif suite in _SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return [_SUITES[name](max_size, max_n) for name in names]
