"""Independent oracles the tests check the library against.

Everything here is deliberately naive: exhaustive subset scans and
direct-definition evaluations with no shared machinery, so a bug in the
library cannot hide in its own oracle.
"""

from __future__ import annotations

from itertools import combinations

from xtoplat import FinitePoset, FiniteSemiring, XTopSpace


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from (frozenset(c) for c in combinations(items, r))


def longest_chain_length(P: FinitePoset) -> int:
    """Max size of a totally ordered subset, minus one; brute force."""
    best = 0
    for S in subsets(range(P.n)):
        if S and all(P.leq(a, b) or P.leq(b, a) for a in S for b in S):
            best = max(best, len(S) - 1)
    return best


def chains_ending_at(P: FinitePoset, x: int) -> int:
    """Length of the longest chain with top element x; brute force."""
    best = 0
    for S in subsets(range(P.n)):
        if (
            x in S
            and all(P.leq(a, b) or P.leq(b, a) for a in S for b in S)
            and all(P.leq(a, x) for a in S)
        ):
            best = max(best, len(S) - 1)
    return best


def upsets_by_filter(P: FinitePoset) -> set[frozenset[int]]:
    """All up-closed subsets by filtering the whole powerset."""
    out = set()
    for S in subsets(range(P.n)):
        if all(not P.leq(a, b) or b in S for a in S for b in range(P.n)):
            out.add(S)
    return out


def glb_search(P: FinitePoset, a: int, b: int) -> int | None:
    lower = [c for c in range(P.n) if P.leq(c, a) and P.leq(c, b)]
    greatest = [c for c in lower if all(P.leq(d, c) for d in lower)]
    return greatest[0] if len(greatest) == 1 else None


def lub_search(P: FinitePoset, a: int, b: int) -> int | None:
    upper = [c for c in range(P.n) if P.leq(a, c) and P.leq(b, c)]
    least = [c for c in upper if all(P.leq(c, d) for d in upper)]
    return least[0] if len(least) == 1 else None


def ideals_by_subset_scan(R: FiniteSemiring) -> set[frozenset[int]]:
    """Every subset tested against the ideal predicate; |R| <= 12 or so."""
    out = set()
    for S in subsets(range(R.n)):
        if not S or R.zero not in S:
            continue
        closed_add = all(R.add[a][b] in S for a in S for b in S)
        absorbs = all(R.mul[r][a] in S for r in range(R.n) for a in S)
        if closed_add and absorbs:
            out.add(S)
    return out


def wrap_by_search(v: int, n: int, i: int) -> int:
    """The unique u with i <= u <= n-1 and v ≡ u (mod n-i), by scanning."""
    if v <= n - 1:
        return v
    hits = [u for u in range(i, n) if (v - u) % (n - i) == 0]
    assert len(hits) == 1
    return hits[0]


# -- naive topology (open-family scans only) ---------------------------------


def naive_kernel(space: XTopSpace, x: int) -> frozenset[int]:
    acc = space.points
    for U in space.open_family:
        if x in U:
            acc &= U
    return acc


def naive_interior(space: XTopSpace, S: frozenset[int]) -> frozenset[int]:
    acc: frozenset[int] = frozenset()
    for U in space.open_family:
        if U <= S:
            acc |= U
    return acc


def naive_closure(space: XTopSpace, S: frozenset[int]) -> frozenset[int]:
    candidates = [C for C in space.closed_family if S <= C]
    acc = space.points
    for C in candidates:
        acc &= C
    return acc


def shields(space: XTopSpace, A: frozenset[int], B: frozenset[int]) -> bool:
    """A ⊢ B: some open set contains A and misses B."""
    return any(A <= U and not U & B for U in space.open_family)


def naive_tf(space: XTopSpace) -> bool:
    pts = space.points
    for x in pts:
        for F in subsets(pts - {x}):
            if not shields(space, frozenset({x}), F) and not shields(
                space, F, frozenset({x})
            ):
                return False
    return True


def naive_t0(space: XTopSpace) -> bool:
    pts = sorted(space.points)
    return all(
        any((x in U) != (y in U) for U in space.open_family)
        for i, x in enumerate(pts)
        for y in pts[i + 1 :]
    )


def naive_t1(space: XTopSpace) -> bool:
    pts = sorted(space.points)
    return all(
        shields(space, frozenset({x}), frozenset({y}))
        and shields(space, frozenset({y}), frozenset({x}))
        for i, x in enumerate(pts)
        for y in pts[i + 1 :]
    )


def naive_t2(space: XTopSpace) -> bool:
    pts = sorted(space.points)
    return all(
        any(
            x in U and y in V and not U & V
            for U in space.open_family
            for V in space.open_family
        )
        for i, x in enumerate(pts)
        for y in pts[i + 1 :]
    )


def naive_components(space: XTopSpace) -> dict[int, frozenset[int]]:
    """C(x) as the union of the connected subsets containing x."""

    def connected(S: frozenset[int]) -> bool:
        rel = {U & S for U in space.open_family}
        return not any(A and A != S and S - A in rel for A in rel)

    out = {}
    for x in space.points:
        acc = frozenset({x})
        for S in subsets(space.points):
            if x in S and connected(S):
                acc |= S
        out[x] = acc
    return out
