"""JSON formats and Graphviz DOT export.

Formats (all label-based, order-independent on load, byte-stable on dump):

* poset:    {"labels": [...], "leq": [["a", "b"], ...]}: pairs mean
  first <= second; the reflexive-transitive closure is applied on load and
  cover pairs are emitted on dump.
* lattice:  the poset format plus optional "meet"/"join" label tables,
  validated against the derived glb/lub tables if present.
* semiring: {"labels": [...], "add": [[...]], "mul": [[...]],
  "zero": "0", "one": "1"} with label-valued tables.
* space:    {"lattice": ..., "X": [labels], "closed_sets": [[labels], ...]};
  closed_sets are recomputed on load and verified when present.

DOT output draws the Hasse diagram: cover edges only, oriented from the
smaller to the larger element, minimal elements on the bottom rank.
"""

from __future__ import annotations

import json
from typing import Any

from .lattice import FiniteLattice, lattice_from_poset
from .poset import FinitePoset, ForestComponent, poset_from_relation
from .semiring import FiniteSemiring, semiring_from_tables
from .separation import PointClassification, SeparationReport
from .topology import XTopSpace, build_space


# -- forest spec mini-grammar -------------------------------------------------


def parse_forest_spec(text: str) -> tuple[ForestComponent, ...]:
    """Parse "T2+V3+C4" (case-insensitive, spaces allowed) into components."""
    parts = [p.strip() for p in text.split("+")]
    out = []
    for part in parts:
        if len(part) < 2 or part[0].upper() not in "TVC" or not part[1:].isdigit():
            raise ValueError(
                f"bad forest component {part!r}: expected T<n>, V<m> or C<k>"
            )
        out.append((part[0].upper(), int(part[1:])))
    if not out:
        raise ValueError("empty forest spec")
    return tuple(out)


def format_forest_spec(components) -> str:
    return "+".join(f"{kind.upper()}{k}" for kind, k in components)


# -- posets -------------------------------------------------------------------


def poset_to_json(P: FinitePoset) -> dict[str, Any]:
    return {
        "labels": list(P.labels),
        "leq": [[P.labels[i], P.labels[j]] for i, j in P.covers()],
    }


def poset_from_json(data: dict[str, Any]) -> FinitePoset:
    if not isinstance(data, dict) or "labels" not in data:
        raise ValueError("poset JSON needs a 'labels' field")
    pairs = [tuple(p) for p in data.get("leq", [])]
    if any(len(p) != 2 for p in pairs):
        raise ValueError("'leq' entries must be [smaller, larger] pairs")
    return poset_from_relation(data["labels"], pairs)


# -- lattices -----------------------------------------------------------------


def lattice_to_json(L: FiniteLattice) -> dict[str, Any]:
    labels = L.labels
    return {
        **poset_to_json(L.poset),
        "meet": [[labels[L.meet(a, b)] for b in range(L.n)] for a in range(L.n)],
        "join": [[labels[L.join(a, b)] for b in range(L.n)] for a in range(L.n)],
    }


def lattice_from_json(data: dict[str, Any]) -> FiniteLattice:
    P = poset_from_json(data)
    derived = lattice_from_poset(P)
    for key in ("meet", "join"):
        if key in data:
            table = data[key]
            expected = derived.meet_table if key == "meet" else derived.join_table
            given = tuple(
                tuple(P.index(entry) for entry in row) for row in table
            )
            if given != expected:
                raise ValueError(f"'{key}' table disagrees with the derived {key}")
    return derived


# -- semirings ----------------------------------------------------------------


def semiring_to_json(R: FiniteSemiring) -> dict[str, Any]:
    labels = R.labels
    return {
        "labels": list(labels),
        "add": [[labels[R.add[a][b]] for b in range(R.n)] for a in range(R.n)],
        "mul": [[labels[R.mul[a][b]] for b in range(R.n)] for a in range(R.n)],
        "zero": labels[R.zero],
        "one": labels[R.one],
    }


def semiring_from_json(data: dict[str, Any]) -> FiniteSemiring:
    for key in ("labels", "add", "mul", "zero", "one"):
        if key not in data:
            raise ValueError(f"semiring JSON needs a {key!r} field")
    return semiring_from_tables(
        data["labels"], data["add"], data["mul"], data["zero"], data["one"]
    )


# -- spaces ---------------------------------------------------------------------


def space_to_json(space: XTopSpace) -> dict[str, Any]:
    return {
        "lattice": lattice_to_json(space.lattice),
        "X": list(space.labels_of(space.points)),
        "closed_sets": [list(space.labels_of(C)) for C in space.closed_family],
    }


def space_from_json(data: dict[str, Any]) -> XTopSpace:
    if not isinstance(data, dict) or "lattice" not in data or "X" not in data:
        raise ValueError("space JSON needs 'lattice' and 'X' fields")
    L = lattice_from_json(data["lattice"])
    members = frozenset(L.poset.index(name) for name in data["X"])
    space = build_space(L, members)
    if "closed_sets" in data:
        given = {frozenset(part) for part in map(tuple, data["closed_sets"])}
        computed = {frozenset(space.labels_of(C)) for C in space.closed_family}
        if given != computed:
            raise ValueError("'closed_sets' disagrees with the computed topology")
    return space


# -- reports ---------------------------------------------------------------------


def report_to_json(
    report: SeparationReport, points: tuple[PointClassification, ...]
) -> dict[str, Any]:
    return {
        **report.to_dict(),
        "points": [
            {
                "label": p.label,
                "is_closed": p.is_closed,
                "is_kerneled": p.is_kerneled,
                "is_isolated": p.is_isolated,
                "is_regular_open": p.is_regular_open,
                "is_excluded": p.is_excluded,
                "is_min": p.is_min,
                "is_max": p.is_max,
                "in_SI": p.in_SI,
                "in_CSI": p.in_CSI,
                "is_abs_min": p.is_abs_min,
                "is_barely_max": p.is_barely_max,
            }
            for p in points
        ],
    }


def dumps(data: Any) -> str:
    """Stable JSON text: fixed key order as constructed, no trailing spaces."""
    return json.dumps(data, indent=2, ensure_ascii=False)


# -- DOT --------------------------------------------------------------------------


def _quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def poset_to_dot(
    P: FinitePoset, closed_sets: tuple[tuple[str, ...], ...] | None = None
) -> str:
    """Hasse diagram: cover edges from smaller to larger, minimals at bottom."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for name in P.labels:
        lines.append(f"  {_quote(name)};")
    for i, j in P.covers():
        lines.append(f"  {_quote(P.labels[i])} -> {_quote(P.labels[j])};")
    minimals = sorted(P.minimals())
    if minimals:
        names = " ".join(_quote(P.labels[i]) for i in minimals)
        lines.append(f"  {{ rank=min; {names} }}")
    if closed_sets is not None:
        lines.append("  // closed sets")
        for part in closed_sets:
            lines.append("  // {" + ",".join(part) + "}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def space_to_dot(space: XTopSpace, annotate_closed: bool = False) -> str:
    """DOT of the specialization order of X, closed sets optionally listed."""
    closed = (
        tuple(space.labels_of(C) for C in space.closed_family)
        if annotate_closed
        else None
    )
    return poset_to_dot(space.specialization_poset(), closed)
