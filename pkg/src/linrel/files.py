"""Flat text format for relations.

Two header lines ``dim_x=<n>`` and ``dim_y=<m>``, then one generator per line
as space-separated rationals of length n + m.  Input generators need not be
independent or canonical; the parser canonicalizes.  Output is the canonical
basis, so serialization is deterministic: equal relations produce
byte-identical files.
"""

from __future__ import annotations

from .exact import format_rational, parse_rational
from .relation import LinearRelation


def parse_relation_text(text: str, source: str = "<input>") -> LinearRelation:
    lines = text.splitlines()
    dims = {}
    body_start = 0
    for expected in ("dim_x", "dim_y"):
        while body_start < len(lines) and not lines[body_start].strip():
            body_start += 1
        if body_start >= len(lines):
            raise ValueError(f"{source}:{body_start + 1}: missing header line {expected}=<count>")
        line = lines[body_start].strip()
        key, sep, value = line.partition("=")
        if sep != "=" or key.strip() != expected:
            raise ValueError(f"{source}:{body_start + 1}: expected {expected}=<count>, got {line!r}")
        try:
            dims[expected] = int(value.strip())
        except ValueError:
            raise ValueError(f"{source}:{body_start + 1}: bad count {value.strip()!r}") from None
        if dims[expected] < 0:
            raise ValueError(f"{source}:{body_start + 1}: negative dimension {dims[expected]}")
        body_start += 1
    width = dims["dim_x"] + dims["dim_y"]
    generators = []
    for offset, line in enumerate(lines[body_start:], start=body_start + 1):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != width:
            raise ValueError(
                f"{source}:{offset}: generator has {len(fields)} entries, expected {width}"
            )
        row = []
        for j, field in enumerate(fields):
            try:
                row.append(parse_rational(field))
            except ValueError:
                raise ValueError(f"{source}:{offset}: field {j + 1}: bad rational {field!r}") from None
        generators.append(row)
    return LinearRelation.from_generators(dims["dim_x"], dims["dim_y"], generators)


def parse_relation_file(path: str) -> LinearRelation:
    with open(path, "r", encoding="ascii") as handle:
        return parse_relation_text(handle.read(), source=path)


def generator_rows(rel: LinearRelation) -> list[list[str]]:
    """Canonical basis columns of the graph, each as a list of rational strings."""
    return [[format_rational(x) for x in col] for col in rel.graph.basis.column_tuples()]


def serialize_relation(rel: LinearRelation) -> str:
    lines = [f"dim_x={rel.dim_x}", f"dim_y={rel.dim_y}"]
    lines += [" ".join(row) for row in generator_rows(rel)]
    return "\n".join(lines) + "\n"


def write_relation_file(path: str, rel: LinearRelation) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(serialize_relation(rel))
