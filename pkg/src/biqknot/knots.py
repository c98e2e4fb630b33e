"""Named knot diagrams bundled with the library.

Table files hold one knot per line::

    name | X+ 0 1 3 2; X+ 2 3 5 4; ... | determinant

The determinant is optional user-supplied metadata (this library never
computes it); for the bundled 2-bridge knots the test suite checks it
against coloring counts via Col_{R_n} = n * gcd(det, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .diagram import SemiarcDiagram, parse_pd


@dataclass(frozen=True)
class KnotRecord:
    name: str
    diagram: SemiarcDiagram
    determinant: int | None = None


def parse_knot_table(text: str) -> dict[str, KnotRecord]:
    """Parse a knot table file into an ordered name -> record map."""
    records: dict[str, KnotRecord] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'name | crossings [| determinant]'")
        name, inline = parts[0], parts[1]
        if not name:
            raise ValueError(f"line {lineno}: empty knot name")
        if name in records:
            raise ValueError(f"line {lineno}: duplicate knot {name!r}")
        det = None
        if len(parts) == 3 and parts[2]:
            det = int(parts[2])
        diagram = parse_pd("\n".join(inline.split(";")))
        records[name] = KnotRecord(name, diagram, det)
    return records


def builtin_table() -> dict[str, KnotRecord]:
    """The bundled table (small Rolfsen knots as verified diagrams)."""
    text = resources.files("biqknot").joinpath("data/knots.txt").read_text()
    return parse_knot_table(text)


def builtin_knot(name: str) -> KnotRecord:
    table = builtin_table()
    if name not in table:
        raise KeyError(f"unknown knot {name!r}; bundled: {', '.join(table)}")
    return table[name]
