"""Parser for the bundled GF(4) line tables.

File layout::

    [SIX]      L_1: 011aa|10aa1|1a01a|11b0b|1b1b0
    [X3]       L_136: 011aa|101b1|1101b|1ab0a|1baa0; bold=4,5
    [X0]       L_45: ...
    [PAIRS]    1,3,6 | 2,4,5 | 4,5
    [NAMED]    T_1: ...            (optional)

Blank lines and ``#`` comments are ignored.  Matrices are validated for shape
only; whether they describe simplex lines is left to the verifier.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

DATA_ENV = "SIMPLEXGRAPH_DATA"
DATA_FILE = "appendix.txt"
SYMBOLS = "01ab"
REQUIRED = ("SIX", "X3", "X0", "PAIRS")
MATRIX_SECTIONS = ("SIX", "X3", "X0", "NAMED")

_ENTRY = re.compile(r"^(?P<name>[A-Za-z]\w*)\s*:\s*(?P<rows>[^;]+?)\s*(?:;\s*bold\s*=\s*(?P<bold>[\d,\s]+))?$")
_TRIPLE = re.compile(r"^\d\s*,\s*\d\s*,\s*\d$")


class AppendixParseError(ValueError):
    def __init__(self, source: str, lineno: int, msg: str):
        super().__init__(f"{source}:{lineno}: {msg}")
        self.source = source
        self.lineno = lineno


@dataclass
class MatrixEntry:
    name: str
    rows: list[str]
    bold: frozenset[int] = frozenset()  # 1-based row numbers
    lineno: int = 0

    @property
    def text(self) -> str:
        return "|".join(self.rows)

    @property
    def label(self) -> tuple[int, ...]:
        """Digits of the subscript, e.g. ``L_136`` -> (1, 3, 6)."""
        return tuple(int(ch) for ch in self.name.split("_", 1)[1])


@dataclass
class PairRow:
    first: tuple[int, int, int]
    second: tuple[int, int, int]
    st: tuple[int, int]
    lineno: int = 0


@dataclass
class AppendixTable:
    six: list[MatrixEntry] = dc_field(default_factory=list)
    x3: list[MatrixEntry] = dc_field(default_factory=list)
    x0: list[MatrixEntry] = dc_field(default_factory=list)
    pairs: list[PairRow] = dc_field(default_factory=list)
    named: list[MatrixEntry] = dc_field(default_factory=list)
    source: str = "<string>"

    def section(self, name: str) -> list:
        return getattr(self, name.lower())

    def by_name(self) -> dict[str, MatrixEntry]:
        return {e.name: e for sec in MATRIX_SECTIONS for e in self.section(sec)}


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def parse_appendix(text: str, source: str = "<string>", n: int = 5) -> AppendixTable:
    table = AppendixTable(source=source)
    current: Optional[str] = None
    seen_sections: set[str] = set()
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise AppendixParseError(source, lineno, f"malformed section header {line!r}")
            current = line[1:-1].strip().upper()
            if current not in REQUIRED + ("NAMED",):
                raise AppendixParseError(source, lineno, f"unknown section [{current}]")
            if current in seen_sections:
                raise AppendixParseError(source, lineno, f"duplicate section [{current}]")
            seen_sections.add(current)
            continue
        if current is None:
            raise AppendixParseError(source, lineno, "entry outside of any section")

        if current == "PAIRS":
            parts = [p.strip() for p in line.split("|")]
            if len(parts) != 3 or not all(_TRIPLE.match(p) for p in parts[:2]):
                raise AppendixParseError(source, lineno, f"pair row must read 'i,j,k | i',j',k' | s,t': {line!r}")
            try:
                st = _ints(parts[2])
            except ValueError:
                raise AppendixParseError(source, lineno, f"bad s,t field {parts[2]!r}") from None
            if len(st) != 2:
                raise AppendixParseError(source, lineno, f"bad s,t field {parts[2]!r}")
            table.pairs.append(PairRow(_ints(parts[0]), _ints(parts[1]), st, lineno))  # type: ignore[arg-type]
            continue

        m = _ENTRY.match(line)
        if not m:
            raise AppendixParseError(source, lineno, f"cannot parse entry {line!r}")
        name = m["name"]
        if name in names:
            raise AppendixParseError(source, lineno, f"duplicate entry {name}")
        names.add(name)
        rows = [r.strip() for r in m["rows"].split("|")]
        if len(rows) != n:
            raise AppendixParseError(source, lineno, f"{name}: expected {n} rows, got {len(rows)}")
        for r in rows:
            if len(r) != n or any(ch not in SYMBOLS for ch in r):
                raise AppendixParseError(source, lineno, f"{name}: row {r!r} is not {n} symbols from {SYMBOLS!r}")
        bold: frozenset[int] = frozenset()
        if m["bold"] is not None:
            if current != "X3":
                raise AppendixParseError(source, lineno, f"{name}: bold marks only belong in [X3]")
            marks = _ints(m["bold"].strip())
            bold = frozenset(marks)
            if len(marks) != 2 or len(bold) != 2 or not bold <= set(range(1, n + 1)):
                raise AppendixParseError(source, lineno, f"{name}: need exactly two distinct bold rows in 1..{n}")
        elif current == "X3":
            raise AppendixParseError(source, lineno, f"{name}: [X3] entries need bold marks")
        table.section(current).append(MatrixEntry(name, rows, bold, lineno))

    missing = [s for s in REQUIRED if s not in seen_sections]
    if missing:
        raise AppendixParseError(source, 0, f"missing section(s): {', '.join(missing)}")
    return table


def default_data_path() -> Union[Path, "resources.abc.Traversable"]:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env) / DATA_FILE
    return resources.files("simplexgraph") / "data" / DATA_FILE


def load_appendix(path: Optional[Union[str, Path]] = None) -> AppendixTable:
    """Load the line tables from ``path``, ``$SIMPLEXGRAPH_DATA/appendix.txt`` or the bundled copy."""
    target = Path(path) if path is not None else default_data_path()
    if not target.is_file():
        raise FileNotFoundError(f"appendix data file not found: {target}")
    return parse_appendix(target.read_text(encoding="utf-8"), source=str(target))
