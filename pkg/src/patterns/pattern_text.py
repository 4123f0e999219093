from __future__ import annotations

import json
from itertools import product
from typing import Any, Dict, List, Optional

from errors import BadSymbol, DuplicateColumn, PatternSyntaxError, RaggedColumns
from patterns.mesh import AtLeast, MarkedSMP, Mark, MeshPattern, Shaded
from patterns.smp import SMP, SignVector
from perms.perm_text import from_dict as perm_from_dict
from perms.perm_text import parse_multiperm, to_dict as perm_to_dict

SYMBOL_ALIASES = {"−": "-", "⋆": "*", "★": "*"}
ALLOWED = set("+-*")


def parse_smp(text: str, d: Optional[int] = None) -> SMP:
    """Parse ``"+-,-+"`` or star notation such as ``"+*"``.

    Each ``*`` row stands for both signs.  A blank string is the empty pattern
    and needs ``d``.
    """
    stripped = _normalize(text)
    if stripped.startswith("{"):
        return smp_from_dict(json.loads(stripped))
    if not stripped or stripped in {"{}", "∅"}:
        if d is None:
            raise BadSymbol("the empty pattern needs an explicit dimension")
        return SMP(d=d, columns=())
    raw_columns = [part.strip() for part in stripped.split(",")]
    width = len(raw_columns[0])
    _check_width(width, text)
    columns: List[SignVector] = []
    seen = set()
    for raw in raw_columns:
        if not raw:
            raise BadSymbol(f"empty column in {text!r}")
        bad = set(raw) - ALLOWED
        if bad:
            raise BadSymbol(f"column {raw!r} contains {''.join(sorted(bad))!r}")
        if len(raw) != width:
            raise RaggedColumns(f"column {raw!r} has length {len(raw)}, expected {width}")
        for expanded in _expand_stars(raw):
            if expanded in seen:
                raise DuplicateColumn(f"column {expanded} appears twice")
            seen.add(expanded)
            columns.append(SignVector(expanded))
    if d is not None and d != width:
        raise RaggedColumns(f"columns have length {width}, expected {d}")
    return SMP(d=width, columns=tuple(columns))


def format_smp(pattern: SMP) -> str:
    return ",".join(column.entries for column in pattern.columns)


def smp_to_dict(pattern: SMP) -> Dict[str, Any]:
    return {"d": pattern.d, "columns": [column.entries for column in pattern.columns]}


def smp_from_dict(data: Dict[str, Any]) -> SMP:
    try:
        columns = [str(column) for column in data.get("columns", [])]
        d = int(data["d"])
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        raise PatternSyntaxError(f"pattern object needs 'd' and 'columns': {exc!r}") from None
    _check_width(d, str(data))
    if len(set(columns)) != len(columns):
        raise DuplicateColumn("pattern columns must be distinct")
    for column in columns:
        if len(column) != d:
            raise RaggedColumns(f"column {column!r} has length {len(column)}, expected {d}")
    return SMP(d=d, columns=tuple(SignVector(column) for column in columns))


def parse_marked(text: str) -> MarkedSMP:
    """Parse ``"++:#,+-:2"``: ``#`` shades a column, an integer asks for at least that many."""
    entries: List[tuple[SignVector, Mark]] = []
    for part in _normalize(text).split(","):
        part = part.strip()
        if ":" not in part:
            raise BadSymbol(f"marked column {part!r} lacks ':'")
        column, mark_text = (piece.strip() for piece in part.split(":", 1))
        if set(column) - {"+", "-"}:
            raise BadSymbol(f"column {column!r} contains symbols other than + and -")
        _check_width(len(column), text)
        entries.append((SignVector(column), _parse_mark(mark_text)))
    widths = {vector.d for vector, _ in entries}
    if len(widths) != 1:
        raise RaggedColumns(f"marked columns have lengths {sorted(widths)}")
    return MarkedSMP(d=widths.pop(), entries=tuple(entries))


def format_marked(pattern: MarkedSMP) -> str:
    return str(pattern)


def parse_mesh(text: str) -> MeshPattern:
    """Parse the JSON form ``{"T": <multiperm>, "shading": [[c1, ..., cd], ...]}``."""
    return mesh_from_dict(json.loads(text))


def mesh_from_dict(data: Dict[str, Any]) -> MeshPattern:
    try:
        raw_t = data["T"]
        cells = frozenset(tuple(int(value) for value in cell) for cell in data.get("shading", []))
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        raise PatternSyntaxError(f"mesh pattern needs 'T' and a list of cells: {exc!r}") from None
    if isinstance(raw_t, str):
        perm = parse_multiperm(raw_t)
    else:
        perm = perm_from_dict(raw_t)
    return MeshPattern(T=perm, shading=cells)


def mesh_to_dict(pattern: MeshPattern) -> Dict[str, Any]:
    return {
        "T": perm_to_dict(pattern.T),
        "shading": [list(cell) for cell in sorted(pattern.shading)],
    }


def format_mesh(pattern: MeshPattern) -> str:
    return json.dumps(mesh_to_dict(pattern), sort_keys=True, separators=(",", ":"))


def _parse_mark(text: str) -> Mark:
    if text in {"#", "■"}:
        return Shaded()
    try:
        return AtLeast(int(text))
    except ValueError:
        raise BadSymbol(f"mark {text!r} is neither '#' nor a positive integer") from None


def _check_width(width: int, text: str) -> None:
    if width < 2:
        raise RaggedColumns(f"columns need at least two rows in {text!r}")


def _expand_stars(column: str) -> List[str]:
    choices = [("+", "-") if symbol == "*" else (symbol,) for symbol in column]
    return ["".join(signs) for signs in product(*choices)]


def _normalize(text: str) -> str:
    for alias, symbol in SYMBOL_ALIASES.items():
        text = text.replace(alias, symbol)
    return text.strip()
