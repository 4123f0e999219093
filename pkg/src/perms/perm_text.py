from __future__ import annotations

import json
import re
from typing import Any, Dict, List

from errors import BadSymbol, DimensionMismatch, PatternSyntaxError
from perms.multiperm import MultiPerm, new_multiperm


def parse_multiperm(text: str) -> MultiPerm:
    """Parse ``"1 2 5 3 4; 5 1 2 4 3"`` (row 1 omitted).

    A row written without separators, such as ``12534``, is read digit by digit.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return from_dict(json.loads(stripped))
    rows: List[List[int]] = []
    for chunk in stripped.split(";"):
        rows.append(_parse_row(chunk))
    return new_multiperm(rows)


def format_multiperm(perm: MultiPerm) -> str:
    return "; ".join(" ".join(str(value) for value in row) for row in perm.rows)


def compact_multiperm(perm: MultiPerm) -> str:
    """Digit-string rows such as ``(25413,12354)``; only meaningful for n <= 9."""
    return "(" + ",".join("".join(str(value) for value in row) for row in perm.rows) + ")"


def to_dict(perm: MultiPerm) -> Dict[str, Any]:
    return {"d": perm.d, "n": perm.n, "rows": [list(row) for row in perm.rows]}


def from_dict(data: Dict[str, Any]) -> MultiPerm:
    try:
        rows = [[int(value) for value in row] for row in data["rows"]]
        declared = int(data["d"]) if "d" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise PatternSyntaxError(f"permutation object needs integer 'rows': {exc!r}") from None
    perm = new_multiperm(rows)
    if declared is not None and declared != perm.d:
        raise DimensionMismatch(f"declared d={data['d']} but {perm.d - 1} rows given")
    return perm


def _parse_row(chunk: str) -> List[int]:
    raw = chunk.strip()
    if not raw:
        return []
    if re.search(r"[^0-9,\s]", raw):
        raise BadSymbol(f"unexpected symbol in row {raw!r}")
    tokens = [token for token in re.split(r"[\s,]+", raw) if token]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        return [int(digit) for digit in tokens[0]]
    return [int(token) for token in tokens]
