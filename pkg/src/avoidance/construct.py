from __future__ import annotations

from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from avoidance.rank import minimum_cover
from avoidance.signature import perm_from_cyclic_signature
from errors import (
    BadAlphabet,
    ConstructionFailed,
    DimensionMismatch,
    HasMinusAntipodalSubset,
    LengthTooShort,
    MissingRequiredSymbol,
    OutsideBijectionImage,
    RankInfinite,
    SomePatternUnavoidable,
)
from patterns.mesh import mesh_pattern_pd
from patterns.occurrence import avoids, count_occurrences_mesh, count_occurrences_smp
from patterns.smp import SMP, contains_minus_antipodal_subset, missing_antipodal_pairs
from perms.multiperm import MultiPerm, complement_row, increasing, inflate_all, new_multiperm

Logger = Callable[[str], None]

# first symbol of the string -> (row for 0, row for 1, row for 2)
STRING_CASES: Dict[str, Tuple[str, str, str]] = {
    "0": ("132", "231", "123"),
    "1": ("312", "213", "123"),
    "2": ("132", "213", "123"),
}


def build_avoider(pattern: SMP, n: int, logger: Optional[Logger] = None) -> MultiPerm:
    """Return a length-``n`` permutation avoiding ``pattern``.

    Every element gets its cyclic successor in a shaded octant: row i of the
    result realises the periodic sign word read off row i of a minimum cover.
    """
    log = logger or (lambda message: None)
    cover = minimum_cover(pattern)
    if cover is None:
        raise RankInfinite(f"pattern {pattern} is strongly unavoidable")
    if n < len(cover):
        raise LengthTooShort(f"no avoider of length {n} exists below rank {len(cover)}")
    taus = []
    for row in range(pattern.d):
        word = "".join(cover[t % len(cover)].entries[row] for t in range(n))
        taus.append(perm_from_cyclic_signature(word))
    result = new_multiperm(taus[1:], first_row=taus[0])
    if not avoids(result, pattern):
        raise ConstructionFailed(f"constructed permutation does not avoid {pattern}")
    log(f"avoider n={n} for {pattern} via cover {','.join(map(str, cover))}")
    return result


def build_simultaneous_avoider(
    patterns: Sequence[SMP],
    min_length: int,
    logger: Optional[Logger] = None,
) -> MultiPerm:
    """Common avoider of all ``patterns`` by iterated inflation of individual avoiders."""
    log = logger or (lambda message: None)
    if not patterns:
        raise SomePatternUnavoidable("no patterns given")
    d = patterns[0].d
    covers = []
    for pattern in patterns:
        if pattern.d != d:
            raise DimensionMismatch(f"patterns have dimensions {d} and {pattern.d}")
        cover = minimum_cover(pattern)
        if cover is None:
            raise SomePatternUnavoidable(f"pattern {pattern} is strongly unavoidable")
        covers.append(len(cover))
    if len(patterns) == 1:
        return build_avoider(patterns[0], max(min_length, covers[0]), logger)

    lengths = list(covers)
    rest = 1
    for length in lengths[1:]:
        rest *= length
    lengths[0] = max(lengths[0], -(-min_length // rest))

    result = build_avoider(patterns[0], lengths[0], logger)
    for pattern, length in zip(patterns[1:], lengths[1:]):
        result = inflate_all(build_avoider(pattern, length, logger), result)
    for pattern in patterns:
        if not avoids(result, pattern):
            raise ConstructionFailed(f"inflated permutation does not avoid {pattern}")
    log(f"simultaneous avoider n={result.n} for {len(patterns)} patterns")
    return result


def witness_n_occurrences(pattern: SMP, n: int, logger: Optional[Logger] = None) -> MultiPerm:
    """Length-``n`` permutation in which every element is an occurrence of ``pattern``."""
    log = logger or (lambda message: None)
    if contains_minus_antipodal_subset(pattern):
        raise HasMinusAntipodalSubset(f"pattern {pattern} occurs at most once in any permutation")
    if n < 1:
        raise LengthTooShort("witness length must be at least 1")
    pair = missing_antipodal_pairs(pattern)[0]
    # complementing these rows sends the missing pair to (+...+, -...-)
    flipped = [row for row, sign in enumerate(pair.entries, start=1) if sign == "-"]
    result = increasing(pattern.d, n)
    for row in flipped:
        result = complement_row(result, row)
    if count_occurrences_smp(result, pattern) != n:
        raise ConstructionFailed(f"witness for {pattern} does not have {n} occurrences")
    log(f"witness n={n} for {pattern} via missing pair {pair}/{pair.complement()}")
    return result


def one_occurrence_strings(d: int) -> List[str]:
    """Strings over {0,1,2} of length d holding at least one 0 and one 1."""
    return [
        "".join(symbols)
        for symbols in product("012", repeat=d)
        if "0" in symbols and "1" in symbols
    ]


def string_to_one_occurrence_perm(s: str, d: Optional[int] = None) -> MultiPerm:
    if d is not None and len(s) != d:
        raise BadAlphabet(f"string {s!r} has length {len(s)}, expected {d}")
    if len(s) < 2:
        raise BadAlphabet("strings need length at least 2")
    bad = set(s) - set("012")
    if bad:
        raise BadAlphabet(f"string {s!r} contains {''.join(sorted(bad))!r}")
    if "0" not in s or "1" not in s:
        raise MissingRequiredSymbol(f"string {s!r} needs at least one 0 and one 1")
    images = STRING_CASES[s[0]]
    rows = [[int(digit) for digit in images[int(symbol)]] for symbol in s[1:]]
    result = new_multiperm(rows)
    if count_occurrences_mesh(result, mesh_pattern_pd(len(s))) != 1:
        raise ConstructionFailed(f"string {s!r} maps outside the one-occurrence set")
    return result


def one_occurrence_perm_to_string(perm: MultiPerm) -> str:
    if perm.n != 3:
        raise OutsideBijectionImage(f"length {perm.n} permutations are not in the image")
    rows = ["".join(str(value) for value in row) for row in perm.rows]
    if "231" in rows:
        first = "0"
    elif "312" in rows:
        first = "1"
    else:
        first = "2"
    inverse = {image: str(symbol) for symbol, image in enumerate(STRING_CASES[first])}
    try:
        s = first + "".join(inverse[row] for row in rows)
    except KeyError:
        raise OutsideBijectionImage(f"{perm.rows} has no preimage") from None
    if "0" not in s or "1" not in s:
        raise OutsideBijectionImage(f"{perm.rows} has no preimage")
    return s
