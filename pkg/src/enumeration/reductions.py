from __future__ import annotations

from math import factorial
from typing import Callable, Optional, Tuple

from enumeration.counters import AscendingPairCounter
from enumeration.distribution import distribution_smp
from enumeration.engine import EnumerationEngine
from errors import DimensionTooSmall, EnumerationError, NotHyperplane
from patterns.smp import SMP, SignVector, is_hyperplane, project

Logger = Callable[[str], None]


def projective_lift_check(
    pattern: SMP,
    i: int,
    n: int,
    engine: Optional[EnumerationEngine] = None,
    logger: Optional[Logger] = None,
) -> bool:
    """True when the distribution of ``pattern`` is n! times that of its projection."""
    log = logger or (lambda message: None)
    engine = engine or EnumerationEngine()
    reduced = project(pattern, i)
    lifted = distribution_smp(pattern, n, engine).counts
    base = distribution_smp(reduced, n, engine).counts
    ok = lifted == tuple(factorial(n) * count for count in base)
    log(f"projective lift {pattern} dir={i} n={n}: {'ok' if ok else 'MISMATCH'}")
    return ok


def hyperplane_remainder(pattern: SMP, i: int) -> SMP:
    """The (d-1)-dimensional pattern B^(i): columns outside the core, row i dropped."""
    if not is_hyperplane(pattern, i):
        raise NotHyperplane(f"pattern {pattern} is not {i}-hyperplane")
    if pattern.d < 3:
        raise DimensionTooSmall("hyperplane reduction needs d >= 3")
    extra = [column for column in pattern.columns if column.entries[i - 1] == "-"]
    if not extra:
        raise NotHyperplane(f"pattern {pattern} is exactly the core; nothing to reduce")
    return SMP(d=pattern.d - 1, columns=tuple(column.drop(i) for column in extra))


def hyperplane_reduction_count(
    pattern: SMP,
    i: int,
    n: int,
    engine: Optional[EnumerationEngine] = None,
    logger: Optional[Logger] = None,
) -> Tuple[int, int]:
    """(count from the reduced distribution, direct count of single-occurrence permutations)."""
    log = logger or (lambda message: None)
    engine = engine or EnumerationEngine()
    remainder = hyperplane_remainder(pattern, i)
    reduced = distribution_smp(remainder, n, engine)
    via_formula = sum(
        k * factorial(n - 1) * reduced.coefficient(k) for k in range(1, n + 1)
    ) if n >= 1 else 0
    direct = distribution_smp(pattern, n, engine).coefficient(1)
    log(f"hyperplane {pattern} dir={i} n={n}: formula={via_formula} direct={direct}")
    return via_formula, direct


def all_comparable_pattern(d: int) -> SMP:
    return SMP(d=d, columns=(SignVector("+" * d), SignVector("-" * d)))


def parallel_avoidance_count(d: int, n: int, engine: Optional[EnumerationEngine] = None) -> int:
    """(d-1)-tuples of n-permutations with no positions i < j ascending in every row."""
    return (engine or EnumerationEngine()).run(AscendingPairCounter(d), n)[0]


def count_max_occurrence_R(d: int, n: int, engine: Optional[EnumerationEngine] = None) -> int:
    """Permutations in S^d_n where every element is an occurrence of {+...+, -...-}."""
    engine = engine or EnumerationEngine()
    direct = distribution_smp(all_comparable_pattern(d), n, engine).coefficient(n)
    cross = parallel_avoidance_count(d, n, engine)
    if direct != cross:
        raise EnumerationError(f"R({n}) for d={d}: direct {direct} != parallel avoidance {cross}")
    return direct
