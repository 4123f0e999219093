from __future__ import annotations

from itertools import product
from math import factorial
from typing import Tuple

from sympy import Poly, expand, rf
from sympy.functions.combinatorial.numbers import stirling
from sympy.polys.domains import ZZ

from errors import DimensionTooSmall, UnknownCase
from patterns.pattern_text import parse_smp
from patterns.smp import SMP, SignVector
from series.series_q import Q_SYMBOL, SeriesQ

CASE_IDS = (1, 2, 3, 4, 5)


def f_d(d: int, order: int) -> SeriesQ:
    """F_d(x) = sum over n of (n!)^(d-1) x^n."""
    _check_dimension(d)
    return SeriesQ.from_coefficients([factorial(n) ** (d - 1) for n in range(order + 1)], order)


def rising_factorial_poly(n: int) -> Poly:
    """q(q+1)...(q+n-1) as a polynomial in q."""
    return Poly(expand(rf(Q_SYMBOL, n)), Q_SYMBOL, domain=ZZ)


def rising_factorial_coefficients(n: int) -> Tuple[int, ...]:
    """Ascending coefficients of the rising factorial: unsigned Stirling numbers of the first kind."""
    return tuple(int(stirling(n, k, kind=1)) for k in range(n + 1))


def stirling2(n: int, k: int) -> int:
    return int(stirling(n, k))


def case_pattern(case_id: int, d: int) -> SMP:
    """The projective pattern whose distribution ``case_formula`` describes."""
    _check_dimension(d)
    stars = "*" * (d - 2)
    texts = {
        1: "++" + stars,
        2: "+" + "*" * (d - 1),
        3: f"+-{stars},-+{stars}",
        4: f"++{stars},+-{stars},--{stars}",
        5: "*" * d,
    }
    if case_id not in texts:
        raise UnknownCase(f"case {case_id!r} is not one of {CASE_IDS}")
    return parse_smp(texts[case_id])


def case_formula(case_id: int, d: int, order: int) -> SeriesQ:
    _check_dimension(d)
    lift = [factorial(n) ** (d - 2) for n in range(order + 1)]
    x = SeriesQ.x(order)
    q = SeriesQ.q(order)
    if case_id == 1:
        return SeriesQ.from_coefficients(
            [
                [lift[n] * c for c in rising_factorial_coefficients(n)]
                for n in range(order + 1)
            ],
            order,
        )
    if case_id == 2:
        return 1 + q * (f_d(d, order) - 1)
    if case_id == 3:
        f2 = f_d(2, order)
        planar = f2 / (1 + x * (1 - q) * f2)
        return SeriesQ.from_coefficients(
            [[lift[n] * c for c in planar.coefficient(n)] for n in range(order + 1)],
            order,
        )
    if case_id == 4:
        tail = SeriesQ.from_coefficients(
            [0] + [lift[n] * factorial(n - 1) for n in range(1, order + 1)], order
        )
        return f_d(d, order) + (q - 1) * tail
    if case_id == 5:
        return (q - 1) * x + f_d(d, order)
    raise UnknownCase(f"case {case_id!r} is not one of {CASE_IDS}")


def plus_antipodal_pattern(d: int) -> SMP:
    """Every column except (+, ..., +) and (-, ..., -)."""
    _check_dimension(d)
    columns = [
        SignVector("".join(signs))
        for signs in product("+-", repeat=d)
        if len(set(signs)) == 2
    ]
    return SMP(d=d, columns=tuple(columns))


def plus_antipodal_avoiders(d: int, order: int) -> Tuple[int, ...]:
    """a_0..a_order from a_{n+1} = ((n+1)!)^(d-1) - sum_i a_i ((n-i)!)^(d-1)."""
    _check_dimension(d)
    values = [1]
    for n in range(order):
        total = factorial(n + 1) ** (d - 1)
        values.append(
            total - sum(values[i] * factorial(n - i) ** (d - 1) for i in range(n + 1))
        )
    return tuple(values[: order + 1])


def plus_antipodal_series(d: int, order: int) -> Tuple[SeriesQ, SeriesQ]:
    """(A, F): avoiders from the recurrence and F = A / (1 - xqA)."""
    avoiders = SeriesQ.from_coefficients(plus_antipodal_avoiders(d, order), order)
    x = SeriesQ.x(order)
    q = SeriesQ.q(order)
    return avoiders, avoiders / (1 - x * q * avoiders)


def plus_antipodal_closed_forms(d: int, order: int) -> Tuple[SeriesQ, SeriesQ]:
    """F_d / (1 + x F_d) and F_d / (1 + x(1 - q) F_d).

    These are the forms consistent with the recurrence; the denominators
    1 + F_d and 1 + (1 - xq) F_d do not reproduce it.
    """
    fd = f_d(d, order)
    x = SeriesQ.x(order)
    q = SeriesQ.q(order)
    return fd / (1 + x * fd), fd / (1 + x * (1 - q) * fd)


def f3d_coefficients(d: int) -> Tuple[int, int, int, int]:
    """Ascending q-coefficients of the length-3 distribution of ((12, ..., 12), no shading)."""
    _check_dimension(d)
    return (
        6 ** (d - 1) - 3 ** d + 2 ** d,
        3 ** d - 2 ** (d + 1) + 1,
        2 * (2 ** (d - 1) - 1),
        1,
    )


def f3d_polynomial(d: int) -> Poly:
    return Poly(list(reversed(f3d_coefficients(d))), Q_SYMBOL, domain=ZZ)


def smmp_avoider_count(d: int) -> int:
    """Length-3 avoiders of the marked column (+, ..., +) with at least one element."""
    return f3d_coefficients(d)[0]


def _check_dimension(d: int) -> None:
    if d < 2:
        raise DimensionTooSmall(f"series need d >= 2, got {d}")
