from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy import Poly, Symbol
from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from errors import NotAUnit

RING, X, Q = ring("x,q", ZZ)
Q_SYMBOL = Symbol("q")

Coefficient = Union[int, Sequence[int]]


class SeriesQ:
    """Power series in x truncated after x^order, coefficients in Z[q]."""

    def __init__(self, poly: PolyElement, order: int) -> None:
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        self.order = order
        self.poly = rs_trunc(RING(poly), X, order + 1)

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Coefficient], order: int) -> "SeriesQ":
        """Coefficient n is an int or the ascending q-coefficients of [x^n]."""
        terms: Dict[Tuple[int, int], int] = {}
        for n, coefficient in enumerate(coefficients):
            if n > order:
                break
            values = [coefficient] if isinstance(coefficient, int) else list(coefficient)
            for power, value in enumerate(values):
                if value:
                    terms[(n, power)] = int(value)
        return cls(RING(terms), order)

    @classmethod
    def constant(cls, value: int, order: int) -> "SeriesQ":
        return cls(RING(value), order)

    @classmethod
    def x(cls, order: int) -> "SeriesQ":
        return cls(X, order)

    @classmethod
    def q(cls, order: int) -> "SeriesQ":
        return cls(Q, order)

    def _coerce(self, other: Union["SeriesQ", int]) -> "SeriesQ":
        if isinstance(other, SeriesQ):
            return other
        return SeriesQ.constant(int(other), self.order)

    def __add__(self, other: Union["SeriesQ", int]) -> "SeriesQ":
        other = self._coerce(other)
        return SeriesQ(self.poly + other.poly, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self) -> "SeriesQ":
        return SeriesQ(-self.poly, self.order)

    def __sub__(self, other: Union["SeriesQ", int]) -> "SeriesQ":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "SeriesQ":
        return self._coerce(other) - self

    def __mul__(self, other: Union["SeriesQ", int]) -> "SeriesQ":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return SeriesQ(rs_mul(self.poly, other.poly, X, order + 1), order)

    __rmul__ = __mul__

    def reciprocal(self) -> "SeriesQ":
        constant = self.coefficient(0)
        if constant not in ((1,), (-1,)):
            raise NotAUnit(f"constant term {constant} is not +-1")
        if constant == (-1,):
            return -((-self).reciprocal())
        return SeriesQ(rs_series_inversion(self.poly, X, self.order + 1), self.order)

    def __truediv__(self, other: "SeriesQ") -> "SeriesQ":
        return self * other.reciprocal()

    def truncate(self, order: int) -> "SeriesQ":
        return SeriesQ(self.poly, min(order, self.order))

    def coefficient(self, n: int) -> Tuple[int, ...]:
        """Ascending q-coefficients of [x^n]; (0,) when the coefficient vanishes."""
        if n > self.order:
            raise IndexError(f"x^{n} lies beyond truncation order {self.order}")
        powers = {q_power: int(value) for (x_power, q_power), value in self.poly.terms() if x_power == n}
        if not powers:
            return (0,)
        return tuple(powers.get(power, 0) for power in range(max(powers) + 1))

    def coefficients(self) -> List[Tuple[int, ...]]:
        return [self.coefficient(n) for n in range(self.order + 1)]

    def q_polynomial(self, n: int) -> Poly:
        return Poly(list(reversed(self.coefficient(n))), Q_SYMBOL, domain=ZZ)

    def at_q(self, value: int) -> "SeriesQ":
        return SeriesQ.from_coefficients(
            [sum(c * value ** power for power, c in enumerate(coeffs)) for coeffs in self.coefficients()],
            self.order,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesQ):
            return NotImplemented
        return self.order == other.order and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.order, tuple(sorted(self.poly.terms()))))

    def __repr__(self) -> str:
        return f"SeriesQ({self.poly.as_expr()} + O(x^{self.order + 1}))"
