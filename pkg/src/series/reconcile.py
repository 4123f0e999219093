from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from enumeration.distribution import (
    DistributionTable,
    distribution_marked,
    distribution_mesh,
    distribution_series,
)
from enumeration.engine import EnumerationEngine
from errors import TruncationTooShort, UnknownCase
from patterns.mesh import mesh_pattern_pd, smmp_all_plus
from series.formulas import (
    case_formula,
    case_pattern,
    f3d_coefficients,
    plus_antipodal_closed_forms,
    plus_antipodal_pattern,
    plus_antipodal_series,
    smmp_avoider_count,
)
from series.series_q import SeriesQ

VERIFY_CASES = ("1", "2", "3", "4", "5", "plus-antipodal", "f3d", "smmp")


@dataclass(frozen=True)
class Mismatch:
    n: int
    q_power: int
    expected: int
    actual: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "q_power": self.q_power,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


@dataclass
class ReconcileReport:
    label: str
    checked: List[int] = field(default_factory=list)
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def extend(self, other: "ReconcileReport") -> None:
        self.checked = sorted(set(self.checked) | set(other.checked))
        self.mismatches.extend(other.mismatches)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "passed": self.passed,
            "checked_n": self.checked,
            "mismatches": [mismatch.to_dict() for mismatch in self.mismatches],
        }


def reconcile(formula: SeriesQ, tables: Sequence[DistributionTable], label: str = "") -> ReconcileReport:
    """Compare [x^n q^k] of ``formula`` with c_k of each table, exactly."""
    report = ReconcileReport(label=label)
    for table in tables:
        if table.n > formula.order:
            raise TruncationTooShort(
                f"table n={table.n} lies beyond formula order {formula.order}"
            )
        expected = formula.coefficient(table.n)
        for k in range(max(len(expected), len(table.counts))):
            want = expected[k] if k < len(expected) else 0
            have = table.coefficient(k)
            if want != have:
                report.mismatches.append(Mismatch(table.n, k, want, have))
        report.checked.append(table.n)
    return report


def verify(
    case: str,
    d: int,
    n: int,
    engine: Optional[EnumerationEngine] = None,
    logger: Optional[Callable[[str], None]] = None,
) -> ReconcileReport:
    """Check one closed form against exhaustive enumeration up to length ``n``.

    Cases 1..5, ``plus-antipodal`` use every length 0..n; ``f3d`` and ``smmp``
    concern length 3 only and ignore ``n``.
    """
    log = logger or (lambda message: None)
    engine = engine or EnumerationEngine()
    case = str(case)
    if case in {"1", "2", "3", "4", "5"}:
        case_id = int(case)
        report = reconcile(
            case_formula(case_id, d, n),
            distribution_series(case_pattern(case_id, d), n, engine),
            label=f"case {case_id} d={d}",
        )
    elif case == "plus-antipodal":
        tables = distribution_series(plus_antipodal_pattern(d), n, engine)
        avoiders, recurrence_series = plus_antipodal_series(d, n)
        closed_avoiders, closed_series = plus_antipodal_closed_forms(d, n)
        report = reconcile(recurrence_series, tables, label=f"plus-antipodal d={d}")
        report.extend(reconcile(closed_series, tables))
        report.extend(_reconcile_values(
            [closed_avoiders.coefficient(k)[0] for k in range(n + 1)],
            [avoiders.coefficient(k)[0] for k in range(n + 1)],
        ))
    elif case == "f3d":
        formula = SeriesQ.from_coefficients([0, 0, 0, f3d_coefficients(d)], 3)
        table = distribution_mesh(mesh_pattern_pd(d), 3, engine)
        report = reconcile(formula, [table], label=f"f3d d={d}")
    elif case == "smmp":
        table = distribution_marked(smmp_all_plus(d), 3, engine)
        report = ReconcileReport(label=f"smmp d={d}", checked=[3])
        if table.avoiders != smmp_avoider_count(d):
            report.mismatches.append(Mismatch(3, 0, smmp_avoider_count(d), table.avoiders))
    else:
        raise UnknownCase(f"unknown verify case {case!r}; expected one of {', '.join(VERIFY_CASES)}")
    log(f"{report.label} n<={n}: {'pass' if report.passed else f'{len(report.mismatches)} mismatches'}")
    return report


def _reconcile_values(expected: Sequence[int], actual: Sequence[int]) -> ReconcileReport:
    report = ReconcileReport(label="")
    for n, (want, have) in enumerate(zip(expected, actual)):
        if want != have:
            report.mismatches.append(Mismatch(n, 0, want, have))
        report.checked.append(n)
    return report
