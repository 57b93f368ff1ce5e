"""Bound reports: one computed quantity compared against one bound value.

Counts stay exact (int or Fraction); the float side only appears at the
reporting boundary.  When both sides are exact the comparison is exact,
otherwise an absolute tolerance applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Mapping

DEFAULT_TOL = 1e-9

Exactish = int | Fraction | float


def _is_exact(x: Exactish) -> bool:
    return isinstance(x, Rational)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking a computed quantity against a bound.

    kind is "upper" (computed must be <= bound) or "lower" (>=).  A report
    flagged as a conjecture is informational: exceeding it is never a
    failure.
    """

    quantity: str
    computed: Exactish
    bound: float
    ratio: float
    satisfied: bool
    source: str
    kind: str
    conjecture: bool = False
    extra: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in ("upper", "lower"):
            raise ValueError(f"kind must be 'upper' or 'lower', got {self.kind!r}")


def _ratio(computed: Exactish, bound: Exactish) -> float:
    b = float(bound)
    if b == 0.0:
        return float("inf") if float(computed) > 0 else float("nan")
    return float(computed) / b


def upper_report(
    quantity: str,
    computed: Exactish,
    bound: Exactish,
    source: str,
    *,
    conjecture: bool = False,
    tol: float = DEFAULT_TOL,
    extra: Mapping[str, object] | None = None,
) -> BoundReport:
    """Report for computed <= bound; exact comparison when both sides are exact."""
    if _is_exact(computed) and _is_exact(bound):
        ok = Fraction(computed) <= Fraction(bound)
    else:
        ok = float(computed) <= float(bound) + tol
    return BoundReport(
        quantity=quantity,
        computed=computed,
        bound=float(bound),
        ratio=_ratio(computed, bound),
        satisfied=ok,
        source=source,
        kind="upper",
        conjecture=conjecture,
        extra=dict(extra or {}),
    )


def lower_report(
    quantity: str,
    computed: Exactish,
    bound: Exactish,
    source: str,
    *,
    conjecture: bool = False,
    tol: float = DEFAULT_TOL,
    extra: Mapping[str, object] | None = None,
) -> BoundReport:
    """Report for computed >= bound; exact comparison when both sides are exact."""
    if _is_exact(computed) and _is_exact(bound):
        ok = Fraction(computed) >= Fraction(bound)
    else:
        ok = float(computed) >= float(bound) - tol
    return BoundReport(
        quantity=quantity,
        computed=computed,
        bound=float(bound),
        ratio=_ratio(computed, bound),
        satisfied=ok,
        source=source,
        kind="lower",
        conjecture=conjecture,
        extra=dict(extra or {}),
    )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of invariant validation; violations are human-readable lines."""

    ok: bool
    violations: tuple[str, ...] = ()
