"""Logarithmic plurigenera and logarithmic Kodaira dimension of V - (D u Sing V).

For ``A_0 = C``, ``omega_A^{[m0]} = A[N]`` and a principal divisor of degree
``d`` the log plurigenera are ``pbar_{k m0} = dim A_{k(N + m0 d)}``, and the
log Kodaira dimension is decided by the sign of ``N + m0 d``: negative gives
``-inf``, zero gives ``0`` and positive gives ``dim V - 1``.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import HypothesisError, InputError, TruncationError, WeightError
from .graded import DualizingShift, GradedRing, hilbert
from .series import coeff, partial_sum

__all__ = [
    "Kbar",
    "KodairaReport",
    "GrowthEstimate",
    "log_plurigenus",
    "kodaira_dimension",
    "growth_exponent_estimate",
    "infinity_section_dim",
    "kodaira_bound",
]


class Kbar(str, Enum):
    MINUS_INFINITY = "MINUS_INFINITY"
    ZERO = "ZERO"
    DIM_MINUS_ONE = "DIM_MINUS_ONE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class KodairaReport:
    """``pbar[i]`` is ``pbar_{i+1}``; entries at non-multiples of ``m0`` are ``None``.

    ``kbar_value`` is the numeric log Kodaira dimension (``None`` for
    ``-inf`` and UNKNOWN).
    """

    kbar: Kbar
    kbar_value: int | None = None
    m0_used: int = 1
    pbar: tuple[int | None, ...] = ()
    reason: str = ""
    infinity_sections: tuple[int | None, ...] = field(default=())

    def __post_init__(self):
        if self.kbar is Kbar.UNKNOWN and not self.reason:
            raise ValueError("an UNKNOWN log Kodaira dimension must carry a reason")
        at_multiples = [p for p in self.pbar if p is not None]
        if self.kbar is Kbar.MINUS_INFINITY and any(at_multiples):
            raise ValueError("kbar = -inf with a nonzero log plurigenus")
        if self.kbar is Kbar.ZERO and any(p != 1 for p in at_multiples):
            raise ValueError("kbar = 0 needs every log plurigenus at multiples of m0 equal to 1")


def _check(ring: GradedRing, what: str) -> None:
    if not ring.a0_is_base_field:
        raise WeightError(
            f"{what} needs A_0 = C (all weights positive); for A_0 != C with isolated "
            f"singularities and D = 0 the log Kodaira dimension of V - Sing V is -inf"
        )
    if not ring.hypotheses.pair_lc(ring.divisor_degree):
        raise HypothesisError(f"{what}: vstar_pair_lc not asserted")


def _index(ring: GradedRing, shift: DualizingShift, m: int) -> int:
    return shift.offset(m) + m * ring.divisor_degree


def log_plurigenus(ring: GradedRing, shift: DualizingShift, m: int, T: int) -> int:
    """``pbar_m = dim (omega_A^{[m]})_{md} = dim A_{m(N_A + d)}`` (``m0 = 1``)."""
    _check(ring, "log_plurigenus")
    try:
        return coeff(hilbert(ring, T), _index(ring, shift, m))
    except TruncationError as e:
        raise e.in_operation("log_plurigenus") from None


def infinity_section_dim(ring: GradedRing, shift: DualizingShift, m: int, T: int) -> int:
    """Log ``m``-canonical sections over the part of the weighted completion near infinity.

    Equals ``sum_{j=0}^{m(N_A+d)} dim A_j``.
    """
    _check(ring, "infinity_section_dim")
    try:
        return partial_sum(hilbert(ring, T), 0, _index(ring, shift, m))
    except TruncationError as e:
        raise e.in_operation("infinity_section_dim") from None


def kodaira_bound(ring: GradedRing, shift: DualizingShift, M: int) -> int:
    return max(
        [_index(ring, shift, m) for m in range(shift.m0, M + 1, shift.m0)], default=-1
    )


def kodaira_dimension(
    ring: GradedRing, shift: DualizingShift, M: int, T: int, with_pbar: bool = True
) -> KodairaReport:
    """Trichotomy by the sign of ``N + m0 d``, plus ``pbar_1..pbar_M``.

    ``with_pbar=False`` returns the verdict alone, e.g. when the Hilbert
    coefficients cannot be trusted.
    """
    if M < 1:
        raise InputError(f"M must be >= 1, got {M}")
    h = ring.hypotheses
    d = ring.divisor_degree
    m0 = shift.m0
    if not ring.a0_is_base_field:
        if d == 0 and h.isolated_singularity:
            return KodairaReport(Kbar.MINUS_INFINITY, None, m0)
        return KodairaReport(
            Kbar.UNKNOWN,
            None,
            m0,
            reason="A_0 != C: only D = 0 with asserted isolated_singularity is decided (kbar = -inf)",
        )
    if not h.pair_lc(d):
        return KodairaReport(Kbar.UNKNOWN, None, m0, reason="vstar_pair_lc not asserted")

    s = shift.N + m0 * d
    if s < 0:
        kbar, value = Kbar.MINUS_INFINITY, None
    elif s == 0:
        kbar, value = Kbar.ZERO, 0
    else:
        kbar, value = Kbar.DIM_MINUS_ONE, ring.dimension - 1
    if not with_pbar:
        return KodairaReport(kbar, value, m0)

    pbar: list[int | None] = []
    inf: list[int | None] = []
    for m in range(1, M + 1):
        if m % m0:
            pbar.append(None)
            inf.append(None)
        else:
            pbar.append(log_plurigenus(ring, shift, m, T))
            inf.append(infinity_section_dim(ring, shift, m, T))
    return KodairaReport(kbar, value, m0, tuple(pbar), infinity_sections=tuple(inf))


@dataclass(frozen=True)
class GrowthEstimate:
    estimate: int
    slope: float


def growth_exponent_estimate(pbar: Sequence[int | None]) -> GrowthEstimate | None:
    """Least-squares slope of ``log pbar_m`` against ``log m`` over the nonzero tail.

    A heuristic cross-check only. ``None`` entries (non-multiples of ``m0``)
    are skipped; the tail is the longest suffix of positive values.
    """
    if len(pbar) < 8:
        raise InputError(f"growth estimate needs at least 8 terms, got {len(pbar)}")
    points = [(m, p) for m, p in enumerate(pbar, start=1) if p is not None]
    if not any(p for _, p in points):
        return None
    tail: list[tuple[int, int]] = []
    for m, p in reversed(points):
        if p <= 0:
            break
        tail.append((m, p))
    tail.reverse()
    if len(tail) < 2:
        return None
    xs = [math.log(m) for m, _ in tail]
    ys = [math.log(p) for _, p in tail]
    if len(set(ys)) == 1:
        return GrowthEstimate(0, 0.0)
    slope = statistics.linear_regression(xs, ys).slope
    return GrowthEstimate(round(slope), slope)
