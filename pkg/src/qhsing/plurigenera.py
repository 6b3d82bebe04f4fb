"""L2-plurigenera ``delta_m`` and lambda-plurigenera ``lambda_m`` of the vertex.

For an isolated singularity with ``A_0 = C``::

    delta_m  = dim (omega_A^{[m]})_{<=0} = sum_{k=0}^{m N_A}     dim A_k
    lambda_m = dim (omega_A^{[m]})_{<0}  = sum_{k=0}^{m N_A - 1} dim A_k

When ``A_0 != C`` both vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError, InputError, TruncationError
from .graded import DualizingShift, GradedRing, hilbert
from .series import Series, partial_sum

__all__ = ["PlurigeneraRow", "delta", "lambda_", "plurigenera_table", "plurigenera_bound"]


@dataclass(frozen=True)
class PlurigeneraRow:
    m: int
    delta: int
    lambda_: int

    def __post_init__(self):
        if not 0 <= self.lambda_ <= self.delta:
            raise ValueError(f"need 0 <= lambda <= delta, got row {self}")


def _check(ring: GradedRing) -> None:
    if not ring.hypotheses.isolated_singularity:
        raise HypothesisError(
            "isolated_singularity not asserted; the plurigenus formulas need a unique singular point"
        )
    if ring.dimension < 2:
        raise InputError(f"plurigenera need dim V >= 2, got dim V = {ring.dimension}")


def _pair(s: Series | None, shift: DualizingShift, m: int) -> tuple[int, int]:
    if s is None:
        # A_0 != C: both plurigenera vanish
        shift.offset(m)  # still rejects m not divisible by m0
        return 0, 0
    top = shift.offset(m)
    try:
        return partial_sum(s, 0, top), partial_sum(s, 0, top - 1)
    except TruncationError as e:
        raise e.in_operation("plurigenera") from None


def _series(ring: GradedRing, T: int) -> Series | None:
    _check(ring)
    return hilbert(ring, T) if ring.a0_is_base_field else None


def delta(ring: GradedRing, shift: DualizingShift, m: int, T: int) -> int:
    return _pair(_series(ring, T), shift, m)[0]


def lambda_(ring: GradedRing, shift: DualizingShift, m: int, T: int) -> int:
    return _pair(_series(ring, T), shift, m)[1]


def plurigenera_table(ring: GradedRing, shift: DualizingShift, M: int, T: int) -> list[PlurigeneraRow]:
    """Rows for ``m = 1..M`` (only multiples of ``m0`` when ``m0 > 1``)."""
    s = _series(ring, T)
    rows = []
    for m in range(shift.m0, M + 1, shift.m0):
        d, l = _pair(s, shift, m)
        rows.append(PlurigeneraRow(m, d, l))
    return rows


def plurigenera_bound(shift: DualizingShift, M: int) -> int:
    """Largest Hilbert coefficient index the table for ``m <= M`` reads."""
    return max([shift.offset(m) for m in range(shift.m0, M + 1, shift.m0)], default=-1)
