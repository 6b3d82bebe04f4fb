"""Log canonical, L2-log terminal, log terminal and rational verdicts.

The verdicts come from sign tests on ``N + m0*d``. Each sign test has a
brute-force counterpart that scans the forbidden graded pieces of
``omega_A^{[m]}(kD)`` coefficient by coefficient, so the two routes can be
compared on any input with positive weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InputError, TruncationError
from .graded import DualizingShift, GradedRing, hilbert, require_positive_weights
from .series import Series, coeff

__all__ = [
    "Answer",
    "Verdict",
    "BruteForceWitness",
    "classify_lc",
    "classify_l2lt",
    "classify_lt",
    "classify_rational",
    "lc_bruteforce",
    "l2lt_bruteforce",
    "kempf_rational_bruteforce",
    "lc_scan_bound",
    "l2lt_scan_bound",
    "l2lt_scan_depth",
]


class Answer(str, Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    value: Answer
    reason: str = ""
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "value", Answer(self.value))
        if self.value is Answer.UNKNOWN and not self.reason:
            raise ValueError("an UNKNOWN verdict must name the missing hypothesis")

    @classmethod
    def of(cls, holds: bool, note: str = "") -> Verdict:
        return cls(Answer.YES if holds else Answer.NO, note=note)

    @classmethod
    def unknown(cls, reason: str) -> Verdict:
        return cls(Answer.UNKNOWN, reason=reason)


@dataclass(frozen=True)
class BruteForceWitness:
    """Outcome of a graded-piece scan.

    ``m_checked`` is the inclusive range of ``m`` actually scanned (the scan
    stops at the first failure). ``first_failure`` is ``(m, g, dim)``: the
    graded piece of degree ``g`` of the twisted module has dimension ``dim``.
    """

    m_checked: tuple[int, int]
    first_failure: tuple[int, int, int] | None = None

    def __post_init__(self):
        if self.first_failure is not None and self.first_failure[2] < 1:
            raise ValueError("a failure witness needs a nonzero graded piece")

    @property
    def failed(self) -> bool:
        return self.first_failure is not None


def _lc_sum(ring: GradedRing, shift: DualizingShift) -> int:
    return shift.N + shift.m0 * ring.divisor_degree


def classify_lc(ring: GradedRing, shift: DualizingShift) -> Verdict:
    """(V, D) is lc iff ``N + m0*d <= 0`` (given (V*, D*) lc)."""
    if not ring.hypotheses.pair_lc(ring.divisor_degree):
        return Verdict.unknown("vstar_pair_lc not asserted")
    if shift.m0 > 1 and not ring.a0_is_base_field:
        return Verdict.unknown("sign test with m0 > 1 needs A_0 = C (all weights positive)")
    return Verdict.of(_lc_sum(ring, shift) <= 0)


def classify_l2lt(ring: GradedRing, shift: DualizingShift) -> Verdict:
    """(V, D) is L2-lt iff ``d > 0 and N_A + d <= 0`` or ``d = 0 and N_A < 0``."""
    d = ring.divisor_degree
    if not ring.hypotheses.l2lt(d):
        return Verdict.unknown("vstar_l2lt not asserted")
    if shift.m0 != 1:
        return Verdict.unknown("L2-lt sign test needs omega_A free (m0 = 1)")
    N = shift.N
    if d > 0:
        return Verdict.of(N + d <= 0)
    note = ""
    if N == 0:
        note = "N_A = 0 with D = 0: lc holds but L2-lt (= lt) fails; lt is strictly smaller than lc here"
    return Verdict.of(N < 0, note=note)


def classify_lt(ring: GradedRing, shift: DualizingShift) -> Verdict:
    """lt verdict: equals L2-lt when D = 0; for D != 0 only 'not lc' decides it."""
    if ring.divisor_degree == 0:
        return classify_l2lt(ring, shift)
    lc = classify_lc(ring, shift)
    if lc.value is Answer.NO:
        return Verdict(Answer.NO, note="lt implies lc, and the pair is not lc")
    if lc.value is Answer.UNKNOWN:
        return Verdict.unknown(lc.reason)
    return Verdict.unknown(
        "lt of a pair with D != 0 is not decided by graded pieces (lt is strictly inside lc)"
    )


def classify_rational(ring: GradedRing, shift: DualizingShift) -> Verdict:
    """V has rational singularities iff ``N_A < 0`` (A Cohen-Macaulay, V* rational)."""
    if not ring.hypotheses.rational():
        return Verdict.unknown("vstar_smooth (or vstar_rational) not asserted")
    if shift.m0 != 1:
        return Verdict.unknown("rationality sign test needs omega_A free (m0 = 1)")
    return Verdict.of(shift.N < 0)


def _scan(
    series: Series, m: int, upper: int, offset: int, operation: str
) -> tuple[int, int, int] | None:
    # forbidden piece: A_j for 0 <= j <= upper; its degree in the twisted module is j - offset
    if upper < 0:
        return None
    if upper > series.truncation:
        raise TruncationError(upper, series.truncation, operation)
    for j in range(upper + 1):
        dim = coeff(series, j)
        if dim:
            return (m, j - offset, dim)
    return None


def _ms(shift: DualizingShift, M: int) -> range:
    if M < 1:
        raise InputError(f"M must be >= 1, got {M}")
    return range(shift.m0, M + 1, shift.m0)


def lc_scan_bound(ring: GradedRing, shift: DualizingShift, M: int) -> int:
    """Largest coefficient index :func:`lc_bruteforce` may read (``-1``: none)."""
    d = ring.divisor_degree
    return max([shift.offset(m) + m * d - 1 for m in _ms(shift, M)], default=-1)


def l2lt_scan_depth(ring: GradedRing, shift: DualizingShift, M: int) -> int:
    """Scan depth at which :func:`l2lt_bruteforce` is guaranteed to see a failure.

    The range at step ``m = k m0`` ends at ``k (N + m0 d) - d``, so with
    ``N + m0 d >= 1`` it becomes nonempty by ``k = d`` at the latest.
    """
    return max(M, shift.m0 * ring.divisor_degree)


def l2lt_scan_bound(ring: GradedRing, shift: DualizingShift, M: int) -> int:
    d = ring.divisor_degree
    return max([shift.offset(m) + (m - 1) * d for m in _ms(shift, M)], default=-1)


def lc_bruteforce(ring: GradedRing, shift: DualizingShift, M: int, T: int) -> BruteForceWitness:
    """Scan ``omega^{[m]}(mD)_{<0} = sum_{j < m(N_A+d)} dim A_j`` for ``m <= M``."""
    require_positive_weights(ring, "lc_bruteforce")
    s = hilbert(ring, T)
    d = ring.divisor_degree
    last = 0
    for m in _ms(shift, M):
        last = m
        offset = shift.offset(m) + m * d
        hit = _scan(s, m, offset - 1, offset, "lc_bruteforce")
        if hit:
            return BruteForceWitness((shift.m0, m), hit)
    return BruteForceWitness((shift.m0, last))


def l2lt_bruteforce(ring: GradedRing, shift: DualizingShift, M: int, T: int) -> BruteForceWitness:
    """Scan ``omega^{[m]}((m-1)D)_{<=0}``, i.e. ``j <= m N_A + (m-1) d``."""
    require_positive_weights(ring, "l2lt_bruteforce")
    s = hilbert(ring, T)
    d = ring.divisor_degree
    last = 0
    for m in _ms(shift, M):
        last = m
        offset = shift.offset(m) + (m - 1) * d
        hit = _scan(s, m, offset, offset, "l2lt_bruteforce")
        if hit:
            return BruteForceWitness((shift.m0, m), hit)
    return BruteForceWitness((shift.m0, last))


def kempf_rational_bruteforce(ring: GradedRing, shift: DualizingShift, T: int) -> BruteForceWitness:
    """Scan ``(omega_A)_{<=0}``, i.e. ``sum_{j <= N_A} dim A_j``."""
    require_positive_weights(ring, "kempf_rational_bruteforce")
    if shift.m0 != 1:
        raise InputError("kempf_rational_bruteforce needs omega_A free (m0 = 1)")
    s = hilbert(ring, T)
    return BruteForceWitness((1, 1), _scan(s, 1, shift.N, shift.N, "kempf_rational_bruteforce"))
