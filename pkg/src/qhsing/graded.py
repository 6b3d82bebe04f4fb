"""Presented graded rings and their dualizing shift.

Two presentations are supported:

* :class:`WeightedCI`, a weighted-homogeneous complete intersection
  ``C[x_1..x_{n+s}] / (p_1..p_s)``, for which ``omega_A = A[N_A]`` with
  ``N_A = sum(relation degrees) - sum(weights)``;
* :class:`PfaffianRing`, a codimension-3 Gorenstein quotient ``R/I`` where
  ``I`` is generated by the maximal Pfaffians of a skew ``(2n+1)``-square
  matrix over a Gorenstein graded ring ``R``; here ``N_A = N + N_R``.

Both expose the same small surface used by the analysis modules:
``hilbert(T)``, ``dualizing_shift()``, ``dimension``, ``weights``,
``a0_is_base_field``, ``divisor_degree`` and ``hypotheses``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import InputError, PfaffianError, TruncationError, WeightError
from .series import FactoredHilbert, Series, coeff, expand

__all__ = [
    "Hypotheses",
    "WeightedCI",
    "DualizingShift",
    "PfaffianInput",
    "PfaffianRing",
    "GradedRing",
    "dualizing_shift_ci",
    "dualizing_shift",
    "hilbert",
    "pfaffian_ring",
    "graded_canonical_dim",
    "chart_orders",
    "require_positive_weights",
]


@dataclass(frozen=True)
class Hypotheses:
    """Geometric hypotheses asserted by the user; none of them is verified.

    ``V*`` is ``V`` minus the vertex and ``D*`` is ``D`` minus the vertex.
    ``vstar_smooth`` implies the other ``V*`` conditions whenever ``D`` is
    empty, see :meth:`pair_lc`.
    """

    normal: bool = False
    vstar_smooth: bool = False
    vstar_pair_lc: bool = False
    vstar_l2lt: bool = False
    vstar_rational: bool = False
    isolated_singularity: bool = False

    def pair_lc(self, divisor_degree: int) -> bool:
        # a smooth V* with D = 0 is lc (even terminal)
        return self.vstar_pair_lc or (self.vstar_smooth and divisor_degree == 0)

    def l2lt(self, divisor_degree: int) -> bool:
        # lt = L2-lt when D = 0, and smooth implies lt
        return self.vstar_l2lt or (self.vstar_smooth and divisor_degree == 0)

    def rational(self) -> bool:
        return self.vstar_rational or self.vstar_smooth


@dataclass(frozen=True)
class DualizingShift:
    """``omega_A^{[m0]} = A[N]``. Complete intersections have ``m0 = 1``."""

    m0: int
    N: int

    def __post_init__(self):
        if self.m0 < 1:
            raise InputError(f"m0 must be >= 1, got {self.m0}")

    def offset(self, m: int) -> int:
        """Shift of ``omega_A^{[m]}``, i.e. ``omega^{[m]} = A[offset(m)]``."""
        if m < 1:
            raise InputError(f"m must be >= 1, got {m}")
        if m % self.m0:
            raise InputError(f"m = {m} is not a multiple of m0 = {self.m0}")
        return (m // self.m0) * self.N


def _check_divisor_degree(d: int) -> None:
    if d < 0:
        raise InputError(f"divisor_degree must be >= 0, got {d}")


@dataclass(frozen=True)
class WeightedCI:
    weights: tuple[int, ...]
    relation_degrees: tuple[int, ...] = ()
    divisor_degree: int = 0
    hypotheses: Hypotheses = field(default_factory=Hypotheses)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "relation_degrees", tuple(self.relation_degrees))
        if not self.weights:
            raise InputError("weights must be non-empty")
        if any(w < 0 for w in self.weights):
            raise WeightError(f"weights must be non-negative, got {list(self.weights)}")
        if any(d < 1 for d in self.relation_degrees):
            raise InputError(f"relation degrees must be >= 1, got {list(self.relation_degrees)}")
        if len(self.relation_degrees) >= len(self.weights):
            raise InputError(
                f"need more weights than relations (got {len(self.weights)} weights, "
                f"{len(self.relation_degrees)} relations)"
            )
        _check_divisor_degree(self.divisor_degree)

    @property
    def dimension(self) -> int:
        return len(self.weights) - len(self.relation_degrees)

    @property
    def a0_is_base_field(self) -> bool:
        return all(w > 0 for w in self.weights)

    def factored_hilbert(self) -> FactoredHilbert:
        """Factored Hilbert series with the weight-0 variables stripped."""
        return FactoredHilbert(
            numerator_relation_degrees=self.relation_degrees,
            denominator_weights=tuple(w for w in self.weights if w > 0),
        )

    def hilbert(self, T: int) -> Series:
        return expand(self.factored_hilbert(), T)

    def dualizing_shift(self) -> DualizingShift:
        return dualizing_shift_ci(self)

    def times(self, other: WeightedCI) -> WeightedCI:
        """Presentation of the product variety (weights and relations concatenated)."""
        return WeightedCI(
            self.weights + other.weights,
            self.relation_degrees + other.relation_degrees,
        )


@dataclass(frozen=True)
class PfaffianInput:
    base_hilbert: FactoredHilbert
    N_R: int
    N: int
    pf_degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pf_degrees", tuple(self.pf_degrees))
        k = len(self.pf_degrees)
        if k % 2 == 0:
            raise PfaffianError(
                f"Pfaffian degree constraint violated: need an odd number of degrees, got {k}"
            )
        if self.N < 1 or any(d < 1 for d in self.pf_degrees):
            raise PfaffianError("N and the Pfaffian degrees must be positive integers")
        n = k // 2
        if sum(self.pf_degrees) != n * self.N:
            raise PfaffianError(
                f"Pfaffian degree constraint violated: sum of degrees "
                f"{sum(self.pf_degrees)} != n*N = {n}*{self.N}"
            )
        if any(self.N - d < 0 for d in self.pf_degrees):
            raise PfaffianError(
                f"resolution shift negative: N - d_j < 0 for N = {self.N}, "
                f"degrees {list(self.pf_degrees)}"
            )

    @property
    def n(self) -> int:
        return len(self.pf_degrees) // 2

    def resolution_numerator(self) -> tuple[int, ...]:
        """Coefficients of ``1 - sum t^{d_i} + sum t^{N - d_j} - t^N``."""
        c = [0] * (self.N + 1)
        c[0] += 1
        for d in self.pf_degrees:
            c[d] -= 1
            c[self.N - d] += 1
        c[self.N] -= 1
        return tuple(c)

    def factored_hilbert(self) -> FactoredHilbert:
        base = self.base_hilbert
        return base.times(FactoredHilbert(extra_numerator=self.resolution_numerator()))


@dataclass(frozen=True)
class PfaffianRing:
    """A Pfaffian quotient together with the divisor and asserted hypotheses."""

    pfaffian: PfaffianInput
    divisor_degree: int = 0
    hypotheses: Hypotheses = field(default_factory=Hypotheses)

    def __post_init__(self):
        _check_divisor_degree(self.divisor_degree)
        if self.dimension < 1:
            raise InputError(
                f"Pfaffian quotient has dimension {self.dimension}; need dim R - 3 >= 1"
            )

    @property
    def weights(self) -> tuple[int, ...]:
        return self.pfaffian.base_hilbert.denominator_weights

    @property
    def dimension(self) -> int:
        base = self.pfaffian.base_hilbert
        return len(base.denominator_weights) - len(base.numerator_relation_degrees) - 3

    @property
    def a0_is_base_field(self) -> bool:
        return True

    def hilbert(self, T: int) -> Series:
        return pfaffian_ring(self.pfaffian, T)[0]

    def dualizing_shift(self) -> DualizingShift:
        return DualizingShift(1, self.pfaffian.N + self.pfaffian.N_R)


GradedRing = Union[WeightedCI, PfaffianRing]


def dualizing_shift_ci(ring: WeightedCI) -> DualizingShift:
    return DualizingShift(1, sum(ring.relation_degrees) - sum(ring.weights))


def dualizing_shift(ring: GradedRing) -> DualizingShift:
    return ring.dualizing_shift()


def hilbert(ring: GradedRing, T: int) -> Series:
    """Hilbert series of ``ring`` truncated at ``T``.

    With weight-0 variables present the coefficients describe the
    positive-weight subpresentation only; dimension-valued callers must
    go through :func:`require_positive_weights` first.
    """
    return ring.hilbert(T)


def pfaffian_ring(p: PfaffianInput, T: int) -> tuple[Series, DualizingShift]:
    return expand(p.factored_hilbert(), T), DualizingShift(1, p.N + p.N_R)


def require_positive_weights(ring: GradedRing, what: str) -> None:
    if not ring.a0_is_base_field:
        raise WeightError(
            f"{what} needs all weights positive; weight-0 variables make A_0 a "
            f"polynomial ring and the graded pieces infinite-dimensional"
        )


def graded_canonical_dim(
    ring: GradedRing, shift: DualizingShift, m: int, g: int, T: int
) -> int:
    """``dim (omega_A^{[m]})_g = dim A_{g + (m/m0) N}``."""
    require_positive_weights(ring, "graded_canonical_dim")
    k = g + shift.offset(m)
    if k < 0:
        return 0
    try:
        return coeff(hilbert(ring, T), k)
    except TruncationError as e:
        raise e.in_operation("graded_canonical_dim") from None


def chart_orders(generator_degrees: Sequence[int]) -> list[int]:
    """Orders of the cyclic groups acting on the affine charts.

    For a homogeneous generator ``f`` of degree ``d`` the chart ``U_f`` of the
    weighted blowup (and ``U^f`` of the weighted completion) is
    ``(Y x A^1) / Z_d``.
    """
    out = []
    for d in generator_degrees:
        if d < 1:
            raise InputError(f"chart construction requires positive degree, got {d}")
        out.append(int(d))
    return out
