"""Truncated power series in one variable with exact integer coefficients.

A :class:`Series` stores ``c_0 .. c_T`` of ``sum c_k t^k``; every
coefficient is a Python ``int`` so nothing overflows. Hilbert series of
graded rings are produced by :func:`expand` from a
:class:`FactoredHilbert`, i.e. a numerator polynomial over a product of
``(1 - t^w)`` factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InputError, TruncationError, WeightError

__all__ = [
    "Series",
    "FactoredHilbert",
    "expand",
    "coeff",
    "partial_sum",
    "negativity_scan",
    "polynomial",
]


@dataclass(frozen=True)
class Series:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InputError("a series needs at least one coefficient (truncation >= 0)")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def truncation(self) -> int:
        """Largest valid index ``T``."""
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, T: int) -> Series:
        return cls((0,) * (T + 1))

    @classmethod
    def one(cls, T: int) -> Series:
        return cls((1,) + (0,) * T)

    def truncate(self, T: int) -> Series:
        if T > self.truncation:
            raise TruncationError(T, self.truncation)
        return Series(self.coeffs[: T + 1])

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return coeff(self, k)

    def __add__(self, other: Series) -> Series:
        T = min(self.truncation, other.truncation)
        return Series(tuple(a + b for a, b in zip(self.coeffs[: T + 1], other.coeffs)))

    def __sub__(self, other: Series) -> Series:
        T = min(self.truncation, other.truncation)
        return Series(tuple(a - b for a, b in zip(self.coeffs[: T + 1], other.coeffs)))

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Series) -> Series:
        T = min(self.truncation, other.truncation)
        a, b = self.coeffs, other.coeffs
        out = [0] * (T + 1)
        for i in range(T + 1):
            ai = a[i]
            if ai:
                for j in range(T + 1 - i):
                    out[i + j] += ai * b[j]
        return Series(tuple(out))

    def shift(self, k: int) -> Series:
        """Multiply by ``t^k`` (``k >= 0``), keeping the truncation."""
        if k < 0:
            raise InputError("shift must be non-negative")
        T = self.truncation
        return Series((0,) * min(k, T + 1) + self.coeffs[: max(T + 1 - k, 0)])

    def divide_one_minus(self, w: int) -> Series:
        """Multiply by ``1/(1 - t^w)`` via the prefix recurrence ``c[k] += c[k-w]``."""
        if w <= 0:
            raise WeightError(f"nonpositive weight {w} in denominator")
        c = list(self.coeffs)
        for k in range(w, len(c)):
            c[k] += c[k - w]
        return Series(tuple(c))

    def multiply_one_minus(self, w: int) -> Series:
        """Multiply by ``(1 - t^w)``."""
        if w <= 0:
            raise WeightError(f"nonpositive weight {w} in numerator")
        c = self.coeffs
        return Series(tuple(c[k] - (c[k - w] if k >= w else 0) for k in range(len(c))))


def polynomial(coeffs: Iterable[int], T: int) -> Series:
    """Embed a polynomial (low degree first) as a series truncated at ``T``."""
    c = list(coeffs)[: T + 1]
    return Series(tuple(c) + (0,) * (T + 1 - len(c)))


@dataclass(frozen=True)
class FactoredHilbert:
    """``extra_numerator * prod(1 - t^d) / prod(1 - t^w)``.

    ``extra_numerator`` lists polynomial coefficients, lowest degree first.
    """

    numerator_relation_degrees: tuple[int, ...] = ()
    denominator_weights: tuple[int, ...] = ()
    extra_numerator: tuple[int, ...] = (1,)

    def __post_init__(self):
        for name in ("numerator_relation_degrees", "denominator_weights", "extra_numerator"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if any(w <= 0 for w in self.denominator_weights):
            raise WeightError(
                f"nonpositive weight in denominator {list(self.denominator_weights)}"
            )
        if any(d <= 0 for d in self.numerator_relation_degrees):
            raise InputError(
                f"relation degrees must be >= 1, got {list(self.numerator_relation_degrees)}"
            )
        if not self.extra_numerator:
            object.__setattr__(self, "extra_numerator", (0,))

    def times(self, other: FactoredHilbert) -> FactoredHilbert:
        """Hilbert series of the tensor product of the two presentations."""
        a, b = self.extra_numerator, other.extra_numerator
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        return FactoredHilbert(
            self.numerator_relation_degrees + other.numerator_relation_degrees,
            self.denominator_weights + other.denominator_weights,
            tuple(prod),
        )


@lru_cache(maxsize=256)
def expand(fh: FactoredHilbert, T: int) -> Series:
    """Power-series expansion of ``fh`` up to and including ``t^T``."""
    if T < 0:
        raise InputError(f"truncation must be >= 0, got {T}")
    if any(w <= 0 for w in fh.denominator_weights):
        raise WeightError("nonpositive weight in denominator")
    s = polynomial(fh.extra_numerator, T)
    for d in fh.numerator_relation_degrees:
        s = s.multiply_one_minus(d)
    for w in fh.denominator_weights:
        s = s.divide_one_minus(w)
    return s


def coeff(s: Series, k: int) -> int:
    """Coefficient of ``t^k``; zero for ``k < 0`` (the grading is non-negative)."""
    if k < 0:
        return 0
    if k > s.truncation:
        raise TruncationError(k, s.truncation)
    return s.coeffs[k]


def partial_sum(s: Series, a: int, b: int) -> int:
    """``sum(coeff(s, k) for k in range(max(a, 0), b + 1))``."""
    lo = max(a, 0)
    if b < lo:
        return 0
    if b > s.truncation:
        raise TruncationError(b, s.truncation)
    return sum(s.coeffs[lo : b + 1])


def negativity_scan(s: Series | Sequence[int]) -> int | None:
    """Smallest index carrying a negative coefficient, or ``None``.

    A hit means the relation degrees cannot come from a regular sequence.
    """
    for k, c in enumerate(s):
        if c < 0:
            return k
    return None
