#!/usr/bin/env python3
"""
Mappings of the Unit Disk

Representation and pointwise calculus for the three mapping classes the
Landau-radius computations work with:

- Analytic functions, either as truncated power series or closed forms
- Harmonic mappings f = h + conj(g)
- Biharmonic mappings F = |z|^2 g + h with g, h harmonic

All evaluators accept Python scalars or numpy arrays of complex points.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION_ORDER = 64
FINITE_DIFFERENCE_STEP = 1e-5

ComplexInput = Union[complex, float, np.ndarray]


class DomainError(ValueError):
    """Raised when an input violates the hypothesis of a formula."""


def _as_scalar_or_array(value: np.ndarray, like: ComplexInput):
    """Return a Python complex when the caller passed a scalar."""
    if np.ndim(like) == 0:
        return complex(value)
    return value


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """
    Truncated power series c_0 + c_1 z + ... + c_N z^N.

    The coefficient array is stored read-only so instances can be shared
    freely between threads.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex).ravel()
        if coeffs.size == 0:
            coeffs = np.zeros(1, dtype=complex)
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def truncation_order(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z: ComplexInput):
        return eval_analytic(self, z)

    @cached_property
    def derivative(self) -> "AnalyticSeries":
        """Term-by-term derivative; a constant differentiates to the zero series."""
        if self.truncation_order == 0:
            return AnalyticSeries([0j])
        k = np.arange(1, self.truncation_order + 1)
        return AnalyticSeries(self.coeffs[1:] * k)

    def derivative_at(self, z: ComplexInput):
        return self.derivative(z)

    @classmethod
    def constant(cls, value: complex) -> "AnalyticSeries":
        return cls([value])

    @classmethod
    def identity(cls) -> "AnalyticSeries":
        return cls([0, 1])

    @classmethod
    def from_rational(cls, numerator: Sequence[complex], denominator: Sequence[complex],
                      order: int = DEFAULT_TRUNCATION_ORDER) -> "AnalyticSeries":
        """
        Expand numerator/denominator as a power series about the origin.

        Division is done by solving the lower-triangular Toeplitz system of the
        denominator's coefficients, so no symbolic algebra is involved.

        Args:
            numerator: Polynomial coefficients, constant term first
            denominator: Polynomial coefficients, constant term first; d_0 != 0
            order: Truncation order N of the result

        Returns:
            Series of order N
        """
        if order < 0:
            raise DomainError(f"Truncation order must be >= 0, got {order}")
        den = np.zeros(order + 1, dtype=complex)
        num = np.zeros(order + 1, dtype=complex)
        d = np.asarray(denominator, dtype=complex)[: order + 1]
        n = np.asarray(numerator, dtype=complex)[: order + 1]
        den[: d.size] = d
        num[: n.size] = n
        if den[0] == 0:
            raise DomainError("Denominator has a zero constant term; series is not analytic at 0")

        e1 = np.zeros(order + 1, dtype=complex)
        e1[0] = 1
        toeplitz = scipy.linalg.toeplitz(den, e1)
        quotient = scipy.linalg.solve_triangular(toeplitz, num, lower=True)
        return cls(quotient)


@dataclass(frozen=True, eq=False)
class ClosedFormAnalytic:
    """Analytic function given by a vectorized closed form and its derivative."""

    name: str
    value: Callable[[ComplexInput], ComplexInput]
    derivative_value: Callable[[ComplexInput], ComplexInput]

    def __call__(self, z: ComplexInput):
        result = np.asarray(self.value(np.asarray(z, dtype=complex)), dtype=complex)
        return _as_scalar_or_array(result, z)

    def derivative_at(self, z: ComplexInput):
        result = np.asarray(self.derivative_value(np.asarray(z, dtype=complex)), dtype=complex)
        return _as_scalar_or_array(result, z)


AnalyticPart = Union[AnalyticSeries, ClosedFormAnalytic]


@dataclass(frozen=True)
class HarmonicMap:
    """Harmonic mapping f = h + conj(g) with analytic parts h and g."""

    h_part: AnalyticPart
    g_part: AnalyticPart

    def __call__(self, z: ComplexInput):
        return self.h_part(z) + np.conj(self.g_part(z))

    def wirtinger(self, z: ComplexInput):
        return harmonic_wirtinger(self, z)

    def swapped(self) -> "HarmonicMap":
        """The map g + conj(h), whose value is the conjugate of this map's."""
        return HarmonicMap(h_part=self.g_part, g_part=self.h_part)

    @classmethod
    def analytic(cls, h: AnalyticPart) -> "HarmonicMap":
        return cls(h_part=h, g_part=AnalyticSeries.constant(0))

    @classmethod
    def zero(cls) -> "HarmonicMap":
        return cls(h_part=AnalyticSeries.constant(0), g_part=AnalyticSeries.constant(0))


@dataclass(frozen=True)
class BiharmonicMap:
    """Biharmonic mapping F = |z|^2 g + h with harmonic g and h."""

    g_map: HarmonicMap
    h_map: HarmonicMap

    def __call__(self, z: ComplexInput):
        return eval_biharmonic(self, z)

    def wirtinger(self, z: ComplexInput):
        return biharmonic_wirtinger(self, z)


@dataclass(frozen=True)
class DistortionTriple:
    """Minimum stretch lam, maximum stretch Lam and Jacobian jac at a point."""

    lam: float
    Lam: float
    jac: float


def eval_analytic(s: AnalyticSeries, z: ComplexInput):
    """
    Evaluate a truncated series at z.

    Args:
        s: Series to evaluate
        z: Point(s) with |z| <= 1

    Returns:
        sum c_k z^k, computed in Horner order
    """
    # np.polyval expects the leading coefficient first
    result = np.polyval(s.coeffs[::-1], np.asarray(z, dtype=complex))
    return _as_scalar_or_array(np.asarray(result, dtype=complex), z)


def harmonic_wirtinger(f: HarmonicMap, z: ComplexInput) -> Tuple:
    """Return (f_z, f_zbar) = (h'(z), conj(g'(z)))."""
    return f.h_part.derivative_at(z), np.conj(f.g_part.derivative_at(z))


def eval_biharmonic(F: BiharmonicMap, z: ComplexInput):
    """Return |z|^2 g(z) + h(z)."""
    return np.abs(z) ** 2 * F.g_map(z) + F.h_map(z)


def biharmonic_wirtinger(F: BiharmonicMap, z: ComplexInput) -> Tuple:
    """
    Wirtinger derivatives of F = |z|^2 g + h.

    Returns:
        (F_z, F_zbar) with
        F_z    = conj(z) g(z) + |z|^2 g1'(z) + h1'(z)
        F_zbar = z g(z) + |z|^2 conj(g2'(z)) + conj(h2'(z))
    """
    g = F.g_map(z)
    g_z, g_zbar = harmonic_wirtinger(F.g_map, z)
    h_z, h_zbar = harmonic_wirtinger(F.h_map, z)
    modulus_sq = np.abs(z) ** 2
    fz = np.conj(z) * g + modulus_sq * g_z + h_z
    fzbar = z * g + modulus_sq * g_zbar + h_zbar
    return fz, fzbar


def local_distortion(fz: complex, fzbar: complex) -> DistortionTriple:
    """
    Stretch quantities of a mapping with Wirtinger derivatives (fz, fzbar).

    The Jacobian is computed in the factored form (|fz|+|fzbar|)(|fz|-|fzbar|)
    so that |jac| = Lam * lam holds to the last bit.
    """
    a = abs(fz)
    b = abs(fzbar)
    return DistortionTriple(lam=abs(a - b), Lam=a + b, jac=(a + b) * (a - b))


def jacobian(fz: ComplexInput, fzbar: ComplexInput):
    """Vectorized J = |fz|^2 - |fzbar|^2 in the same factored form."""
    a = np.abs(fz)
    b = np.abs(fzbar)
    return (a + b) * (a - b)


def finite_difference_wirtinger(F: Callable, z: ComplexInput,
                                step: float = FINITE_DIFFERENCE_STEP) -> Tuple:
    """
    Central-difference Wirtinger derivatives.

    Differentiates along the real coordinates x and y and recombines with
    f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2.
    """
    z = np.asarray(z, dtype=complex)
    fx = (F(z + step) - F(z - step)) / (2 * step)
    fy = (F(z + 1j * step) - F(z - 1j * step)) / (2 * step)
    fz = 0.5 * (fx - 1j * fy)
    fzbar = 0.5 * (fx + 1j * fy)
    return _as_scalar_or_array(np.asarray(fz), z), _as_scalar_or_array(np.asarray(fzbar), z)
