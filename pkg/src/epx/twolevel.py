"""Closed-form spectral data for the rotation-coupled two-level family.

Everything here is exact arithmetic on the 2x2 pencil built by
:func:`epx.model.two_level_family`; it serves as the independent oracle
against which the numerical locator and tracer are validated.

With ``de = eps1 - eps2`` and ``do = om1 - om2`` the two eigenvalues are

    E_{1,2}(lambda) = (eps1 + eps2 + lambda*(om1 + om2)) / 2  +-  R(lambda)

where ``R`` is the principal square root of

    R^2 = (de/2)^2 + (lambda*do/2)^2 + (1/2)*lambda*de*do*cos(2*phi).

``R^2`` vanishes at the two branch points

    lambda_c = -(de/do) * exp(+-2i*phi),

a complex-conjugate pair for real parameters.  The sign of R is a choice
of Riemann sheet; all functions below take it as an explicit argument
("upper" means E1 - E2 = +2R with principal R) instead of inferring it,
so every value returned here is single-valued.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import TwoLevelParams

__all__ = [
    "EpPair",
    "ThetaValue",
    "radicand",
    "eigenvalues_closed",
    "exceptional_points_closed",
    "theta",
    "wavefunctions_from_theta",
    "absorption_ep",
    "min_gap_closed",
]

#: relative |R| below which the eigenvector angle is flagged divergent
EP_DIVERGENCE_RTOL = 1e-8


@dataclass(frozen=True)
class EpPair:
    """The two square-root branch points of a two-level family.

    For real parameters ``lambda_minus`` is the complex conjugate of
    ``lambda_plus``.
    """

    lambda_plus: complex
    lambda_minus: complex

    def as_tuple(self) -> tuple[complex, complex]:
        return (self.lambda_plus, self.lambda_minus)


@dataclass(frozen=True)
class ThetaValue:
    """Complex eigenvector angle on a given sheet.

    ``theta`` is the principal value (real part in (-pi/2, pi/2]); angle
    unwinding along paths is the tracer's job.  ``divergent`` is set when
    the requested point is so close to a branch point that tan(theta)
    degenerates to +-i and the components of the eigenvectors blow up.
    """

    theta: complex
    sheet: str
    divergent: bool = False


def _deltas(p: TwoLevelParams) -> tuple[float, float]:
    return p.eps1 - p.eps2, p.om1 - p.om2


def radicand(p: TwoLevelParams, lam: complex) -> complex:
    """The expression under the square root, R^2(lambda)."""
    de, do = _deltas(p)
    lam = complex(lam)
    return (de / 2) ** 2 + (lam * do / 2) ** 2 + 0.5 * lam * de * do * np.cos(2 * p.phi)


def eigenvalues_closed(p: TwoLevelParams, lam: complex) -> tuple[complex, complex]:
    """Both eigenvalues at ``lam``; the first carries the + branch of R."""
    lam = complex(lam)
    mean = (p.eps1 + p.eps2 + lam * (p.om1 + p.om2)) / 2
    r = np.sqrt(complex(radicand(p, lam)))
    return mean + r, mean - r


def exceptional_points_closed(p: TwoLevelParams) -> EpPair:
    """Both branch points -(de/do) * exp(+-2i*phi) in the lambda-plane."""
    de, do = _deltas(p)
    base = -de / do
    return EpPair(
        lambda_plus=base * np.exp(2j * p.phi),
        lambda_minus=base * np.exp(-2j * p.phi),
    )


def _ep_scale(p: TwoLevelParams, lam: complex) -> float:
    de, do = _deltas(p)
    return abs(de) / 2 + abs(lam) * abs(do) / 2


def theta(p: TwoLevelParams, lam: complex, sheet: str = "upper") -> ThetaValue:
    """Complex angle parametrizing the eigenvectors at ``lam`` on a sheet.

    tan(theta) = lam*do*sin(2 phi) / (E1 - E2 + de + lam*do*cos(2 phi))
    with E1 - E2 = +2R on the upper sheet and -2R on the lower sheet.
    The eigenvectors themselves follow via
    :func:`wavefunctions_from_theta`.
    """
    if sheet not in ("upper", "lower"):
        raise ValueError("sheet must be 'upper' or 'lower'")
    de, do = _deltas(p)
    lam = complex(lam)
    r = np.sqrt(complex(radicand(p, lam)))
    if abs(r) < EP_DIVERGENCE_RTOL * _ep_scale(p, lam):
        return ThetaValue(theta=complex("nan"), sheet=sheet, divergent=True)
    d_e = 2 * r if sheet == "upper" else -2 * r
    num = lam * do * np.sin(2 * p.phi)
    den = d_e + de + lam * do * np.cos(2 * p.phi)
    if den == 0:
        # 0/0 only happens on the real axis where the branch labels swap;
        # the angle limit there is pi/2.
        return ThetaValue(theta=complex(np.pi / 2), sheet=sheet)
    return ThetaValue(theta=complex(np.arctan(num / den)), sheet=sheet)


def wavefunctions_from_theta(t: ThetaValue) -> tuple[np.ndarray, np.ndarray]:
    """The eigenvector pair ((cos t, sin t), (-sin t, cos t)).

    The pair is biorthonormal in the bilinear sense: psi_i^T psi_j =
    delta_ij for any complex angle, which is exactly the normalization
    that blows up (|components| -> infinity) as tan^2(theta) -> -1 at a
    branch point.
    """
    if t.divergent or not np.isfinite(t.theta.real) or not np.isfinite(t.theta.imag):
        raise ValueError("theta is flagged divergent; no finite eigenvectors exist")
    c, s = np.cos(t.theta), np.sin(t.theta)
    return np.array([c, s]), np.array([-s, c])


def absorption_ep(p: TwoLevelParams) -> EpPair:
    """Branch points in the complex G-plane of the absorptive map lambda = -iG.

    G_c = -(de/do) * exp(+-2i*phi + i*pi/2); at phi = pi/4 both lie on the
    real G-axis at +-de/do, and their imaginary parts change sign as phi
    crosses pi/4.
    """
    de, do = _deltas(p)
    base = -de / do
    return EpPair(
        lambda_plus=base * np.exp(2j * p.phi + 0.5j * np.pi),
        lambda_minus=base * np.exp(-2j * p.phi + 0.5j * np.pi),
    )


def min_gap_closed(p: TwoLevelParams) -> tuple[float, float]:
    """Minimum |E1 - E2| over real lambda and its location.

    Completing the square in R^2 gives the gap |de * sin(2 phi)| attained
    at lambda = -de*cos(2 phi)/do.
    """
    de, do = _deltas(p)
    lam_star = -de * np.cos(2 * p.phi) / do
    return abs(de * np.sin(2 * p.phi)), float(lam_star)
