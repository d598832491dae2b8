"""Domain types: matrix families, two-level parameters and contours.

A family is the affine pencil ``H(lambda) = h0 + lambda * h1`` of complex
square matrices, the object whose spectrum gets continued through the
complex lambda-plane.  Contours are pre-sampled polylines in that plane;
the tracer refines them by inserting midpoints, so the sampling here only
has to pin down the homotopy class of the path.

All types are immutable after construction and safe to share between
threads; the module functions are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegenerateFamilyError

__all__ = [
    "MatrixFamily",
    "TwoLevelParams",
    "Contour",
    "two_level_family",
    "evaluate",
    "circle_contour",
    "segment_contour",
    "detour_path",
    "winding_number",
    "family_to_json",
    "family_from_json",
    "contour_to_json",
    "contour_from_json",
]


def _require_finite(arr, name: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")


def _frozen_complex_matrix(m, name: str) -> np.ndarray:
    a = np.array(m, dtype=complex, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    _require_finite(a, name)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class MatrixFamily:
    """One-parameter pencil ``h0 + lambda * h1`` of complex N x N matrices."""

    dim: int
    h0: np.ndarray
    h1: np.ndarray

    def __post_init__(self):
        h0 = _frozen_complex_matrix(self.h0, "h0")
        h1 = _frozen_complex_matrix(self.h1, "h1")
        if h0.shape != h1.shape:
            raise ValueError(f"h0/h1 shape mismatch: {h0.shape} vs {h1.shape}")
        if self.dim != h0.shape[0]:
            raise ValueError(f"dim={self.dim} does not match matrices of shape {h0.shape}")
        if self.dim < 2:
            raise ValueError("family dimension must be at least 2")
        object.__setattr__(self, "h0", h0)
        object.__setattr__(self, "h1", h1)

    @property
    def is_symmetric(self) -> bool:
        """True when both matrices are complex symmetric (h == h^T).

        For symmetric pencils the left eigenvectors are complex conjugates
        of the right ones, which lets the tracer use the exact bilinear
        phase gauge.
        """
        scale = max(np.abs(self.h0).max(), np.abs(self.h1).max(), 1e-300)
        tol = 1e-13 * scale
        return bool(
            np.all(np.abs(self.h0 - self.h0.T) <= tol)
            and np.all(np.abs(self.h1 - self.h1.T) <= tol)
        )

    def __eq__(self, other):
        if not isinstance(other, MatrixFamily):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.h0, other.h0)
            and np.array_equal(self.h1, other.h1)
        )


@dataclass(frozen=True)
class TwoLevelParams:
    """Parameters (eps1, eps2, om1, om2, phi) of the rotation-coupled 2x2 family.

    ``h0 = diag(eps1, eps2)`` and ``h1 = U diag(om1, om2) U^T`` with U the
    plane rotation by ``phi``.  Equal level energies or equal coupling
    strengths make the degeneracy structure collapse (the branch-point
    locations degenerate to 0/0), so both are rejected at construction.
    """

    eps1: float
    eps2: float
    om1: float
    om2: float
    phi: float

    def __post_init__(self):
        vals = (self.eps1, self.eps2, self.om1, self.om2, self.phi)
        if not all(np.isfinite(v) for v in vals):
            raise ValueError("two-level parameters must be finite")
        if self.eps1 == self.eps2:
            raise DegenerateFamilyError("eps1 == eps2: degenerate two-level family")
        if self.om1 == self.om2:
            raise DegenerateFamilyError("om1 == om2: degenerate two-level family")


@dataclass(frozen=True)
class Contour:
    """A sampled path in the complex lambda-plane.

    ``points`` are ordered samples (at least 3); for a closed contour the
    first and last points are bitwise equal.  ``winding_hint`` records how
    many times a base loop is repeated, when the contour was built that way.
    """

    points: np.ndarray
    closed: bool
    winding_hint: Optional[int] = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=complex, copy=True)
        if pts.ndim != 1 or pts.size < 3:
            raise ValueError("a contour needs at least 3 sample points")
        _require_finite(pts, "contour points")
        if np.any(pts[1:] == pts[:-1]):
            raise ValueError("consecutive contour points must be distinct")
        if self.closed and pts[0] != pts[-1]:
            raise ValueError("closed contour must end exactly at its start point")
        if not self.closed and pts[0] == pts[-1]:
            raise ValueError("open contour must not end at its start point")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def diameter(self) -> float:
        """Diameter of the bounding box, used as the length scale of the path."""
        re = self.points.real
        im = self.points.imag
        return float(np.hypot(re.max() - re.min(), im.max() - im.min()))


def two_level_family(p: TwoLevelParams) -> MatrixFamily:
    """Build the 2x2 pencil diag(eps1, eps2) + lambda * U diag(om1, om2) U^T."""
    c, s = np.cos(p.phi), np.sin(p.phi)
    u = np.array([[c, -s], [s, c]])
    h1 = u @ np.diag([p.om1, p.om2]) @ u.T
    h1 = (h1 + h1.T) / 2.0  # symmetrize away rounding
    h0 = np.diag([p.eps1, p.eps2])
    return MatrixFamily(dim=2, h0=h0.astype(complex), h1=h1.astype(complex))


def evaluate(f: MatrixFamily, lam: complex) -> np.ndarray:
    """Materialize ``h0 + lambda * h1``."""
    lam = complex(lam)
    if not (np.isfinite(lam.real) and np.isfinite(lam.imag)):
        raise ValueError("lambda must be finite")
    return f.h0 + lam * f.h1


def circle_contour(center: complex, radius: float, samples: int = 64, turns: int = 1) -> Contour:
    """Closed circle around ``center``, repeated ``|turns|`` times.

    ``samples`` counts points per revolution (at least 16); negative
    ``turns`` reverses the orientation.  Sample angles are reduced modulo
    one revolution so that the start of every revolution is bitwise equal
    to the first point, which keeps per-revolution closure checks exact.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if turns == 0:
        raise ValueError("turns must be a nonzero integer")
    if samples < 16:
        raise ValueError("need at least 16 samples per turn to resolve a circle")
    sign = 1 if turns > 0 else -1
    j = np.arange(samples * abs(turns) + 1)
    ang = sign * 2.0 * np.pi * (j % samples) / samples
    pts = complex(center) + float(radius) * np.exp(1j * ang)
    return Contour(points=pts, closed=True, winding_hint=int(turns))


def segment_contour(start: complex, end: complex, samples: int = 65) -> Contour:
    """Open straight path from ``start`` to ``end`` with ``samples`` points."""
    if samples < 3:
        raise ValueError("need at least 3 samples")
    if complex(start) == complex(end):
        raise ValueError("segment endpoints must differ")
    t = np.linspace(0.0, 1.0, samples)
    pts = complex(start) * (1 - t) + complex(end) * t
    return Contour(points=pts, closed=False)


def detour_path(start: float, end: float, bulge: complex, samples: int = 129) -> Contour:
    """Open arc from ``start`` to ``end`` through the off-axis point ``bulge``.

    The path is the quadratic (three-point Lagrange) curve through
    ``(start, bulge, end)`` at curve parameters 0, 1/2, 1, sampled uniformly
    in the parameter.  Paired with the straight segment it pins down which
    side of an off-axis branch point the continuation passes.
    """
    start, end = float(start), float(end)
    bulge = complex(bulge)
    if not start < end:
        raise ValueError("need start < end on the real axis")
    if bulge.imag == 0.0:
        raise ValueError("bulge must lie off the real axis")
    if samples < 3:
        raise ValueError("need at least 3 samples")
    t = np.linspace(0.0, 1.0, samples)
    l0 = 2.0 * (t - 0.5) * (t - 1.0)
    l1 = -4.0 * t * (t - 1.0)
    l2 = 2.0 * t * (t - 0.5)
    pts = l0 * start + l1 * bulge + l2 * end
    return Contour(points=pts, closed=False)


def winding_number(points: np.ndarray, z: complex) -> int:
    """Winding number of a closed polyline around ``z``.

    Sums the argument increments of ``points - z`` edge by edge, which is
    exact for polylines that do not pass through ``z``.
    """
    rel = np.asarray(points, dtype=complex) - complex(z)
    if np.any(rel == 0):
        raise ValueError("polyline passes through the query point")
    inc = np.angle(rel[1:] / rel[:-1])
    total = inc.sum()
    if rel[0] != rel[-1]:
        total += np.angle(rel[0] / rel[-1])
    return int(np.rint(total / (2.0 * np.pi)))


# ---------------------------------------------------------------------------
# JSON representations
#
# Family file:  {"dim": N, "h0": [[[re, im], ...], ...], "h1": ...}
#          or:  {"two_level": {"eps1": ., "eps2": ., "om1": ., "om2": ., "phi": .}}
# Contour file: {"kind": "circle"|"detour"|"segment"|"explicit", ...}
# ---------------------------------------------------------------------------

def _c2pair(z: complex) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def _pair2c(p) -> complex:
    return complex(float(p[0]), float(p[1]))


def _matrix_to_json(m: np.ndarray) -> list:
    return [[_c2pair(z) for z in row] for row in m]


def _matrix_from_json(rows) -> np.ndarray:
    return np.array([[_pair2c(p) for p in row] for row in rows], dtype=complex)


def family_to_json(f: MatrixFamily, params: Optional[TwoLevelParams] = None) -> dict:
    """JSON-serializable dict for a family; includes two-level params if given."""
    out = {"dim": f.dim, "h0": _matrix_to_json(f.h0), "h1": _matrix_to_json(f.h1)}
    if params is not None:
        out["two_level"] = {
            "eps1": params.eps1,
            "eps2": params.eps2,
            "om1": params.om1,
            "om2": params.om2,
            "phi": params.phi,
        }
    return out


def family_from_json(obj) -> tuple[MatrixFamily, Optional[TwoLevelParams]]:
    """Parse a family dict (or JSON string).  Returns (family, params-or-None)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "two_level" in obj:
        d = obj["two_level"]
        p = TwoLevelParams(
            eps1=float(d["eps1"]),
            eps2=float(d["eps2"]),
            om1=float(d["om1"]),
            om2=float(d["om2"]),
            phi=float(d["phi"]),
        )
        return two_level_family(p), p
    fam = MatrixFamily(
        dim=int(obj["dim"]),
        h0=_matrix_from_json(obj["h0"]),
        h1=_matrix_from_json(obj["h1"]),
    )
    return fam, None


def contour_to_json(c: Contour) -> dict:
    """Explicit-point JSON form of a contour (always round-trippable)."""
    return {
        "kind": "explicit",
        "points": [_c2pair(z) for z in c.points],
        "closed": c.closed,
        "turns": c.winding_hint,
    }


def contour_from_json(obj) -> Contour:
    """Parse a contour dict (or JSON string) of any supported kind."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj["kind"]
    if kind == "circle":
        return circle_contour(
            center=_pair2c(obj["center"]),
            radius=float(obj["radius"]),
            samples=int(obj.get("samples", 64)),
            turns=int(obj.get("turns", 1)),
        )
    if kind == "segment":
        return segment_contour(
            start=_pair2c(obj["start"]),
            end=_pair2c(obj["end"]),
            samples=int(obj.get("samples", 65)),
        )
    if kind == "detour":
        return detour_path(
            start=float(obj["start"]),
            end=float(obj["end"]),
            bulge=_pair2c(obj["bulge"]),
            samples=int(obj.get("samples", 129)),
        )
    if kind == "explicit":
        pts = np.array([_pair2c(p) for p in obj["points"]], dtype=complex)
        turns = obj.get("turns")
        return Contour(
            points=pts,
            closed=bool(obj["closed"]),
            winding_hint=None if turns is None else int(turns),
        )
    raise ValueError(f"unknown contour kind {kind!r}")
