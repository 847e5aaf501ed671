"""Finite-difference check of the contact condition for three model 1-forms on R^3.

``contact_density`` returns the coefficient of alpha ^ d(alpha) against
the Euclidean volume dx^dy^dz, so the value is meaningful on the z-axis
too. For cylindrical forms at r >= h it is computed from the printed
coefficients in (r, theta, z), giving the coefficient against
dr^dtheta^dz, and then divided by r. Closer to the axis the same form,
rewritten in Cartesian coordinates, is differenced instead. The raw
coefficient against dr^dtheta^dz is available as ``volume="coordinate"``;
it vanishes on the axis because the coordinates degenerate there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

DEFAULT_STEP = 1e-4
DEFAULT_TOLERANCE = 1e-6

Coeffs = Callable[[np.ndarray, np.ndarray, np.ndarray], tuple]


@dataclass(frozen=True)
class ModelForm:
    tag: str
    coordinates: str       # "cartesian" or "cylindrical"
    native: Coeffs         # coefficients of (dx, dy, dz) or (dr, dtheta, dz)
    cartesian: Coeffs      # the same form in (dx, dy, dz)
    formula: str


def _const(value, like):
    return np.full(np.shape(like), float(value))


def _sinc(r):
    return np.sinc(r / np.pi)  # sin(r)/r, smooth through 0


STANDARD = ModelForm(
    "standard", "cartesian",
    native=lambda x, y, z: (-y, _const(0, y), _const(1, y)),
    cartesian=lambda x, y, z: (-y, _const(0, y), _const(1, y)),
    formula="dz - y dx",
)

SYMMETRIC = ModelForm(
    "symmetric", "cylindrical",
    native=lambda r, th, z: (_const(0, r), r**2, _const(1, r)),
    # r^2 dtheta = x dy - y dx
    cartesian=lambda x, y, z: (-y, x, _const(1, x)),
    formula="dz + r^2 dtheta",
)

OVERTWISTED_RADIAL = ModelForm(
    "overtwisted-radial", "cylindrical",
    native=lambda r, th, z: (_const(0, r), r * np.sin(r), np.cos(r)),
    # r sin(r) dtheta = (sin r / r)(x dy - y dx)
    cartesian=lambda x, y, z: (-y * _sinc(np.hypot(x, y)), x * _sinc(np.hypot(x, y)),
                               np.cos(np.hypot(x, y))),
    formula="cos(r) dz + r sin(r) dtheta",
)

FORMS = {
    "std": STANDARD, "standard": STANDARD,
    "sym": SYMMETRIC, "symmetric": SYMMETRIC,
    "ot": OVERTWISTED_RADIAL, "overtwisted-radial": OVERTWISTED_RADIAL,
}


def get_form(name: str) -> ModelForm:
    try:
        return FORMS[name]
    except KeyError:
        raise ValueError(f"unknown form {name!r}; choose from std, sym, ot") from None


def _partials(f: Coeffs, u, v, w, h, one_sided_u=None):
    """Central differences of every coefficient in each coordinate.

    Where ``one_sided_u`` is true the first coordinate uses the forward
    second-order stencil instead.
    """
    base = [np.asarray(c, dtype=float) for c in f(u, v, w)]
    grads = []
    shifts = ((h, 0, 0), (0, h, 0), (0, 0, h))
    plus = [f(u + a, v + b, w + c) for a, b, c in shifts]
    minus = [f(u - a, v - b, w - c) for a, b, c in shifts]
    for axis in range(3):
        grads.append([(np.asarray(p) - np.asarray(m)) / (2 * h)
                      for p, m in zip(plus[axis], minus[axis])])
    if one_sided_u is not None and np.any(one_sided_u):
        far = f(u + 2 * h, v, w)
        for i in range(3):
            fwd = (-3 * base[i] + 4 * np.asarray(plus[0][i]) - np.asarray(far[i])) / (2 * h)
            grads[0][i] = np.where(one_sided_u, fwd, grads[0][i])
    return base, grads


def _wedge(base, grads):
    # alpha ^ d alpha for alpha = P du + Q dv + R dw
    (P, Q, R), (du, dv, dw) = base, grads
    return (P * (dv[2] - dw[1]) + Q * (dw[0] - du[2]) + R * (du[1] - dv[0]))


def _density(form: ModelForm, a, b, c, h: float, volume: str):
    if h <= 0:
        raise ValueError(f"step size must be positive, got {h}")
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    if form.coordinates == "cartesian":
        return _wedge(*_partials(form.native, a, b, c, h))
    if np.any(a < 0):
        raise ValueError("cylindrical points need r >= 0")
    if volume == "coordinate":
        return _wedge(*_partials(form.native, a, b, c, h, one_sided_u=a < h))
    if volume != "euclidean":
        raise ValueError(f"volume must be 'euclidean' or 'coordinate', got {volume!r}")
    near = a < h
    safe_r = np.where(near, 1.0, a)
    native = _wedge(*_partials(form.native, safe_r, b, c, h)) / safe_r
    x, y = a * np.cos(b), a * np.sin(b)
    axis = _wedge(*_partials(form.cartesian, x, y, c, h))
    return np.where(near, axis, native)


def contact_density(form: ModelForm, p, h: float = DEFAULT_STEP, volume: str = "euclidean") -> float:
    """Coefficient of alpha ^ d(alpha) at ``p`` from central differences with step ``h``."""
    return float(_density(form, *p, h=h, volume=volume))


@dataclass(frozen=True)
class GridSpec:
    axes: tuple[tuple[float, float, int], ...]   # (low, high, count) per coordinate

    def __post_init__(self):
        if len(self.axes) != 3:
            raise ValueError("a grid needs three axes")
        for lo, hi, n in self.axes:
            if n < 1 or (n > 1 and not hi >= lo):
                raise ValueError(f"bad grid axis {(lo, hi, n)}")

    @classmethod
    def parse(cls, text: str) -> GridSpec:
        """``"lo:hi:n,lo:hi:n,lo:hi:n"``."""
        axes = []
        for part in text.split(","):
            pieces = part.split(":")
            if len(pieces) != 3:
                raise ValueError(f"grid axis {part!r} is not lo:hi:n")
            axes.append((float(pieces[0]), float(pieces[1]), int(pieces[2])))
        return cls(tuple(axes))

    def points(self):
        lines = [np.linspace(lo, hi, n) for lo, hi, n in self.axes]
        return np.meshgrid(*lines, indexing="ij")

    @property
    def size(self) -> int:
        return math.prod(n for _, _, n in self.axes)


@dataclass(frozen=True)
class GridReport:
    form: str
    samples: int
    min_abs_density: float
    argmin: tuple[float, float, float]
    max_abs_density: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.min_abs_density > self.tolerance


def is_contact_on_grid(form: ModelForm, grid: GridSpec, h: float = DEFAULT_STEP,
                       tolerance: float = DEFAULT_TOLERANCE, volume: str = "euclidean") -> GridReport:
    if grid.size == 0:
        raise ValueError("empty grid")
    a, b, c = grid.points()
    dens = np.abs(_density(form, a, b, c, h, volume))
    i = np.unravel_index(int(np.argmin(dens)), dens.shape)
    return GridReport(form.tag, int(dens.size), float(dens[i]),
                      (float(a[i]), float(b[i]), float(c[i])), float(dens.max()), tolerance)


def convergence_ratio(form: ModelForm, p, h: float = 1e-2) -> float:
    """|d(h) - d(h/2)| / |d(h/2) - d(h/4)|, close to 4 for a second-order stencil."""
    d = [contact_density(form, p, h / 2**k) for k in range(3)]
    return abs(d[0] - d[1]) / abs(d[1] - d[2])
