"""Two-component lattice energy: interaction term, phase diagram, census.

The interaction between the two components sits in

    J(z; a, b) = sum_{(m,n) in Z^2} e^{-pi |m z - n|^2 / y} cos(2 pi (m a + n b)),

a function of the lattice shape ``z`` and the relative displacement
``(a, b)`` in lattice coordinates; the total energy of the two-component
configuration is ``E(z) = theta(1; z) + alpha J(z; a, b)``.  For the
energy-relevant displacement ``(1/2, 1/2)`` the energy collapses onto the
competing functional W1 at weight ``rho = (1 - alpha)/(2 alpha)``, which is
how :func:`optimal_lattice` reduces the phase diagram to the minimizer
trajectory: rhombic lattices for small positive ``alpha``, square in the
middle band, rectangular up to ``alpha = 1``.  The band edges are

    alpha1 = 1/(1 + 2 sigma_1b),   alpha2 = 1/(1 + 2 sigma_1a).

``critical_census`` enumerates the critical points of ``J(z; ., .)`` on the
displacement torus (grid localization + damped Newton); the four universal
points (0,0), (1/2,0), (0,1/2), (1/2,1/2) are critical for every ``z``, and
the census reports torus representatives — mirror pairs under
``(a, b) -> (1-a, 1-b)`` are listed individually, so the expected counts are
four (square) and six (hexagonal, where (1/3, 1/3) and (2/3, 2/3) join).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional, Tuple

from .functionals import FunctionalKind, minimizer, thresholds
from .kernels import (
    DEFAULT_TRUNCATION,
    DomainError,
    HalfPlanePoint,
    SeriesTruncation,
    TruncationError,
    jacobi_theta,
    theta2d,
    theta2d_shifted,
)

__all__ = [
    "Displacement",
    "UNIVERSAL_POINTS",
    "HEXAGONAL_POINT",
    "PhaseRow",
    "Alpha0Result",
    "CriticalPoint",
    "CriticalPointReport",
    "j_eval",
    "hessian_universal",
    "energy",
    "alpha_thresholds",
    "optimal_lattice",
    "phase_row",
    "solve_alpha0",
    "critical_census",
]

HEXAGONAL_POINT = HalfPlanePoint(0.5, math.sqrt(3.0) / 2.0)

_SHAPES = ("hexagonal", "rhombic", "square", "rectangular")


@dataclass(frozen=True)
class Displacement:
    """Relative displacement of the second component, canonical modulo 1."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"displacement must be finite, got ({self.a}, {self.b})")
        object.__setattr__(self, "a", self.a - math.floor(self.a))
        object.__setattr__(self, "b", self.b - math.floor(self.b))


UNIVERSAL_POINTS = {
    "w0": Displacement(0.0, 0.0),
    "w1": Displacement(0.5, 0.0),
    "w2": Displacement(0.0, 0.5),
    "w3": Displacement(0.5, 0.5),
}


# ---------------------------------------------------------------------------
# the interaction functional


def _psi_factor(psi: complex, two_pi_y: float, db_order: int) -> complex:
    if db_order == 0:
        return 1.0
    if db_order == 1:
        return psi
    return psi * psi - two_pi_y


def _j_row_poisson(
    m: int, x: float, y: float, a: float, b: float, da_order: int, db_order: int, tol: float
) -> Tuple[float, float]:
    """One outer row of the Poisson form; returns (value, sum of |terms|)."""
    two_pi = 2 * math.pi
    inner: complex = 0.0
    inner_abs = 0.0
    k = 0
    while True:
        done = True
        for kk in (k, -k) if k else (0,):
            d = kk - b
            term = cmath.exp(-math.pi * y * d * d - 1j * two_pi * d * m * x)
            psi = two_pi * complex(y * d, m * x)
            term *= _psi_factor(psi, two_pi * y, db_order)
            inner += term
            inner_abs += abs(term)
        # distance of the nearest unseen index to b is at least k - b > k - 1
        if k >= 2:
            cap = two_pi * (y * (k + 2) + abs(m * x) + 1.0)
            t_next = 2 * math.exp(-math.pi * y * (k - 1) ** 2) * cap**db_order
            done = t_next <= tol
        else:
            done = False
        k += 1
        if done or k > 512:
            break
    phase = (two_pi * 1j * m) ** da_order * cmath.exp(two_pi * 1j * m * a)
    return (phase * inner).real, abs(phase) * inner_abs


def _j_eval_poisson(
    x: float, y: float, a: float, b: float, da_order: int, db_order: int, trunc: SeriesTruncation
) -> float:
    tol = trunc.tail_tol
    scale = math.sqrt(y)
    total = 0.0
    prev_abs = None
    for m in range(0, trunc.max_index + 1):
        weight = math.exp(-math.pi * m * m * y)
        row_abs_max = 0.0
        for mm in (m, -m) if m else (0,):
            val, row_abs = _j_row_poisson(mm, x, y, a, b, da_order, db_order, tol)
            total += weight * val
            row_abs_max = max(row_abs_max, row_abs)
        prev_abs = weight * row_abs_max
        # next row: Gaussian weight shrinks, polynomial factors grow slowly
        growth = ((m + 2.0) / (m + 1.0)) ** (da_order + db_order)
        t_next = 2 * prev_abs * math.exp(-math.pi * (2 * m + 1) * y) * growth * 2
        ratio = math.exp(-math.pi * (2 * m + 3) * y) * growth
        if m >= 1 and scale * t_next / (1.0 - ratio) <= tol:
            return scale * total
        if m >= 1 and prev_abs == 0.0 and weight < tol:
            return scale * total
    raise TruncationError(
        f"j_eval(z=({x}, {y})): row sum did not certify tol within "
        f"max_index={trunc.max_index}",
        achieved_bound=prev_abs if prev_abs is not None else math.inf,
    )


def _j_eval_direct(
    x: float, y: float, a: float, b: float, da_order: int, db_order: int, trunc: SeriesTruncation
) -> float:
    """Plain double sum; efficient when y < 1 (the in-row decay is 1/y)."""
    two_pi = 2 * math.pi
    order = da_order + db_order
    m_cap = int(math.sqrt(max(-math.log(trunc.tail_tol) - 3, 1.0) / (math.pi * y))) + 3
    n_spread = int(math.sqrt(max(-math.log(trunc.tail_tol) - 3, 1.0) * y / math.pi)) + 3
    if m_cap > trunc.max_index or n_spread > trunc.max_index:
        raise TruncationError(
            f"j_eval(z=({x}, {y})): direct sum needs more than max_index="
            f"{trunc.max_index} rows",
            achieved_bound=math.inf,
        )
    total = 0.0
    for m in range(-m_cap, m_cap + 1):
        center = round(m * x)
        row = 0.0
        for n in range(center - n_spread, center + n_spread + 1):
            w = math.exp(-math.pi * ((m * x - n) ** 2 / y + m * m * y))
            phase = two_pi * (m * a + n * b)
            if order % 2 == 0:
                trig = math.cos(phase) * (-1 if order == 2 else 1)
            else:
                trig = -math.sin(phase)
            row += w * (two_pi * m) ** da_order * (two_pi * n) ** db_order * trig
        total += row
    return total


def j_eval(
    z: HalfPlanePoint,
    d: Displacement,
    da_order: int = 0,
    db_order: int = 0,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> float:
    """J(z; a, b) or a partial derivative in the displacement (total order <= 2).

    For y >= 1 the inner lattice row is Poisson-summed (decay rate y both
    ways); for y < 1 the plain double sum already converges quickly.
    """
    if da_order not in (0, 1, 2) or db_order not in (0, 1, 2):
        raise DomainError("displacement derivative orders must be 0, 1 or 2")
    if da_order + db_order > 2:
        raise DomainError("total displacement derivative order must be at most 2")
    if z.y >= 1.0:
        return _j_eval_poisson(z.x, z.y, d.a, d.b, da_order, db_order, trunc)
    return _j_eval_direct(z.x, z.y, d.a, d.b, da_order, db_order, trunc)


def hessian_universal(
    y: float,
    which: str,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> float:
    """Hessian determinant of (a, b) -> J(iy; a, b) at a universal point.

    At z = iy the functional factorizes, J(iy; a, b) = theta_1d(y; a)
    theta_1d(1/y; b), and the mixed partial vanishes at the universal
    points, so the determinant is the product of the two pure second
    partials, each of the form 4 pi theta'_{3 or 4}:

        w1 = (1/2, 0):  16 pi^2 th4'(y) th3(1/y) th4(y) th3'(1/y)   (< 0)
        w2 = (0, 1/2):  16 pi^2 th3'(y) th4(1/y) th3(y) th4'(1/y)   (< 0)
        w3 = (1/2, 1/2): 16 pi^2 th4'(y) th4(1/y) th4(y) th4'(1/y)  (> 0)

    w1 and w2 are saddles, w3 is a local minimum.
    """
    if not y > 0:
        raise DomainError(f"hessian_universal needs y > 0, got {y}")
    t = lambda kind, v, o=0: jacobi_theta(kind, v, o, trunc)
    c = 16 * math.pi**2
    if which == "w1":
        return c * t("four", y, 1) * t("three", 1 / y) * t("four", y) * t("three", 1 / y, 1)
    if which == "w2":
        return c * t("three", y, 1) * t("four", 1 / y) * t("three", y) * t("four", 1 / y, 1)
    if which == "w3":
        return c * t("four", y, 1) * t("four", 1 / y) * t("four", y) * t("four", 1 / y, 1)
    raise DomainError(f"unknown universal point {which!r}; expected 'w1', 'w2' or 'w3'")


def energy(
    alpha: float,
    z: HalfPlanePoint,
    d: Displacement,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> float:
    """Two-component energy theta(1; z) + alpha J(z; a, b), |alpha| <= 1."""
    if not -1.0 <= alpha <= 1.0:
        raise DomainError(f"coupling must lie in [-1, 1], got {alpha}")
    return theta2d(1, z, trunc) + alpha * j_eval(z, d, trunc=trunc)


# ---------------------------------------------------------------------------
# phase diagram


@dataclass(frozen=True)
class PhaseRow:
    """One row of the phase diagram: coupling, optimal shape, and energy.

    ``angle_or_ratio`` carries the shape parameter: the rhombic opening
    angle (radians) on the rhombic branch, the aspect ratio on the
    rectangular branch, 1.0 for the square, and pi/3 for the hexagonal
    row of the non-positive-coupling regime.
    """

    alpha: float
    shape: str
    z: HalfPlanePoint
    angle_or_ratio: float
    energy: float

    def __post_init__(self) -> None:
        if self.shape not in _SHAPES:
            raise DomainError(f"unknown shape {self.shape!r}")
        if not -1.0 <= self.alpha <= 1.0:
            raise DomainError(f"coupling must lie in [-1, 1], got {self.alpha}")
        tol = 1e-8
        zc = complex(self.z.x, self.z.y)
        ok = {
            "square": abs(zc - 1j) <= tol,
            "rhombic": abs(abs(zc) - 1.0) <= tol and -tol < self.z.x < 0.5 + tol,
            "rectangular": abs(self.z.x) <= tol and self.z.y > 1.0 - tol,
            "hexagonal": abs(zc - complex(0.5, math.sqrt(3.0) / 2)) <= tol,
        }[self.shape]
        if not ok:
            raise DomainError(
                f"shape {self.shape!r} is inconsistent with z = ({self.z.x}, {self.z.y})"
            )


def _half_half_energy(alpha: float, z: HalfPlanePoint, trunc: SeriesTruncation) -> float:
    # theta(1;z) + alpha J(z;1/2,1/2) = (1-alpha) theta(1;z) + 2 alpha theta(2;(z+1)/2)
    return (1 - alpha) * theta2d(1, z, trunc) + 2 * alpha * theta2d_shifted(2, z, trunc)


def alpha_thresholds(trunc: SeriesTruncation = DEFAULT_TRUNCATION) -> Tuple[float, float]:
    """(alpha1, alpha2): band edges of the square phase, from the thresholds."""
    th = thresholds(trunc)
    return 1 / (1 + 2 * th.sigma1b), 1 / (1 + 2 * th.sigma1a)


def optimal_lattice(
    alpha: float,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> PhaseRow:
    """The optimal lattice for coupling alpha in (0, 1].

    Bridges to the competing functional at rho = (1 - alpha)/(2 alpha) and
    classifies the minimizer branch: arc -> rhombic (opening angle
    arg z = arctan(2y/(y^2-1))), corner -> square, segment -> rectangular
    (aspect ratio y).
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"optimal_lattice needs 0 < alpha <= 1, got {alpha}")
    rho = (1 - alpha) / (2 * alpha)
    point = minimizer(FunctionalKind.W1, rho, trunc)
    z = point.z
    if point.branch == "arc":
        shape, parameter = "rhombic", math.atan2(z.y, z.x)
    elif point.branch == "corner":
        shape, parameter = "square", 1.0
    else:
        shape, parameter = "rectangular", z.y
    return PhaseRow(alpha, shape, z, parameter, _half_half_energy(alpha, z, trunc))


def phase_row(alpha: float, trunc: SeriesTruncation = DEFAULT_TRUNCATION) -> PhaseRow:
    """Phase-diagram row for any alpha in [-1, 1].

    Non-positive couplings favor the coincident hexagonal configuration
    (d = (0,0), energy (1 + alpha) theta(1; z0)); positive couplings follow
    :func:`optimal_lattice`.
    """
    if not -1.0 <= alpha <= 1.0:
        raise DomainError(f"coupling must lie in [-1, 1], got {alpha}")
    if alpha <= 0.0:
        e = energy(alpha, HEXAGONAL_POINT, Displacement(0.0, 0.0), trunc)
        return PhaseRow(alpha, "hexagonal", HEXAGONAL_POINT, math.pi / 3, e)
    return optimal_lattice(alpha, trunc)


class Alpha0Result(NamedTuple):
    """Output of :func:`solve_alpha0`: the crossing, its angle, and the
    closed-form upper bound it must respect."""

    alpha0: float
    theta_alpha0: float
    rough_bound: float


def solve_alpha0(trunc: SeriesTruncation = DEFAULT_TRUNCATION) -> Alpha0Result:
    """Coupling below which the displaced hexagonal state beats the rhombic one.

    Solves  theta(1; z0) + alpha J(z0; 1/3, 1/3) = E_rhombic(alpha)  by
    bisection; the right-hand side is the optimal-lattice energy at
    displacement (1/2, 1/2).  Also returns the first-order upper bound

        (theta(1; i) - theta(1; z0)) / (J(z0; 1/3, 1/3) - J(i; 1/2, 1/2)),

    which alpha0 may not exceed.
    """
    third = Displacement(1.0 / 3.0, 1.0 / 3.0)
    t_hex = theta2d(1, HEXAGONAL_POINT, trunc)
    j_hex = j_eval(HEXAGONAL_POINT, third, trunc=trunc)

    def gap(alpha: float) -> float:
        return (t_hex + alpha * j_hex) - optimal_lattice(alpha, trunc).energy

    lo, hi = 0.10, 0.24
    glo, ghi = gap(lo), gap(hi)
    if not glo * ghi < 0:
        raise ArithmeticError(
            f"alpha0 bisection bracket failed: gap({lo}) = {glo:.3e}, gap({hi}) = {ghi:.3e}"
        )
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        gm = gap(mid)
        if gm == 0.0:
            lo = hi = mid
            break
        if (gm < 0) == (glo < 0):
            lo, glo = mid, gm
        else:
            hi, ghi = mid, gm
    alpha0 = 0.5 * (lo + hi)

    square = HalfPlanePoint(0.0, 1.0)
    rough = (theta2d(1, square, trunc) - t_hex) / (
        j_hex - j_eval(square, UNIVERSAL_POINTS["w3"], trunc=trunc)
    )
    return Alpha0Result(alpha0, optimal_lattice(alpha0, trunc).angle_or_ratio, rough)


# ---------------------------------------------------------------------------
# critical-point census on the displacement torus


class CriticalPoint(NamedTuple):
    d: Displacement
    kind: str  # "min" | "max" | "saddle" | "degenerate"
    residual: float


@dataclass(frozen=True)
class CriticalPointReport:
    points: Tuple[CriticalPoint, ...]
    count: int

    def __post_init__(self) -> None:
        if self.count != len(self.points):
            raise DomainError("report count must equal the number of points")

    def find(self, a: float, b: float, tol: float = 1e-6) -> Optional[CriticalPoint]:
        """The report entry within torus distance tol of (a, b), if any."""
        for p in self.points:
            da = min(abs(p.d.a - a % 1), 1 - abs(p.d.a - a % 1))
            db = min(abs(p.d.b - b % 1), 1 - abs(p.d.b - b % 1))
            if math.hypot(da, db) <= tol:
                return p
        return None


def _grad(z, a, b, trunc):
    d = Displacement(a, b)
    return (
        j_eval(z, d, 1, 0, trunc),
        j_eval(z, d, 0, 1, trunc),
    )


def _hess(z, a, b, trunc):
    d = Displacement(a, b)
    return (
        j_eval(z, d, 2, 0, trunc),
        j_eval(z, d, 1, 1, trunc),
        j_eval(z, d, 0, 2, trunc),
    )


def _newton(z, a, b, refine_tol, trunc):
    """Damped Newton for the displacement gradient; returns (a, b, res, ok)."""
    ga, gb = _grad(z, a, b, trunc)
    res = math.hypot(ga, gb)
    for _ in range(50):
        if res <= refine_tol:
            return a, b, res, True
        haa, hab, hbb = _hess(z, a, b, trunc)
        det = haa * hbb - hab * hab
        if det == 0.0:
            return a, b, res, False
        sa = (hbb * ga - hab * gb) / det
        sb = (haa * gb - hab * ga) / det
        step = 1.0
        for _ in range(8):
            na, nb = a - step * sa, b - step * sb
            nga, ngb = _grad(z, na, nb, trunc)
            nres = math.hypot(nga, ngb)
            if nres < res:
                break
            step *= 0.5
        else:
            return a, b, res, res <= refine_tol
        a, b, ga, gb, res = na % 1.0, nb % 1.0, nga, ngb, nres
    return a, b, res, res <= refine_tol


def critical_census(
    z: HalfPlanePoint,
    grid_n: int = 128,
    refine_tol: float = 1e-10,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> CriticalPointReport:
    """All critical points of (a, b) -> J(z; a, b) on the unit torus.

    Grid sign-localization of the gradient followed by damped Newton; the
    four universal points are seeded unconditionally.  Classification is by
    the sign of the Hessian determinant (and of J_aa when it is positive);
    a Newton run that stalls above ``refine_tol`` is reported as
    "degenerate" with its achieved residual.  Points are torus
    representatives sorted lexicographically; mirror pairs under
    (a, b) -> (1-a, 1-b) both appear.
    """
    if grid_n < 32:
        raise DomainError(f"census grid must have at least 32 points, got {grid_n}")
    h = 1.0 / grid_n
    ga = [[0.0] * grid_n for _ in range(grid_n)]
    gb = [[0.0] * grid_n for _ in range(grid_n)]
    for i in range(grid_n):
        for j in range(grid_n):
            ga[i][j], gb[i][j] = _grad(z, i * h, j * h, trunc)

    seeds = [(d.a, d.b) for d in UNIVERSAL_POINTS.values()]
    for i in range(grid_n):
        i1 = (i + 1) % grid_n
        for j in range(grid_n):
            j1 = (j + 1) % grid_n
            ca = (ga[i][j], ga[i1][j], ga[i][j1], ga[i1][j1])
            cb = (gb[i][j], gb[i1][j], gb[i][j1], gb[i1][j1])
            if min(ca) < 0 < max(ca) and min(cb) < 0 < max(cb):
                seeds.append(((i + 0.5) * h, (j + 0.5) * h))

    found = []
    for a0, b0 in seeds:
        a, b, res, ok = _newton(z, a0, b0, refine_tol, trunc)
        a, b = a % 1.0, b % 1.0
        if not ok and res > 1e-5:
            continue  # the cell's sign change was spurious (no nearby zero)
        duplicate = False
        for p in found:
            da = min(abs(p[0] - a), 1 - abs(p[0] - a))
            db = min(abs(p[1] - b), 1 - abs(p[1] - b))
            if math.hypot(da, db) <= 2.0 * h:
                duplicate = True
                break
        if not duplicate:
            found.append((a, b, res, ok))

    points = []
    for a, b, res, ok in sorted(found):
        haa, hab, hbb = _hess(z, a, b, trunc)
        det = haa * hbb - hab * hab
        if not ok or abs(det) <= 1e-10:
            kind = "degenerate"
        elif det < 0:
            kind = "saddle"
        else:
            kind = "max" if haa < 0 else "min"
        points.append(CriticalPoint(Displacement(a, b), kind, res))
    return CriticalPointReport(points=tuple(points), count=len(points))
