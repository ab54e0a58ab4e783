"""The competing functionals W1,rho / W2,rho and their minimizer trajectory.

On the imaginary axis both functionals collapse to one-variable combinations
of four building blocks::

    X(y) = theta_3(y)   theta_3(1/y)
    Y(y) = 2 [theta_3(4y) theta_3(4/y) + theta_2(4y) theta_2(4/y)]
    A(y) = sqrt(2) theta_3(2y) theta_3(2/y)
    B(y) = sqrt(2) theta_2(2y) theta_2(2/y)

namely  W1,rho(iy) = Y(y)/2 + rho X(y)  and  sqrt(2) W2,rho(iy) =
(1 + rho) A(y) + B(y).  The stationarity equations along the axis are the
quotient equations Y'/X' + c = 0 and 1 + B'/A' + c = 0, whose unique roots in
(1, sqrt(3)] are produced by :func:`solve_y_branch`.  Note the factor two:
the W1 segment minimizer at weight rho is the root for c = 2 rho, because
differentiating Y/2 + rho X gives Y'/X' = -2 rho.

The thresholds where the segment branch dies are the L'Hopital limits of the
quotients at y = 1:

    rho1 = -Y''(1) / (2 X''(1))        (W1 leaves the segment)
    rho2 = -1 - B''(1) / A''(1)        (W2 leaves the segment)

and the four sigma thresholds of the trajectory theorems are
sigma_1a = rho1, sigma_1b = 1/rho2, sigma_2a = rho2, sigma_2b = 1/rho1.
:func:`minimizer` assembles the full trajectory: segment for small rho,
corner plateau at i, then the unit-circle arc obtained by the Cayley map
from the *other* functional's segment root.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Any, Tuple

from .halfplane import on_trajectory
from .kernels import (
    DEFAULT_TRUNCATION,
    DomainError,
    HalfPlanePoint,
    SeriesTruncation,
    jacobi_theta,
    theta2d,
    theta2d_shifted,
)

__all__ = [
    "FunctionalKind",
    "XYABKind",
    "Thresholds",
    "TrajectoryPoint",
    "NoRootError",
    "xyab",
    "thresholds",
    "w_eval",
    "solve_y_branch",
    "minimizer",
    "quotient",
    "quotient_derivative",
    "SignReport",
    "quotient_scan",
]

SQRT3 = math.sqrt(3.0)

_BRACKET_LO = 1.0 + 1e-9
_BISECT_WIDTH = 1e-6
_POLISH_RESIDUAL = 1e-12


class NoRootError(ArithmeticError):
    """The branch equation has no root: the weight is past its threshold."""


class FunctionalKind(enum.Enum):
    W1 = "W1"
    W2 = "W2"


class XYABKind(enum.Enum):
    X = "X"
    Y = "Y"
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Thresholds:
    """The two quotient thresholds and the four trajectory thresholds."""

    rho1: float
    rho2: float
    sigma1a: float
    sigma1b: float
    sigma2a: float
    sigma2b: float


@dataclass(frozen=True)
class TrajectoryPoint:
    """A minimizer: weight, location, and which trajectory piece it sits on."""

    rho: float
    z: HalfPlanePoint
    branch: str  # "segment" | "corner" | "arc"

    def __post_init__(self) -> None:
        if self.branch not in ("segment", "corner", "arc"):
            raise DomainError(f"unknown branch tag {self.branch!r}")
        if on_trajectory(self.z, 1e-9) is None:
            raise DomainError(f"trajectory point ({self.z.x}, {self.z.y}) is off the curve")


# ---------------------------------------------------------------------------
# building blocks


def _faa_di_bruno_inverse_arg(derivs, beta: float, y: float, order: int):
    """Derivatives of g(y) = f(beta / y) from those of f, up to order 4."""
    u = [0.0] * 5  # u[k] = k-th derivative of beta / y
    for k in range(1, 5):
        u[k] = beta * (-1) ** k * math.factorial(k) / y ** (k + 1)
    f1, f2, f3, f4 = derivs[1], derivs[2], derivs[3], derivs[4]
    g = [derivs[0], 0.0, 0.0, 0.0, 0.0]
    g[1] = f1 * u[1]
    g[2] = f2 * u[1] ** 2 + f1 * u[2]
    g[3] = f3 * u[1] ** 3 + 3 * f2 * u[1] * u[2] + f1 * u[3]
    g[4] = (
        f4 * u[1] ** 4
        + 6 * f3 * u[1] ** 2 * u[2]
        + f2 * (3 * u[2] ** 2 + 4 * u[1] * u[3])
        + f1 * u[4]
    )
    return g[: order + 1]


def _pair_derivative(
    kind1: str,
    alpha: float,
    kind2: str,
    beta: float,
    y: float,
    order: int,
    trunc: SeriesTruncation,
    ctx: Any,
) -> float:
    """d^order/dy^order of theta_{kind1}(alpha y) * theta_{kind2}(beta / y)."""
    f = [
        jacobi_theta(kind1, alpha * y, j, trunc, ctx) * alpha**j for j in range(order + 1)
    ]
    inner = [jacobi_theta(kind2, beta / y, j, trunc, ctx) for j in range(5)]
    g = _faa_di_bruno_inverse_arg(inner, beta, y, order)
    return sum(math.comb(order, i) * f[i] * g[order - i] for i in range(order + 1))


def xyab(
    which: XYABKind,
    y: float,
    order: int = 0,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
    ctx: Any = math,
) -> float:
    """Evaluate X, Y, A or B, or a derivative in y up to fourth order."""
    if not y > 0:
        raise DomainError(f"xyab needs y > 0, got {y}")
    if order not in (0, 1, 2, 3, 4):
        raise DomainError(f"derivative order must be 0..4, got {order}")
    if which is XYABKind.X:
        return _pair_derivative("three", 1, "three", 1, y, order, trunc, ctx)
    if which is XYABKind.Y:
        return 2 * (
            _pair_derivative("three", 4, "three", 4, y, order, trunc, ctx)
            + _pair_derivative("two", 4, "two", 4, y, order, trunc, ctx)
        )
    if which is XYABKind.A:
        return ctx.sqrt(2) * _pair_derivative("three", 2, "three", 2, y, order, trunc, ctx)
    if which is XYABKind.B:
        return ctx.sqrt(2) * _pair_derivative("two", 2, "two", 2, y, order, trunc, ctx)
    raise DomainError(f"unknown building block {which!r}")


# ---------------------------------------------------------------------------
# thresholds


@functools.lru_cache(maxsize=8)
def thresholds(trunc: SeriesTruncation = DEFAULT_TRUNCATION) -> Thresholds:
    """Quotient thresholds from the second derivatives at y = 1 (cached).

    rho1 = -Y''(1)/(2 X''(1)) and rho2 = -1 - B''(1)/A''(1); the sigma fields
    are filled by the reciprocal relations of the trajectory theorems.
    """
    x2 = xyab(XYABKind.X, 1.0, 2, trunc)
    y2 = xyab(XYABKind.Y, 1.0, 2, trunc)
    a2 = xyab(XYABKind.A, 1.0, 2, trunc)
    b2 = xyab(XYABKind.B, 1.0, 2, trunc)
    rho1 = -y2 / (2 * x2)
    rho2 = -1 - b2 / a2
    return Thresholds(
        rho1=rho1,
        rho2=rho2,
        sigma1a=rho1,
        sigma1b=1 / rho2,
        sigma2a=rho2,
        sigma2b=1 / rho1,
    )


# ---------------------------------------------------------------------------
# the functionals


def w_eval(
    kind: FunctionalKind,
    rho: float,
    z: HalfPlanePoint,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> float:
    """W1,rho(z) = theta(2;(z+1)/2) + rho theta(1;z), and the W2 companion."""
    if not rho >= 0:
        raise DomainError(f"w_eval needs rho >= 0, got {rho}")
    if kind is FunctionalKind.W1:
        return theta2d_shifted(2, z, trunc) + rho * theta2d(1, z, trunc)
    if kind is FunctionalKind.W2:
        return theta2d_shifted(1, z, trunc) + rho * theta2d(2, z, trunc)
    raise DomainError(f"unknown functional {kind!r}")


def _branch_residual(kind: FunctionalKind, y: float, c: float, trunc: SeriesTruncation) -> float:
    if kind is FunctionalKind.W1:
        num = xyab(XYABKind.Y, y, 1, trunc)
        den = xyab(XYABKind.X, y, 1, trunc)
        return num / den + c
    num = xyab(XYABKind.B, y, 1, trunc)
    den = xyab(XYABKind.A, y, 1, trunc)
    return 1 + num / den + c


def _branch_window(kind: FunctionalKind, trunc: SeriesTruncation) -> float:
    th = thresholds(trunc)
    return 2 * th.rho1 if kind is FunctionalKind.W1 else th.rho2


def solve_y_branch(
    kind: FunctionalKind,
    c: float,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> float:
    """Root in (1, sqrt(3)] of Y'/X' + c = 0 (W1) or 1 + B'/A' + c = 0 (W2).

    The quotient is strictly increasing on (1, infinity), so the root is
    unique.  Bracketed bisection down to width 1e-6, then secant polish
    aiming at residual 1e-12 (near the top of the window the quotient's
    float noise can exceed that; the polish then stops at a stationary
    iterate).  ``c`` must lie in [0, window) where the window is 2*rho1 for
    W1 and rho2 for W2; past the window there is no root and the minimizer
    sits at the corner.
    """
    if not c >= 0:
        raise DomainError(f"solve_y_branch needs c >= 0, got {c}")
    if c == 0:
        return SQRT3  # both numerators vanish at the hexagonal height
    if c >= _branch_window(kind, trunc):
        raise NoRootError(
            f"{kind.value}: c = {c} is past the branch window "
            f"{_branch_window(kind, trunc):.12f}; no segment root exists"
        )

    f = lambda t: _branch_residual(kind, t, c, trunc)
    lo, hi = _BRACKET_LO, SQRT3
    flo, fhi = f(lo), f(hi)
    if not flo < 0 < fhi:
        raise NoRootError(
            f"{kind.value}: no sign change on the bracket for c = {c} "
            f"(f(lo) = {flo:.3e}, f(hi) = {fhi:.3e})"
        )
    while hi - lo > _BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm < 0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm

    a, fa, b, fb = lo, flo, hi, fhi
    for _ in range(60):
        if abs(fb) <= _POLISH_RESIDUAL:
            return b
        if fb == fa:
            break
        step = fb * (b - a) / (fb - fa)
        a, fa = b, fb
        b = b - step
        if not (1.0 < b <= SQRT3 + 1e-9):
            b = 0.5 * (lo + hi)  # secant escaped: fall back into the bracket
        fb = f(b)
        if b == a:
            break
    return b


def minimizer(
    kind: FunctionalKind,
    rho: float,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
) -> TrajectoryPoint:
    """The minimizer of W1,rho or W2,rho over its fundamental domain.

    Implements the trajectory table: vertical segment below the first
    threshold, the corner i on the plateau (ties included), and past the
    plateau the unit-arc image under the Cayley map of the *other*
    functional's segment root at the reciprocal weight.
    """
    if not rho >= 0:
        raise DomainError(f"minimizer needs rho >= 0, got {rho}")
    th = thresholds(trunc)
    if kind is FunctionalKind.W1:
        seg_end, arc_start = th.sigma1a, th.sigma1b
    else:
        seg_end, arc_start = th.sigma2a, th.sigma2b

    if rho < seg_end:
        if kind is FunctionalKind.W1:
            y = solve_y_branch(FunctionalKind.W1, 2 * rho, trunc)
        else:
            y = solve_y_branch(FunctionalKind.W2, rho, trunc)
        return TrajectoryPoint(rho, HalfPlanePoint(0.0, y), "segment")
    if rho <= arc_start:
        return TrajectoryPoint(rho, HalfPlanePoint(0.0, 1.0), "corner")
    if kind is FunctionalKind.W1:
        y = solve_y_branch(FunctionalKind.W2, 1 / rho, trunc)
    else:
        y = solve_y_branch(FunctionalKind.W1, 2 / rho, trunc)
    d = y * y + 1
    return TrajectoryPoint(rho, HalfPlanePoint((y * y - 1) / d, 2 * y / d), "arc")


# ---------------------------------------------------------------------------
# quotients and their sign scans


def _quotient_pair(kind: str) -> Tuple[XYABKind, XYABKind]:
    if kind == "ZofXY":
        return XYABKind.Y, XYABKind.X
    if kind == "CofAB":
        return XYABKind.B, XYABKind.A
    raise DomainError(f"unknown quotient kind {kind!r}; expected 'ZofXY' or 'CofAB'")


def quotient(kind: str, y: float, trunc: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """Y'/X' (kind "ZofXY") or B'/A' (kind "CofAB"), L'Hopital value at y = 1."""
    top, bot = _quotient_pair(kind)
    if abs(y - 1.0) <= 1e-9:
        return xyab(top, 1.0, 2, trunc) / xyab(bot, 1.0, 2, trunc)
    return xyab(top, y, 1, trunc) / xyab(bot, y, 1, trunc)


def quotient_derivative(
    kind: str, y: float, trunc: SeriesTruncation = DEFAULT_TRUNCATION
) -> float:
    """d/dy of the quotient; at y = 1 the symmetric L'Hopital form is used."""
    top, bot = _quotient_pair(kind)
    if abs(y - 1.0) <= 1e-9:
        n2, n3 = xyab(top, 1.0, 2, trunc), xyab(top, 1.0, 3, trunc)
        d2, d3 = xyab(bot, 1.0, 2, trunc), xyab(bot, 1.0, 3, trunc)
        return (n3 * d2 - n2 * d3) / (2 * d2 * d2)
    n1, n2 = xyab(top, y, 1, trunc), xyab(top, y, 2, trunc)
    d1, d2 = xyab(bot, y, 1, trunc), xyab(bot, y, 2, trunc)
    return (n2 * d1 - n1 * d2) / (d1 * d1)


@dataclass(frozen=True)
class SignReport:
    """Sign pattern of a sampled function: grid, values, and sign counts."""

    ys: Tuple[float, ...]
    values: Tuple[float, ...]
    positive: int
    negative: int
    zero: int

    @property
    def all_positive(self) -> bool:
        return self.negative == 0 and self.zero == 0

    @property
    def all_negative(self) -> bool:
        return self.positive == 0 and self.zero == 0


def quotient_scan(
    kind: str,
    y_lo: float,
    y_hi: float,
    n: int,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
    zero_tol: float = 1e-11,
) -> SignReport:
    """Sample the quotient's derivative on a grid and report its signs.

    The quotient has a removable critical point at y = 1; a grid point
    landing there (or within 1e-9) is evaluated by the L'Hopital formula.
    Expected pattern: negative on (0, 1), positive on (1, infinity).
    """
    if not (0 < y_lo < y_hi):
        raise DomainError(f"need 0 < y_lo < y_hi, got ({y_lo}, {y_hi})")
    if n < 2:
        raise DomainError(f"need at least two grid points, got n = {n}")
    ys = [y_lo + (y_hi - y_lo) * i / (n - 1) for i in range(n)]
    values = [quotient_derivative(kind, y, trunc) for y in ys]
    pos = sum(1 for v in values if v > zero_tol)
    neg = sum(1 for v in values if v < -zero_tol)
    return SignReport(
        ys=tuple(ys),
        values=tuple(values),
        positive=pos,
        negative=neg,
        zero=n - pos - neg,
    )
