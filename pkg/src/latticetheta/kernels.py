"""One- and two-dimensional theta kernels with certified truncation.

This module is the numerical foundation of the package.  It evaluates

* the Jacobi theta functions ``theta_2``, ``theta_3``, ``theta_4`` of a
  positive real argument, together with their term-wise derivatives up to
  fourth order,
* the classical one-dimensional theta function ``theta1d(X; Y)`` in both its
  direct Fourier form and its Poisson-summed form,
* the lattice theta function ``theta2d(s; z)`` for a modulus ``z`` in the
  upper half-plane, via a row decomposition into one-dimensional thetas, and
* its midpoint-shifted companion ``theta2d_shifted(s; z)``.

Every series is truncated only once a geometric-majorant bound certifies the
discarded tail below the requested tolerance; ``tail_bound`` exposes the
bounds themselves so callers (and tests) can audit them.

All functions are pure.  The ``ctx`` parameter selects the arithmetic
backend: the default is the ``math`` module (binary64); passing ``mpmath.mp``
switches the same code path to software floats for high-precision work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

__all__ = [
    "DomainError",
    "TruncationError",
    "HalfPlanePoint",
    "SeriesTruncation",
    "DEFAULT_TRUNCATION",
    "THETA_KINDS",
    "jacobi_theta",
    "theta1d",
    "theta2d",
    "theta2d_shifted",
    "tail_bound",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class TruncationError(ArithmeticError):
    """The tail tolerance could not be certified within ``max_index`` terms.

    The bound that *was* achieved is stored in :attr:`achieved_bound`.
    """

    def __init__(self, message: str, achieved_bound: float):
        super().__init__(message)
        self.achieved_bound = achieved_bound


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point ``z = x + iy`` of the open upper half-plane.

    Parameters
    ----------
    x : float
        Horizontal coordinate of the modulus.
    y : float
        Vertical coordinate; must be strictly positive and finite.
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"half-plane point must be finite, got ({self.x}, {self.y})")
        if not self.y > 0:
            raise DomainError(f"half-plane point needs y > 0, got y = {self.y}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "HalfPlanePoint":
        return HalfPlanePoint(z.real, z.imag)

    def __abs__(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class SeriesTruncation:
    """Truncation policy: cut a series once the certified tail is small.

    Attributes
    ----------
    max_index : int
        Largest summation index that may be used.
    tail_tol : float
        Absolute bound the certified tail must reach before truncation.
    """

    max_index: int = 64
    tail_tol: float = 1e-13

    def __post_init__(self) -> None:
        if self.max_index < 1:
            raise DomainError("max_index must be a positive integer")
        if not self.tail_tol > 0:
            raise DomainError("tail_tol must be positive")


DEFAULT_TRUNCATION = SeriesTruncation()

THETA_KINDS = ("two", "three", "four")

#: exponents a_n of e^{-pi a_n y}, as functions of the 1-based term index
def _index_weight(kind: str, n: int) -> float:
    if kind == "two":
        return (n - 0.5) * (n - 0.5)
    return float(n * n)


def _term_sign(kind: str, n: int) -> int:
    if kind == "four" and n % 2 == 1:
        return -1
    return 1


def _jacobi_tail(kind: str, N: int, y: float, order: int) -> float:
    """Certified bound on the tail of the Jacobi series after index ``N``.

    The terms t_n = 2 (pi a_n)^order e^{-pi a_n y} are eventually dominated
    by a geometric sequence: for n >= N+1 the ratio t_{n+1}/t_n is at most
    r* = (a_{N+2}/a_{N+1})^order * e^{-pi (a_{N+2}-a_{N+1}) y}, so the tail
    is at most t_{N+1} / (1 - r*) whenever r* < 1 (otherwise +inf).
    """
    a1 = _index_weight(kind, N + 1)
    a2 = _index_weight(kind, N + 2)
    t_next = 2.0 * (math.pi * a1) ** order * math.exp(-math.pi * a1 * y)
    ratio = (a2 / a1) ** order * math.exp(-math.pi * (a2 - a1) * y)
    if ratio >= 1.0:
        return math.inf
    return t_next / (1.0 - ratio)


def jacobi_theta(
    kind: str,
    y: float,
    order: int = 0,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
    ctx: Any = math,
) -> float:
    """Evaluate a Jacobi theta function or a term-wise ``y``-derivative.

    Parameters
    ----------
    kind : {"two", "three", "four"}
        Which of the three classical series to evaluate::

            theta_2(y) = 2 sum_{n>=1} e^{-pi (n-1/2)^2 y}
            theta_3(y) = 1 + 2 sum_{n>=1} e^{-pi n^2 y}
            theta_4(y) = 1 + 2 sum_{n>=1} (-1)^n e^{-pi n^2 y}

    y : float
        Positive argument.
    order : int
        Derivative order in ``y``, between 0 and 4; differentiation is
        term-wise (each term picks up a factor ``(-pi a_n)^order``).
    trunc : SeriesTruncation
        Truncation policy.
    ctx : module
        Arithmetic backend (``math`` or ``mpmath.mp``).

    Returns
    -------
    float
        The truncated sum, with certified tail at most ``trunc.tail_tol``.

    Raises
    ------
    DomainError
        If ``y <= 0``, the kind is unknown, or the order is out of range.
    TruncationError
        If the tail bound cannot be certified within ``trunc.max_index``.
    """
    if kind not in THETA_KINDS:
        raise DomainError(f"unknown theta kind {kind!r}; expected one of {THETA_KINDS}")
    if not y > 0:
        raise DomainError(f"jacobi_theta needs y > 0, got {y}")
    if order not in (0, 1, 2, 3, 4):
        raise DomainError(f"derivative order must be 0..4, got {order}")

    pi = ctx.pi
    total = ctx.exp(pi * 0) * 0  # zero in the backend's type
    if order == 0 and kind in ("three", "four"):
        total = total + 1

    yf = float(y)
    for n in range(1, trunc.max_index + 1):
        a = _index_weight(kind, n)
        term = 2 * _term_sign(kind, n) * (-pi * a) ** order * ctx.exp(-pi * a * y)
        total = total + term
        bound = _jacobi_tail(kind, n, yf, order)
        if bound <= trunc.tail_tol:
            return total
    raise TruncationError(
        f"jacobi_theta({kind}, y={y}, order={order}): tail bound "
        f"{bound:.3e} > tol {trunc.tail_tol:.3e} at max_index={trunc.max_index}",
        achieved_bound=bound,
    )


def _theta1d_direct(X: float, Y: float, dY_order: int, trunc: SeriesTruncation, ctx: Any) -> float:
    """Direct Fourier form, efficient for X >= 1."""
    pi = ctx.pi
    total = ctx.exp(pi * 0) * 0
    if dY_order == 0:
        total = total + 1
    for n in range(1, trunc.max_index + 1):
        w = ctx.exp(-pi * n * n * X)
        if dY_order == 0:
            term = 2 * w * ctx.cos(2 * pi * n * Y)
        else:
            term = -4 * pi * n * w * ctx.sin(2 * pi * n * Y)
        total = total + term
        # same geometric majorant as the Jacobi series, order -> dY_order
        t_next = 2.0 * (2.0 * math.pi * (n + 1)) ** dY_order * math.exp(
            -math.pi * (n + 1) ** 2 * float(X)
        )
        ratio = ((n + 2) / (n + 1)) ** dY_order * math.exp(-math.pi * (2 * n + 3) * float(X))
        if ratio < 1.0 and t_next / (1.0 - ratio) <= trunc.tail_tol:
            return total
    raise TruncationError(
        f"theta1d(X={X}, Y={Y}): direct series did not certify tol within "
        f"max_index={trunc.max_index}",
        achieved_bound=t_next / max(1.0 - ratio, 1e-300),
    )


def _theta1d_poisson(X: float, Y: float, dY_order: int, trunc: SeriesTruncation, ctx: Any) -> float:
    """Poisson-summed Gaussian form, efficient for X < 1."""
    pi = ctx.pi
    Yr = Y - math.floor(float(Y))  # reduce by periodicity to [0, 1)
    invX = 1 / X

    total = ctx.exp(pi * 0) * 0
    Xf = float(X)
    n = 0
    while True:
        block = 0
        for k in (n, -n) if n else (0,):
            d = k - Yr
            g = ctx.exp(-pi * d * d * invX)
            if dY_order == 0:
                block = block + g
            else:
                block = block + 2 * pi * d * invX * g
        total = total + block
        # Next terms are k = n+1 (distance >= n) and k = -(n+1) (distance
        # <= n+2); the Gaussians then shrink by at least e^{-pi(2n-1)/X} per
        # step while the derivative factor grows by <= (n+3)/(n+2).  The
        # shrink exponent is only negative for n >= 1 (at n = 0 it would
        # overflow for tiny X), so certification starts at n = 1.
        if n >= 1:
            t_next = 2.0 * math.exp(-math.pi * n * n / Xf) * (
                (2.0 * math.pi * (n + 2.0) / Xf) ** dY_order
            )
            ratio = ((n + 3.0) / (n + 2.0)) ** dY_order * math.exp(
                -math.pi * (2.0 * n - 1.0) / Xf
            )
            # the prefactor X^{-1/2} > 1 scales the realized tail as well
            if ratio < 1.0 and t_next / (1.0 - ratio) <= trunc.tail_tol * math.sqrt(Xf):
                break
        n += 1
        if n > trunc.max_index:
            raise TruncationError(
                f"theta1d(X={X}, Y={Y}): Poisson form did not certify tol within "
                f"max_index={trunc.max_index}",
                achieved_bound=t_next / math.sqrt(Xf),
            )
    scale = 1 / ctx.sqrt(X)
    return scale * total


def theta1d(
    X: float,
    Y: float,
    dY_order: int = 0,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
    ctx: Any = math,
) -> float:
    """The one-dimensional theta function ``sum_n e^{-pi n^2 X} e^{2 pi i n Y}``.

    The sum is real:  ``theta1d(X; Y) = 1 + 2 sum_{n>=1} e^{-pi n^2 X}
    cos(2 pi n Y)``.  For ``X >= 1`` the direct series is used; for ``X < 1``
    the Poisson-summed form ``X^{-1/2} sum_n e^{-pi (n-Y)^2 / X}``, so the
    effective decay rate is always ``max(X, 1/X)``.

    ``dY_order`` (0 or 1) selects the value or the partial derivative in
    ``Y``.
    """
    if not X > 0:
        raise DomainError(f"theta1d needs X > 0, got {X}")
    if dY_order not in (0, 1):
        raise DomainError(f"dY_order must be 0 or 1, got {dY_order}")
    if X >= 1:
        return _theta1d_direct(X, Y, dY_order, trunc, ctx)
    return _theta1d_poisson(X, Y, dY_order, trunc, ctx)


def theta2d(
    s: float,
    z: HalfPlanePoint,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
    ctx: Any = math,
) -> float:
    """Lattice theta function ``theta(s; z)`` on the unit-covolume lattice.

    Evaluates ``sum_{(m,n) in Z^2} e^{-s pi |m z + n|^2 / y}`` through the
    row decomposition

        theta(s; z) = sqrt(y/s) * sum_m e^{-s pi y m^2} theta1d(y/s; m x),

    so each row reuses the one-dimensional kernel at ``X = y/s``.
    """
    if not s > 0:
        raise DomainError(f"theta2d needs s > 0, got {s}")
    x, y = z.x, z.y
    X = y / s
    pi = ctx.pi

    total = theta1d(X, 0.0, 0, trunc, ctx)
    Xf = float(X)
    # theta1d(X; Y) <= theta1d(X; 0) <= 1 + 3 e^{-pi min(X,1/X)} < 4 for X bounded
    # away from 0; we use the crude row majorant 4 e^{-s pi y m^2}.
    row_cap = 4.0 * max(1.0, Xf ** -0.5)
    scale = math.sqrt(Xf)  # the sqrt(y/s) prefactor scales the realized tail
    for m in range(1, trunc.max_index + 1):
        total = total + 2 * ctx.exp(-s * pi * y * m * m) * theta1d(X, m * x, 0, trunc, ctx)
        t_next = 2.0 * row_cap * math.exp(-float(s) * math.pi * float(y) * (m + 1) ** 2)
        ratio = math.exp(-float(s) * math.pi * float(y) * (2 * m + 3))
        if scale * t_next / (1.0 - ratio) <= trunc.tail_tol:
            return ctx.sqrt(y / s) * total
    raise TruncationError(
        f"theta2d(s={s}, z=({x}, {y})): row sum did not certify tol within "
        f"max_index={trunc.max_index}",
        achieved_bound=t_next,
    )


def theta2d_shifted(
    s: float,
    z: HalfPlanePoint,
    trunc: SeriesTruncation = DEFAULT_TRUNCATION,
    ctx: Any = math,
) -> float:
    """``theta(s; (z+1)/2)`` — the midpoint-shifted lattice theta.

    ``(z+1)/2`` stays in the upper half-plane (its height is ``y/2``), so the
    plain engine applies after the substitution; no bespoke half-integer sum
    is needed.
    """
    return theta2d(s, HalfPlanePoint((z.x + 1.0) / 2.0, z.y / 2.0), trunc, ctx)


def tail_bound(kind: str, N: int, **params: float) -> float:
    """Certified tail bounds for the package's series, by family.

    Parameters
    ----------
    kind : {"jacobi", "theta1d", "theta2d_rows"}
        * ``jacobi`` — tail of a Jacobi series after index ``N``; parameters
          ``y`` (> 0), optional ``order`` (default 0) and ``theta_kind``
          (default "three").
        * ``theta1d`` — tail of the direct Fourier series after index ``N``;
          parameters ``X`` (> 0), optional ``dY_order``.
        * ``theta2d_rows`` — tail of the row decomposition after row ``N``;
          parameters ``s``, ``y``.
    N : int
        Last retained index; must be >= 1.

    Returns
    -------
    float
        An upper bound on the discarded tail, monotone non-increasing in
        ``N`` (possibly ``inf`` when the geometric majorant has not kicked
        in yet).
    """
    if N < 1:
        raise DomainError("tail bounds need N >= 1")
    if kind == "jacobi":
        y = params["y"]
        if not y > 0:
            raise DomainError("jacobi tail bound needs y > 0")
        return _jacobi_tail(params.get("theta_kind", "three"), N, y, int(params.get("order", 0)))
    if kind == "theta1d":
        X = params["X"]
        if not X > 0:
            raise DomainError("theta1d tail bound needs X > 0")
        d = int(params.get("dY_order", 0))
        t_next = 2.0 * (2.0 * math.pi * (N + 1)) ** d * math.exp(-math.pi * (N + 1) ** 2 * X)
        ratio = ((N + 2) / (N + 1)) ** d * math.exp(-math.pi * (2 * N + 3) * X)
        return math.inf if ratio >= 1.0 else t_next / (1.0 - ratio)
    if kind == "theta2d_rows":
        s, y = params["s"], params["y"]
        if not (s > 0 and y > 0):
            raise DomainError("theta2d row bound needs s > 0 and y > 0")
        X = y / s
        row_cap = 4.0 * max(1.0, X ** -0.5)
        t_next = 2.0 * row_cap * math.exp(-s * math.pi * y * (N + 1) ** 2)
        ratio = math.exp(-s * math.pi * y * (2 * N + 3))
        return math.inf if ratio >= 1.0 else math.sqrt(X) * t_next / (1.0 - ratio)
    raise DomainError(f"unknown tail bound kind {kind!r}")
