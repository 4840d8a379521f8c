"""Chebyshev polynomials of both kinds, with independent cross-checks.

Both kinds satisfy u_{n+1} = 2X*u_n - u_{n-1}; only the seeds differ.
The same polynomials also arise from powers of X + Y in the extension
ring where Y^2 = X^2 - 1, which gives a second, algorithmically
unrelated way to compute them.
"""

from __future__ import annotations

from .poly import Poly

_X = Poly((0, 1))
_TWO_X = Poly((0, 2))
_XX_MINUS_1 = Poly((-1, 0, 1))

# Memoized prefix of each family.  Appending is idempotent: concurrent
# callers may recompute an entry but never observe a wrong one.
_T: list[Poly] = [Poly((1,)), _X]
_U: list[Poly] = [Poly((1,)), _TWO_X]


def _prefix(cache: list[Poly], d: int) -> Poly:
    if d < 0:
        raise ValueError("degree must be non-negative")
    while len(cache) <= d:
        cache.append(_TWO_X * cache[-1] - cache[-2])
    return cache[d]


def cheb_t(d: int) -> Poly:
    """First-kind polynomial of degree d (seeds 1, X)."""
    return _prefix(_T, d)


def cheb_u(d: int) -> Poly:
    """Second-kind polynomial of degree d (seeds 1, 2X)."""
    return _prefix(_U, d)


def power_pair(d: int) -> tuple[Poly, Poly]:
    """Expand (X + Y)^d with Y^2 = X^2 - 1 into components (A, B).

    Uses binary exponentiation in the ring of pairs with
    (A1, B1)*(A2, B2) = (A1*A2 + B1*B2*(X^2-1), A1*B2 + A2*B1), so it
    shares no code with the recurrence and serves as an oracle for it:
    the result must equal (cheb_t(d), cheb_u(d-1)).
    """
    if d < 1:
        raise ValueError("the ring-power expansion needs d >= 1")
    result = (Poly((1,)), Poly())
    base = (_X, Poly((1,)))
    n = d
    while n:
        if n & 1:
            result = _pair_mul(result, base)
        n >>= 1
        if n:
            base = _pair_mul(base, base)
    return result


def _pair_mul(x: tuple[Poly, Poly], y: tuple[Poly, Poly]) -> tuple[Poly, Poly]:
    a1, b1 = x
    a2, b2 = y
    return (a1 * a2 + b1 * b2 * _XX_MINUS_1, a1 * b2 + a2 * b1)


def pell_identity_holds(d: int) -> bool:
    """Check T_d^2 - (X^2-1)*U_{d-1}^2 = 1 as an exact identity."""
    if d < 1:
        raise ValueError("d must be positive")
    t = cheb_t(d)
    u = cheb_u(d - 1)
    return t * t - _XX_MINUS_1 * u * u == 1


def doubling_identity_holds(d: int) -> bool:
    """Check T_{2d} = 2*T_d^2 - 1 as an exact identity."""
    if d < 1:
        raise ValueError("d must be positive")
    t = cheb_t(d)
    return cheb_t(2 * d) == 2 * t * t - 1
