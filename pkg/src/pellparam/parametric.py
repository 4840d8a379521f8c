"""Parametric solutions of P^2 - D*Q^2 = 1 with deg(D) = 2.

A parametric solution pins an integer Pell solution (a, b) for n at
X = 0: P(0) = a, Q(0) = b, D(0) = n.  Constructors produce the explicit
degree-1 and degree-2 families, and the general construction realizes
any degree dividing twice the unit-group index by taking exact roots of
a + b*sqrt(n) in the norm-1 unit group.  ``decompose`` goes the other
way, recovering the Chebyshev shape P = sign * T_d(lam*X + nu).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import cheb_t, cheb_u
from .poly import Poly
from .quadfield import (
    PellSolution,
    squarefree_decompose,
    unit_group_index,
)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the six independent checks on a candidate triple."""

    identity_ok: bool
    quadratic_ok: bool
    p_value_ok: bool
    q_value_ok: bool
    d_value_ok: bool
    integral_ok: bool

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks())

    def checks(self) -> list[tuple[str, bool]]:
        return [
            ("identity", self.identity_ok),
            ("deg_D", self.quadratic_ok),
            ("P_at_0", self.p_value_ok),
            ("Q_at_0", self.q_value_ok),
            ("D_at_0", self.d_value_ok),
            ("integral", self.integral_ok),
        ]


def verify(P: Poly, Q: Poly, D: Poly, sol: PellSolution) -> VerificationReport:
    """Check a candidate triple against its target solution.

    Failures are reported, never raised, so broken inputs can be
    diagnosed check by check.
    """
    return VerificationReport(
        identity_ok=(P * P - D * Q * Q == 1),
        quadratic_ok=(D.degree == 2),
        p_value_ok=(P(0) == sol.a),
        q_value_ok=(Q(0) == sol.b),
        d_value_ok=(D(0) == sol.n),
        integral_ok=(P.is_integral and Q.is_integral and D.is_integral),
    )


@dataclass(frozen=True)
class ParametricSolution:
    """A verified triple (P, Q, D) specializing to ``base`` at X = 0."""

    P: Poly
    Q: Poly
    D: Poly
    base: PellSolution
    degree: int

    def __post_init__(self):
        if self.P * self.P - self.D * self.Q * self.Q != 1:
            raise ValueError("P^2 - D*Q^2 = 1 fails")
        if self.D.degree != 2:
            raise ValueError(f"deg(D) = {self.D.degree}, expected 2")
        if self.P.degree != self.degree or self.Q.degree != self.degree - 1:
            raise ValueError(
                f"degrees ({self.P.degree}, {self.Q.degree}) do not match "
                f"a degree-{self.degree} solution"
            )
        if (
            self.P(0) != self.base.a
            or self.Q(0) != self.base.b
            or self.D(0) != self.base.n
        ):
            raise ValueError("triple does not specialize to the base solution at 0")


@dataclass(frozen=True)
class Infeasible:
    """No integral parametric solution of the requested degree exists."""

    degree: int
    feasible: tuple[int, ...]


def degree1_family(sol: PellSolution, m: int) -> ParametricSolution:
    """The degree-1 family: P = b^2*X + a, Q = b, D = b^2*X^2 + 2a*X + n,
    contracted by c (1 for odd b, 2 for even b) and stretched by m."""
    if m == 0:
        raise ValueError("m must be nonzero")
    a, b, n = sol.a, sol.b, sol.n
    c = 1 if b % 2 else 2
    r = Fraction(m, c)
    ps = ParametricSolution(
        Poly((a, b * b)).scale_arg(r),
        Poly((b,)),
        Poly((n, 2 * a, b * b)).scale_arg(r),
        sol,
        1,
    )
    if not (ps.P.is_integral and ps.D.is_integral):
        raise RuntimeError(f"degree-1 family lost integrality for {sol}, m={m}")
    return ps


def degree2_gcd(sol: PellSolution, eps: int) -> int:
    """The denominator gcd(b^3, (a+eps)*b, 2*(a+eps)^2) of the degree-2 family."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    a, b = sol.a, sol.b
    return math.gcd(b**3, (a + eps) * b, 2 * (a + eps) ** 2)


def _degree2_with_eps(sol: PellSolution, m: int, eps: int) -> ParametricSolution:
    a, b, n = sol.a, sol.b, sol.n
    w = a + eps
    r = Fraction(m, degree2_gcd(sol, eps))
    ps = ParametricSolution(
        Poly((a, 2 * b * b * w, b**4 * w)).scale_arg(r),
        Poly((b, b**3)).scale_arg(r),
        Poly((n, 2 * w * w, w * w * b * b)).scale_arg(r),
        sol,
        2,
    )
    if not (ps.P.is_integral and ps.Q.is_integral and ps.D.is_integral):
        raise RuntimeError(f"degree-2 family lost integrality for {sol}, m={m}, eps={eps}")
    return ps


def _max_abs_coeff(ps: ParametricSolution) -> Fraction:
    return max(abs(c) for poly in (ps.P, ps.Q, ps.D) for c in poly.coeffs)


def degree2_family(
    sol: PellSolution, m: int, eps: int | None = None
) -> ParametricSolution:
    """The degree-2 family for a chosen sign eps, stretched by m.

    Without an explicit eps, both signs are built and the triple whose
    largest absolute coefficient is smallest wins; ties go to eps = +1.
    """
    if m == 0:
        raise ValueError("m must be nonzero")
    if eps is not None:
        return _degree2_with_eps(sol, m, eps)
    plus = _degree2_with_eps(sol, m, 1)
    minus = _degree2_with_eps(sol, m, -1)
    return minus if _max_abs_coeff(minus) < _max_abs_coeff(plus) else plus


def clear_denominators(
    P: Poly, Q: Poly, D: Poly, sol: PellSolution
) -> ParametricSolution:
    """Substitute m*X for X, m the lcm of all coefficient denominators.

    The constant terms must already be integers (they are untouched by
    the substitution) and the triple must already satisfy the Pell
    identity; only the denominators change.
    """
    if P * P - D * Q * Q != 1:
        raise ValueError("P^2 - D*Q^2 = 1 fails; nothing to clear")
    m = math.lcm(P.denominator_lcm(), Q.denominator_lcm(), D.denominator_lcm())
    return ParametricSolution(
        P.scale_arg(m), Q.scale_arg(m), D.scale_arg(m), sol, P.degree
    )


def _pair_pow(p1: Poly, q1: Poly, d_poly: Poly, k: int) -> tuple[Poly, Poly]:
    """(p1 + q1*sqrt(D))^k in the ring of pairs modulo sqrt(D)^2 = D."""
    result = (Poly((1,)), Poly())
    base = (p1, q1)
    while k:
        if k & 1:
            result = (
                result[0] * base[0] + result[1] * base[1] * d_poly,
                result[0] * base[1] + result[1] * base[0],
            )
        k >>= 1
        if k:
            base = (
                base[0] * base[0] + base[1] * base[1] * d_poly,
                2 * base[0] * base[1],
            )
    return result


def general_family(sol: PellSolution, d: int) -> ParametricSolution | Infeasible:
    """Construct a degree-d parametric solution, or report infeasibility.

    Degree d is realizable exactly when d divides twice the unit-group
    index.  Odd d: take the d-th root u + v*sqrt(n) of a + b*sqrt(n) and
    compose Chebyshev polynomials with X + u.  Even d = 2k: take the
    k-th root, form its degree-2 family (valid for rational solutions),
    and raise P1 + Q1*sqrt(D) to the k-th power.  Either way the
    denominators are cleared at the end.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    report = unit_group_index(sol)
    if d not in report.feasible:
        return Infeasible(d, report.feasible)
    r, _ = squarefree_decompose(sol.n)
    steps = report.index // d if d % 2 else report.index // (d // 2)
    root = report.generator**steps
    u = Fraction(root.p, 2)
    v = Fraction(root.q, 2 * r)
    if d % 2:
        arg = Poly((u, 1))
        P = cheb_t(d)(arg)
        Q = v * cheb_u(d - 1)(arg)
        D = Poly((sol.n, 2 * u / v**2, 1 / v**2))
    else:
        w = u + 1
        P1 = Poly((u, 2 * v**2 * w, v**4 * w))
        Q1 = Poly((v, v**3))
        D = Poly((sol.n, 2 * w * w, w * w * v * v))
        if P1 * P1 - D * Q1 * Q1 != 1:
            raise RuntimeError(f"rational degree-2 seed failed its identity for {sol}")
        P, Q = _pair_pow(P1, Q1, D, d // 2)
    return clear_denominators(P, Q, D, sol)


# -- Chebyshev-shape recovery -------------------------------------------------


@dataclass(frozen=True)
class ChebyshevDecomposition:
    """Rational parameters with P = sign*T_d(lam*X+nu), Q = mu*U_{d-1}(lam*X+nu),
    D = ((lam*X+nu)^2 - 1)/mu^2."""

    degree: int
    sign: int
    lam: Fraction
    mu: Fraction
    nu: Fraction

    def __post_init__(self):
        if self.lam == 0 or self.mu == 0:
            raise ValueError("lam and mu must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def reconstruct(self) -> tuple[Poly, Poly, Poly]:
        arg = Poly((self.nu, self.lam))
        return (
            self.sign * cheb_t(self.degree)(arg),
            self.mu * cheb_u(self.degree - 1)(arg),
            (arg * arg - 1) * (1 / self.mu**2),
        )


@dataclass(frozen=True)
class IrrationalDecomposition:
    """Chebyshev shape whose individual parameters are irrational.

    Only the ratios lam/mu and nu/mu and the square mu^2 are rational
    (the ratio fields absorb the sign of P's leading coefficient); the
    products lam^2, lam*nu, nu^2, mu*lam, mu*nu needed to rebuild the
    triple are all derived from them.  Happens only for even degree.
    """

    degree: int
    sign: int
    lam_over_mu: Fraction
    nu_over_mu: Fraction
    mu_sq: Fraction

    def reconstruct(self) -> tuple[Poly, Poly, Poly]:
        lam_sq = self.lam_over_mu**2 * self.mu_sq
        lam_nu = self.lam_over_mu * self.nu_over_mu * self.mu_sq
        nu_sq = self.nu_over_mu**2 * self.mu_sq
        squared_arg = Poly((nu_sq, 2 * lam_nu, lam_sq))
        even = _even_coefficients(cheb_t(self.degree))
        reduced = _odd_coefficients(cheb_u(self.degree - 1))
        linear = Poly(
            (
                self.sign * self.nu_over_mu * self.mu_sq,
                self.sign * self.lam_over_mu * self.mu_sq,
            )
        )
        return (
            self.sign * even(squared_arg),
            linear * reduced(squared_arg),
            (squared_arg - 1) * (1 / self.mu_sq),
        )


def _even_coefficients(p: Poly) -> Poly:
    """For an even polynomial p, the E with p(y) = E(y^2)."""
    if any(c != 0 for c in p.coeffs[1::2]):
        raise ValueError(f"{p} is not an even polynomial")
    return Poly(p.coeffs[0::2])


def _odd_coefficients(p: Poly) -> Poly:
    """For an odd polynomial p, the F with p(y) = y * F(y^2)."""
    if any(c != 0 for c in p.coeffs[0::2]):
        raise ValueError(f"{p} is not an odd polynomial")
    return Poly(p.coeffs[1::2])


def _rational_sqrt(f: Fraction) -> Fraction | None:
    if f <= 0:
        return None
    num, den = math.isqrt(f.numerator), math.isqrt(f.denominator)
    if num * num == f.numerator and den * den == f.denominator:
        return Fraction(num, den)
    return None


def decompose(
    P: Poly, Q: Poly, D: Poly
) -> ChebyshevDecomposition | IrrationalDecomposition:
    """Recover the Chebyshev shape of a valid triple with deg(D) = 2.

    The ratio of leading coefficients of P and Q gives lam/mu up to the
    sign; the linear coefficient of D then gives nu/mu, and its constant
    term gives mu^2.  If mu^2 is the square of a rational, the full
    rational parameter set is returned and reproduces the triple
    exactly; otherwise the exact ratio data is returned instead.
    """
    if D.degree != 2:
        raise ValueError(f"deg(D) = {D.degree}, expected 2")
    if P * P - D * Q * Q != 1:
        raise ValueError("P^2 - D*Q^2 = 1 fails; not a Pell triple")
    d = P.degree
    if d is None or d < 1:
        raise ValueError("P must be nonconstant")
    if Q.degree != d - 1:
        raise RuntimeError(f"deg(Q) = {Q.degree} with deg(P) = {d} cannot happen")
    d2, d1, d0 = D.coefficient(2), D.coefficient(1), D.coefficient(0)
    ratio_lam = P.leading / Q.leading
    if ratio_lam * ratio_lam != d2:
        raise RuntimeError("leading coefficients contradict deg(D)'s leading term")
    ratio_nu = d1 / (2 * d2) * ratio_lam
    inv_mu_sq = ratio_nu * ratio_nu - d0
    if inv_mu_sq == 0:
        raise RuntimeError("mu cannot be infinite for a Pell triple")
    mu_sq = 1 / inv_mu_sq
    mu0 = _rational_sqrt(mu_sq)
    if mu0 is not None:
        signs = (1,) if d % 2 else (1, -1)
        for sign in signs:
            for lam in (ratio_lam * mu0, -ratio_lam * mu0):
                nu = d1 / (2 * d2) * lam
                for mu in (mu0, -mu0):
                    cand = ChebyshevDecomposition(d, sign, lam, mu, nu)
                    if cand.reconstruct() == (P, Q, D):
                        return cand
        raise RuntimeError("rational mu found but no parameter choice matches")
    if d % 2:
        raise RuntimeError("odd degree forces rational parameters")
    for sign in (1, -1):
        cand = IrrationalDecomposition(d, sign, ratio_lam, ratio_nu, mu_sq)
        if cand.reconstruct() == (P, Q, D):
            return cand
    raise RuntimeError("no Chebyshev shape matches; the triple should not verify")
