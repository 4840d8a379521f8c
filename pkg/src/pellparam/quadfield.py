"""Integer Pell equations and norm-1 units of real quadratic fields.

Solutions of a^2 - n*b^2 = 1 embed into the group U of norm-1 units of
the ring of integers of Q(sqrt(s)), where s is the square-free part of
n.  Everything here is exact big-integer arithmetic: units are stored
as (p + q*sqrt(s))/2 with p^2 - s*q^2 = 4, which covers the half-integer
units that exist when s = 1 mod 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _icbrt(n: int) -> int:
    """Floor of the cube root, by Newton iteration on integers."""
    if n < 0:
        raise ValueError("negative argument")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = r^2 * s with s square-free and r maximal; returns (r, s)."""
    if n < 1:
        raise ValueError("n must be positive")
    r, s, m = 1, 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            r *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    s *= m
    return r, s


def is_squarefree(n: int) -> bool:
    return squarefree_decompose(n)[0] == 1


def cf_sqrt(n: int) -> tuple[int, list[int]]:
    """Continued fraction of sqrt(n) as (a0, minimal period)."""
    if n < 1:
        raise ValueError("n must be positive")
    a0 = math.isqrt(n)
    if a0 * a0 == n:
        raise ValueError(f"{n} is a perfect square")
    period = []
    m, d, a = 0, 1, a0
    while a != 2 * a0:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def _minimal_unit(n: int) -> tuple[int, int, int]:
    """Minimal (x, y, norm) with x^2 - n*y^2 = norm in {1, -1}, x, y >= 1.

    Walks the continued-fraction convergents of sqrt(n); the first
    convergent of norm +-1 is the fundamental unit of Z[sqrt(n)].
    """
    a0, period = cf_sqrt(n)
    h_prev, k_prev = 1, 0
    h, k = a0, 1
    terms = [a0] + period * 2
    for a in terms[1:]:
        norm = h * h - n * k * k
        if norm in (1, -1):
            return h, k, norm
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    norm = h * h - n * k * k
    if norm in (1, -1):
        return h, k, norm
    raise RuntimeError(f"continued fraction of sqrt({n}) produced no unit")


@dataclass(frozen=True)
class PellSolution:
    """A solution (a, b) of a^2 - n*b^2 = 1 with a, b >= 1."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if is_square(self.n):
            raise ValueError(f"{self.n} is a perfect square")
        if self.b < 1:
            raise ValueError("trivial solutions with b = 0 are excluded")
        if self.a < 1:
            raise ValueError("a must be positive")
        if self.a * self.a - self.n * self.b * self.b != 1:
            raise ValueError(
                f"({self.a}, {self.b}) does not solve x^2 - {self.n}*y^2 = 1"
            )


def fundamental_solution(n: int) -> PellSolution:
    """Minimal positive solution of x^2 - n*y^2 = 1, from convergents.

    When the period-end convergent has norm -1 the fundamental solution
    is its square, which the doubled period walk reaches directly.
    """
    x, y, norm = _minimal_unit(n)
    if norm == -1:
        x, y = x * x + n * y * y, 2 * x * y
    return PellSolution(n, x, y)


@dataclass(frozen=True)
class HalfUnit:
    """A unit (p + q*sqrt(s))/2 of norm 1, i.e. p^2 - s*q^2 = 4.

    p and q share parity, so the element lies in the ring of integers of
    Q(sqrt(s)) (half-integer coordinates occur only for s = 1 mod 4).
    """

    s: int
    p: int
    q: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("radicand must be positive")
        if (self.p - self.q) % 2 != 0:
            raise ValueError(f"({self.p}, {self.q}) mixes parities")
        if self.p * self.p - self.s * self.q * self.q != 4:
            raise ValueError(
                f"({self.p} + {self.q}*sqrt({self.s}))/2 does not have norm 1"
            )

    @property
    def is_integral(self) -> bool:
        """True iff the unit lies in Z[sqrt(s)] (both coordinates even)."""
        return self.p % 2 == 0 and self.q % 2 == 0

    def __mul__(self, other: "HalfUnit") -> "HalfUnit":
        if not isinstance(other, HalfUnit):
            return NotImplemented
        if self.s != other.s:
            raise ValueError(f"radicand mismatch: {self.s} != {other.s}")
        p = (self.p * other.p + self.s * self.q * other.q) // 2
        q = (self.p * other.q + other.p * self.q) // 2
        return HalfUnit(self.s, p, q)

    def __pow__(self, k: int) -> "HalfUnit":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = HalfUnit(self.s, 2, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


def _half_cube_root(s: int, p_target: int, q_target: int, delta: int):
    """Find an odd (p, q) with ((p+q*sqrt(s))/2)^3 = (p_target+q_target*sqrt(s))/2.

    The cube of a norm-(4*delta) element satisfies p_target = p^3 - 3*delta*p
    and q_target = (p^2 - delta)*q, so p is the root of a monotone cubic and
    q follows by exact division.  Returns None when no such element exists
    in the ring of integers.
    """
    f = lambda p: p * p * p - 3 * delta * p
    lo, hi = 1, _icbrt(p_target) + 3
    while lo < hi:
        mid = (lo + hi) // 2
        if f(mid) < p_target:
            lo = mid + 1
        else:
            hi = mid
    p = lo
    if f(p) != p_target:
        return None
    denom = p * p - delta
    if denom <= 0 or q_target % denom != 0:
        return None
    q = q_target // denom
    if p * p - s * q * q != 4 * delta:
        return None
    if p % 2 == 0 or q % 2 == 0:
        # An even cube root would be a unit of Z[sqrt(s)] below the
        # fundamental one, which cannot exist.
        raise RuntimeError(f"even cube root ({p}, {q}) contradicts fundamentality")
    return p, q


def fundamental_unit_norm1(s: int) -> HalfUnit:
    """Generator (modulo +-1) of the norm-1 unit group of Q(sqrt(s)).

    Start from the fundamental unit of Z[sqrt(s)] (continued fractions),
    pass to the full ring of integers by extracting the half-integer cube
    root when one exists (the unit index divides 3), and square away a
    norm -1 fundamental unit.
    """
    if s < 2:
        raise ValueError("radicand must be a square-free integer >= 2")
    if not is_squarefree(s):
        raise ValueError(f"{s} is not square-free")
    x, y, norm = _minimal_unit(s)
    p, q, delta = 2 * x, 2 * y, norm
    if s % 4 == 1:
        root = _half_cube_root(s, p, q, delta)
        if root is not None:
            p, q = root
    if delta == -1:
        p, q = (p * p + s * q * q) // 2, p * q
    return HalfUnit(s, p, q)


def divisors(m: int) -> tuple[int, ...]:
    if m < 1:
        raise ValueError("m must be positive")
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i != m // i:
                large.append(m // i)
        i += 1
    return tuple(small + large[::-1])


@dataclass(frozen=True)
class DegreeReport:
    """Index of the subgroup generated by a solution, and what it allows.

    ``generator`` spans the norm-1 unit group modulo +-1; ``index`` is the
    exponent writing the embedded solution as generator**index; ``feasible``
    lists every degree realizable by an integral parametric solution, which
    is exactly the divisors of 2*index.
    """

    base: PellSolution
    generator: HalfUnit
    index: int
    feasible: tuple[int, ...]


def unit_group_index(sol: PellSolution) -> DegreeReport:
    """Locate a + b*sqrt(n) as a power of the norm-1 generator.

    The embedding goes through the square-free radicand: with n = r^2*s,
    a + b*sqrt(n) is the half-unit (2a, 2br) over s.  Powers of the
    generator grow strictly, so integer comparison of first coordinates
    bounds the search.
    """
    r, s = squarefree_decompose(sol.n)
    target = HalfUnit(s, 2 * sol.a, 2 * sol.b * r)
    g = fundamental_unit_norm1(s)
    power = g
    index = 1
    while power.p < target.p:
        power = power * g
        index += 1
    if power != target:
        raise RuntimeError(
            f"embedded solution {target} is not a power of the generator {g}"
        )
    return DegreeReport(sol, g, index, divisors(2 * index))


def unit_cube_integral(s: int) -> bool:
    """Whether the cube of the norm-1 generator lies in Z[sqrt(s)].

    Also recomputes the cube through the closed form
    8*x^3 = p*(p^2 + 3*s*q^2) + q*(3*p^2 + s*q^2)*sqrt(s)
         = 4*p*(p^2 - 3) + 4*q*(p^2 - 1)*sqrt(s)
    and cross-checks it against repeated multiplication.
    """
    g = fundamental_unit_norm1(s)
    cube = g ** 3
    p, q = g.p, g.q
    if 4 * cube.p != p * (p * p + 3 * s * q * q) or 4 * cube.p != 4 * p * (p * p - 3):
        raise RuntimeError(f"cube closed form failed on first coordinate for s={s}")
    if 4 * cube.q != q * (3 * p * p + s * q * q) or 4 * cube.q != 4 * q * (p * p - 1):
        raise RuntimeError(f"cube closed form failed on second coordinate for s={s}")
    return cube.is_integral
