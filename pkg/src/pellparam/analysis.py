"""Degree classification across solutions: feasible sets and surveys.

Two global facts get exercised here.  First, degrees are unbounded if n
may grow: powers of 2 + sqrt(3) manufacture fundamental solutions whose
unit-group index is any prescribed d.  Second, for square-free n the
feasible degrees never exceed 6, split by the residue of n mod 4; the
survey recomputes that bound row by row and treats any violation as an
implementation bug, not a finding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parametric import Infeasible, ParametricSolution, general_family
from .quadfield import (
    HalfUnit,
    PellSolution,
    fundamental_solution,
    is_square,
    is_squarefree,
    unit_group_index,
)


def feasible_degrees(sol: PellSolution) -> list[int]:
    """Ascending list of degrees realizable for sol: divisors of 2*index."""
    return list(unit_group_index(sol).feasible)


def prescribed_degree_instance(d: int) -> tuple[PellSolution, ParametricSolution]:
    """A fundamental solution admitting degree exactly d, with its triple.

    Writing (2 + sqrt(3))^d = a + b*sqrt(3) and n = 3*b^2, the pair
    (a, 1) is fundamental for n and has unit-group index d, so degree d
    is feasible there.  Demonstrates that no degree bound uniform in n
    exists.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    power = HalfUnit(3, 4, 2) ** d
    a, b = power.p // 2, power.q // 2
    sol = PellSolution(3 * b * b, a, 1)
    family = general_family(sol, d)
    if isinstance(family, Infeasible) or family.degree != d:
        raise RuntimeError(f"degree {d} must be feasible for n = 3*{b}^2")
    return sol, family


@dataclass(frozen=True)
class SurveyRow:
    """One surveyed square-free n with its degree data.

    bound_ok records whether the feasible set respects the residue-class
    bound: subset of {1, 2} for n = 2, 3 (mod 4), subset of {1, 2, 3, 6}
    for n = 1 (mod 4).
    """

    n: int
    residue_mod_4: int
    fundamental: PellSolution
    index: int
    feasible: tuple[int, ...]
    bound_ok: bool


def squarefree_survey(max_n: int) -> list[SurveyRow]:
    """Survey every square-free non-square n <= max_n.

    A bound_ok = False row would contradict a proved theorem, so it
    raises instead of being returned quietly.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    rows = []
    for n in range(2, max_n + 1):
        if is_square(n) or not is_squarefree(n):
            continue
        sol = fundamental_solution(n)
        report = unit_group_index(sol)
        allowed = {1, 2} if n % 4 in (2, 3) else {1, 2, 3, 6}
        bound_ok = set(report.feasible) <= allowed
        if not bound_ok:
            raise RuntimeError(
                f"feasible set {report.feasible} for n={n} exceeds the "
                f"square-free degree bound; this is a bug"
            )
        rows.append(
            SurveyRow(n, n % 4, sol, report.index, report.feasible, bound_ok)
        )
    return rows
