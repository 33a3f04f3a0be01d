"""Configuration equations over exact rationals.

For a configuration set with tuple length n and m blocks, the system asks
for one value f_C per configuration with

    sum { f_C : C_j = i }  =  sum { f_C : C_0 = i }      (j in 1..n, i in 1..m)
    sum f_C = 1,   f_C >= 0.

Feasibility is decided by a phase-one simplex over Fraction with Bland's
anti-cycling rule, so the answer is exact and deterministic: either a
normalized solution or a Farkas certificate (row multipliers whose combined
row has no nonnegative solution).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .configurations import Configuration, ConfigurationSet

RowLabel = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LinearSystem:
    """Equality rows over nonnegative variables indexed by configurations."""

    variables: tuple[Configuration, ...]
    labels: tuple[RowLabel, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_vars(self) -> int:
        return len(self.variables)


def build_equations(cs: ConfigurationSet) -> LinearSystem:
    """One balance row per (j, i), zero rows retained, normalization last."""
    variables = cs.configurations
    if not variables:
        raise ValueError("configuration set is empty; nothing to solve")
    n = cs.pair.tuple_length
    m = cs.pair.block_count
    labels: list[RowLabel] = []
    rows: list[tuple[Fraction, ...]] = []
    rhs: list[Fraction] = []
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            coeffs = tuple(
                Fraction(int(config[j] == i) - int(config[0] == i)) for config in variables
            )
            labels.append(("balance", j, i))
            rows.append(coeffs)
            rhs.append(ZERO)
    labels.append(("normalize",))
    rows.append(tuple(ONE for _ in variables))
    rhs.append(ONE)
    return LinearSystem(tuple(variables), tuple(labels), tuple(rows), tuple(rhs))


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violation: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(system: LinearSystem, f: Sequence[Fraction]) -> VerifyReport:
    """Exact check of every row plus nonnegativity."""
    values = [Fraction(v) for v in f]
    if len(values) != system.n_vars:
        return VerifyReport(False, ("length", len(values), system.n_vars))
    for idx, value in enumerate(values):
        if value < 0:
            return VerifyReport(False, ("nonnegativity", system.variables[idx]))
    for label, row, target in zip(system.labels, system.rows, system.rhs):
        total = sum((c * v for c, v in zip(row, values)), start=ZERO)
        if total != target:
            return VerifyReport(False, ("row", label, total, target))
    return VerifyReport(True)


def verify_certificate(system: LinearSystem, multipliers: Sequence[Fraction]) -> VerifyReport:
    """A valid certificate combines rows into coefficients <= 0 with rhs > 0."""
    values = [Fraction(v) for v in multipliers]
    if len(values) != system.n_rows:
        return VerifyReport(False, ("length", len(values), system.n_rows))
    combined_rhs = sum((y * b for y, b in zip(values, system.rhs)), start=ZERO)
    if combined_rhs <= 0:
        return VerifyReport(False, ("constant-not-positive", combined_rhs))
    for col in range(system.n_vars):
        coeff = sum((values[r] * system.rows[r][col] for r in range(system.n_rows)), start=ZERO)
        if coeff > 0:
            return VerifyReport(False, ("positive-coefficient", system.variables[col], coeff))
    return VerifyReport(True)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: Optional[tuple[Fraction, ...]] = None
    certificate: Optional[tuple[Fraction, ...]] = None


def _normalize_certificate(values: list[Fraction]) -> tuple[Fraction, ...]:
    """Scale to integers with gcd 1; the combined constant stays positive."""
    denominators = [v.denominator for v in values]
    scale = Fraction(1)
    for d in denominators:
        scale = Fraction(scale.numerator * d // gcd(scale.numerator, d))
    ints = [int(v * scale) for v in values]
    common = 0
    for value in ints:
        common = gcd(common, abs(value))
    if common > 1:
        ints = [v // common for v in ints]
    return tuple(Fraction(v) for v in ints)


def solve_feasibility(system: LinearSystem) -> FeasibilityResult:
    """Phase-one simplex with Bland's rule; output is internally re-verified.

    Minimizes the sum of one artificial variable per row.  Optimum zero
    yields the basic feasible point of the original variables; a positive
    optimum yields the dual multipliers y with y.A <= 0 and y.b > 0, read
    off the artificial columns' reduced costs.
    """
    n, r = system.n_vars, system.n_rows
    if n == 0:
        raise ValueError("system has no variables")
    flips = [ONE if b >= 0 else -ONE for b in system.rhs]
    # tableau rows: n original columns, r artificial columns, then rhs
    table = [
        [system.rows[i][j] * flips[i] for j in range(n)]
        + [ONE if k == i else ZERO for k in range(r)]
        + [system.rhs[i] * flips[i]]
        for i in range(r)
    ]
    basis = [n + i for i in range(r)]
    # reduced costs: c_j - sum of basic rows (artificial costs are all 1)
    cost = [ZERO - sum((table[i][j] for i in range(r)), start=ZERO) for j in range(n)]
    cost += [ZERO for _ in range(r)]
    objective = sum((table[i][-1] for i in range(r)), start=ZERO)

    def pivot(row: int, col: int) -> None:
        nonlocal objective
        factor = table[row][col]
        table[row] = [v / factor for v in table[row]]
        for i in range(r):
            if i != row and table[i][col] != 0:
                scale = table[i][col]
                table[i] = [v - scale * w for v, w in zip(table[i], table[row])]
        if cost[col] != 0:
            scale = cost[col]
            for j in range(n + r):
                cost[j] -= scale * table[row][j]
            objective += scale * table[row][-1]
        basis[row] = col

    while True:
        entering = next(
            (j for j in range(n) if cost[j] < 0 and j not in basis), None
        )
        if entering is None:
            break
        best: Optional[tuple[Fraction, int, int]] = None
        for i in range(r):
            if table[i][entering] > 0:
                ratio = table[i][-1] / table[i][entering]
                key = (ratio, basis[i], i)
                if best is None or key < best:
                    best = key
        if best is None:
            raise RuntimeError("phase-one objective unbounded; should be impossible")
        pivot(best[2], entering)

    if objective == 0:
        values = [ZERO] * n
        for i, var in enumerate(basis):
            if var < n:
                values[var] = table[i][-1]
        solution = tuple(values)
        check = verify_solution(system, solution)
        if not check.ok:
            raise RuntimeError(f"simplex produced an invalid solution: {check.violation}")
        return FeasibilityResult(True, solution=solution)

    # infeasible: y_i = 1 - reduced cost of artificial column i, undone flips
    multipliers = [(ONE - cost[n + i]) * flips[i] for i in range(r)]
    certificate = _normalize_certificate(multipliers)
    check = verify_certificate(system, certificate)
    if not check.ok:
        raise RuntimeError(f"simplex produced an invalid certificate: {check.violation}")
    return FeasibilityResult(False, certificate=certificate)


def counting_solution(cs: ConfigurationSet) -> tuple[Fraction, ...]:
    """f_C = |x0(C)| / |X| for finite actions; always a normalized solution."""
    action = cs.pair.action
    if not action.is_finite:
        raise ValueError("counting solutions need a finite action")
    total = action.size()
    return tuple(Fraction(len(cs.base_cells[c]), total) for c in cs.configurations)
