"""Independent oracles the tests check the library against.

Everything here is deliberately naive and shares no code path with the
package: word enumeration by direct recursion, set membership by evaluating
expression trees pointwise, configurations of finite actions by iterating
points, and linear feasibility by Fourier-Motzkin elimination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from paracon.words import FreeWord, alphabet


def all_reduced_words(rank: int, max_length: int) -> list[FreeWord]:
    """Every reduced word of length <= max_length, generated directly."""
    out = [FreeWord(())]
    level = [()]
    for _ in range(max_length):
        next_level = []
        for letters in level:
            for letter in alphabet(rank):
                if letters and letters[-1] == -letter:
                    continue
                next_level.append(letters + (letter,))
        out.extend(FreeWord(l) for l in next_level)
        level = next_level
    return out


# expression trees: ("cone", word) ("singleton", word) ("full",) ("empty",)
# ("union", a, b) ("intersection", a, b) ("complement", a) ("difference", a, b)


def expr_contains(expr: tuple, word: FreeWord) -> bool:
    kind = expr[0]
    if kind == "cone":
        prefix = expr[1].letters
        return word.letters[: len(prefix)] == prefix
    if kind == "singleton":
        return word == expr[1]
    if kind == "full":
        return True
    if kind == "empty":
        return False
    if kind == "union":
        return expr_contains(expr[1], word) or expr_contains(expr[2], word)
    if kind == "intersection":
        return expr_contains(expr[1], word) and expr_contains(expr[2], word)
    if kind == "complement":
        return not expr_contains(expr[1], word)
    if kind == "difference":
        return expr_contains(expr[1], word) and not expr_contains(expr[2], word)
    raise ValueError(f"unknown expression {expr!r}")


def brute_force_configurations(degree: int, perms: list, blocks: list[frozenset]) -> set[tuple]:
    """Observed configuration tuples of a finite action, point by point."""

    def block_of(point: int) -> int:
        for index, block in enumerate(blocks, start=1):
            if point in block:
                return index
        raise AssertionError(f"point {point} in no block")

    observed = set()
    for x in range(degree):
        observed.add(tuple([block_of(x)] + [block_of(p.images[x]) for p in perms]))
    return observed


def fourier_motzkin_feasible(rows: list[tuple], rhs: list[Fraction]) -> bool:
    """Feasibility of {A x = b, x >= 0} by elimination, no pivoting rules.

    The equalities are removed first by exact Gauss-Jordan substitution
    (each pivot variable becomes an affine expression in the free ones);
    what remains is the pure inequality system "every variable expression
    is nonnegative", which Fourier-Motzkin elimination decides.  Variables
    are eliminated greedily (fewest positive*negative pairings) and rows
    are deduplicated keeping the tightest bound, which keeps the blowup
    harmless at test sizes.
    """
    n = len(rows[0]) if rows else 0
    matrix = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []          # (row, column)
    row_at = 0
    for col in range(n):
        pivot = next((i for i in range(row_at, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[row_at], matrix[pivot] = matrix[pivot], matrix[row_at]
        scale = matrix[row_at][col]
        matrix[row_at] = [v / scale for v in matrix[row_at]]
        for i in range(len(matrix)):
            if i != row_at and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [v - factor * w for v, w in zip(matrix[i], matrix[row_at])]
        pivots.append((row_at, col))
        row_at += 1
    for i in range(row_at, len(matrix)):
        if matrix[i][n] != 0:
            return False                        # 0 = nonzero: inconsistent
    free = [c for c in range(n) if c not in {col for _, col in pivots}]
    index_of = {c: k for k, c in enumerate(free)}

    # x_col = const - sum coeff * f  for pivot columns; x_col = f for free ones.
    # Nonnegativity of every x becomes: sum(-coeff) * f <= const.
    inequalities: dict[tuple, Fraction] = {}

    def add(coeffs: tuple[Fraction, ...], bound: Fraction) -> bool:
        if all(c == 0 for c in coeffs):
            return bound >= 0
        scale = next(abs(c) for c in coeffs if c != 0)
        key = tuple(c / scale for c in coeffs)
        value = bound / scale
        if key not in inequalities or value < inequalities[key]:
            inequalities[key] = value
        return True

    for row, col in pivots:
        coeffs = tuple(matrix[row][c] for c in free)
        if not add(coeffs, matrix[row][n]):
            return False
    for col in free:
        coeffs = tuple(Fraction(0) if c != col else Fraction(-1) for c in free)
        add(coeffs, Fraction(0))

    remaining = set(range(len(free)))
    while remaining:
        def cost(var):
            pos = sum(1 for c in inequalities if c[var] > 0)
            neg = sum(1 for c in inequalities if c[var] < 0)
            return pos * neg
        var = min(remaining, key=cost)
        remaining.discard(var)
        positive = [(c, b) for c, b in inequalities.items() if c[var] > 0]
        negative = [(c, b) for c, b in inequalities.items() if c[var] < 0]
        neutral = [(c, b) for c, b in inequalities.items() if c[var] == 0]
        inequalities = {}
        for coeffs, bound in neutral:
            if not add(coeffs, bound):
                return False
        for pc, pb in positive:
            for nc, nb in negative:
                factor = -nc[var] / pc[var]
                combined = tuple(factor * p + q for p, q in zip(pc, nc))
                if not add(combined, factor * pb + nb):
                    return False
    return True
