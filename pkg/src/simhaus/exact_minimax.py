"""Exact minimization of the maximum of face-sum forms over the probability simplex.

Given a finite ground set F and a family of candidate faces G ⊆ F, the
minimax value is

    min { max_G sum(x_s for s in G) : x >= 0, sum(x) = 1 }

computed exactly over the rationals. Two independent routes are provided:

  * ``solve_minimax``: an exact simplex method on the epigraph linear
    program (minimize t subject to sum(x) = 1, x >= 0 and, per face G,
    sum(x_s, s in G) <= t), with Bland's anti-cycling pivot rule;
  * ``oracle_minimax``: enumeration of all basic points cut out by
    active equalities chosen among {x_s = 0}, {form == form} and
    {sum(x) = 1}, kept as a desk-scale cross-check.

Both return identical exact values; ``tests`` assert this on random
instances with no tolerance. Rational values use ``fractions.Fraction``
(arbitrary precision, always in lowest terms) and serialize as ``"p/q"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .complex_core import Face, normalize_face
from .errors import EmptyInputError, TooLargeError

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def format_rational(q: Rat) -> str:
    """Serialize with an explicit denominator: ``0/1``, ``1/1``, ``2/3``."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Rat:
    """Parse ``p/q`` or a bare integer."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class MinimaxProblem:
    """Ground set plus the antichain of faces whose weight sums are maximized."""

    ground_set: tuple[int, ...]
    face_forms: tuple[Face, ...]

    @classmethod
    def of(cls, ground_set: Iterable[int], face_forms: Iterable[Iterable[int]]) -> "MinimaxProblem":
        ground = normalize_face(ground_set)
        gset = set(ground)
        forms = {normalize_face(f) for f in face_forms}
        for f in forms:
            if not set(f) <= gset:
                raise EmptyInputError(f"form {f} is not a subset of the ground set")
        # drop non-maximal forms; they never change the value
        maximal = tuple(sorted(f for f in forms if not any(set(f) < set(g) for g in forms)))
        return cls(ground, maximal)


@dataclass(frozen=True)
class MinimaxSolution:
    value: Rat
    witness: Mapping[int, Rat]


# ---------------------------------------------------------------------------
# exact two-phase simplex, Bland's rule


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            prow = tableau[row]
            tableau[r] = [v - factor * p for v, p in zip(line, prow)]
    basis[row] = col


def _run_simplex(tableau: list[list[Fraction]], basis: list[int], cost: list[Fraction]) -> None:
    """Minimize ``cost`` in place; the last tableau column is the rhs.

    Bland's rule: enter the lowest-index variable with negative reduced
    cost, leave on the lowest-index basic variable among the ratio ties.
    """
    m = len(tableau)
    ncols = len(tableau[0]) - 1
    while True:
        # reduced costs under the current basis
        reduced = list(cost)
        for r in range(m):
            cb = cost[basis[r]]
            if cb != 0:
                row = tableau[r]
                for j in range(ncols):
                    if row[j] != 0:
                        reduced[j] -= cb * row[j]
        enter = next((j for j in range(ncols) if reduced[j] < 0), None)
        if enter is None:
            return
        leave = None
        best: Fraction | None = None
        for r in range(m):
            coef = tableau[r][enter]
            if coef > 0:
                ratio = tableau[r][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            raise ArithmeticError("unbounded linear program")
        _pivot(tableau, basis, leave, enter)


def _simplex_min(cost: Sequence[Fraction], rows: Sequence[Sequence[Fraction]],
                 rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve min cost.x subject to rows.x == rhs, x >= 0; returns an optimal x."""
    m, n = len(rows), len(cost)
    tableau = []
    for i in range(m):
        line = [Fraction(v) for v in rows[i]]
        b = Fraction(rhs[i])
        if b < 0:
            line = [-v for v in line]
            b = -b
        # one artificial variable per row
        line += [ONE if j == i else ZERO for j in range(m)]
        line.append(b)
        tableau.append(line)
    basis = [n + i for i in range(m)]

    phase1 = [ZERO] * n + [ONE] * m
    _run_simplex(tableau, basis, phase1)
    total = sum(tableau[r][-1] for r in range(m) if basis[r] >= n)
    if total != 0:
        raise ArithmeticError("infeasible linear program")
    # drive leftover (degenerate) artificials out of the basis
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, r, col)
    keep = [r for r in range(m) if basis[r] < n]
    tableau = [[tableau[r][j] for j in range(n)] + [tableau[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]

    phase2 = [Fraction(c) for c in cost]
    _run_simplex(tableau, basis, phase2)
    x = [ZERO] * n
    for r, b in enumerate(basis):
        x[b] = tableau[r][-1]
    return x


def solve_minimax(problem: MinimaxProblem) -> MinimaxSolution:
    """Exact minimax value with an optimal witness point of the simplex.

    An empty form family yields value 0 (no weight sum to beat); the
    witness is then an arbitrary point of the simplex.
    """
    ground = problem.ground_set
    k = len(ground)
    forms = problem.face_forms
    if not forms:
        witness = {v: (ONE if i == 0 else ZERO) for i, v in enumerate(ground)}
        return MinimaxSolution(ZERO, witness)

    index = {v: i for i, v in enumerate(ground)}
    f = len(forms)
    nvars = k + 1 + f  # x .. t .. slack per form
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for gi, g in enumerate(forms):
        line = [ZERO] * nvars
        for v in g:
            line[index[v]] = ONE
        line[k] = -ONE
        line[k + 1 + gi] = ONE
        rows.append(line)
        rhs.append(ZERO)
    rows.append([ONE] * k + [ZERO] * (1 + f))
    rhs.append(ONE)
    cost = [ZERO] * k + [ONE] + [ZERO] * f

    x = _simplex_min(cost, rows, rhs)
    witness = {v: x[index[v]] for v in ground}
    return MinimaxSolution(x[k], witness)


# ---------------------------------------------------------------------------
# independent oracle: basic-point enumeration


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gaussian elimination; None when the system has no unique solution."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


ORACLE_MAX_GROUND = 7


def oracle_minimax(problem: MinimaxProblem) -> Rat:
    """Same value as ``solve_minimax`` by brute-force basic-point enumeration.

    Candidate points are cut out by fixing a support T, equalizing |T|
    form values on it, and normalizing the total weight to one; every
    optimum of the epigraph program arises this way. Feasible candidates
    are scored by the full form maximum and the smallest score wins.
    Desk scale only: ground sets above ORACLE_MAX_GROUND raise.
    """
    ground = problem.ground_set
    n = len(ground)
    if n > ORACLE_MAX_GROUND:
        raise TooLargeError(f"oracle handles at most {ORACLE_MAX_GROUND} ground vertices, got {n}")
    forms = problem.face_forms
    if not forms:
        return ZERO

    index = {v: i for i, v in enumerate(ground)}
    form_sets = [frozenset(index[v] for v in g) for g in forms]
    best: Fraction | None = None
    for size in range(1, min(n, len(form_sets)) + 1):
        for support in combinations(range(n), size):
            for active in combinations(form_sets, size):
                matrix = [[ONE] * size]
                rhs = [ONE]
                lead = active[0]
                for other in active[1:]:
                    matrix.append([
                        (ONE if i in lead else ZERO) - (ONE if i in other else ZERO)
                        for i in support
                    ])
                    rhs.append(ZERO)
                point = _solve_square(matrix, rhs)
                if point is None or any(v < 0 for v in point):
                    continue
                weight = dict(zip(support, point))
                score = max(sum((weight.get(i, ZERO) for i in g), ZERO) for g in form_sets)
                if best is None or score < best:
                    best = score
    assert best is not None  # the simplex vertices are always candidates
    return best


def harmonic_combine(values: Iterable[Rat]) -> Rat:
    """``1 / sum(1/v)``, with any zero member collapsing the result to zero."""
    vals = list(values)
    if not vals:
        raise EmptyInputError("harmonic_combine needs at least one value")
    if any(v == 0 for v in vals):
        return ZERO
    return ONE / sum((ONE / v for v in vals), ZERO)
