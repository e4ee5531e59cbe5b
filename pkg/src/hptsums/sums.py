"""Power sums, adjacency pair-sums, state vectors, and the row-to-row
step oracle.

The step oracle (check_system_step) evaluates the linear system that
advances the state vector from one row to the next, directly from its
defining formulas, so it stays independent of the matrix construction in
systembuilder.  The winger corrections (-2, -1, -2(q-4)) live here in the
equations, never inside pair_sum, which is a pure adjacency scan.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactalg import binom
from .triangle import TAG_A, TAG_B, Row, TriangleParams


def power_sum(row: Row, k: int) -> int:
    """Sum of value^k over all entries of the row."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(v**k for v, _ in row.entries)


def type_power_sums(row: Row, k: int) -> tuple:
    """(sum over tag-A entries, sum over tag-B entries) of value^k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    a = sum(v**k for v, t in row.entries if t == TAG_A)
    b = sum(v**k for v, t in row.entries if t == TAG_B)
    return a, b


def pair_sum(row: Row, i: int, j: int, first_tag: str, second_tag: str) -> int:
    """Sum of first^i * second^j over adjacent ordered entry pairs whose
    tags match (first_tag, second_tag)."""
    if i + j < 1:
        raise ValueError("i + j must be >= 1")
    e = row.entries
    total = 0
    for pos in range(len(e) - 1):
        (v1, t1), (v2, t2) = e[pos], e[pos + 1]
        if t1 == first_tag and t2 == second_tag:
            total += v1**i * v2**j
    return total


@dataclass
class StateVector:
    """Coordinates [ (a^k), (a^{k-1}b), ..., (a b^{k-1}), (b^k), u ]."""

    k: int
    coords: list

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if len(self.coords) != self.k + 2:
            raise ValueError(f"expected {self.k + 2} coordinates")

    @property
    def a(self) -> int:
        return self.coords[0]

    @property
    def b(self) -> int:
        return self.coords[self.k]

    @property
    def u(self) -> int:
        return self.coords[self.k + 1]

    def s_power_sum(self) -> int:
        return self.a + self.b


def state_vector(row: Row, k: int) -> StateVector:
    a, b = type_power_sums(row, k)
    coords = [a]
    coords += [pair_sum(row, k - j, j, TAG_A, TAG_B) for j in range(1, k)]
    coords.append(b)
    coords.append(pair_sum(row, 1, k - 1, TAG_B, TAG_B))
    return StateVector(k, coords)


def reduced_labels(k: int) -> list:
    m = -(-(k - 1) // 2)  # ceil((k-1)/2)
    return ["a^k", "b^k"] + [f"c{j}" for j in range(1, m + 1)] + ["u"]


def fold_state(g: StateVector) -> list:
    """Fold the full state vector into the reduced coordinates
    [a^k, b^k, c_1..c_m, u], where c_j pairs the mixed sums with b-exponents
    j and k-j (the middle term stays unpaired when k is even)."""
    k = g.k
    ell = (k - 1) // 2
    v = g.coords
    out = [g.a, g.b]
    out += [v[j] + v[k - j] for j in range(1, ell + 1)]
    if k % 2 == 0:
        out.append(v[k // 2])
    out.append(g.u)
    return out


@dataclass
class EquationCheck:
    name: str
    predicted: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.predicted == self.actual


@dataclass
class StepReport:
    k: int
    variant: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]


def _full_rhs(g: StateVector, q: int) -> list:
    k, v, u = g.k, g.coords, g.u
    a, b = g.a, g.b
    out = [2 * a + 2 * sum(binom(k, i) * v[i] for i in range(1, k)) + 2 * b
           + (2**k - 2) * u - 2]
    for j in range(1, k):
        mixed = sum(binom(k - j, i) * (v[j + i] + v[k - j - i])
                    for i in range(k - j))
        out.append(a + mixed + b + (2**(k - j) - 1) * u - 1)
    out.append((q - 4) * a + (q - 3) * b - 2 * (q - 4))
    out.append((q - 5) * a + (q - 4) * b - 2 * (q - 4))
    return out


def _reduced_printed_rhs(folded: list, k: int, q: int) -> list:
    """Right-hand sides of the reduced system exactly as its equations are
    printed, with no correction applied."""
    ell = (k - 1) // 2
    m = -(-(k - 1) // 2)
    a, b, u = folded[0], folded[1], folded[-1]
    c = folded[2:-1]  # c[0] is c_1

    def cs(i):
        return c[i - 1]

    out = [2 * a + 2 * sum(binom(k, i) * cs(i) for i in range(1, m + 1)) + 2 * b
           + (2**k - 2) * u - 2]
    out.append((q - 4) * a + (q - 3) * b - 2 * (q - 4))
    for j in range(1, ell + 1):
        rhs = a + sum(binom(k - j, i - j) * cs(i) for i in range(j, m + 1))
        rhs += sum((binom(k - j, i) + binom(j, i)) * cs(i)
                   for i in range(1, m + 1))
        rhs += b + (2**(k - j) - 1) * u - 1
        out.append(rhs)
    if k % 2 == 0:
        rhs = a + cs(ell + 1) + sum(binom(k - ell - 1, i) * cs(i)
                                    for i in range(1, ell + 2))
        rhs += b + (2**(k - ell - 1) - 1) * u - 1
        out.append(rhs)
    out.append((q - 5) * a + (q - 4) * b - 2 * (q - 4))
    return out


def check_system_step(g_n: StateVector, g_next: StateVector,
                      params: TriangleParams, k: int,
                      variant: str = "full") -> StepReport:
    """Check every equation of the chosen system between consecutive state
    vectors (rows n and n+1, n >= 1).  Exact integer comparison per equation.

    variant "full" uses the k+2 equation system; "reduced-as-printed" folds
    both vectors and evaluates the reduced equations verbatim, reporting any
    mismatch rather than correcting it.
    """
    if g_n.k != k or g_next.k != k:
        raise ValueError("state vectors must match k")
    q = params.q
    if variant == "full":
        labels = (["a^k"] + [f"a^{k - j}b^{j}" for j in range(1, k)]
                  + ["b^k", "u"])
        rhs = _full_rhs(g_n, q)
        actual = g_next.coords
    elif variant == "reduced-as-printed":
        labels = reduced_labels(k)
        # Equation order: a^k, b^k, c_1..c_m, u (matching the labels).
        rhs = _reduced_printed_rhs(fold_state(g_n), k, q)
        actual = fold_state(g_next)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    checks = [EquationCheck(name, p, x)
              for name, p, x in zip(labels, rhs, actual)]
    return StepReport(k, variant, checks)
