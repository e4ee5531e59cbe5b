"""End-to-end validation: derived recurrences against brute-force row sums,
reference-table reproduction, counting recurrences, step-oracle sweeps, and
the order/linearity conjecture probe.

Everything is exact integer equality; there are no tolerances anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import sums, systembuilder, tables, triangle
from .exactalg import QPoly, format_qpoly

DEFAULT_ENTRY_CAP = 10**5
DEFAULT_K_RANGE = (2, 8)
DEFAULT_Q_LIST = (5, 6, 7, 9)


@dataclass
class Mismatch:
    n: int
    expected: int
    actual: int
    detail: str = ""


@dataclass
class RecurrenceCheck:
    k: int
    q: int
    variant: str
    order: int
    first_n: int
    last_n: int
    mismatches: list = field(default_factory=list)

    @property
    def all_exact(self) -> bool:
        return not self.mismatches


@dataclass
class SystemStepCheck:
    k: int
    q: int
    variant: str
    first_n: int
    last_n: int
    failing_equations: list = field(default_factory=list)  # (n, name, pred, act)

    @property
    def all_exact(self) -> bool:
        return not self.failing_equations


@dataclass
class CountingCheck:
    q: int
    depth: int
    mismatches: list = field(default_factory=list)  # (sequence, n, expected, actual)

    @property
    def all_exact(self) -> bool:
        return not self.mismatches


@dataclass
class TableDiffEntry:
    k: int
    j: int
    expected: QPoly
    computed: QPoly


@dataclass
class ConjectureFinding:
    k: int
    stripped_order: int
    conjectured_order: int
    trailing_zero_count: int
    max_q_degree: int
    tabled: bool

    @property
    def order_matches(self) -> bool:
        return self.stripped_order + self.trailing_zero_count \
            == self.conjectured_order

    @property
    def coefficients_linear(self) -> bool:
        return self.max_q_degree <= 1

    @property
    def anomaly(self) -> bool:
        return self.trailing_zero_count > 0


@lru_cache(maxsize=None)
def _recurrence(k: int, variant: str = "full"):
    return systembuilder.recurrence_for_k(k, with_initial_values=False,
                                          variant=variant)


@lru_cache(maxsize=8)
def _capped_rows(q: int, entry_cap: int, depth_limit: int = 64) -> list:
    res = triangle.generate_rows(triangle.TriangleParams(q), depth_limit,
                                 entry_cap=entry_cap)
    return res.rows


def verify_recurrence(k: int, q: int,
                      depth_cap_entries: int = DEFAULT_ENTRY_CAP,
                      variant: str = "full") -> RecurrenceCheck:
    """Check (s^k)_n = sum c_j(q) (s^k)_{n-j} for every generated row past
    the initial segment, with exact integer equality."""
    rec = _recurrence(k, variant if k >= 2 else "full")
    cs = rec.evaluated_at(q)
    rows = _capped_rows(q, depth_cap_entries)
    seq = [sums.power_sum(r, k) for r in rows]  # seq[n] = (s^k)_n
    d = rec.order
    check = RecurrenceCheck(k, q, rec.variant, d, first_n=d + 1,
                            last_n=len(seq) - 1)
    for n in range(d + 1, len(seq)):
        rhs = sum(c * seq[n - j - 1] for j, c in enumerate(cs))
        if rhs != seq[n]:
            check.mismatches.append(Mismatch(n, rhs, seq[n]))
    return check


def verify_system_steps(k: int, q: int,
                        depth_cap_entries: int = DEFAULT_ENTRY_CAP,
                        variant: str = "full") -> SystemStepCheck:
    """Run the step oracle on every consecutive generated row pair, n >= 1."""
    params = triangle.TriangleParams(q)
    rows = _capped_rows(q, depth_cap_entries)
    check = SystemStepCheck(k, q, variant, first_n=1, last_n=len(rows) - 2)
    vectors = [sums.state_vector(r, k) for r in rows[1:]]
    for idx in range(len(vectors) - 1):
        rep = sums.check_system_step(vectors[idx], vectors[idx + 1], params,
                                     k, variant)
        for c in rep.failures():
            check.failing_equations.append((idx + 1, c.name, c.predicted,
                                            c.actual))
    return check


def verify_counting(q: int, depth: int = 12,
                    entry_cap: int = 2 * 10**5) -> CountingCheck:
    """Check the ternary recurrences and initial values for the four row
    sequences: vertex counts s_n and the value sums a-hat, b-hat, s-hat.

    Sequences are read off generated rows while those fit under entry_cap
    and continued by the structural step rules beyond it, so deep rows are
    checked without materializing hundreds of millions of entries.
    """
    params = triangle.TriangleParams(q)
    check = CountingCheck(q, depth)

    rows = triangle.generate_rows(params, depth, entry_cap=entry_cap).rows
    counts, ahat, bhat = [(0, 1)], [0], [1]  # row 0 is the single base vertex
    for n in range(1, min(depth, len(rows) - 1) + 1):
        r = rows[n]
        a1, b1 = sums.type_power_sums(r, 1)
        a0, b0 = sums.type_power_sums(r, 0)
        rc = triangle.row_counts(params, n)
        if (a0, b0) != (rc.a, rc.b):
            check.mismatches.append(("row_counts", n, (rc.a, rc.b), (a0, b0)))
        counts.append((a0, b0))
        ahat.append(a1)
        bhat.append(b1)
    while len(counts) <= depth:  # continue by the step rules
        a, b = counts[-1]
        counts.append((a + b - 1, 2 + (q - 4) * a + (q - 3) * (b - 2)))
        ah, bh = ahat[-1], bhat[-1]
        ahat.append(2 * (ah + bh) - 2)
        bhat.append(2 + (q - 4) * ah + (q - 3) * (bh - 2))

    s = [a + b for a, b in counts]
    shat = [x + y for x, y in zip(ahat, bhat)]

    def expect(name, n, want, got):
        if want != got:
            check.mismatches.append((name, n, want, got))

    expect("s", 1, 2, s[1])
    expect("s", 2, 3, s[2])
    expect("s", 3, q, s[3])
    for n, want in ((1, 0), (2, 2), (3, 6)):
        expect("a_hat", n, want, ahat[n])
    for n, want in ((1, 2), (2, 2), (3, 2 * q - 6)):
        expect("b_hat", n, want, bhat[n])
    for n, want in ((1, 2), (2, 4), (3, 2 * q)):
        expect("s_hat", n, want, shat[n])
    for n in range(4, depth + 1):
        expect("s", n, (q - 1) * s[n - 1] - (q - 1) * s[n - 2] + s[n - 3],
               s[n])
        for name, seq in (("a_hat", ahat), ("b_hat", bhat), ("s_hat", shat)):
            expect(name, n,
                   q * seq[n - 1] - (q + 1) * seq[n - 2] + 2 * seq[n - 3],
                   seq[n])
    return check


def reproduce_tables(k_max: int = tables.MAX_TABLED_K) -> list:
    """Diff the derived coefficients against the reference table for every
    k = 0..min(k_max, 11).  Empty list means exact reproduction."""
    diffs = []
    for k in range(0, min(k_max, tables.MAX_TABLED_K) + 1):
        expected = tables.reference_row(k)
        rec = _recurrence(k)
        computed = rec.coefficients_padded(max(len(expected), rec.order))
        width = max(len(expected), len(computed))
        expected = expected + [QPoly()] * (width - len(expected))
        for j in range(width):
            if expected[j] != computed[j]:
                diffs.append(TableDiffEntry(k, j + 1, expected[j],
                                            computed[j]))
    return diffs


def probe_conjecture(k_min: int, k_max: int) -> list:
    """Order and q-degree evidence for each k; rows beyond the reference
    table are exploratory output."""
    if k_min < 2:
        raise ValueError("k_min must be >= 2")
    findings = []
    for k in range(k_min, k_max + 1):
        rec = _recurrence(k)
        conj = systembuilder.conjectured_order(k)
        trailing = conj - rec.order if rec.order <= conj else 0
        max_deg = max((len(c.coeffs) - 1 for c in rec.coefficients
                       if c), default=0)
        findings.append(ConjectureFinding(
            k, rec.order, conj, trailing, max_deg,
            tabled=k <= tables.MAX_TABLED_K))
    return findings


# ---------------------------------------------------------------------------
# Grid runner and report serialization
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    k_range: tuple
    q_list: tuple
    entry_cap: int
    recurrence_checks: list = field(default_factory=list)
    system_checks: list = field(default_factory=list)
    counting_checks: list = field(default_factory=list)

    @property
    def all_exact(self) -> bool:
        return all(c.all_exact for c in
                   self.recurrence_checks + self.counting_checks) \
            and all(c.all_exact for c in self.system_checks
                    if c.variant == "full")


def run_grid(k_range=DEFAULT_K_RANGE, q_list=DEFAULT_Q_LIST,
             entry_cap: int = DEFAULT_ENTRY_CAP,
             reduced: bool = False) -> VerificationReport:
    """Verify recurrences and system steps over a (k, q) grid.

    With reduced=True the reduced-path recurrence is checked too and the
    printed reduced equations are swept by the oracle; their failures are
    recorded in the report (they do not flip all_exact, which judges the
    verified systems only)."""
    k_lo, k_hi = k_range
    report = VerificationReport((k_lo, k_hi), tuple(q_list), entry_cap)
    for k in range(k_lo, k_hi + 1):
        for q in q_list:
            report.recurrence_checks.append(
                verify_recurrence(k, q, entry_cap))
            if k >= 2:
                report.system_checks.append(
                    verify_system_steps(k, q, entry_cap, "full"))
                if reduced:
                    report.recurrence_checks.append(
                        verify_recurrence(k, q, entry_cap, variant="reduced"))
                    report.system_checks.append(
                        verify_system_steps(k, q, entry_cap,
                                            "reduced-as-printed"))
    return report


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "k_range": list(report.k_range),
        "q_list": list(report.q_list),
        "entry_cap": report.entry_cap,
        "all_exact": report.all_exact,
        "recurrence_checks": [
            {"k": c.k, "q": c.q, "variant": c.variant, "order": c.order,
             "first_n": c.first_n, "last_n": c.last_n,
             "mismatches": [{"n": m.n, "expected": str(m.expected),
                             "actual": str(m.actual)}
                            for m in c.mismatches]}
            for c in report.recurrence_checks],
        "system_checks": [
            {"k": c.k, "q": c.q, "variant": c.variant,
             "first_n": c.first_n, "last_n": c.last_n,
             "failing_equations": [
                 {"n": n, "equation": name, "predicted": str(p),
                  "actual": str(a)}
                 for n, name, p, a in c.failing_equations]}
            for c in report.system_checks],
        "counting_checks": [
            {"q": c.q, "depth": c.depth,
             "mismatches": [list(map(str, m)) for m in c.mismatches]}
            for c in report.counting_checks],
    }


def table_diff_to_dict(diffs: list) -> list:
    return [{"k": d.k, "j": d.j, "expected": format_qpoly(d.expected),
             "computed": format_qpoly(d.computed)} for d in diffs]


def findings_to_dict(findings: list) -> list:
    return [{"k": f.k, "stripped_order": f.stripped_order,
             "conjectured_order": f.conjectured_order,
             "trailing_zero_count": f.trailing_zero_count,
             "max_q_degree": f.max_q_degree,
             "order_matches": f.order_matches,
             "coefficients_linear": f.coefficients_linear,
             "anomaly": f.anomaly,
             "tabled": f.tabled} for f in findings]
