from hptsums import verify
from hptsums.exactalg import QPoly


def test_verify_recurrence_k2_q6():
    check = verify.verify_recurrence(2, 6, 10**5)
    assert check.all_exact
    assert check.order == 4
    assert check.last_n >= 8


def test_verify_recurrence_hand_value():
    # (s^2)_5 at q=6 from the derived coefficients (8, -13, 8, -2)
    rec = verify._recurrence(2)
    assert rec.evaluated_at(6) == [8, -13, 8, -2]
    seq = [2, 6, 28, 160]
    assert 8 * 160 - 13 * 28 + 8 * 6 - 2 * 2 == 960


def test_verify_recurrence_counting_cases():
    assert verify.verify_recurrence(0, 6, 10**5).all_exact
    assert verify.verify_recurrence(1, 6, 10**5).all_exact
    assert verify.verify_recurrence(2, 5, 10**5).all_exact  # q-5 = 0 case


def test_verify_system_steps():
    assert verify.verify_system_steps(3, 5, 10**4).all_exact
    printed = verify.verify_system_steps(3, 6, 10**4, "reduced-as-printed")
    assert not printed.all_exact
    assert {name for _, name, _, _ in printed.failing_equations} == {"c1"}


def test_verify_counting():
    for q in range(5, 10):
        check = verify.verify_counting(q, depth=12)
        assert check.all_exact, check.mismatches


def test_reproduce_tables_empty_diff():
    assert verify.reproduce_tables(11) == []


def test_reproduce_tables_subrange():
    assert verify.reproduce_tables(3) == []


def test_probe_conjecture():
    findings = verify.probe_conjecture(2, 11)
    assert all(f.order_matches for f in findings)
    assert all(f.coefficients_linear for f in findings)
    anomalies = {f.k for f in findings if f.anomaly}
    assert anomalies == {9, 11}
    by_k = {f.k: f for f in findings}
    assert by_k[2].stripped_order == 4
    assert by_k[7].stripped_order == 6
    rec7 = verify._recurrence(7)
    assert QPoly((302, -42)) in rec7.coefficients


def test_run_grid_small():
    report = verify.run_grid((2, 3), (5, 6), 10**4)
    assert report.all_exact
    report = verify.run_grid((2, 3), (6,), 10**4, reduced=True)
    # printed-reduced failures are reported but do not flip all_exact
    assert report.all_exact
    printed = [c for c in report.system_checks
               if c.variant == "reduced-as-printed"]
    assert any(not c.all_exact for c in printed)
    d = verify.report_to_dict(report)
    assert d["all_exact"] and d["system_checks"]
