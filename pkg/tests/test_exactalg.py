import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hptsums.exactalg import (Q, ExactAlgError, PolyMatrix, QPoly, XQPoly,
                              binom, charpoly_int, charpoly_q, det_int,
                              format_qpoly, lagrange_interpolate,
                              matrix_from_orbit)

small_ints = st.integers(-50, 50)
qpolys = st.lists(small_ints, max_size=5).map(QPoly)


def test_qpoly_canonical_form():
    assert QPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert not QPoly((0, 0))
    assert QPoly().degree == float("-inf")


def test_qpoly_examples():
    assert (4 * Q + 4)(6) == 28
    assert (Q - 1) + (-Q + 1) == QPoly()
    assert (Q + 2) * (Q - 1) == QPoly((-2, 1, 1))


def test_qpoly_formatting():
    assert format_qpoly(-62 * Q + 404) == "-62q+404"
    assert format_qpoly(Q + 2) == "q+2"
    assert format_qpoly(QPoly()) == "0"
    assert format_qpoly(QPoly((0, 0, 4))) == "4q^2"


@settings(max_examples=60)
@given(a=qpolys, b=qpolys, c=qpolys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QPoly() == a
    assert a - a == QPoly()


@settings(max_examples=60)
@given(a=qpolys, b=qpolys, q0=st.integers(-9, 9))
def test_qpoly_evaluation_is_homomorphism(a, b, q0):
    assert (a + b)(q0) == a(q0) + b(q0)
    assert (a * b)(q0) == a(q0) * b(q0)


def test_binom_convention():
    assert binom(5, -1) == 0
    assert binom(3, 4) == 0
    assert binom(5, 2) == 10


@settings(max_examples=200)
@given(data=st.data())
def test_binomial_alternating_identity(data):
    z = data.draw(st.integers(0, 30))
    delta = data.draw(st.integers(0, z))
    r = data.draw(st.integers(0, z))
    lhs = sum((-1)**t * binom(delta, t) * binom(z - t, r)
              for t in range(delta + 1))
    assert lhs == binom(z - delta, r - delta)


def test_charpoly_int_trivial():
    assert charpoly_int([[5]]) == [-5, 1]
    assert charpoly_int([[1, 0], [0, 1]]) == [1, -2, 1]


@settings(max_examples=40)
@given(diag=st.lists(st.integers(-8, 8), min_size=1, max_size=5))
def test_charpoly_int_triangular(diag):
    n = len(diag)
    rng = random.Random(sum(diag) + n)
    m = [[diag[i] if i == j else (rng.randint(-5, 5) if j > i else 0)
          for j in range(n)] for i in range(n)]
    # product of (x - d) over the diagonal
    expected = [1]
    for d in diag:
        expected = [0] + expected
        for i in range(len(expected) - 1):
            expected[i] -= d * expected[i + 1]
    assert charpoly_int(m) == expected


def test_det_int_matches_charpoly_constant():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        cp = charpoly_int(m)
        assert det_int(m) == (-1)**n * cp[0]


def test_lagrange_examples():
    assert lagrange_interpolate([(5, 24), (6, 28), (7, 32)], 1) == 4 * Q + 4
    assert lagrange_interpolate([(5, 7)], 0) == QPoly.const(7)


def test_lagrange_rejects_wrong_bound():
    pts = [(5, 25), (6, 36), (7, 49), (8, 64)]  # q^2 with linear bound
    with pytest.raises(ExactAlgError):
        lagrange_interpolate(pts, 1)


def test_lagrange_rejects_noninteger():
    with pytest.raises(ExactAlgError):
        lagrange_interpolate([(0, 0), (2, 1)], 1)


@settings(max_examples=40)
@given(coeffs=st.lists(st.integers(-20, 20), min_size=1, max_size=5))
def test_lagrange_round_trip(coeffs):
    p = QPoly(coeffs)
    bound = max(len(p.coeffs) - 1, 0)
    pts = [(x, p(x)) for x in range(5, 5 + bound + 3)]
    assert lagrange_interpolate(pts, bound) == p


def test_charpoly_q_diagonal():
    m = PolyMatrix([[Q, QPoly()], [QPoly(), QPoly.const(1)]])
    cp = charpoly_q(m)
    assert cp == XQPoly([Q, -Q - 1, QPoly.const(1)])  # (x-q)(x-1)


def test_charpoly_q_matches_int_evaluation_at_held_out_points():
    m = PolyMatrix([[Q - 4, QPoly.const(2)], [Q - 5, QPoly.const(3)]])
    cp = charpoly_q(m)
    for q0 in (11, 23, 40):
        assert cp.eval_q(q0) == charpoly_int(m.eval_q(q0))


def test_charpoly_q_rejects_quadratic_entries():
    with pytest.raises(ValueError):
        charpoly_q(PolyMatrix([[Q * Q]]))


def test_matrix_from_orbit_trivial():
    assert matrix_from_orbit([[2], [6]]) == [[3]]


def test_matrix_from_orbit_rejects_dependent():
    with pytest.raises(ExactAlgError):
        matrix_from_orbit([[1, 2], [2, 4], [3, 6]])


def test_matrix_from_orbit_recovers_action():
    rng = random.Random(42)
    m = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
    g = [[1, 0, 2]]
    for _ in range(6):
        g.append([sum(m[i][j] * g[-1][j] for j in range(3))
                  for i in range(3)])
    rec = matrix_from_orbit(g[:4])
    for t in range(6):
        stepped = [sum(rec[i][j] * g[t][j] for j in range(3))
                   for i in range(3)]
        assert stepped == g[t + 1]


def test_xqpoly_lift_and_eval():
    p = XQPoly([QPoly.const(-1), QPoly.const(1)])  # x - 1
    sq = p * p
    assert sq == XQPoly([QPoly.const(1), QPoly.const(-2), QPoly.const(1)])
    assert sq.eval_x(3).coeffs == (4,)
    assert str(XQPoly([QPoly(), -(Q + 1), QPoly.const(1)])) == "x^2+(-q-1)x"
