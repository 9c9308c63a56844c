from fractions import Fraction
from math import lcm

import pytest

from cubicgauss.chars import make_character
from cubicgauss.closedform import (
    b_form,
    cubic_discriminant,
    has_integer_root,
    period_polynomial,
    periods_from_eta,
    predict_b_factor,
    primes_1_mod_6,
    r1_r2,
    rep_4p,
    rep_eisenstein,
    rep_x2_3y2,
    structure_constants,
)
from cubicgauss.cyclo import CycloInt, Eisenstein
from cubicgauss.errors import NotOneModSix
from cubicgauss.ffield import extend, make_field
from cubicgauss.gsum import b_counts, gauss_periods

from oracles import cubic_periods_complex

PRIMES = primes_1_mod_6(199)


def test_small_representations():
    assert rep_x2_3y2(7) == (2, 1)
    assert rep_x2_3y2(13) == (1, 2)
    assert rep_x2_3y2(31) == (2, 3)
    assert (rep_4p(7).u, rep_4p(7).v_abs) == (1, 1)
    assert (rep_4p(13).u, rep_4p(13).v_abs) == (-5, 1)
    assert (rep_4p(19).u, rep_4p(19).v_abs) == (7, 1)
    for p in (7, 13):
        u, v = rep_eisenstein(p)
        assert Eisenstein(u, -v).norm() == p


@pytest.mark.parametrize("p", [5, 11, 9, 2])
def test_representations_need_p_1_mod_6(p):
    with pytest.raises(NotOneModSix):
        rep_4p(p)
    with pytest.raises(NotOneModSix):
        period_polynomial(p)


def test_pinned_period_polynomials():
    assert str(period_polynomial(7)) == "z^3+z^2-2z-1"
    assert str(period_polynomial(13)) == "z^3+z^2-4z+1"
    assert str(period_polynomial(19)) == "z^3+z^2-6z-7"


def test_structure_constant_examples():
    assert structure_constants(7, 1) == (1, 0, 1)
    assert structure_constants(13, 1) == (2, 1, 1)


@pytest.mark.parametrize("p", PRIMES)
def test_closed_form_invariants(p):
    rep = rep_4p(p)
    u, v = rep.u, rep.v_abs
    assert 4 * p == u * u + 27 * v * v and u % 3 == 1
    assert ((3 + u) * p - 1) % 27 == 0 and (p + 1 + u) % 9 == 0
    d = period_polynomial(p)
    assert d.discriminant == (v * p) ** 2
    assert not has_integer_root(d.coeffs)
    a, b, c = structure_constants(p, v)
    assert a + b + c == (p - 1) // 3
    assert structure_constants(p, -v) == (b, a, c)
    assert 3 * d.s3 == ((p - 1) // 3 - c) * d.s2 + c * (1 - 2 * d.s2)
    r1, r2 = r1_r2(p, v)
    assert r1 + r2 == d.s1 * d.s2 - 3 * d.s3
    assert r1_r2(p, -v) == (r2, r1)
    assert r1.denominator == 1 and r2.denominator == 1


@pytest.mark.parametrize("p", PRIMES)
def test_periods_are_roots_numerically(p):
    c = period_polynomial(p).coeffs
    for x in cubic_periods_complex(p, make_field(p).generator):
        assert abs(sum(ci * x**i for i, ci in enumerate(c))) < 1e-6 * p**2


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37])
def test_r1_matches_period_arithmetic(p):
    G = gauss_periods(make_character(make_field(p), 3))
    r1 = G[0] * G[0] * G[1] + G[1] * G[1] * G[2] + G[2] * G[2] * G[0]
    r2 = G[0] * G[0] * G[2] + G[2] * G[2] * G[1] + G[1] * G[1] * G[0]
    v = rep_4p(p).v_abs
    assert {r1.is_rational(), r2.is_rational()} == {int(x) for x in r1_r2(p, v)}


def test_eta_polynomials_for_7():
    P1, P2 = periods_from_eta(7, 1, 1)
    assert P1 == [Fraction(-2), Fraction(0), Fraction(1)]
    # 1 - eta - eta^2 after reducing by q(eta) = 0 is what P2 gives here
    assert P2 == [Fraction(1), Fraction(-1), Fraction(-1)]
    assert [x + y for x, y in zip(P1, P2)] == [Fraction(-1), Fraction(-1), Fraction(0)]


def test_eta_polynomials_reproduce_periods_13():
    G = gauss_periods(make_character(make_field(13), 3))
    rep = rep_4p(13)
    found = []
    for sv in (rep.v_abs, -rep.v_abs):
        P1, P2 = periods_from_eta(13, rep.u, sv)
        vals = []
        for P in (P1, P2):
            D = lcm(*(f.denominator for f in P))
            acc = CycloInt.zero(1, 13)
            for i, f in enumerate(P):
                acc = acc + G[0] ** i * int(f * D)
            vals.append((acc, D))
        if vals[0][0] == G[1] * vals[0][1] and vals[1][0] == G[2] * vals[1][1]:
            found.append(sv)
    assert len(found) == 1


def test_b_prediction_for_7():
    pred = predict_b_factor(7, 2)
    assert pred.B == (1, 2, 4)
    assert pred.X**2 + pred.X * pred.Y + pred.Y**2 == 3 * 7


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37, 43])
def test_b_prediction_matches_enumeration_for_quadratic_steps(p):
    F2 = extend(make_field(p), 2)
    counts = tuple(sorted(int(c) for c in b_counts(make_character(F2, 3), F2.alpha(), 2, 0)))
    assert counts == predict_b_factor(p, 2).B


@pytest.mark.parametrize("p,r", [(7, 3), (13, 3), (7, 4), (13, 5)])
def test_b_prediction_invariants(p, r):
    pred = predict_b_factor(p, r)
    P = p ** (r - 1)
    assert sum(pred.B) == P and b_form(*pred.B) == P
    assert pred.X**2 + pred.X * pred.Y + pred.Y**2 == 3 * P


def test_discriminant_helper():
    assert cubic_discriminant((-1, -2, 1, 1)) == 49
    assert has_integer_root((0, 1, 0, 1))
    assert not has_integer_root((-1, -2, 1, 1))
