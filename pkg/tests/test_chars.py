import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubicgauss.chars import conjugate, is_trivial, lift_by_norm, make_character, principal, restrict
from cubicgauss.cyclo import Eisenstein
from cubicgauss.errors import InvalidParams, OrderNotDividing
from cubicgauss.ffield import extend, make_field

from oracles import cubic_class_prime

F7 = make_field(7)
F49 = make_field(7, [(2, 3)])
F25 = make_field(5, [(2, 2)])


def test_classes_for_generator_5_mod_7():
    chi = make_character(F7, 3, 5)
    assert [chi(x) for x in range(7)] == [None, 0, 1, 2, 2, 1, 0]
    oracle = cubic_class_prime(7, 5)
    assert all(chi(x) == oracle[x] for x in range(1, 7))


def test_order_must_divide_group_order():
    with pytest.raises(OrderNotDividing):
        make_character(make_field(5), 3)
    with pytest.raises(OrderNotDividing):
        make_character(make_field(3, [(2, 2)]), 3)


def test_non_generator_rejected():
    with pytest.raises(InvalidParams):
        make_character(F7, 3, 2)


def test_principal_character():
    chi = principal(F49)
    assert chi(0) is None
    assert all(chi(F49(0).with_code(c)) == 0 for c in range(1, 49))
    assert is_trivial(restrict(chi, 0))
    assert is_trivial(lift_by_norm(principal(F7), F49))
    assert conjugate(chi) == chi


def test_values_at_zero_and_minus_one():
    chi = make_character(F49, 3)
    assert chi(0) is None
    assert chi(-1) == 0
    assert chi.as_eisenstein(0) == Eisenstein(0, 0)


def test_conjugate():
    chi = make_character(F7, 3)
    assert conjugate(chi)(F7.generator) == 2
    assert conjugate(conjugate(chi)) == chi


def test_restriction_triviality():
    assert not is_trivial(restrict(make_character(F49, 3), 0))
    assert is_trivial(restrict(make_character(F25, 3), 0))


def test_lift_by_norm_restricts_to_conjugate():
    chi = make_character(F7, 3, 5)
    lifted = lift_by_norm(chi, F49)
    assert restrict(lifted, 0) == conjugate(chi)
    assert restrict(lift_by_norm(conjugate(chi), F49), 0) == chi


def test_cubic_character_trivial_on_prime_field_when_p_is_2_mod_3():
    for p in (5, 11, 17):
        F = extend(make_field(p), 2)
        chi = make_character(F, 3)
        assert all(chi(x) == 0 for x in range(1, p))


CHARS = [
    make_character(F7, 3),
    make_character(F49, 3),
    make_character(F49, 8),
    make_character(extend(make_field(13), 2), 7),
    lift_by_norm(make_character(F7, 3, 5), F49),
    make_character(extend(F49, 2), 5),
]


@pytest.mark.parametrize("chi", CHARS, ids=repr)
def test_orthogonality(chi):
    counts = np.bincount(chi.table[1:], minlength=chi.m)
    assert len(set(counts)) == 1  # every class has the same size
    if chi.m == 3:
        total = sum((chi.as_eisenstein(chi.field(0).with_code(c)) for c in range(chi.field.q)), Eisenstein(0, 0))
        assert total == Eisenstein(0, 0)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(CHARS), st.data())
def test_multiplicative_and_frobenius_compatible(chi, data):
    F = chi.field
    x = F(0).with_code(data.draw(st.integers(1, F.q - 1)))
    y = F(0).with_code(data.draw(st.integers(1, F.q - 1)))
    assert chi(x * y) == (chi(x) + chi(y)) % chi.m
    assert chi(x.frobenius()) == chi(x) * F.p % chi.m
    assert chi(x**chi.m) == 0
