import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubicgauss.errors import (
    FieldTooLarge,
    InvalidParams,
    NoSuchBinomial,
    NotPrime,
    ReducibleBinomial,
)
from cubicgauss.ffield import (
    binomial_criterion,
    extend,
    find_generator,
    find_irreducible_binomial,
    is_irreducible,
    make_field,
    norm,
    power_class,
    trace,
)

from oracles import PolyField

F7 = make_field(7)
F49 = make_field(7, [(2, 3)])
F2401 = extend(F49, 2)
F125 = make_field(5, [(3, {"modulus": [1, 1, 0]})])
FIELDS = [F7, F49, F2401, F125, make_field(3, [(2, 2)]), make_field(13, [(3, 2)])]


def test_prime_field_size():
    assert make_field(7).element_count == 7


def test_quadratic_extension_by_nonresidue():
    F = make_field(7, [(2, 3)])
    a = F.alpha()
    assert F.element_count == 49
    assert a * a == F(3)


def test_square_constant_is_rejected():
    with pytest.raises(ReducibleBinomial):
        make_field(7, [(2, 4)])


def test_bad_characteristics():
    with pytest.raises(NotPrime):
        make_field(9)
    with pytest.raises(InvalidParams):
        make_field(2)


def test_size_cap(monkeypatch):
    with pytest.raises(FieldTooLarge):
        make_field(101, [(2, 2), (2, [0, 1])], size_cap_=10**6)
    monkeypatch.setenv("GAUSS_SIZE_CAP", "100")
    with pytest.raises(FieldTooLarge):
        make_field(11, [(2, 2)])


def test_binomial_search_constraints():
    beta = find_irreducible_binomial(F7, 2, must_be_cube=True, must_be_quadratic_nonresidue=True)
    assert beta == F7(6)
    nc = find_irreducible_binomial(F7, 3, must_be_noncube=True)
    assert int(nc) in {2, 3, 4, 5}
    with pytest.raises(NoSuchBinomial):
        find_irreducible_binomial(F7, 4)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("r", [2, 3, 4, 6])
def test_binomial_criterion_matches_rabin(p, r):
    F = make_field(p)
    for beta in range(1, p):
        assert binomial_criterion(F, beta, r) == is_irreducible(F, [(-beta) % p] + [0] * (r - 1) + [1])


def test_general_modulus_needed_for_cubic_over_f5():
    with pytest.raises(NoSuchBinomial):
        find_irreducible_binomial(make_field(5), 3)
    assert extend(make_field(5), 3).q == 125


def test_general_modulus_only_at_first_step():
    with pytest.raises(InvalidParams):
        make_field(5, [(2, 2), (3, {"modulus": [1, 1, 0]})])


def test_generators():
    assert find_generator(F7) == F7(3)
    assert find_generator(make_field(5)) == make_field(5)(2)
    assert find_generator(F49).order() == 48


def test_trace_examples():
    assert trace(F49.one) == F49(2)
    assert trace(F49.alpha()) == F49.zero
    F = make_field(13, [(3, 2)])
    a = F.alpha()
    for j in (1, 2):
        assert trace(a**j) == F.zero
    assert a**3 == F(2)


def test_relative_trace_in_tower():
    a2 = F2401.alpha(2)
    assert a2.trace(1) == F2401.zero
    beta2 = F2401.subfield(1)(0).with_code(F2401.steps[1].beta)
    assert a2 * a2 == beta2


def test_norm_examples():
    x = F49(5)
    assert norm(x) == x * x
    assert norm(F49.zero) == F49.zero


def test_power_class_examples():
    assert power_class(F7(6), 3) == 0
    assert power_class(F7(1), 3) == 0
    assert power_class(F7.zero, 3) is None


def test_subfield_codes_embed():
    F7_ = F2401.subfield(0)
    F49_ = F2401.subfield(1)
    x = F49_([2, 5])
    y = F2401(x)
    assert y.in_subfield(1) and y.restrict(1) == x
    assert (x * x).code == (y * y).code
    assert F7_ == make_field(7)


def test_describe_round_trip():
    desc = F2401.describe()
    steps = [(s["degree"], s["beta"]) for s in desc["steps"]]
    assert make_field(desc["p"], steps) == F2401
    desc = F125.describe()
    assert make_field(5, [(3, {"modulus": desc["steps"][0]["modulus"]})]) == F125


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"q{F.q}")
def test_log_table_inverts_exp(F):
    g = F.generator
    codes = np.arange(1, F.q)
    assert np.all(F.exp_table[F.log_table[codes]] == codes)
    assert F.pow(g, F.q - 1) == 1


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"q{F.q}")
def test_trace_table_matches_scalar_trace(F):
    rng = np.random.default_rng(F.q)
    for c in rng.integers(0, F.q, 40):
        assert F.trace_table[c] == F.trace(int(c))


def test_arithmetic_matches_polynomial_oracle():
    F = make_field(13, [(3, 2)])
    O = PolyField(13, (-2, 0, 0))
    rng = np.random.default_rng(1)
    for a, b in rng.integers(0, F.q, (200, 2)):
        x, y = F(0).with_code(int(a)), F(0).with_code(int(b))
        ox, oy = tuple(x.flat), tuple(y.flat)
        assert tuple((x * y).flat) == O.mul(ox, oy)
        assert tuple((x + y).flat) == O.add(ox, oy)
        assert int(x.trace().code) == O.trace(ox)


@st.composite
def field_and_elements(draw, k=3):
    F = draw(st.sampled_from(FIELDS))
    return F, [F(0).with_code(draw(st.integers(0, F.q - 1))) for _ in range(k)]


@settings(max_examples=300, deadline=None)
@given(field_and_elements())
def test_field_axioms(data):
    F, (x, y, z) = data
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert (x - y) + y == x
    if x:
        assert x * x.inverse() == F.one


@settings(max_examples=200, deadline=None)
@given(field_and_elements(2))
def test_frobenius_is_a_field_automorphism(data):
    F, (x, y) = data
    assert (x + y).frobenius() == x.frobenius() + y.frobenius()
    assert (x * y).frobenius() == x.frobenius() * y.frobenius()
    assert x.frobenius(F.n) == x


@settings(max_examples=200, deadline=None)
@given(field_and_elements(2), st.integers(0, 6))
def test_trace_linear_and_norm_multiplicative(data, c):
    F, (x, y) = data
    for level in range(F.level + 1):
        assert (x * c + y).trace(level) == x.trace(level) * c + y.trace(level)
        assert x.frobenius(F.level_degree(level)).trace(level) == x.trace(level)
        assert (x * y).norm(level) == x.norm(level) * y.norm(level)
        assert x.trace(level).in_subfield(level)
