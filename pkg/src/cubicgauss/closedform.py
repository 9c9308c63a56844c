"""Closed forms for cubic Gauss periods of primes p = 1 mod 6.

Representations p = x^2 + 3y^2, 4p = u^2 + 27v^2 and p = u'^2 + u'v' + v'^2,
the period polynomial q(z), the multiplication constants (a, b, c) of the
period algebra, r1/r2, the quadratic expressions for G_1 and G_2 in G_0, and
the predicted counts {B_0, B_1, B_2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .cyclo import Eisenstein
from .errors import NotOneModSix, NoValidAssociate
from .ffield import is_prime


def _require(p: int) -> None:
    if not is_prime(p) or p % 6 != 1:
        raise NotOneModSix(f"{p} is not a prime congruent to 1 mod 6")


@dataclass(frozen=True)
class Rep4p:
    u: int
    v_abs: int

    def __post_init__(self):
        assert self.u % 3 == 1 and self.v_abs > 0


@dataclass(frozen=True)
class PeriodData:
    """Coefficients and constants of the cubic period polynomial.

    ``q(z) = z^3 - s1 z^2 + s2 z - s3``; ``coeffs`` lists it constant-first.
    """

    p: int
    rep: Rep4p
    s1: int
    s2: int
    s3: int
    v_signed: int
    a: int
    b: int
    c: int
    r1: Fraction
    r2: Fraction

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (-self.s3, self.s2, -self.s1, 1)

    @property
    def discriminant(self) -> int:
        return cubic_discriminant(self.coeffs)

    def __str__(self) -> str:
        return poly_str(self.coeffs)


def rep_x2_3y2(p: int) -> tuple[int, int]:
    """The unique (x, y), both positive, with x^2 + 3y^2 = p."""
    _require(p)
    y = 1
    while 3 * y * y < p:
        x2 = p - 3 * y * y
        x = isqrt(x2)
        if x * x == x2:
            return x, y
        y += 1
    raise AssertionError(f"{p} = 1 mod 6 must be represented by x^2 + 3y^2")


def rep_4p(p: int) -> Rep4p:
    """4p = u^2 + 27 v^2 with u = 1 mod 3, from one of the three x^2+3y^2 forms of 4p."""
    x, y = rep_x2_3y2(p)
    for first, second in ((2 * x, 2 * y), (x - 3 * y, x + y), (x + 3 * y, x - y)):
        if second % 3 == 0:
            u, v = first, abs(second) // 3
            if u % 3 != 1:
                u = -u
            assert u * u + 27 * v * v == 4 * p
            return Rep4p(u, v)
    raise AssertionError("one of the three representations has its 3-part divisible by 3")


def _div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"{num} is not divisible by {den}")
    return q


def structure_constants(p: int, v_signed: int) -> tuple[int, int, int]:
    """(a, b, c) with G_0 G_1 = a G_0 + b G_1 + c G_2 for the labelling matching ``v_signed``."""
    rep = rep_4p(p)
    if abs(v_signed) != rep.v_abs:
        raise ValueError(f"|v| must be {rep.v_abs} for p = {p}")
    u = rep.u
    a = _div(2 * p - u + 9 * v_signed - 4, 18)
    b = _div(2 * p - u - 9 * v_signed - 4, 18)
    c = _div(p + 1 + u, 9)
    return a, b, c


def r1_r2(p: int, v_signed: int) -> tuple[Fraction, Fraction]:
    """Roots of t^2 - (s1 s2 - 3 s3) t + r1r2, split by the sign of v.

    r1 = G_0^2 G_1 + G_1^2 G_2 + G_2^2 G_0 and r2 is its transpose.  The sum is
    (-2 - up)/9 and the product (1 + pu + p^2 u^2 - 3p^3)/81; the square root of
    the discriminant is p|v|.
    """
    rep = rep_4p(p)
    if abs(v_signed) != rep.v_abs:
        raise ValueError(f"|v| must be {rep.v_abs} for p = {p}")
    total = Fraction(-2 - rep.u * p, 9)
    r1 = (total + p * v_signed) / 2
    r2 = (total - p * v_signed) / 2
    product = Fraction(1 + p * rep.u + p * p * rep.u * rep.u - 3 * p**3, 81)
    assert r1 * r2 == product
    return r1, r2


def period_polynomial(p: int, v_signed: int | None = None) -> PeriodData:
    rep = rep_4p(p)
    v = rep.v_abs if v_signed is None else v_signed
    s1 = -1
    s2 = -_div(p - 1, 3)
    s3 = _div((3 + rep.u) * p - 1, 27)
    a, b, c = structure_constants(p, v)
    r1, r2 = r1_r2(p, v)
    return PeriodData(p, rep, s1, s2, s3, v, a, b, c, r1, r2)


def periods_from_eta(p: int, u: int, v_signed: int) -> tuple[list[Fraction], list[Fraction]]:
    """Constant-first quadratic polynomials P1, P2 with G_1 = P1(G_0), G_2 = P2(G_0)."""
    if v_signed == 0:
        raise ValueError("v must be nonzero")
    v = v_signed
    g1 = [Fraction(2 - u - 9 * v - 4 * p, 18 * v), Fraction(4 - u - 3 * v, 6 * v), Fraction(1, v)]
    g2 = [-Fraction(9 * v - u - 4 * p + 2, 18 * v), -Fraction(3 * v - u + 4, 6 * v), Fraction(-1, v)]
    return g1, g2


def rep_eisenstein(p: int) -> tuple[int, int]:
    """Some positive (u', v') with u'^2 + u'v' + v'^2 = p."""
    _require(p)
    for v in range(1, isqrt(p) + 1):
        for u in range(1, isqrt(p) + 1):
            if u * u + u * v + v * v == p:
                return u, v
    raise AssertionError(f"{p} = 1 mod 6 must be a norm from Z[zeta_3]")


@dataclass(frozen=True)
class BFactorPrediction:
    p: int
    r: int
    eis_rep: tuple[int, int]
    XY: Eisenstein
    B: tuple[int, int, int]

    @property
    def X(self) -> int:
        return self.XY.a

    @property
    def Y(self) -> int:
        return -self.XY.b


def predict_b_factor(p: int, r: int) -> BFactorPrediction:
    """Counts {B_0, B_1, B_2} (sorted) from X - zeta Y = (1 - zeta)(u' - v' zeta)^(r-1)."""
    if r < 2:
        raise ValueError("r must be at least 2")
    u, v = rep_eisenstein(p)
    P = p ** (r - 1)
    base = Eisenstein(1, -1) * Eisenstein(u, -v) ** (r - 1)
    found: dict[tuple[int, int, int], Eisenstein] = {}
    for w in base.associates():
        X, Y = w.a, -w.b
        assert X * X + X * Y + Y * Y == 3 * P
        if (X + P) % 3 or (Y + P) % 3:
            continue
        B0, B1 = (X + P) // 3, (Y + P) // 3
        B2 = P - B0 - B1
        if min(B0, B1, B2) < 0:
            continue
        found.setdefault(tuple(sorted((B0, B1, B2))), w)
    if not found:
        raise NoValidAssociate(f"no associate gives admissible counts for p={p}, r={r}")
    if len(found) != 1:
        raise NoValidAssociate(f"associates disagree on the multiset: {sorted(found)}")
    (B, w), = found.items()
    return BFactorPrediction(p, r, (u, v), w, B)


def b_form(B0: int, B1: int, B2: int) -> int:
    return B0 * B0 + B1 * B1 + B2 * B2 - B0 * B1 - B1 * B2 - B2 * B0


def cubic_discriminant(coeffs) -> int:
    """Discriminant of d + c z + b z^2 + a z^3 (constant-first)."""
    d, c, b, a = coeffs
    return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def has_integer_root(coeffs) -> bool:
    """Rational root test for a monic integer cubic (roots must divide the constant)."""
    d = coeffs[0]
    if d == 0:
        return True
    cands = [k for k in range(1, abs(d) + 1) if d % k == 0]
    return any(sum(c * z**i for i, c in enumerate(coeffs)) == 0 for k in cands for z in (k, -k))


def poly_str(coeffs, var: str = "z") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and abs(c) == 1:
            s = mono
        else:
            s = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+") + s)
    out = "".join(terms) or "0"
    return out[1:] if out.startswith("+") else out


def primes_1_mod_6(pmax: int) -> list[int]:
    return [p for p in range(7, pmax + 1, 6) if is_prime(p)]
