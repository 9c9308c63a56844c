"""Exhaustive character sums: Gauss sums, Gauss periods, and the auxiliary
sums A_s, B_{r,s}, A = sum chi(x(x-1)) and the count F(d, i).

Every sum first buckets its terms into integer counts (per character class,
and per trace value for the Gauss sum) with numpy, then converts to the exact
ring once.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .chars import Character
from .cyclo import CycloInt, Eisenstein
from .errors import FieldTooLarge, InvalidParams
from .ffield import FFElt, FieldHandle, size_cap


@dataclass(frozen=True)
class GaussSumResult:
    """G(beta, chi); ``value`` is a plain int for the principal character."""

    value: CycloInt | int
    params: dict = dc_field(default_factory=dict, compare=False)

    @property
    def rational(self) -> int | None:
        if isinstance(self.value, int):
            return self.value
        return self.value.is_rational()

    def abs_squared(self) -> int:
        if isinstance(self.value, int):
            return self.value * self.value
        n = (self.value * self.value.conj()).is_rational()
        assert n is not None, "G * conj(G) must be rational"
        return n

    def to_json(self) -> dict:
        v = self.value
        out = dict(self.params)
        out["rational"] = self.rational
        if isinstance(v, CycloInt):
            out["value"] = v.to_json()
            z = v.to_complex()
        else:
            out["value"] = v
            z = complex(v)
        out["complex"] = [z.real, z.imag]
        out["abs_squared"] = self.abs_squared()
        return out


def value_from_counts(counts, m: int):
    """Sum_k counts[k] * zeta_m^k as an int (m = 1), Eisenstein (m = 3) or CycloInt."""
    counts = [int(c) for c in counts]
    if m == 1:
        return counts[0]
    if m == 3:
        return Eisenstein.from_counts(*counts)
    return CycloInt.from_full(np.array(counts, dtype=object)[:, None], m, 1)


def class_counts(chr_: Character, codes: np.ndarray) -> np.ndarray:
    """How many of ``codes`` fall in each character class (zeros are dropped)."""
    cls = chr_.table[np.asarray(codes, dtype=np.int64)]
    return np.bincount(cls[cls >= 0], minlength=chr_.m)


def _require_field(field: FieldHandle, chr_: Character) -> None:
    if chr_.field != field:
        raise InvalidParams(f"character lives on {chr_.field!r}, not {field!r}")
    if field.q > size_cap():
        raise FieldTooLarge(f"F_{field.q} exceeds the size cap")


def class_trace_counts(field: FieldHandle, chr_: Character, beta: int = 1) -> np.ndarray:
    """m x p matrix: entry (k, t) counts y != 0 with chi(y) = zeta^k and Tr(beta*y) = t."""
    _require_field(field, chr_)
    ys = np.arange(1, field.q, dtype=np.int64)
    cls = chr_.table[ys]
    tr = field.trace_table[field.mul_arr(np.int64(beta), ys)]
    m, p = chr_.m, field.p
    return np.bincount(cls * p + tr, minlength=m * p).reshape(m, p)


def gauss_sum(field: FieldHandle, chr_: Character, beta=1) -> GaussSumResult:
    """G(beta, chi) = sum_y chi(y) zeta_p^Tr(beta*y), computed exactly."""
    b = field.code_of(beta)
    counts = class_trace_counts(field, chr_, b)
    value = CycloInt.from_full(counts, chr_.m, field.p)
    params = {
        "field": field.describe(),
        "character": chr_.describe(),
        "beta_arg": FFElt(field, b).coeffs,
    }
    if chr_.m == 1:
        n = value.is_rational()
        assert n is not None
        return GaussSumResult(n, params)
    return GaussSumResult(value, params)


def gauss_periods(chr_: Character) -> list[CycloInt]:
    """[G_0, ..., G_{m-1}] with G_j = sum over chi(x) = zeta^j of zeta_p^Tr(x), in Z[zeta_p]."""
    field = chr_.field
    if chr_.is_trivial():
        raise InvalidParams("Gauss periods need a nontrivial character")
    counts = class_trace_counts(field, chr_, 1)
    return [CycloInt.from_full(row[None, :], 1, field.p) for row in counts]


def combine_periods(periods: list[CycloInt], m: int) -> CycloInt:
    """sum_j zeta_m^j G_j in Z[zeta_m, zeta_p]."""
    p = periods[0].p
    full = np.zeros((m, p), dtype=object)
    for j, G in enumerate(periods):
        full[j, :] = G.full()[0, :]
    return CycloInt.from_full(full, m, p)


def a_counts(chr_: Character, alpha, level: int) -> np.ndarray:
    """Class counts of chi(y + alpha) for y in the level-``level`` subfield."""
    F = chr_.field
    a = F.code_of(alpha)
    sub = np.arange(F.level_size(level), dtype=np.int64)
    return class_counts(chr_, F.add_arr(sub, np.int64(a)))


def a_sum(chr_: Character, alpha, level: int):
    """A_s(alpha) = sum_{y in F_{p^s}} chi(y + alpha)."""
    return value_from_counts(a_counts(chr_, alpha, level), chr_.m)


def b_terms(F: FieldHandle, alpha, r: int, level: int) -> np.ndarray:
    """Codes of 1 + sum_{i=1}^{r-1} z_i alpha^i over all z_i in the subfield."""
    a = F.code_of(alpha)
    Qs = F.level_size(level)
    if Qs ** (r - 1) > size_cap():
        raise FieldTooLarge(f"B-sum needs {Qs ** (r - 1)} terms")
    sub = np.arange(Qs, dtype=np.int64)
    terms = np.ones(1, dtype=np.int64)
    for i in range(1, r):
        shifted = F.mul_arr(sub, np.int64(F.pow(a, i)))
        terms = F.add_arr(terms[:, None], shifted[None, :]).ravel()
    return terms


def b_counts(chr_: Character, alpha, r: int, level: int) -> np.ndarray:
    return class_counts(chr_, b_terms(chr_.field, alpha, r, level))


def b_sum(chr_: Character, alpha, r: int, level: int):
    """B_{r,s}(alpha) = sum over z_1..z_{r-1} in F_{p^s} of chi(1 + sum z_i alpha^i)."""
    return value_from_counts(b_counts(chr_, alpha, r, level), chr_.m)


def jacobi_counts(chr_: Character) -> np.ndarray:
    F = chr_.field
    xs = np.arange(F.q, dtype=np.int64)
    return class_counts(chr_, F.mul_arr(xs, F.add_arr(xs, np.int64(F.neg(1)))))


def jacobi_a(chr_: Character):
    """A = sum_x chi(x(x-1))."""
    return value_from_counts(jacobi_counts(chr_), chr_.m)


def quad_counts(chr_: Character, d) -> np.ndarray:
    """Class counts of chi(z^2 - d) over z in the character's field."""
    F = chr_.field
    zs = np.arange(F.q, dtype=np.int64)
    return class_counts(chr_, F.add_arr(F.mul_arr(zs, zs), np.int64(F.neg(F.code_of(d)))))


def quad_sum(chr_: Character, d):
    """sum_z chi(z^2 - d)."""
    return value_from_counts(quad_counts(chr_, d), chr_.m)


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def f_count(p: int, g: int, d: int, i: int) -> int:
    """F(d, i) = sum over cubes y in F_p^* of Legendre((g^i y + d) / p).

    Plain modular arithmetic, independent of the table-driven field code.
    """
    if (p - 1) % 3:
        raise InvalidParams("F(d, i) needs p = 1 mod 3")
    gi = pow(g, i, p)
    e = (p - 1) // 3
    return sum(legendre(gi * y + d, p) for y in range(1, p) if pow(y, e, p) == 1)
