"""Multiplicative characters of finite fields, stored as power-class tables."""

from __future__ import annotations

import numpy as np

from .cyclo import Eisenstein
from .errors import InvalidParams, OrderNotDividing
from .ffield import FFElt, FieldHandle

ZERO = None  # chi(0); nonzero values are exponents k standing for zeta_m^k


class Character:
    """A multiplicative character of order dividing ``m`` on ``field``.

    ``table[code]`` is the exponent k in chi(x) = zeta_m^k, or -1 for x = 0.
    """

    def __init__(self, field: FieldHandle, m: int, table: np.ndarray, g: int | None, origin: str):
        self.field = field
        self.m = m
        self.table = table
        self.table.flags.writeable = False
        self.g = g
        self.origin = origin

    def __call__(self, x) -> int | None:
        code = self.field.code_of(x)
        k = int(self.table[code])
        return ZERO if k < 0 else k

    def eval_code(self, code: int) -> int | None:
        k = int(self.table[code])
        return ZERO if k < 0 else k

    def as_eisenstein(self, x) -> Eisenstein:
        if self.m != 3:
            raise InvalidParams("Eisenstein values need a character of order 3")
        k = self(x)
        return Eisenstein(0, 0) if k is ZERO else Eisenstein.zeta(k)

    def is_trivial(self) -> bool:
        return not np.any(self.table[1:])

    def conjugate(self) -> Character:
        t = np.where(self.table < 0, -1, (-self.table) % self.m)
        return Character(self.field, self.m, t, None, f"conj({self.origin})")

    def restrict(self, level: int) -> Character:
        sub = self.field.subfield(level)
        return Character(sub, self.m, self.table[: sub.q].copy(), None, f"{self.origin}|F_{sub.q}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (
            self.field == other.field
            and self.m == other.m
            and np.array_equal(self.table, other.table)
        )

    __hash__ = None

    def describe(self) -> dict:
        desc = {"m": self.m, "origin": self.origin}
        if self.g is not None:
            desc["g"] = FFElt(self.field, self.g).coeffs
        return desc

    def __repr__(self) -> str:
        return f"Character(m={self.m}, q={self.field.q}, {self.origin})"


def make_character(field: FieldHandle, m: int, g=None) -> Character:
    """The order-m character with chi(g^(h + m*j)) = zeta_m^h.

    ``g`` defaults to the field's first generator; it may be an int (prime
    field), an :class:`FFElt`, or a coefficient list.
    """
    q = field.q
    if m < 1:
        raise InvalidParams("character order must be positive")
    if m == 1:
        table = np.zeros(q, dtype=np.int64)
        table[0] = -1
        return Character(field, 1, table, None, "principal")
    if (q - 1) % m:
        raise OrderNotDividing(f"m={m} does not divide |F_{q}^*| = {q - 1}")
    g_code = field.generator if g is None else field.code_of(g)
    if g_code == 0 or field.order(g_code) != q - 1:
        raise InvalidParams(f"{FFElt(field, g_code)!r} is not a generator of F_{q}^*")
    k_inv = pow(field.dlog(g_code), -1, q - 1)
    logs = field.log_table
    table = np.where(logs < 0, -1, (logs * k_inv) % (q - 1) % m)
    label = f"chi_{m}[g={FFElt(field, g_code).coeffs}]"
    return Character(field, m, table.astype(np.int64), g_code, label)


def principal(field: FieldHandle) -> Character:
    return make_character(field, 1)


def lift_by_norm(chr_: Character, target: FieldHandle) -> Character:
    """chi'(x) = chi(N(x)) with N the norm from ``target`` down to chr_.field."""
    if not target.contains(chr_.field):
        raise InvalidParams(f"{target!r} does not extend {chr_.field!r}")
    d = chr_.field.n
    e = sum(target.p ** (d * j) for j in range(target.n // d)) % (target.q - 1)
    codes = np.arange(target.q, dtype=np.int64)
    logs = target.log_table
    norms = np.where(codes == 0, 0, target.exp_table[(logs * e) % (target.q - 1)])
    table = chr_.table[norms].copy()
    return Character(target, chr_.m, table, None, f"lift({chr_.origin})")


def chi_eval(chr_: Character, x) -> int | None:
    return chr_(x)


def chi_as_eisenstein(chr_: Character, x) -> Eisenstein:
    return chr_.as_eisenstein(x)


def restrict(chr_: Character, level: int) -> Character:
    return chr_.restrict(level)


def is_trivial(chr_: Character) -> bool:
    return chr_.is_trivial()


def conjugate(chr_: Character) -> Character:
    return chr_.conjugate()

