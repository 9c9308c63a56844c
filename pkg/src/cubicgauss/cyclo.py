"""Exact arithmetic in Z[zeta_m, zeta_p] and in the Eisenstein integers Z[zeta_3].

A :class:`CycloInt` is stored in the power basis ``zeta_m^a * zeta_p^b`` with
``a < m - 1`` and ``b < p - 1``, which is an integral basis for distinct primes
m and p, so ring equality is coefficient equality.  Either root order may be 1
(the factor is then absent and its index range is ``{0}``).

Products go through the group ring Z[C_m x C_p] = Z[C_mp] (CRT index
``a*p + b*m mod mp``) as one cyclic convolution, using int64 when the
coefficient bound allows it and Python integers otherwise.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import MixedRings

_INT64_SAFE = 2**60


def jint(n: int):
    """JSON encoding of an integer: a number when it is safely representable, else a decimal string."""
    n = int(n)
    return n if -(2**53) < n < 2**53 else str(n)


def _check_order(k: int) -> None:
    if k < 1:
        raise ValueError(f"root order must be positive, got {k}")


@lru_cache(maxsize=None)
def _layout(m: int, p: int):
    from math import gcd

    _check_order(m)
    _check_order(p)
    if gcd(m, p) != 1:
        raise MixedRings(f"root orders {m} and {p} are not coprime")
    rm = m - 1 if m > 1 else 1
    rp = p - 1 if p > 1 else 1
    a = np.arange(m)[:, None]
    b = np.arange(p)[None, :]
    crt = (a * p + b * m) % (m * p)
    return rm, rp, crt


def _canonical(full: np.ndarray, m: int, p: int) -> tuple:
    """Reduce an m x p group-ring array by zeta^(k-1) = -(1 + ... + zeta^(k-2))."""
    if p > 1:
        full = full[:, : p - 1] - full[:, p - 1 : p]
    if m > 1:
        full = full[: m - 1, :] - full[m - 1 : m, :]
    return tuple(int(v) for v in full.ravel())


class CycloInt:
    """An element of Z[zeta_m, zeta_p] in canonical form (immutable)."""

    __slots__ = ("m", "p", "_c")

    def __init__(self, m: int, p: int, coeffs):
        rm, rp, _ = _layout(m, p)
        flat = [int(v) for row in coeffs for v in row]
        if len(coeffs) != rm or len(flat) != rm * rp:
            raise ValueError(f"expected a {rm}x{rp} coefficient matrix")
        self.m, self.p, self._c = m, p, tuple(flat)

    @classmethod
    def _raw(cls, m: int, p: int, flat: tuple) -> CycloInt:
        obj = object.__new__(cls)
        obj.m, obj.p, obj._c = m, p, flat
        return obj

    # constructors -----------------------------------------------------------

    @classmethod
    def integer(cls, n: int, m: int = 3, p: int = 1) -> CycloInt:
        rm, rp, _ = _layout(m, p)
        return cls._raw(m, p, (int(n),) + (0,) * (rm * rp - 1))

    @classmethod
    def zero(cls, m: int = 3, p: int = 1) -> CycloInt:
        return cls.integer(0, m, p)

    @classmethod
    def one(cls, m: int = 3, p: int = 1) -> CycloInt:
        return cls.integer(1, m, p)

    @classmethod
    def from_full(cls, full, m: int, p: int) -> CycloInt:
        """From an m x p array of coefficients of zeta_m^a zeta_p^b, a < m, b < p."""
        _layout(m, p)
        arr = np.asarray(full)
        if arr.shape != (m, p):
            raise ValueError(f"expected shape {(m, p)}, got {arr.shape}")
        if arr.dtype != object:
            arr = arr.astype(object)
        return cls._raw(m, p, _canonical(arr, m, p))

    @classmethod
    def monomial(cls, a: int, b: int, m: int = 3, p: int = 1, coeff: int = 1) -> CycloInt:
        full = np.zeros((m, p), dtype=object)
        full[a % m, b % p] = coeff
        return cls.from_full(full, m, p)

    @classmethod
    def zeta_m(cls, k: int = 1, m: int = 3, p: int = 1) -> CycloInt:
        return cls.monomial(k, 0, m, p)

    @classmethod
    def zeta_p(cls, k: int = 1, m: int = 3, p: int = 1) -> CycloInt:
        return cls.monomial(0, k, m, p)

    # views ------------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        rm, rp, _ = _layout(self.m, self.p)
        return rm, rp

    @property
    def coeffs(self) -> list[list[int]]:
        rm, rp = self.shape
        return [list(self._c[i * rp : (i + 1) * rp]) for i in range(rm)]

    def full(self, dtype=object) -> np.ndarray:
        rm, rp = self.shape
        out = np.zeros((self.m, self.p), dtype=dtype)
        out[:rm, :rp] = np.array(self._c, dtype=dtype).reshape(rm, rp)
        return out

    def max_abs(self) -> int:
        return max(abs(v) for v in self._c)

    def __repr__(self) -> str:
        terms = []
        rm, rp = self.shape
        for i, v in enumerate(self._c):
            if v:
                a, b = divmod(i, rp)
                mono = "*".join(
                    s for s in ((f"z{self.m}^{a}" if a else ""), (f"z{self.p}^{b}" if b else "")) if s
                )
                terms.append(f"{v}" + (f"*{mono}" if mono else ""))
        return f"CycloInt[{self.m},{self.p}](" + (" + ".join(terms) or "0") + ")"

    # equality ----------------------------------------------------------------

    def _same_ring(self, other) -> CycloInt:
        if isinstance(other, CycloInt):
            if (other.m, other.p) != (self.m, self.p):
                raise MixedRings(f"Z[z{self.m},z{self.p}] vs Z[z{other.m},z{other.p}]")
            return other
        if isinstance(other, (int, np.integer)):
            return CycloInt.integer(int(other), self.m, self.p)
        if isinstance(other, Eisenstein):
            if self.m != 3:
                raise MixedRings("Eisenstein integers need m = 3")
            return other.embed(self.p)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._same_ring(other)
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        return hash((self.m, self.p, self._c))

    # ring operations ----------------------------------------------------------

    def __add__(self, other) -> CycloInt:
        o = self._same_ring(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloInt._raw(self.m, self.p, tuple(x + y for x, y in zip(self._c, o._c)))

    __radd__ = __add__

    def __neg__(self) -> CycloInt:
        return CycloInt._raw(self.m, self.p, tuple(-x for x in self._c))

    def __sub__(self, other) -> CycloInt:
        o = self._same_ring(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloInt._raw(self.m, self.p, tuple(x - y for x, y in zip(self._c, o._c)))

    def __rsub__(self, other) -> CycloInt:
        return (-self) + other

    def __mul__(self, other) -> CycloInt:
        if isinstance(other, (int, np.integer)):
            k = int(other)
            return CycloInt._raw(self.m, self.p, tuple(k * x for x in self._c))
        o = self._same_ring(other)
        if o is NotImplemented:
            return NotImplemented
        return _convolve(self, o)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycloInt:
        if e < 0:
            raise ValueError("negative powers are not ring elements in general")
        result = CycloInt.one(self.m, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, k: int) -> CycloInt:
        """Divide by a nonzero integer; raises if the quotient is not integral."""
        if any(x % k for x in self._c):
            raise ValueError(f"{self!r} is not divisible by {k}")
        return CycloInt._raw(self.m, self.p, tuple(x // k for x in self._c))

    def lift(self, p: int) -> CycloInt:
        """Embed Z[zeta_m] (this element must have p = 1) into Z[zeta_m, zeta_p]."""
        if self.p == p:
            return self
        if self.p != 1:
            raise MixedRings(f"cannot move an element of Z[z{self.m},z{self.p}] to p={p}")
        full = np.zeros((self.m, p), dtype=object)
        full[:, 0] = self.full()[:, 0]
        return CycloInt.from_full(full, self.m, p)

    # automorphisms -------------------------------------------------------------

    def _permute(self, km: int, kp: int) -> CycloInt:
        src = self.full()
        out = np.zeros_like(src)
        a = (np.arange(self.m) * km) % self.m
        b = (np.arange(self.p) * kp) % self.p
        out[np.ix_(a, b)] = src
        return CycloInt._raw(self.m, self.p, _canonical(out, self.m, self.p))

    def conj(self) -> CycloInt:
        """Complex conjugation: zeta_m -> zeta_m^-1, zeta_p -> zeta_p^-1."""
        return self._permute(-1, -1)

    def galois(self, km: int = 1, kp: int = 1) -> CycloInt:
        """The automorphism zeta_m -> zeta_m^km, zeta_p -> zeta_p^kp (units mod m, p)."""
        from math import gcd

        if gcd(km, self.m) != 1 or gcd(kp, self.p) != 1:
            raise ValueError("exponents must be units")
        return self._permute(km, kp)

    # inspection -----------------------------------------------------------------

    def is_rational(self) -> int | None:
        if any(self._c[1:]):
            return None
        return self._c[0]

    def as_eisenstein(self) -> Eisenstein | None:
        """The value as a + b*zeta_3 when it has no zeta_p part (m = 3 only)."""
        if self.m != 3:
            return None
        rp = self.shape[1]
        if any(v for i, v in enumerate(self._c) if i % rp):
            return None
        return Eisenstein(self._c[0], self._c[rp])

    def to_complex(self) -> complex:
        rp = self.shape[1]
        total = 0j
        for i, v in enumerate(self._c):
            if v:
                a, b = divmod(i, rp)
                total += float(v) * cmath.exp(2j * cmath.pi * (a / self.m + b / self.p))
        return total

    def to_json(self) -> dict:
        return {"m": self.m, "p": self.p, "coeffs": [[jint(v) for v in row] for row in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> CycloInt:
        return cls(int(obj["m"]), int(obj["p"]), [[int(v) for v in row] for row in obj["coeffs"]])


def _convolve(x: CycloInt, y: CycloInt) -> CycloInt:
    m, p = x.m, y.p
    _, _, crt = _layout(m, p)
    N = m * p
    bound = x.max_abs() * y.max_abs() * N
    dtype = np.int64 if bound < _INT64_SAFE else object
    fx, fy = np.zeros(N, dtype=dtype), np.zeros(N, dtype=dtype)
    fx[crt.ravel()] = x.full(dtype).ravel()
    fy[crt.ravel()] = y.full(dtype).ravel()
    lin = np.convolve(fx, fy)
    cyc = lin[:N].copy()
    cyc[: N - 1] += lin[N:]
    return CycloInt._raw(m, p, _canonical(cyc[crt], m, p))


@dataclass(frozen=True)
class Eisenstein:
    """a + b*zeta_3 with arbitrary-precision integer coordinates."""

    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))

    @classmethod
    def from_counts(cls, c0: int, c1: int, c2: int) -> Eisenstein:
        """c0 + c1*zeta + c2*zeta^2 reduced with zeta^2 = -1 - zeta."""
        return cls(c0 - c2, c1 - c2)

    @classmethod
    def zeta(cls, k: int = 1) -> Eisenstein:
        return (cls(1, 0), cls(0, 1), cls(-1, -1))[k % 3]

    @staticmethod
    def units() -> list[Eisenstein]:
        return [Eisenstein(1, 0), Eisenstein(0, 1), Eisenstein(-1, -1),
                Eisenstein(-1, 0), Eisenstein(0, -1), Eisenstein(1, 1)]

    def _coerce(self, other):
        if isinstance(other, Eisenstein):
            return other
        if isinstance(other, (int, np.integer)):
            return Eisenstein(int(other), 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Eisenstein(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, CycloInt):
            return NotImplemented
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Eisenstein:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Eisenstein(1, 0), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> Eisenstein:
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def associates(self) -> list[Eisenstein]:
        """The 6 unit multiples of self followed by the 6 of its conjugate."""
        c = self.conj()
        return [u * self for u in self.units()] + [u * c for u in self.units()]

    def is_rational(self) -> int | None:
        return self.a if self.b == 0 else None

    def embed(self, p: int = 1) -> CycloInt:
        rm, rp, _ = _layout(3, p)
        flat = [0] * (rm * rp)
        flat[0], flat[rp] = self.a, self.b
        return CycloInt._raw(3, p, tuple(flat))

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2, self.b * 3**0.5 / 2)

    def to_json(self) -> dict:
        return {"a": jint(self.a), "b": jint(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> Eisenstein:
        return cls(int(obj["a"]), int(obj["b"]))

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*z3"


# functional aliases ------------------------------------------------------------


def cyc_add(x: CycloInt, y: CycloInt) -> CycloInt:
    return x + y


def cyc_neg(x: CycloInt) -> CycloInt:
    return -x


def cyc_mul(x: CycloInt, y: CycloInt) -> CycloInt:
    return x * y


def cyc_conj(x: CycloInt) -> CycloInt:
    return x.conj()


def cyc_is_rational(x: CycloInt) -> int | None:
    return x.is_rational()


def eis_norm(x: Eisenstein) -> int:
    return x.norm()


def eis_pow(x: Eisenstein, n: int) -> Eisenstein:
    return x**n


def eis_associates(x: Eisenstein) -> list[Eisenstein]:
    return x.associates()


def embed_eis(x: Eisenstein, p: int) -> CycloInt:
    return x.embed(p)


def to_complex(x) -> complex:
    return x.to_complex()
