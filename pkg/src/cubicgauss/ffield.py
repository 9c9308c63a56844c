"""Finite fields F_{p^n} built as towers of simple extensions over F_p.

Elements are encoded as integer *codes*: an element with flat coefficient
vector ``(c_0, ..., c_{n-1})`` over F_p (basis ``alpha_2^i * alpha_1^j``, with
the lower step varying fastest) has code ``sum(c_k * p**k)``.  Because the
encoding is nested, the elements of the level-``l`` subfield are exactly the
codes ``0 .. q_l - 1``, so embedding a subfield element is the identity on
codes.

Every field eagerly builds a discrete-log table on construction, which makes
multiplication, powering, Frobenius and power-class tests O(1).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    FieldTooLarge,
    InvalidParams,
    NoSuchBinomial,
    NotPrime,
    ReducibleBinomial,
)

DEFAULT_SIZE_CAP = 10**6


def size_cap() -> int:
    """Element-count cap, overridable with the GAUSS_SIZE_CAP environment variable."""
    raw = os.environ.get("GAUSS_SIZE_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InvalidParams(f"GAUSS_SIZE_CAP is not an integer: {raw!r}") from None
    return DEFAULT_SIZE_CAP


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Step:
    """One extension step of degree ``degree`` over the field below.

    Exactly one of ``beta`` (defining binomial X^r - beta) and ``modulus``
    (low coefficients c_0..c_{r-1} of a monic X^r + ... + c_0) is set; both are
    stored as codes of the field below.
    """

    degree: int
    beta: int | None = None
    modulus: tuple[int, ...] | None = None

    @property
    def is_binomial(self) -> bool:
        return self.beta is not None


class FieldHandle:
    """An immutable finite field F_{p^n}, possibly a tower of extensions.

    Build instances with :func:`make_field`; construction is cached.
    """

    def __init__(self, p: int, steps: tuple[Step, ...]):
        self.p = p
        self.steps = steps
        self.level = len(steps)
        self.degrees = tuple(s.degree for s in steps)
        self.n = int(np.prod(self.degrees, dtype=object)) if steps else 1
        self.q = p**self.n
        self.base: FieldHandle | None = _build(p, steps[:-1]) if steps else None
        self.r = steps[-1].degree if steps else 1
        self.Q = self.base.q if self.base is not None else p
        if steps:
            top = steps[-1]
            if top.is_binomial:
                self._red = [top.beta] + [0] * (self.r - 1)
            else:
                self._red = [self.base.neg(c) for c in top.modulus]
        self._pk = [p**k for k in range(self.n)]
        self._build_tables()

    # construction ---------------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        if self.level == 0:
            self.generator = _primitive_root(self.p)
            mul_g = lambda x: x * self.generator % self.p  # noqa: E731
        else:
            self.generator = self._search_generator()
            g = self.generator
            mul_g = lambda x: self._slow_mul(x, g)  # noqa: E731
        exp = [0] * (q - 1)
        log = [-1] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = mul_g(x)
        if x != 1 or any(v < 0 for v in log[1:]):
            raise InvalidParams("defining polynomial does not give a field")
        self._exp = exp
        self._log = log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)

    def _search_generator(self) -> int:
        order = self.q - 1
        cofactors = [order // l for l in prime_factors(order)]
        for c in range(2, self.q):
            if all(self._slow_pow(c, e) != 1 for e in cofactors):
                return c
        raise InvalidParams("no generator found; defining polynomial is reducible")

    def _slow_mul(self, a: int, b: int) -> int:
        B, r = self.base, self.r
        A, C = self.split(a), self.split(b)
        prod_ = [0] * (2 * r - 1)
        for i, ai in enumerate(A):
            if ai:
                for j, bj in enumerate(C):
                    if bj:
                        prod_[i + j] = B.add(prod_[i + j], B.mul(ai, bj))
        for k in range(2 * r - 2, r - 1, -1):
            c = prod_[k]
            if c:
                for i, red in enumerate(self._red):
                    if red:
                        prod_[k - r + i] = B.add(prod_[k - r + i], B.mul(c, red))
        return self.join(prod_[:r])

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    # identity ---------------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.steps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldHandle) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __reduce__(self):
        return (_build, (self.p, self.steps))

    def __repr__(self) -> str:
        return f"FieldHandle(p={self.p}, degrees={self.degrees}, q={self.q})"

    @property
    def element_count(self) -> int:
        return self.q

    @property
    def total_degree(self) -> int:
        return self.n

    def level_size(self, level: int) -> int:
        return self.subfield(level).q

    def subfield(self, level: int) -> FieldHandle:
        if not 0 <= level <= self.level:
            raise InvalidParams(f"level {level} outside tower of height {self.level}")
        f = self
        while f.level > level:
            f = f.base
        return f

    def contains(self, other: FieldHandle) -> bool:
        """True if ``other`` is a level of this tower (codes embed verbatim)."""
        return other.p == self.p and self.steps[: other.level] == other.steps

    # code helpers -------------------------------------------------------------

    def split(self, a: int) -> list[int]:
        """Top-level coefficients of ``a`` as codes of the field below."""
        out = []
        for _ in range(self.r):
            a, d = divmod(a, self.Q)
            out.append(d)
        return out

    def join(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.Q + c
        return code

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.n):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    # scalar arithmetic on codes ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.n == 1:
            return (a + b) % p
        res = 0
        for pk in self._pk:
            res += ((a + b) % p) * pk
            a //= p
            b //= p
        return res

    def neg(self, a: int) -> int:
        p = self.p
        res = 0
        for pk in self._pk:
            res += (-a % p) * pk
            a //= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def frob(self, a: int, k: int = 1) -> int:
        """a^(p^k)."""
        return self.pow(a, pow(self.p, k, self.q - 1) or (self.q - 1))

    def dlog(self, a: int) -> int:
        """Discrete log of a nonzero code with respect to ``self.generator``."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def order(self, a: int) -> int:
        from math import gcd

        return (self.q - 1) // gcd(self.dlog(a), self.q - 1)

    def scalar(self, n: int) -> int:
        return n % self.p

    # vectorised arithmetic on numpy code arrays --------------------------------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pk in self._pk:
            res += ((a // pk + b // pk) % p) * pk
        return res

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log_table[a], self.log_table[b]
        out = self.exp_table[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace Tr_{F_q/F_p} of every code, as an int64 array.

        Traces of the p-adic basis vectors come from Frobenius iteration; the
        rest follows by F_p-linearity.
        """
        p = self.p
        basis_tr = [self.trace(pk, 0) for pk in self._pk]
        codes = np.arange(self.q, dtype=np.int64)
        acc = np.zeros(self.q, dtype=np.int64)
        for pk, t in zip(self._pk, basis_tr):
            acc += ((codes // pk) % p) * t
        return acc % p

    # field-theoretic maps -----------------------------------------------------

    def level_degree(self, level: int) -> int:
        return self.subfield(level).n

    def trace(self, a: int, level: int = 0) -> int:
        """Relative trace down to the level-``level`` subfield: sum of a^(p^(d*j))."""
        d = self.level_degree(level)
        res, x = 0, a
        for _ in range(self.n // d):
            res = self.add(res, x)
            x = self.frob(x, d)
        return res

    def norm(self, a: int, level: int = 0) -> int:
        d = self.level_degree(level)
        if a == 0:
            return 0
        e = sum(self.p ** (d * j) for j in range(self.n // d))
        return self.pow(a, e)

    def power_class(self, a: int, m: int) -> int | None:
        """dlog(a) mod m, or None for a == 0; 0 means ``a`` is an m-th power."""
        if a == 0:
            return None
        from math import gcd

        g = gcd(m, self.q - 1)
        if g == 1:
            return 0
        if g != m:
            raise InvalidParams(f"power classes mod {m} undefined: gcd(m, q-1) = {g}")
        return self._log[a] % m

    def is_square(self, a: int) -> bool:
        return a == 0 or self._log[a] % 2 == 0

    # element-level API --------------------------------------------------------

    def __call__(self, value) -> FFElt:
        return FFElt(self, self.code_of(value))

    def code_of(self, value) -> int:
        """Convert an int, FFElt or nested coefficient list to a code of this field."""
        if isinstance(value, FFElt):
            if not self.contains(value.field):
                raise TypeError(f"{value.field!r} is not a subfield of {self!r}")
            return value.code
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        coeffs = list(value)
        if self.level == 0:
            if len(coeffs) != 1:
                raise InvalidParams("prime-field element takes one coefficient")
            return int(coeffs[0]) % self.p
        if len(coeffs) > self.r:
            raise InvalidParams(f"expected at most {self.r} coefficients, got {len(coeffs)}")
        coeffs += [0] * (self.r - len(coeffs))
        return self.join([self.base.code_of(c) for c in coeffs])

    @property
    def zero(self) -> FFElt:
        return FFElt(self, 0)

    @property
    def one(self) -> FFElt:
        return FFElt(self, 1)

    def alpha(self, level: int | None = None) -> FFElt:
        """Residue class of X in the extension step that creates ``level``."""
        level = self.level if level is None else level
        if level < 1:
            raise InvalidParams("the prime field has no adjoined root")
        return FFElt(self, self.subfield(level - 1).q)

    def gen(self) -> FFElt:
        return FFElt(self, self.generator)

    def elements(self) -> Iterator[FFElt]:
        for c in range(self.q):
            yield FFElt(self, c)

    def describe(self) -> dict:
        """JSON-friendly parameters recording how this field was built."""
        steps = []
        for i, s in enumerate(self.steps):
            below = self.subfield(i)
            if s.is_binomial:
                steps.append({"degree": s.degree, "beta": below(0).with_code(s.beta).coeffs})
            else:
                steps.append(
                    {"degree": s.degree, "modulus": [below(0).with_code(c).coeffs for c in s.modulus]}
                )
        return {"p": self.p, "steps": steps, "q": self.q}


class FFElt:
    """An element of a :class:`FieldHandle`."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldHandle, code: int):
        self.field = field
        self.code = int(code)

    def with_code(self, code: int) -> FFElt:
        return FFElt(self.field, code)

    def _coerce(self, other) -> tuple[FieldHandle, int, int]:
        if isinstance(other, FFElt):
            if self.field.contains(other.field):
                return self.field, self.code, other.code
            if other.field.contains(self.field):
                return other.field, self.code, other.code
            raise TypeError("elements of unrelated fields")
        if isinstance(other, (int, np.integer)):
            return self.field, self.code, int(other) % self.field.p
        return NotImplemented

    def _binop(self, other, op):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        f, a, b = c
        return FFElt(f, getattr(f, op)(a, b))

    def __add__(self, other):
        return self._binop(other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, "sub")

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._binop(other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        f, a, b = c
        return FFElt(f, f.mul(a, f.inv(b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __neg__(self):
        return FFElt(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FFElt(self.field, self.field.pow(self.code, e))

    def __eq__(self, other) -> bool:
        c = self._coerce(other) if isinstance(other, (FFElt, int, np.integer)) else NotImplemented
        if c is NotImplemented:
            return NotImplemented
        return c[1] == c[2]

    def __hash__(self) -> int:
        return hash(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def inverse(self) -> FFElt:
        return FFElt(self.field, self.field.inv(self.code))

    def frobenius(self, k: int = 1) -> FFElt:
        return FFElt(self.field, self.field.frob(self.code, k))

    def trace(self, level: int = 0) -> FFElt:
        f = self.field
        return FFElt(f.subfield(level), f.trace(self.code, level))

    def norm(self, level: int = 0) -> FFElt:
        f = self.field
        return FFElt(f.subfield(level), f.norm(self.code, level))

    def order(self) -> int:
        return self.field.order(self.code)

    def power_class(self, m: int) -> int | None:
        return self.field.power_class(self.code, m)

    def in_subfield(self, level: int) -> bool:
        return self.code < self.field.level_size(level)

    def restrict(self, level: int) -> FFElt:
        """The same element viewed in the level-``level`` subfield."""
        if not self.in_subfield(level):
            raise InvalidParams(f"{self} does not lie in subfield level {level}")
        return FFElt(self.field.subfield(level), self.code)

    @property
    def coeffs(self):
        """Nested coefficient vector: ints for F_p, lists for each tower level."""
        f = self.field
        if f.level == 0:
            return self.code
        return [FFElt(f.base, c).coeffs for c in f.split(self.code)]

    @property
    def flat(self) -> list[int]:
        return self.field.digits(self.code)

    def __int__(self) -> int:
        if self.field.level and self.code >= self.field.p:
            raise ValueError(f"{self} is not in the prime field")
        return self.code

    def __repr__(self) -> str:
        return f"FFElt({self.coeffs!r}, q={self.field.q})"


def _primitive_root(p: int) -> int:
    cofactors = [(p - 1) // l for l in prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
    if p == 2:
        return 1
    raise AssertionError("unreachable: every prime has a primitive root")


@lru_cache(maxsize=64)
def _build(p: int, steps: tuple[Step, ...]) -> FieldHandle:
    return FieldHandle(p, steps)


# ---------------------------------------------------------------------------
# polynomials over a field (coefficient lists of codes, lowest degree first)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(F: FieldHandle, a: list[int], f: list[int]) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    lead_inv = F.inv(f[-1])
    while len(a) - 1 >= df:
        c = F.mul(a[-1], lead_inv)
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            if fi:
                a[shift + i] = F.sub(a[shift + i], F.mul(c, fi))
        _trim(a)
    return a


def _poly_mul(F: FieldHandle, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _trim(out)


def _poly_powmod(F: FieldHandle, a: list[int], e: int, f: list[int]) -> list[int]:
    result = [1]
    a = _poly_mod(F, a, f)
    while e:
        if e & 1:
            result = _poly_mod(F, _poly_mul(F, result, a), f)
        a = _poly_mod(F, _poly_mul(F, a, a), f)
        e >>= 1
    return result


def _poly_gcd(F: FieldHandle, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(F, a, b)
    return a


def _poly_sub(F: FieldHandle, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([F.sub(x, y) for x, y in zip(a, b)])


def is_irreducible(F: FieldHandle, f: Sequence[int]) -> bool:
    """Rabin's test for a monic polynomial ``f`` (codes, low degree first) over F.

    f of degree r is irreducible iff X^(Q^r) = X mod f and
    gcd(X^(Q^(r/l)) - X, f) = 1 for every prime l | r.
    """
    f = _trim(list(f))
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    Q = F.q
    X = [0, 1]

    def x_q_pow(k: int) -> list[int]:
        h = X
        for _ in range(k):
            h = _poly_powmod(F, h, Q, f)
        return h

    if _poly_sub(F, x_q_pow(r), X):
        return False
    for l in prime_factors(r):
        g = _poly_gcd(F, _poly_sub(F, x_q_pow(r // l), X), f)
        if len(g) > 1:
            return False
    return True


def binomial_criterion(F: FieldHandle, beta: int, r: int) -> bool:
    """Order criterion for irreducibility of X^r - beta over F (r >= 2)."""
    if beta == 0:
        return False
    e = F.order(beta)
    cof = (F.q - 1) // e
    for l in prime_factors(r):
        if e % l or cof % l == 0:
            return False
    if r % 4 == 0 and F.q % 4 != 1:
        return False
    return True


def binomial_is_irreducible(F: FieldHandle, beta: int, r: int) -> bool:
    by_order = binomial_criterion(F, beta, r)
    by_rabin = is_irreducible(F, [F.neg(beta)] + [0] * (r - 1) + [1])
    if by_order != by_rabin:
        raise AssertionError(f"irreducibility tests disagree for X^{r} - {beta} over {F!r}")
    return by_order


def find_irreducible_binomial(
    field: FieldHandle,
    r: int,
    *,
    must_be_cube: bool = False,
    must_be_quadratic_nonresidue: bool = False,
    must_be_noncube: bool = False,
) -> FFElt:
    """Smallest beta (in code order) with X^r - beta irreducible and the constraints met."""
    if r < 2:
        raise InvalidParams("binomial degree must be at least 2")
    q = field.q
    if any((q - 1) % l for l in prime_factors(r)) or (r % 4 == 0 and q % 4 != 1):
        raise NoSuchBinomial(f"no irreducible X^{r} - beta over F_{q}")
    for beta in range(1, q):
        if must_be_cube and field.power_class(beta, 3) != 0:
            continue
        if must_be_noncube and field.power_class(beta, 3) == 0:
            continue
        if must_be_quadratic_nonresidue and field.is_square(beta):
            continue
        if binomial_is_irreducible(field, beta, r):
            return FFElt(field, beta)
    raise NoSuchBinomial(f"no irreducible X^{r} - beta over F_{q} meets the constraints")


def find_irreducible_poly(field: FieldHandle, r: int) -> tuple[int, ...]:
    """Low coefficients of the first monic irreducible degree-r polynomial in code order."""
    Q = field.q
    for idx in range(1, Q**r):
        low = []
        t = idx
        for _ in range(r):
            t, d = divmod(t, Q)
            low.append(d)
        if low[0] == 0:
            continue
        if is_irreducible(field, low + [1]):
            return tuple(low)
    raise NoSuchBinomial(f"no irreducible polynomial of degree {r} over F_{Q}")


def _normalize_step(below: FieldHandle, step, index: int) -> Step:
    if isinstance(step, Step):
        # Step fields already hold codes of the field below
        r, beta, modulus = step.degree, step.beta, step.modulus
        if beta is not None:
            beta = FFElt(below, beta)
        if modulus is not None:
            modulus = [FFElt(below, c) for c in modulus]
    else:
        r, beta = step
        modulus = None
        if isinstance(beta, dict):
            modulus = beta["modulus"]
            beta = None
    if r < 2:
        raise InvalidParams(f"extension degree must be at least 2, got {r}")
    if modulus is not None:
        if index != 0:
            raise InvalidParams("general moduli are only supported at the first step")
        mod = tuple(below.code_of(c) for c in modulus)
        if len(mod) != r:
            raise InvalidParams(f"modulus needs {r} low coefficients")
        if not is_irreducible(below, list(mod) + [1]):
            raise InvalidParams(f"modulus {list(modulus)} is reducible over F_{below.q}")
        return Step(r, modulus=mod)
    code = below.code_of(beta)
    if not binomial_is_irreducible(below, code, r):
        raise ReducibleBinomial(f"X^{r} - {beta} is reducible over F_{below.q}")
    return Step(r, beta=code)


def make_field(p: int, steps: Sequence = (), size_cap_: int | None = None) -> FieldHandle:
    """Construct F_p extended by the given steps.

    Each step is a :class:`Step` or a pair ``(r, beta)``; ``beta`` may be an
    int, an element of the field below, a nested coefficient list, or
    ``{"modulus": [c_0, ..., c_{r-1}]}`` for a general monic polynomial.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise InvalidParams("characteristic must be odd")
    cap = size_cap() if size_cap_ is None else size_cap_
    total = 1
    for s in steps:
        total *= s.degree if isinstance(s, Step) else s[0]
    if p**total > cap:
        raise FieldTooLarge(f"F_{p}^{total} has {p**total} elements, cap is {cap}")
    field = _build(p, ())
    for i, s in enumerate(steps):
        field = _build(p, field.steps + (_normalize_step(field, s, i),))
    return field


def extend(
    field: FieldHandle,
    r: int,
    *,
    cube: bool = False,
    qnr: bool = False,
    noncube: bool = False,
    size_cap_: int | None = None,
) -> FieldHandle:
    """Extend by the first admissible binomial, falling back to a general
    irreducible polynomial when no binomial exists and no constraint was asked."""
    cap = size_cap() if size_cap_ is None else size_cap_
    if field.q**r > cap:
        raise FieldTooLarge(f"F_{field.q}^{r} has {field.q**r} elements, cap is {cap}")
    try:
        beta = find_irreducible_binomial(
            field, r, must_be_cube=cube, must_be_quadratic_nonresidue=qnr, must_be_noncube=noncube
        )
        step = Step(r, beta=beta.code)
    except NoSuchBinomial:
        if cube or qnr or noncube or field.level:
            raise
        step = Step(r, modulus=find_irreducible_poly(field, r))
    return make_field(field.p, field.steps + (step,), size_cap_=cap)


def find_generator(field: FieldHandle) -> FFElt:
    """First element (in code order) of multiplicative order q - 1."""
    return field.gen()


def power_class(x: FFElt, m: int) -> int | None:
    return x.power_class(m)


def trace(x: FFElt, down_to_level: int = 0) -> FFElt:
    return x.trace(down_to_level)


def norm(x: FFElt, down_to_level: int = 0) -> FFElt:
    return x.norm(down_to_level)

