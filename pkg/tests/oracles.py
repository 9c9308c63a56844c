"""Slow reference implementations that share no code with the package.

Fields are F_p[X]/(f) with elements as coefficient tuples (lowest degree
first); sums are evaluated both as exact (class, trace) counts and as
floating complex numbers.
"""

from __future__ import annotations

import cmath
from collections import Counter
from itertools import product


class PolyField:
    def __init__(self, p: int, low: tuple[int, ...] = ()):
        """F_p[X]/(X^n + low[n-1] X^(n-1) + ... + low[0]); ``low = ()`` is F_p."""
        self.p = p
        self.low = tuple(c % p for c in low)
        self.n = max(1, len(low))
        self.q = p**self.n

    def elements(self):
        return [tuple(c) for c in product(range(self.p), repeat=self.n)]

    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def scalar(self, k: int):
        return (k % self.p,) + (0,) * (self.n - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        if n > 1:
            for d in range(2 * n - 2, n - 1, -1):
                c = prod[d] % p
                if c:
                    prod[d] = 0
                    for k, l in enumerate(self.low):
                        prod[d - n + k] -= c * l
        return tuple(v % p for v in prod[:n])

    def pow(self, a, e: int):
        out, base = self.one(), a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def is_zero(self, a) -> bool:
        return not any(a)

    def trace(self, a) -> int:
        acc = (0,) * self.n
        x = a
        for _ in range(self.n):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        assert all(c == 0 for c in acc[1:]), "trace must lie in F_p"
        return acc[0]

    def order(self, a) -> int:
        x, k = a, 1
        while x != self.one():
            x = self.mul(x, a)
            k += 1
        return k

    def dlog(self, g) -> dict:
        table, x = {}, self.one()
        for k in range(self.q - 1):
            table[x] = k
            x = self.mul(x, g)
        assert len(table) == self.q - 1, "g is not a generator"
        return table


def class_trace_counts(F: PolyField, g, m: int, beta=None) -> Counter:
    beta = beta or F.one()
    logs = F.dlog(g)
    out = Counter()
    for y in F.elements():
        if F.is_zero(y):
            continue
        out[(logs[y] % m, F.trace(F.mul(beta, y)))] += 1
    return out


def gauss_complex(F: PolyField, g, m: int, beta=None) -> complex:
    total = 0j
    for (k, t), c in class_trace_counts(F, g, m, beta).items():
        total += c * cmath.exp(2j * cmath.pi * (k / m + t / F.p))
    return total


def cubic_periods_complex(p: int, g: int) -> list[float]:
    e = [0.0, 0.0, 0.0]
    x = 1
    for k in range(p - 1):
        e[k % 3] += cmath.cos(2 * cmath.pi * x / p).real
        x = x * g % p
    return e


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


def cubic_class_prime(p: int, g: int) -> dict[int, int]:
    out, x = {}, 1
    for k in range(p - 1):
        out[x] = k % 3
        x = x * g % p
    return out
