"""Exact ground fields: the rationals and prime fields GF(p).

Scalars are plain Python objects: ``fractions.Fraction`` over QQ and ``int``
in ``[0, p)`` over GF(p).  Matrices are numpy arrays, ``object`` dtype over
QQ and ``int64`` over GF(p).
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

__all__ = ["Field", "Rationals", "PrimeField", "QQ", "GF", "parse_field"]

_MAX_PRIME = 2**31


class Field:
    """Common interface; concrete subclasses are :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int = 0
    dtype: object = object

    def __call__(self, x):
        raise NotImplementedError

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def inv(self, a):
        raise NotImplementedError

    def zeros(self, shape) -> np.ndarray:
        raise NotImplementedError

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def array(self, data) -> np.ndarray:
        raise NotImplementedError

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a @ b

    def is_zero(self, arr: np.ndarray) -> bool:
        return not np.any(arr != 0)

    def random(self, rng, shape, bound: int = 5) -> np.ndarray:
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return type(self) is type(other) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash((type(self).__name__, self.characteristic))


class Rationals(Field):
    characteristic = 0
    dtype = object

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            if not isinstance(v, Fraction):
                flat[i] = Fraction(v)
        return arr

    def random(self, rng, shape, bound: int = 5) -> np.ndarray:
        vals = rng.integers(-bound, bound + 1, size=shape)
        return self.array(vals.tolist() if np.ndim(vals) else int(vals))

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "QQ"


class PrimeField(Field):
    dtype = np.int64

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or p >= _MAX_PRIME or not _is_prime(p):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {p}")
        self.p = p
        self.characteristic = p
        # bound on the inner dimension for which int64 matmul cannot overflow
        self._safe_k = max(1, (2**63 - 1) // ((p - 1) ** 2 + 1))

    def __call__(self, x):
        if isinstance(x, Fraction):
            return (x.numerator % self.p) * pow(x.denominator % self.p, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.size and any(isinstance(v, Fraction) for v in arr.reshape(-1)):
            arr = np.vectorize(self.__call__, otypes=[object])(arr)
        return np.array(arr, dtype=np.int64) % self.p

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] <= self._safe_k:
            return (a @ b) % self.p
        return np.array((a.astype(object) @ b.astype(object)) % self.p, dtype=np.int64)

    def random(self, rng, shape, bound: int = 5) -> np.ndarray:
        return rng.integers(0, self.p, size=shape).astype(np.int64)

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_FIELD_RE = re.compile(r"^\s*(?:QQ|GF\(\s*(\d+)\s*\))\s*$")


def parse_field(text: str) -> Field:
    """Parse ``QQ`` or ``GF(p)``."""
    m = _FIELD_RE.match(text)
    if not m:
        raise ValueError(f"unknown field {text!r}; expected QQ or GF(p)")
    if m.group(1) is None:
        return QQ
    return PrimeField(int(m.group(1)))
