"""Exact arithmetic in the cyclotomic field Q(zeta_120).

Every scalar in the package lives here.  An element is a polynomial in
``z = zeta_120`` of degree < 32, reduced modulo the 120th cyclotomic
polynomial.  120 = lcm(3, 4, 5, 6, 8), so cube, fourth, fifth, sixth and
eighth roots of unity (and square roots of the order <= 60 ones) are all
available exactly.

>>> w = root_of(RootSpec(1, 3))
>>> w * w * w == 1, w == 1
(True, False)
>>> i = RootSpec.parse("1/4").value
>>> (1 + i).inverse() == (1 - i) / 2
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

ORDER = 120
DEGREE = 32

# Phi_120(x) = x^32 + x^28 - x^20 - x^16 - x^12 + x^4 + 1, low degree first.
PHI120: tuple[int, ...] = tuple(
    {0: 1, 4: 1, 12: -1, 16: -1, 20: -1, 28: 1, 32: 1}.get(d, 0) for d in range(DEGREE + 1)
)


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting zero."""


class UnsupportedOrder(ValueError):
    """Raised for a root of unity whose order does not divide 120."""


Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _reduction_table(top: int) -> list[tuple[tuple[int, int], ...]]:
    # row m = x^m mod Phi_120 as ((exponent, coeff), ...)
    tail = {d: -PHI120[d] for d in range(DEGREE) if PHI120[d]}
    rows = []
    cur = {0: 1}
    for _ in range(top):
        rows.append(tuple(sorted((k, c) for k, c in cur.items() if c)))
        nxt: dict[int, int] = {}
        for k, c in cur.items():
            if k + 1 == DEGREE:
                for d, t in tail.items():
                    nxt[d] = nxt.get(d, 0) + c * t
            else:
                nxt[k + 1] = nxt.get(k + 1, 0) + c
        cur = {k: c for k, c in nxt.items() if c}
    return rows


_RED = _reduction_table(2 * ORDER)


class CycNum:
    """An element of Q(zeta_120) in canonical reduced form.

    Immutable and hashable.  ``coeffs`` gives the dense 32-vector; internally
    only nonzero terms are stored, as sorted ``(exponent, coefficient)`` pairs.
    """

    __slots__ = ("_t", "_h")

    def __init__(self, value: Union[Scalar, "CycNum", str] = 0):
        if isinstance(value, CycNum):
            self._t = value._t
        elif isinstance(value, str):
            self._t = CycNum.parse(value)._t
        else:
            value = _norm(Fraction(value)) if not isinstance(value, int) else value
            self._t = ((0, value),) if value else ()
        self._h = None

    @classmethod
    def _raw(cls, terms: tuple) -> "CycNum":
        obj = object.__new__(cls)
        obj._t = terms
        obj._h = None
        return obj

    @classmethod
    def _from_dict(cls, acc: dict) -> "CycNum":
        return cls._raw(tuple(sorted((k, _norm(c)) for k, c in acc.items() if c)))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "CycNum":
        """Build from a coefficient list in powers of zeta_120 (any length)."""
        acc: dict[int, Scalar] = {}
        for m, c in enumerate(coeffs):
            if c:
                for k, r in _RED[m % ORDER]:
                    acc[k] = acc.get(k, 0) + c * r
        return cls._from_dict(acc)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * DEGREE
        for k, c in self._t:
            out[k] = Fraction(c)
        return tuple(out)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and self._t[0][0] == 0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._t[0][1]) if self._t else Fraction(0)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._t:
            return self
        if not self._t:
            return other
        acc = dict(self._t)
        for k, c in other._t:
            acc[k] = acc.get(k, 0) + c
        return CycNum._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(tuple((k, -c) for k, c in self._t))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, (int, Fraction)):
                if not other or not self._t:
                    return ZERO
                return CycNum._raw(tuple((k, _norm(c * other)) for k, c in self._t))
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(b) == 1 and b[0][0] == 0:
            s = b[0][1]
            return CycNum._raw(tuple((k, _norm(c * s)) for k, c in a))
        if len(a) == 1 and a[0][0] == 0:
            s = a[0][1]
            return CycNum._raw(tuple((k, _norm(c * s)) for k, c in b))
        acc: dict[int, Scalar] = {}
        get = acc.get
        for i, x in a:
            for j, y in b:
                xy = x * y
                for k, r in _RED[i + j]:
                    acc[k] = get(k, 0) + (xy if r == 1 else xy * r)
        return CycNum._from_dict(acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self._t:
            raise ZeroInverse("inverse of zero")
        if len(self._t) == 1:
            k, c = self._t[0]
            return _zeta_cached(-k) * (Fraction(1) / c)
        hit = _ROOT_SHAPES.get(_shape(self._t))
        if hit is not None:
            # self = c * zeta^m for a precomputed root shape
            m, lead = hit
            c = Fraction(self._t[0][1]) / lead
            return _zeta_cached(-m) * (1 / c)
        return _inverse_general(self._t)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroInverse("division by zero")
            return self * (Fraction(1) / other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "CycNum":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._t
            return self._t == ((0, other),)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(self._t) if not self.is_rational() else hash(self.to_fraction())
        return self._h

    # -- root-of-unity helpers ----------------------------------------------
    def root_exponent(self) -> int | None:
        """Return m with self == zeta_120**m, or None."""
        return _ROOT_INDEX.get(self._t)

    def order(self) -> int:
        """Multiplicative order of a root of unity; raises otherwise."""
        m = self.root_exponent()
        if m is None:
            raise ValueError(f"{self} is not a 120th root of unity")
        return ORDER // gcd(m, ORDER)

    # -- text -----------------------------------------------------------------
    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for k, c in self._t:
            c = Fraction(c)
            mag = str(abs(c))
            if k == 0:
                body = mag
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if abs(c) == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CycNum('{self}')"

    _TERM = re.compile(r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(z(?:\^(\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "CycNum":
        """Inverse of ``str``: terms like ``3/2``, ``-z^7``, ``1/2*z^3``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        pos, total = 0, ZERO
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse scalar {text!r}")
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                coeff = -coeff
            exp = int(m.group(4)) if m.group(4) else (1 if m.group(3) else 0)
            total = total + _zeta_cached(exp) * coeff
            pos = m.end()
        return total


def _coerce(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum(x)
    return NotImplemented


ZERO = CycNum._raw(())
ONE = CycNum._raw(((0, 1),))


@lru_cache(maxsize=None)
def _zeta_cached(m: int) -> CycNum:
    return CycNum._raw(tuple((k, c) for k, c in _RED[m % ORDER]))


def zeta(m: int = 1) -> CycNum:
    """zeta_120 ** m."""
    return _zeta_cached(m % ORDER)


def _shape(terms: tuple) -> tuple:
    lead = Fraction(terms[0][1])
    return tuple((k, Fraction(c) / lead) for k, c in terms)


_ROOT_INDEX: dict[tuple, int] = {}
_ROOT_SHAPES: dict[tuple, tuple[int, Fraction]] = {}
for _m in range(ORDER):
    _t = _zeta_cached(_m)._t
    _ROOT_INDEX[_t] = _m
    _ROOT_SHAPES.setdefault(_shape(_t), (_m, Fraction(_t[0][1])))
del _m, _t


# -- general inverse: extended Euclid against Phi_120 -------------------------

def _poly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_sub_mul(a: list, q: list, b: list) -> list:
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _poly_trim(out)


@lru_cache(maxsize=1 << 16)
def _inverse_general(terms: tuple) -> CycNum:
    a = [Fraction(0)] * DEGREE
    for k, c in terms:
        a[k] = Fraction(c)
    r0, r1 = [Fraction(c) for c in PHI120], _poly_trim(a)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    # r1 is a nonzero constant since Phi_120 is irreducible
    inv = 1 / r1[0]
    return CycNum.from_coeffs([c * inv for c in s1])


# -- roots of unity -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class RootSpec:
    """zeta_n ** k, stored gcd-reduced with 0 <= k < n."""

    k: int
    n: int

    def __post_init__(self):
        if self.n <= 0:
            raise UnsupportedOrder(f"order must be positive, got {self.n}")
        if ORDER % self.n:
            raise UnsupportedOrder(f"order {self.n} does not divide {ORDER}")
        k = self.k % self.n
        g = gcd(k, self.n) if k else self.n
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "n", self.n // g)

    @classmethod
    def parse(cls, text: str) -> "RootSpec":
        m = re.fullmatch(r"\s*(-?\d+)\s*/\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"root spec must look like k/n, got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    @classmethod
    def from_exponent(cls, m: int) -> "RootSpec":
        """The RootSpec of zeta_120 ** m."""
        return cls(m, ORDER)

    @property
    def exponent(self) -> int:
        return (self.k * (ORDER // self.n)) % ORDER

    @property
    def value(self) -> CycNum:
        return zeta(self.exponent)

    @property
    def order(self) -> int:
        return self.n

    def __mul__(self, other: "RootSpec") -> "RootSpec":
        return RootSpec.from_exponent(self.exponent + other.exponent)

    def inverse(self) -> "RootSpec":
        return RootSpec.from_exponent(-self.exponent)

    def __str__(self) -> str:
        return f"{self.k}/{self.n}"


def root_of(spec: RootSpec) -> CycNum:
    """The scalar zeta_n ** k for ``spec = (k, n)``."""
    return spec.value


def as_scalar(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, RootSpec):
        return x.value
    if isinstance(x, str):
        return CycNum.parse(x)
    return CycNum(x)
