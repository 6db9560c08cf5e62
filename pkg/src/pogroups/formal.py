"""Formal reals: finite Q-linear combinations of 1 and square roots of squarefree integers.

The set {1} together with {sqrt(d) : d squarefree >= 2} is linearly
independent over Q (classical; assumed, not re-proved here).  A value is
therefore zero exactly when its coefficient map is empty, and its sign is
otherwise found by interval evaluation at growing precision.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence

from .errors import InputError, ParseError
from .exact import to_fraction

START_BITS = 32
MAX_BITS = 1 << 16


def squarefree_decompose(n: int):
    """Return ``(s, d)`` with ``n = s*s*d`` and ``d`` squarefree."""
    if n < 1:
        raise InputError(f"radicand must be positive, got {n}")
    s, d = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    return s, d * n


def primes():
    found = []
    k = 2
    while True:
        if all(k % p for p in found if p * p <= k):
            found.append(k)
            yield k
        k += 1


class FormalReal:
    """Immutable value sum(q_d * sqrt(d)); ``terms`` maps squarefree d to nonzero q."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        acc: dict[int, Fraction] = {}
        for rad, coeff in (terms or {}).items():
            coeff = to_fraction(coeff)
            if coeff == 0:
                continue
            s, d = squarefree_decompose(int(rad))
            acc[d] = acc.get(d, Fraction(0)) + s * coeff
        self._terms = tuple(sorted((d, q) for d, q in acc.items() if q != 0))
        self._hash = None

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((d, q) for d, q in items if q != 0))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> "FormalReal":
        return cls({1: q})

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> "FormalReal":
        return cls({n: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self._terms)

    def rational_part(self) -> Fraction:
        return dict(self._terms).get(1, Fraction(0))

    def coefficient(self, radicand: int) -> Fraction:
        return dict(self._terms).get(radicand, Fraction(0))

    def radicands(self):
        return [d for d, _ in self._terms]

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, FormalReal):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FormalReal.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for d, q in other._terms:
            acc[d] = acc.get(d, Fraction(0)) + q
        return FormalReal._raw(acc.items())

    __radd__ = __add__

    def __neg__(self):
        return FormalReal._raw((d, -q) for d, q in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, q) -> "FormalReal":
        q = to_fraction(q)
        return FormalReal._raw((d, q * c) for d, c in self._terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, FormalReal):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for d1, q1 in self._terms:
            for d2, q2 in other._terms:
                s, d = squarefree_decompose(d1 * d2)
                acc[d] = acc.get(d, Fraction(0)) + s * q1 * q2
        return FormalReal._raw(acc.items())

    __rmul__ = __mul__

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def sign(self) -> int:
        return fr_sign(self)

    def __lt__(self, other):
        return fr_sign(self - other) < 0

    def __le__(self, other):
        return fr_sign(self - other) <= 0

    def __gt__(self, other):
        return fr_sign(self - other) > 0

    def __ge__(self, other):
        return fr_sign(self - other) >= 0

    def __bool__(self):
        return bool(self._terms)

    # numerics

    def enclosure(self, bits: int):
        """Rational interval ``[lo, hi]`` of width O(2**-bits) containing the value."""
        lo = hi = Fraction(0)
        scale = 1 << bits
        for d, q in self._terms:
            if d == 1:
                lo += q
                hi += q
                continue
            r = isqrt(d << (2 * bits))
            a, b = Fraction(r, scale), Fraction(r + 1, scale)
            if q > 0:
                lo += q * a
                hi += q * b
            else:
                lo += q * b
                hi += q * a
        return lo, hi

    def approx(self, bits: int = 64) -> Fraction:
        lo, hi = self.enclosure(bits)
        return (lo + hi) / 2

    def to_decimal(self, bits: int = 64) -> str:
        """Decimal string accurate to roughly ``bits`` binary digits."""
        lo, hi = self.enclosure(bits + 4)
        digits = max(1, int(bits * 0.30103))
        mid = (lo + hi) / 2
        scaled = round(mid * 10**digits)
        sign = "-" if scaled < 0 else ""
        scaled = abs(scaled)
        whole, frac = divmod(scaled, 10**digits)
        return f"{sign}{whole}.{frac:0{digits}d}"

    def __float__(self):
        return float(self.approx(64))

    # text

    def __str__(self):
        return format_formal(self)

    def __repr__(self):
        return f"FormalReal({format_formal(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "FormalReal":
        return parse_formal(text)


ZERO = FormalReal()
ONE = FormalReal.rational(1)


def as_formal(x) -> FormalReal:
    if isinstance(x, FormalReal):
        return x
    if isinstance(x, str):
        return parse_formal(x)
    return FormalReal.rational(to_fraction(x))


def fr_add(x: FormalReal, y: FormalReal) -> FormalReal:
    return x + y


def fr_negate(x: FormalReal) -> FormalReal:
    return -x


def fr_scale(x: FormalReal, q) -> FormalReal:
    return x.scale(q)


def fr_sign(x: FormalReal) -> int:
    terms = x._terms
    if not terms:
        return 0
    if len(terms) == 1:
        return 1 if terms[0][1] > 0 else -1
    if all(q > 0 for _, q in terms):
        return 1
    if all(q < 0 for _, q in terms):
        return -1
    bits = START_BITS
    while bits <= MAX_BITS:
        lo, hi = x.enclosure(bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    # unreachable for a nonzero value
    raise RuntimeError(f"sign refinement exceeded {MAX_BITS} bits for {x}")


Functional = tuple  # tuple[FormalReal, ...]


def functional(entries: Iterable) -> Functional:
    return tuple(as_formal(e) for e in entries)


def fr_dot(f: Sequence[FormalReal], v: Sequence) -> FormalReal:
    if len(f) != len(v):
        raise InputError(f"functional has length {len(f)}, vector has length {len(v)}")
    acc: dict[int, Fraction] = {}
    for fi, vi in zip(f, v):
        if vi == 0:
            continue
        vi = to_fraction(vi)
        for d, q in fi._terms:
            acc[d] = acc.get(d, Fraction(0)) + q * vi
    return FormalReal._raw(acc.items())


def symbol_rows(f: Sequence[FormalReal]) -> list:
    """One rational row per basis symbol: ``f . x = 0`` iff every row annihilates ``x``."""
    rads = sorted({d for fi in f for d in fi.radicands()})
    return [tuple(fi.coefficient(d) for fi in f) for d in rads]


# -- text form ---------------------------------------------------------------


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_formal(x: FormalReal) -> str:
    if not x._terms:
        return "0"
    parts = []
    for d, q in x._terms:
        body = _fmt_rat(abs(q)) if d == 1 else f"{_fmt_rat(abs(q))}*sqrt{d}"
        if not parts:
            parts.append(("-" if q < 0 else "") + body)
        else:
            parts.append(("-" if q < 0 else "+") + body)
    return "".join(parts)


def _read_int(text: str, i: int):
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        return None, i
    return int(text[i:j]), j


def parse_formal(text: str) -> FormalReal:
    """Parse ``term (("+"|"-") term)*`` with term = rat ["*"] ["sqrt" INT] | "sqrt" INT.

    Raises :class:`ParseError` whose ``column`` is the 1-based offset in ``text``.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty formal real", token=text)
    acc: dict[int, Fraction] = {}
    i = 0
    first = True
    while i < len(s):
        start = i
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", column=i + 1, token=s[i:])
        first = False
        coeff = Fraction(1)
        num, j = _read_int(s, i)
        has_rat = num is not None
        if has_rat:
            i = j
            coeff = Fraction(num)
            if i < len(s) and s[i] == "/":
                den, j = _read_int(s, i + 1)
                if den is None or den == 0:
                    raise ParseError("bad denominator", column=i + 1, token=s[start:])
                coeff = Fraction(num, den)
                i = j
        star = False
        if i < len(s) and s[i] == "*":
            if not has_rat:
                raise ParseError("'*' without coefficient", column=i + 1, token=s[start:])
            star = True
            i += 1
        rad = 1
        if s.startswith("sqrt", i):
            rad, j = _read_int(s, i + 4)
            if rad is None:
                raise ParseError("expected radicand after 'sqrt'", column=i + 1, token=s[start:])
            i = j
        elif star or not has_rat:
            raise ParseError("expected a term", column=i + 1, token=s[start:] or s)
        if rad == 0:
            continue
        sq, d = squarefree_decompose(rad)
        acc[d] = acc.get(d, Fraction(0)) + sign * sq * coeff
    return FormalReal._raw(acc.items())
