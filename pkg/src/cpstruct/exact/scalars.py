"""Exact scalars: Gaussian rationals, real radicals, and their string form.

Rationals are plain :class:`fractions.Fraction` (ints are accepted wherever a
rational is expected).  Two small field types live here:

* :class:`GaussRational` -- ``a + b*i`` with rational ``a``, ``b``; the
  entries of every matrix in the package.
* :class:`Surd` -- a finite sum ``sum c_r * sqrt(r)`` over squarefree ``r``,
  i.e. an element of a multiquadratic extension of Q.  Needed to express
  orthonormal frames exactly, where norms are not rational squares.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "GaussRational",
    "Surd",
    "as_fraction",
    "format_scalar",
    "parse_scalar",
    "squarefree_split",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else as_fraction(re)
        self.im = im if type(im) is Fraction else as_fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return cls(x, 0)

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """``z * conj(z)``, always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Rational)):
            return GaussRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Rational)):
            return GaussRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                return GaussRational(a * c, a * d)
            if not d:
                return GaussRational(a * c, b * c)
            return GaussRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return GaussRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("GaussRational division by zero")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussRational):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("GaussRational division by zero")
            return GaussRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __repr__(self):
        return f"GaussRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


I = GaussRational(0, 1)


def squarefree_split(n: int) -> tuple[int, int]:
    """Write a positive integer as ``s**2 * r`` with ``r`` squarefree."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    s, r = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1 if p == 2 else 2
    return s, r * n


def _smallest_prime(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


class Surd:
    """Exact real number ``sum c_r * sqrt(r)``, ``r`` squarefree.

    Arithmetic collapses back to :class:`Fraction` whenever the result is
    rational, so rational code paths stay cheap.  Construct with
    :meth:`sqrt` or by combining existing values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction]):
        self.terms = {r: c for r, c in terms.items() if c}

    @staticmethod
    def _make(terms):
        terms = {r: c for r, c in terms.items() if c}
        if not terms:
            return Fraction(0)
        if len(terms) == 1 and 1 in terms:
            return terms[1]
        out = Surd.__new__(Surd)
        out.terms = terms
        return out

    @classmethod
    def sqrt(cls, q):
        """Exact square root of a nonnegative rational."""
        q = as_fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if not q:
            return Fraction(0)
        s, r = squarefree_split(q.numerator * q.denominator)
        return cls._make({r: Fraction(s, q.denominator)})

    @staticmethod
    def _terms_of(x) -> dict[int, Fraction]:
        if isinstance(x, Surd):
            return x.terms
        if isinstance(x, (int, Rational)):
            return {1: as_fraction(x)} if x else {}
        raise TypeError

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            return self.terms == self._terms_of(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __neg__(self):
        return Surd._make({r: -c for r, c in self.terms.items()})

    def __add__(self, other):
        try:
            o = self._terms_of(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for r, c in o.items():
            out[r] = out.get(r, 0) + c
        return Surd._make(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._terms_of(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for r, c in o.items():
            out[r] = out.get(r, 0) - c
        return Surd._make(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Surd._make({r: c * other for r, c in self.terms.items()})
        try:
            o = self._terms_of(other)
        except TypeError:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in o.items():
                g = _gcd(r1, r2)
                r = (r1 // g) * (r2 // g)
                out[r] = out.get(r, 0) + c1 * c2 * g
        return Surd._make(out)

    __rmul__ = __mul__

    def _split(self, p):
        a = {r: c for r, c in self.terms.items() if r % p}
        b = {r // p: c for r, c in self.terms.items() if not r % p}
        return Surd._make(a), Surd._make(b)

    def inverse(self):
        if not self.terms:
            raise ZeroDivisionError("Surd division by zero")
        radicand = max(self.terms)
        if radicand == 1:
            return 1 / self.terms[1]
        # x = a + b*sqrt(p), with a, b free of sqrt(p); x*(a - b*sqrt(p)) = a^2 - p*b^2
        p = _smallest_prime(radicand)
        a, b = self._split(p)
        sp = Surd._make({p: Fraction(1)})
        conj = a - b * sp
        norm = a * a - b * b * p
        inv_norm = norm.inverse() if isinstance(norm, Surd) else 1 / norm
        return conj * inv_norm

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("Surd division by zero")
            return Surd._make({r: c / other for r, c in self.terms.items()})
        if isinstance(other, Surd):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __float__(self):
        return float(sum(float(c) * float(r) ** 0.5 for r, c in self.terms.items()))

    def __repr__(self):
        return f"Surd({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _signed_join(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def format_scalar(x) -> str:
    """Canonical, whitespace-free string for an exact scalar.

    Rationals print as ``"a/b"`` (``"a"`` when integral), Gaussian rationals
    with a nonzero imaginary part as ``"a/b+c/d*i"`` and surds as a signed
    sum of ``c*sqrt(r)`` terms ordered by radicand.
    """
    if isinstance(x, GaussRational):
        if not x.im:
            return str(x.re)
        return _signed_join([str(x.re), f"{x.im}*i"])
    if isinstance(x, Surd):
        parts = []
        for r in sorted(x.terms):
            c = x.terms[r]
            parts.append(str(c) if r == 1 else f"{c}*sqrt({r})")
        return _signed_join(parts)
    if isinstance(x, (int, Rational)):
        return str(as_fraction(x))
    raise TypeError(f"not an exact scalar: {x!r}")


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(rf"^({_RAT})([+-]\d+(?:/\d+)?)\*i$")
_SURD_TERM = re.compile(rf"({_RAT})(?:\*sqrt\((\d+)\))?")


def parse_scalar(s: str):
    """Inverse of :func:`format_scalar`.

    Returns a Fraction, GaussRational or Surd depending on the form.
    """
    s = s.strip()
    if re.fullmatch(_RAT, s):
        return Fraction(s)
    m = _GAUSS_RE.match(s)
    if m:
        return GaussRational(Fraction(m.group(1)), Fraction(m.group(2)))
    if "sqrt" in s:
        pos, terms = 0, {}
        while pos < len(s):
            m = _SURD_TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"malformed scalar {s!r}")
            r = int(m.group(2) or 1)
            if squarefree_split(r)[0] != 1:
                raise ValueError(f"radicand {r} is not squarefree in {s!r}")
            terms[r] = terms.get(r, 0) + Fraction(m.group(1))
            pos = m.end()
            if pos < len(s) and s[pos] == "+":
                pos += 1
        return Surd._make(terms)
    raise ValueError(f"malformed scalar {s!r}")
