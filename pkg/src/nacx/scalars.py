"""Exact scalar domains: prime fields GF(p) as reduced ints, and Q as Fractions.

Nothing in the package uses floating point.  Every vector space is a space
over one of these base domains, and all linear algebra is done in them.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import DomainError


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


class BaseField:
    """The prime field GF(p) (``p > 0``) or the rationals (``p == 0``).

    Elements of GF(p) are plain ints in ``range(p)``; elements of Q are
    ``fractions.Fraction`` (always in lowest terms, positive denominator).
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if p != 0 and not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, BaseField) and other.p == self.p

    def __hash__(self):
        return hash(("BaseField", self.p))

    @property
    def is_finite(self) -> bool:
        return self.p > 0

    @property
    def size(self) -> int | None:
        return self.p or None

    def __call__(self, v) -> int | Fraction:
        if self.p:
            if isinstance(v, Fraction):
                if v.denominator % self.p == 0:
                    raise DomainError(f"{v} has no image in GF({self.p})")
                return v.numerator * pow(v.denominator, -1, self.p) % self.p
            if isinstance(v, str):
                return self(parse_rational(v))
            return int(v) % self.p
        if isinstance(v, str):
            return parse_rational(v)
        return Fraction(v)

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise DomainError("division by zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def reduce(self, a):
        return a % self.p if self.p else a

    def elements(self):
        if not self.p:
            raise DomainError("Q is infinite")
        return range(self.p)

    def format(self, a) -> str:
        return str(a) if self.p else format_rational(a)


@functools.lru_cache(maxsize=None)
def base_field(p: int) -> BaseField:
    return BaseField(p)


QQ = base_field(0)


def parse_rational(s) -> Fraction:
    """Parse ``"p/q"``, ``"-7"`` or an int into a normalized Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    text = str(s).strip()
    if "/" in text:
        num, den = text.split("/", 1)
        den_i = int(den)
        if den_i == 0:
            raise DomainError(f"zero denominator in {s!r}")
        return Fraction(int(num), den_i)
    return Fraction(int(text))


def format_rational(a: Fraction) -> str:
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def rdiv(a, b) -> Fraction:
    """Exact rational division; raises DomainError on b == 0."""
    if b == 0:
        raise DomainError("division by zero")
    return Fraction(a) / Fraction(b)
