"""Exact coefficient rings: the integers, the rationals and Z/nZ.

Coefficients are plain Python numbers: ``int`` for ZZ and Z/n (stored as the
representative in ``[0, n)``) and :class:`fractions.Fraction` for QQ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RingMismatch, UnsupportedRing


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class Ring:
    kind: str  # "z", "q" or "zmod"
    modulus: int = 0

    def __post_init__(self):
        if self.kind not in ("z", "q", "zmod"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "zmod" and self.modulus < 2:
            raise ValueError("Z/n needs n >= 2")
        if self.kind != "zmod" and self.modulus != 0:
            raise ValueError("only Z/n carries a modulus")

    @classmethod
    def parse(cls, text: str) -> "Ring":
        t = text.strip().lower()
        if t in ("z", "zz"):
            return ZZ
        if t in ("q", "qq"):
            return QQ
        if t.startswith("z/"):
            try:
                n = int(t[2:])
            except ValueError:
                raise ValueError(f"bad ring {text!r}") from None
            return Zmod(n)
        raise ValueError(f"bad ring {text!r}; expected z, q or z/<n>")

    def __str__(self):
        if self.kind == "zmod":
            return f"z/{self.modulus}"
        return self.kind

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def zero(self):
        return Fraction(0) if self.kind == "q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "q" else 1

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "zmod" and _is_prime(self.modulus)

    def __call__(self, value):
        """Coerce ``value`` (int, Fraction or numeric string) into this ring."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == "z":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return value.numerator
            return int(value)
        if self.kind == "q":
            return Fraction(value)
        n = self.modulus
        if isinstance(value, Fraction):
            den = value.denominator % n
            try:
                inv = pow(den, -1, n)
            except ValueError:
                raise ValueError(f"{value} has no image in Z/{n}") from None
            return value.numerator * inv % n
        return int(value) % n

    def add(self, x, y):
        return (x + y) % self.modulus if self.kind == "zmod" else x + y

    def mul(self, x, y):
        return (x * y) % self.modulus if self.kind == "zmod" else x * y

    def neg(self, x):
        return (-x) % self.modulus if self.kind == "zmod" else -x

    def is_unit(self, x) -> bool:
        if self.kind == "z":
            return x in (1, -1)
        if self.kind == "q":
            return x != 0
        from math import gcd
        return gcd(x, self.modulus) == 1

    def fmt(self, x) -> str:
        return str(x)

    def require_same(self, other: "Ring"):
        if self != other:
            raise RingMismatch(f"ring mismatch: {self} vs {other}")

    def require_kernel_support(self):
        """Kernel computations run over Q (for ZZ and QQ) or over a prime field."""
        if self.kind == "zmod" and not self.is_prime_field:
            raise UnsupportedRing(f"Z/{self.modulus} is not a field; kernel computation unsupported")


ZZ = Ring("z")
QQ = Ring("q")


def Zmod(n: int) -> Ring:
    return Ring("zmod", n)
