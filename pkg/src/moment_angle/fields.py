"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are `fractions.Fraction`; F_p scalars are plain ints reduced
into [0, p). No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
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


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (characteristic 0) or F_p for a prime p < 2^31."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and not (_is_prime(p) and p < 2**31):
            raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")

    # -- scalar constructors -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def of_int(self, n: int):
        return Fraction(n) if self.characteristic == 0 else n % self.characteristic

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0 if self.characteristic == 0 else a % self.characteristic == 0

    # -- formatting ----------------------------------------------------------

    def token(self) -> str:
        """Serialization token: "Q" or "Fp:<p>"."""
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    def scalar_to_json(self, a):
        if self.characteristic == 0:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return int(a % self.characteristic)

    def scalar_from_json(self, obj):
        if self.characteristic == 0:
            return Fraction(obj) if isinstance(obj, str) else Fraction(int(obj))
        return int(obj) % self.characteristic

    def __str__(self) -> str:
        return self.token()


QQ = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)

#: Fields used by default for Gorenstein verdicts and fingerprints; catches
#: characteristic-dependent behavior at minimal cost.
DEFAULT_FIELDS = (F2, F3, QQ)


def parse_field(text: str) -> FieldSpec:
    """Parse "Q", "F<p>" (CLI style) or "Fp:<p>" (serialization style)."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        return FieldSpec(int(text[3:]))
    if text.startswith("F"):
        return FieldSpec(int(text[1:]))
    raise ValueError(f"unrecognized field {text!r}; expected Q or F<p>")
