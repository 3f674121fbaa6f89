# ---------------- utils/algebra/fields.py ----------------
"""
Coefficient fields for the exact linear algebra.

Overview for future devs:
- FieldSpec is either the rationals (default) or a prime field F_p with p < 2^31.
- Scalars are sympy domain elements (QQ or GF(p)); we never touch floats.
- Text form is what the CLI and the JSON schema use: "Q" or "Fp:<p>".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from sympy import isprime
from sympy.polys.domains import GF, QQ

from utils.algebra.errors import FieldSpecError

PRIME_LIMIT = 2**31


@dataclass(frozen=True)
class FieldSpec:
    kind: Literal["Q", "Fp"] = "Q"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise FieldSpecError("The rational field takes no modulus")
        elif self.kind == "Fp":
            if self.p is None or not (2 <= self.p < PRIME_LIMIT) or not isprime(self.p):
                raise FieldSpecError(f"Fp needs a prime below 2^31, got {self.p!r}")
        else:
            raise FieldSpecError(f"Unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("Fp", int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts 'Q' or 'Fp:<prime>'."""
        raw = (text or "").strip()
        if raw == "Q":
            return cls.rationals()
        if raw.startswith("Fp:"):
            digits = raw[3:]
            if not digits.isdigit():
                raise FieldSpecError(f"Malformed prime in field {text!r}")
            return cls.prime(int(digits))
        raise FieldSpecError(f"Field must be 'Q' or 'Fp:<prime>', got {text!r}")

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"Fp:{self.p}"

    @cached_property
    def domain(self):
        """The sympy domain that does the arithmetic."""
        return QQ if self.kind == "Q" else GF(self.p)
