from fractions import Fraction
from typing import Union

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ

from stanley_reisner_toolkit.utils.errors import FieldMismatchError

Scalar = Union[int, Fraction]

MAX_CHARACTERISTIC = 1 << 31


class FieldSpec(BaseModel):
    """A prime field GF(p) (p < 2^31) or the rationals (characteristic 0)."""

    model_config = ConfigDict(frozen=True)

    characteristic: int = 2

    @field_validator("characteristic")
    @classmethod
    def _check_characteristic(cls, value: int) -> int:
        if value == 0:
            return value
        if value < 0 or value >= MAX_CHARACTERISTIC or not isprime(value):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {value}")
        return value

    @classmethod
    def parse(cls, text: Union[str, int]) -> "FieldSpec":
        raw = str(text).strip()
        if raw.lower() in ("q", "qq", "0", "rationals"):
            return cls(characteristic=0)
        if raw.upper().startswith("GF(") and raw.endswith(")"):
            raw = raw[3:-1]
        try:
            return cls(characteristic=int(raw))
        except ValueError:
            raise FieldMismatchError(f"unknown field {text!r}; use 2, 3, q or a prime") from None

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def label(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.characteristic})"

    def domain(self):
        return QQ if self.is_rational else GF(self.characteristic)

    def normalize(self, value: Scalar) -> Scalar:
        """Reduce ``value`` into the field; integers mod p, fractions over QQ."""
        if self.is_rational:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldMismatchError(f"{value} has no image in {self.label}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def to_domain(self, value: Scalar):
        K = self.domain()
        if self.is_rational:
            value = Fraction(value)
            return K(value.numerator, value.denominator)
        return K(int(value))

    def __str__(self) -> str:
        return self.label


GF2 = FieldSpec(characteristic=2)
GF3 = FieldSpec(characteristic=3)
RATIONALS = FieldSpec(characteristic=0)

DEFAULT_FIELD = GF2
VERIFY_FIELDS = (GF2, GF3, RATIONALS)
