"""Coefficient fields: the rationals and prime fields."""

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import GF, QQ, Rational, isprime
from sympy.polys.domains.domain import Domain

from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.errors import UsageError


class FieldSpec(BaseModel):
    """Exact coefficient field: ``QQ`` or ``Fp:<prime>``."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["QQ", "Fp"] = "QQ"
    prime: int | None = None

    @model_validator(mode="after")
    def _check_prime(self) -> "FieldSpec":
        if self.kind == "Fp":
            if self.prime is None or not isprime(self.prime):
                raise ValueError(f"Fp needs a prime modulus, got {self.prime}")
        elif self.prime is not None:
            raise ValueError("QQ takes no modulus")
        return self

    @classmethod
    def parse(cls, value: "str | dict[str, Any] | FieldSpec") -> "FieldSpec":
        """Accept ``"QQ"``, ``"Fp:32003"``, ``{"Fp": 32003}`` or a FieldSpec.

        A bare ``"Fp"`` means the configured ``BOURBAKI_PRIME``.
        """
        if isinstance(value, FieldSpec):
            return value
        try:
            if isinstance(value, dict):
                if set(value) == {"Fp"}:
                    return cls(kind="Fp", prime=int(value["Fp"]))
                return cls.model_validate(value)
            text = value.strip()
            if text.upper() == "QQ":
                return cls()
            if text in ("Fp", "GF"):
                return cls(kind="Fp", prime=get_settings().prime)
            head, _, modulus = text.partition(":")
            if head in ("Fp", "GF") and modulus:
                return cls(kind="Fp", prime=int(modulus))
        except (ValueError, TypeError) as e:
            raise UsageError(f"bad field spec {value!r}: {e}") from e
        raise UsageError(f"bad field spec {value!r}; expected QQ or Fp:<prime>")

    @property
    def label(self) -> str:
        return "QQ" if self.kind == "QQ" else f"Fp:{self.prime}"

    @property
    def characteristic(self) -> int:
        return 0 if self.prime is None else self.prime

    def domain(self) -> Domain:
        """The sympy domain realizing this field (residues kept in 0..p-1)."""
        if self.kind == "QQ":
            return QQ
        return GF(self.prime, symmetric=False)

    def element(self, numerator: int, denominator: int = 1) -> Any:
        """Canonical field element numerator/denominator."""
        domain = self.domain()
        if self.kind == "QQ":
            if denominator == 0:
                raise ZeroDivisionError("zero denominator")
            return domain.convert(Rational(numerator, denominator))
        den = domain.convert(denominator)
        if not den:
            raise ZeroDivisionError(f"{denominator} vanishes mod {self.prime}")
        return domain.convert(numerator) / den


RATIONALS = FieldSpec()


def rational_parts(domain: Domain, value: Any) -> tuple[int, int]:
    """Numerator and positive denominator of a field element (residues as 0..p-1)."""
    converted = domain.to_sympy(value)
    return int(converted.p), int(converted.q)


def secondary_field() -> FieldSpec:
    """The second prime field used for cross-field comparisons (``BOURBAKI_SECONDARY_PRIME``)."""
    try:
        return FieldSpec(kind="Fp", prime=get_settings().secondary_prime)
    except ValueError as e:
        raise UsageError(f"bad secondary prime: {e}") from e
