"""Instance file models."""

from __future__ import annotations

from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator


class _Descriptor(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class IntegersModSpec(_Descriptor):
    """Z_n, trivially graded."""

    kind: Literal["integers_mod"] = "integers_mod"
    n: int = Field(ge=2)


class ProductRingSpec(_Descriptor):
    """Z_{n1} x ... x Z_{nk}, trivially graded."""

    kind: Literal["product"] = "product"
    moduli: List[int] = Field(min_length=1)

    @field_validator("moduli")
    @classmethod
    def _moduli_at_least_two(cls, value: List[int]) -> List[int]:
        for modulus in value:
            if modulus < 2:
                raise ValueError(f"moduli must be >= 2, got {modulus}")
        return value


class GroupRingSpec(_Descriptor):
    """Z_n[G] graded by the instance's grading group."""

    kind: Literal["group_ring"] = "group_ring"
    n: int = Field(ge=2)


class RingQuotientSpec(_Descriptor):
    """A base ring modulo the graded ideal generated by homogeneous element codes.

    ``base`` is a nested descriptor or the name of a catalog instance whose ring is reused.
    """

    kind: Literal["quotient"] = "quotient"
    base: Union[str, "RingSpec"]
    generators: List[int] = Field(min_length=1)


RingSpec = Annotated[
    Union[IntegersModSpec, ProductRingSpec, GroupRingSpec, RingQuotientSpec],
    Field(discriminator="kind"),
]


class SelfModuleSpec(_Descriptor):
    kind: Literal["self"] = "self"


class FreeModuleSpec(_Descriptor):
    """R^rank with slot i shifted by the grading group element code ``shifts[i]``."""

    kind: Literal["free"] = "free"
    shifts: List[int] = Field(min_length=1)


class ModuleQuotientSpec(_Descriptor):
    """A base module modulo the graded submodule generated by homogeneous element codes."""

    kind: Literal["quotient"] = "quotient"
    base: Union[str, "ModuleSpec"]
    generators: List[int] = Field(min_length=1)


ModuleSpec = Annotated[
    Union[SelfModuleSpec, FreeModuleSpec, ModuleQuotientSpec],
    Field(discriminator="kind"),
]

RingQuotientSpec.model_rebuild()
ModuleQuotientSpec.model_rebuild()


class InstanceSpec(BaseModel):
    """One G-graded module over a G-graded ring, described by constructions.

    ``known_failures`` names checks for which this instance is a recorded counterexample.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: str = Field(pattern=r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")
    description: str = ""
    grading_group: List[int] = Field(min_length=1)
    ring: RingSpec
    module: ModuleSpec = Field(default_factory=SelfModuleSpec)
    known_failures: List[str] = Field(default_factory=list)

    @field_validator("grading_group")
    @classmethod
    def _orders_positive(cls, value: List[int]) -> List[int]:
        for order in value:
            if order < 1:
                raise ValueError(f"cyclic orders must be >= 1, got {order}")
        return value
