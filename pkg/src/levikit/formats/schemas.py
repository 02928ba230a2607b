"""
File schemas for algebras, gradings, derivation families, certificates and splits.

Rationals are strings ``"p/q"`` (lowest terms, q > 0) or ``"p"``; integers are accepted on
input and reported as non-canonical.
"""

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, StrictInt, StrictStr, model_validator

RationalText = Union[StrictStr, StrictInt]


class BracketTerm(BaseModel):
    k: int = Field(description="Index of the basis vector in the bracket")
    c: RationalText = Field(description="Coefficient")


class BracketEntry(BaseModel):
    i: int = Field(description="First basis index (i < j)")
    j: int = Field(description="Second basis index")
    terms: List[BracketTerm] = Field(default_factory=list)


class AlgebraFile(BaseModel):
    """Structure constants; unlisted pairs bracket to zero."""

    dim: int = Field(ge=0)
    names: List[str]
    brackets: List[BracketEntry] = Field(default_factory=list)


class GradingComponentEntry(BaseModel):
    degree: List[int]
    basis: List[List[RationalText]]


class GradingFile(BaseModel):
    """Either per-basis-vector degrees or explicit component subspaces."""

    rank: int = Field(ge=0)
    degrees: Optional[List[List[int]]] = None
    components: Optional[List[GradingComponentEntry]] = None

    @model_validator(mode="after")
    def _one_form(self) -> "GradingFile":
        if (self.degrees is None) == (self.components is None):
            raise ValueError("exactly one of 'degrees' and 'components' must be given")
        return self


class DerivationFile(BaseModel):
    matrices: List[List[List[RationalText]]] = Field(default_factory=list)
    labels: List[str] = Field(default_factory=list)


class TraceEntry(BaseModel):
    case: str
    dim: int
    depth: int = 0
    ideal_basis: Optional[List[List[RationalText]]] = None
    generic_H: Optional[List[RationalText]] = None
    detail: Optional[str] = None


class CertificateFile(BaseModel):
    """A Levi decomposition without the algebra, bound to it by content hashes."""

    algebra_sha256: str
    family_sha256: str
    family_size: int = 0
    levi_basis: List[List[RationalText]] = Field(default_factory=list)
    radical_basis: List[List[RationalText]] = Field(default_factory=list)
    trace: List[TraceEntry] = Field(default_factory=list)
    checks: Dict[str, bool] = Field(default_factory=dict)


class SplitEntry(BaseModel):
    label: str
    H_l: List[RationalText]
    residual: List[List[RationalText]]


class SplitFile(BaseModel):
    splits: List[SplitEntry] = Field(default_factory=list)
    inner_span: List[List[RationalText]] = Field(default_factory=list)
