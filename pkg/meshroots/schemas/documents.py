from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


# Quiver documents
class VertexDocument(BaseModel):
    node: int = Field(..., ge=1, description="Node i of Γ")
    level: int = Field(..., description="Level n (residue mod 2h in cyclic mode)")


class QuiverDocument(BaseModel):
    vertices: List[VertexDocument] = Field(..., description="Vertices sorted by (level, node)")
    arrows: List[List[List[int]]] = Field(..., description="Arrows as [[i, n], [j, n+1]]")


# Component documents
class DifferentialDocument(BaseModel):
    degree: int = Field(..., ge=1, description="k of d_k : C_k → C_{k-1}")
    rows: int
    cols: int
    entries: List[List[int]] = Field(..., description="[row, col, value] triplets")


class ComplexDimsDocument(BaseModel):
    chain_dims: List[int]
    homology: List[int]
    euler_characteristic: int


class ComponentDocument(BaseModel):
    diagram: str
    i: int
    j: int
    l: int
    bases: List[List[str]] = Field(..., description="Step strings per jump count k")
    differentials: List[DifferentialDocument]
    homology: Optional[ComplexDimsDocument] = None


# Hom tables
class HomProfileDocument(BaseModel):
    source: List[int] = Field(..., description="q as [i, n]")
    target: List[int] = Field(..., description="q′ as [i, n]")
    hom: int = Field(..., ge=0)
    ext1: int = Field(..., ge=0)
    euler: int


class HomTableDocument(BaseModel):
    diagram: str
    method: str
    profiles: List[HomProfileDocument]


# Roots
class RootClassEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    vertex: List[int] = Field(..., description="Vertex of Γ̂_cyc as [i, n]")
    root_class: List[int] = Field(..., alias="class", description="Class in the simple-module basis")


class RootsReportDocument(BaseModel):
    diagram: str
    height: List[int]
    count: int
    matches_oracle: bool
    bijection: List[RootClassEntry]


# Verification
class CheckDocument(BaseModel):
    suite: str
    name: str
    claim: str = Field(..., description="Statement the check verifies")
    passed: bool
    resource_limited: bool = Field(False, description="Failed on a cutoff, not on the claim")
    details: Dict[str, Any] = Field(default_factory=dict)
    counterexamples: List[Any] = Field(default_factory=list)


class VerificationReportDocument(BaseModel):
    diagram: str
    suites: List[str]
    passed: bool
    resource_limited: bool = False
    checks: List[CheckDocument]


# Custom trees
class TreeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    nodes: int = Field(..., ge=1, description="Number of nodes, labelled 1..n")
    edges: List[List[int]] = Field(..., description="Edge list [[i, j], ...]")
