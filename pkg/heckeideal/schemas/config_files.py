"""
Pydantic models for the input files: Coxeter systems, ideals, r-tables and W-graphs.

Polynomials are written in the printed form ("q^2", "q-1", "q^(1/2)") or as
the [[doubled-exponent, coefficient], ...] list used by the JSON exports.
"""
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

MatrixEntry = Union[int, str, None]
PolyValue = Union[str, int, List[List]]


class SystemFile(BaseModel):
    """A finite Coxeter system with its weight function."""
    name: Optional[str] = Field(None, description="Label used in reports")
    type: Optional[str] = Field(None, description="Named type such as A3, B3, I2(5) or A1xA1")
    generators: Optional[List[str]] = Field(None, description="Generator names, default s1..sn")
    matrix: Optional[List[List[MatrixEntry]]] = Field(None, description="Coxeter matrix; 'inf' or null for infinity")
    weights: Optional[Dict[str, Union[int, List[int]]]] = Field(
        None, description="L(s) per generator name in whole Gamma units; omitted means equal parameters"
    )
    generic_weights: bool = Field(False, description="One independent parameter per odd-connected class")
    cap: Optional[int] = Field(None, description="Positive-root cap for the element engine")


class IdealFile(BaseModel):
    """An ideal E given by generating words, with an optional reference subset."""
    generators: List[Union[str, List[str]]] = Field(..., description="Words whose suffixes form E")
    J: Optional[List[str]] = Field(None, description="Reference subset J as generator names")


class RTableEntry(BaseModel):
    s: str = Field(..., description="Generator name")
    y: str = Field(..., description="Element y of E with s a weak ascent")
    z: str = Field(..., description="Element z of E")
    poly: PolyValue = Field(..., description="r^s_{z,y}")


class RTableFile(BaseModel):
    """Structure polynomials of a W-graph ideal; unlisted entries are 0."""
    variant: str = Field("minus_one", description="minus_one for M, qs for M~")
    E: Optional[List[str]] = Field(None, description="Generators of E, when not given separately")
    J: Optional[List[str]] = Field(None, description="Reference subset J")
    entries: List[RTableEntry] = Field(default_factory=list)


class MuEntry(BaseModel):
    x: str
    y: str
    s: str
    value: PolyValue = Field(1, description="mu^s_{x,y}, bar-invariant")


class WGraphFile(BaseModel):
    """Vertices, descent sets I(x), edge weights and zero-weight edges."""
    vertices: List[str] = Field(..., description="Vertex labels in basis order")
    I: Dict[str, List[str]] = Field(..., description="Descent set per vertex")
    mu: List[MuEntry] = Field(default_factory=list)
    zero_edges: Dict[str, Dict[str, str]] = Field(
        default_factory=dict, description="For L(s) = 0: generator -> {y: sy}"
    )
