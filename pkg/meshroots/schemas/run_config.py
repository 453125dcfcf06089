import re
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from meshroots.config import settings

VERTEX_SYNTAX = re.compile(r"^\s*(\d+)\s*,\s*(-?\d+)\s*$")
WINDOW_SYNTAX = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
HEIGHT_SYNTAX = re.compile(r"^(bipartite([+-]\d+)?|-?\d+(,-?\d+)*)$")

SUITES = (
    "cartan",
    "roots",
    "coxeter",
    "serre",
    "periodicity",
    "bgp",
    "nondynkin",
    "agreement",
    "dg",
)


def parse_vertex(text: str) -> Tuple[int, int]:
    """Parse "i,n" into (node, level)."""
    match = VERTEX_SYNTAX.match(text)
    if not match:
        raise ValueError(f"vertex must look like 'i,n', got {text!r}")
    return int(match.group(1)), int(match.group(2))


class RunConfig(BaseModel):
    """Validated CLI input; built before any computation."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Literal["quiver", "hom", "homology", "table", "roots", "verify"]
    diagram: Optional[str] = Field(None, description="Diagram spec like 'A4'")
    tree: Optional[str] = Field(None, description="Path to a JSON tree document")
    height: str = Field("bipartite", description="bipartite | bipartite+2k | h1,h2,...")
    cyclic: bool = False
    window: Optional[str] = Field(None, description="Level window 'lo..hi'")
    cutoff: int = Field(default_factory=lambda: settings.CUTOFF, gt=0)
    matrix_entry_cutoff: int = Field(default_factory=lambda: settings.MATRIX_ENTRY_CUTOFF, gt=0)
    format: Literal["dot", "json", "csv", "text"] = "text"
    output: Optional[str] = None
    suite: List[str] = Field(default_factory=lambda: ["all"])
    lmax: int = Field(2, ge=0)
    method: Literal["quotient", "knitting", "oracle"] = "knitting"
    source: Optional[str] = None
    target: Optional[str] = None
    i: Optional[int] = Field(None, ge=1)
    j: Optional[int] = Field(None, ge=1)
    l: Optional[int] = Field(None, ge=0)

    @field_validator("window")
    @classmethod
    def window_syntax(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            match = WINDOW_SYNTAX.match(value)
            if not match or int(match.group(1)) > int(match.group(2)):
                raise ValueError(f"window must look like 'lo..hi' with lo <= hi, got {value!r}")
        return value

    @field_validator("height")
    @classmethod
    def height_syntax(cls, value: str) -> str:
        if not HEIGHT_SYNTAX.match(value.replace(" ", "")):
            raise ValueError(f"unrecognized height spec {value!r}")
        return value.replace(" ", "")

    @field_validator("source", "target")
    @classmethod
    def vertex_syntax(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_vertex(value)
        return value

    @field_validator("suite", mode="before")
    @classmethod
    def split_suites(cls, value):
        if isinstance(value, str):
            value = [value]
        names = [name.strip() for item in value for name in item.split(",") if name.strip()]
        unknown = [name for name in names if name != "all" and name not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(unknown)}")
        return names

    @model_validator(mode="after")
    def check_command_inputs(self) -> "RunConfig":
        if self.diagram and self.tree:
            raise ValueError("give either --diagram or --tree, not both")
        if self.command in ("hom", "table", "roots") and not self.diagram:
            raise ValueError(f"{self.command} needs --diagram")
        if self.command == "quiver":
            if not (self.diagram or self.tree):
                raise ValueError("quiver needs --diagram or --tree")
            if self.cyclic == (self.window is not None):
                raise ValueError("quiver needs exactly one of --cyclic or --window")
        if self.command == "hom" and (self.source is None or self.target is None):
            raise ValueError("hom needs --source and --target")
        if self.command == "homology":
            if not (self.diagram or self.tree):
                raise ValueError("homology needs --diagram or --tree")
            if None in (self.i, self.j, self.l):
                raise ValueError("homology needs --i, --j and --l")
        if self.command == "verify" and not self.diagram:
            if self.suites != ["nondynkin"]:
                raise ValueError("only the nondynkin suite runs without --diagram")
        return self

    @property
    def suites(self) -> List[str]:
        """Selected suites with 'all' expanded, in canonical order."""
        if "all" in self.suite:
            return list(SUITES) if self.diagram else ["nondynkin"]
        return [name for name in SUITES if name in self.suite]

    @property
    def window_bounds(self) -> Optional[Tuple[int, int]]:
        if self.window is None:
            return None
        match = WINDOW_SYNTAX.match(self.window)
        return int(match.group(1)), int(match.group(2))

    @property
    def source_vertex(self) -> Optional[Tuple[int, int]]:
        return parse_vertex(self.source) if self.source else None

    @property
    def target_vertex(self) -> Optional[Tuple[int, int]]:
        return parse_vertex(self.target) if self.target else None
