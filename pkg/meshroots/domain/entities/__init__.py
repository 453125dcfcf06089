"""Domain entities for meshroots."""
from .diagram import DiagramFamily, DynkinDiagram, TreeGraph
from .linalg import ComplexDims, SparseIntMatrix
from .paths import EpsilonChoice, GradedComponent, JumpPath, Step, StepKind
from .profiles import (
    BilinearForms,
    CoxeterElement,
    HomMethod,
    HomTable,
    PeriodicityReport,
    PeriodicityRow,
    RHomProfile,
    RootClass,
    RootSystemOracle,
)
from .quiver import HatQuiver, HatVertex, HeightFunction, QuiverMode, Slice

__all__ = [
    "DiagramFamily",
    "DynkinDiagram",
    "TreeGraph",
    "ComplexDims",
    "SparseIntMatrix",
    "EpsilonChoice",
    "GradedComponent",
    "JumpPath",
    "Step",
    "StepKind",
    "BilinearForms",
    "CoxeterElement",
    "HomMethod",
    "HomTable",
    "PeriodicityReport",
    "PeriodicityRow",
    "RHomProfile",
    "RootClass",
    "RootSystemOracle",
    "HatQuiver",
    "HatVertex",
    "HeightFunction",
    "QuiverMode",
    "Slice",
]
