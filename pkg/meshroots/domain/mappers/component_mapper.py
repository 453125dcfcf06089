from typing import Optional

from meshroots.domain.entities.linalg import ComplexDims
from meshroots.domain.entities.paths import GradedComponent
from meshroots.schemas.documents import (
    ComplexDimsDocument,
    ComponentDocument,
    DifferentialDocument,
)


class ComponentMapper:
    """
    Mapper from graded components and their homology to JSON documents.

    Bases are written as step strings ("e(1-2);j(2);e(2-1)", "id(1)") and
    differentials as [row, col, value] triplets.
    """

    @staticmethod
    def to_dims_document(dims: ComplexDims) -> ComplexDimsDocument:
        return ComplexDimsDocument(
            chain_dims=list(dims.chain_dims),
            homology=list(dims.homology),
            euler_characteristic=dims.euler_characteristic,
        )

    @staticmethod
    def to_document(
        component: GradedComponent,
        dims: Optional[ComplexDims] = None,
    ) -> ComponentDocument:
        return ComponentDocument(
            diagram=component.diagram.label,
            i=component.i,
            j=component.j,
            l=component.l,
            bases=[[str(path) for path in basis] for basis in component.bases],
            differentials=[
                DifferentialDocument(
                    degree=k,
                    rows=matrix.rows,
                    cols=matrix.cols,
                    entries=matrix.to_triplets(),
                )
                for k, matrix in enumerate(component.differentials, start=1)
            ],
            homology=ComponentMapper.to_dims_document(dims) if dims else None,
        )
