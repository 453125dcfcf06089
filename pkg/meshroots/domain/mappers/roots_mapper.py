import csv
import io
from typing import Mapping

from meshroots.domain.entities.profiles import BilinearForms, RootClass
from meshroots.domain.entities.quiver import HatVertex, HeightFunction
from meshroots.schemas.documents import RootClassEntry, RootsReportDocument


class RootsMapper:
    """Mapper from knitted classes to the bijection report and Gram CSV."""

    @staticmethod
    def to_report(
        label: str,
        height: HeightFunction,
        classes: Mapping[HatVertex, RootClass],
        matches_oracle: bool,
    ) -> RootsReportDocument:
        ordered = sorted(classes, key=lambda v: v.sort_key)
        return RootsReportDocument(
            diagram=label,
            height=list(height.values),
            count=len(ordered),
            matches_oracle=matches_oracle,
            bijection=[
                RootClassEntry(vertex=list(v.as_pair()), root_class=list(classes[v].vector))
                for v in ordered
            ],
        )

    @staticmethod
    def to_gram_csv(classes: Mapping[HatVertex, RootClass], forms: BilinearForms) -> str:
        """Symmetric form (c(q), c(q′)) over all vertices, header row first."""
        ordered = sorted(classes, key=lambda v: v.sort_key)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([""] + [f"{v.node},{v.level}" for v in ordered])
        for row in ordered:
            writer.writerow(
                [f"{row.node},{row.level}"]
                + [forms.sym(classes[row].vector, classes[col].vector) for col in ordered]
            )
        return buffer.getvalue()
