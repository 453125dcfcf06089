import csv
import io

from meshroots.domain.entities.profiles import HomTable, RHomProfile
from meshroots.schemas.documents import HomProfileDocument, HomTableDocument


class HomTableMapper:
    """Mapper from HomTable (domain) to its JSON and CSV renderings."""

    CSV_HEADER = ("q", "q_prime", "hom", "ext1", "method")

    @staticmethod
    def to_profile_document(profile: RHomProfile) -> HomProfileDocument:
        return HomProfileDocument(
            source=list(profile.source.as_pair()),
            target=list(profile.target.as_pair()),
            hom=profile.hom,
            ext1=profile.ext1,
            euler=profile.euler,
        )

    @staticmethod
    def to_document(table: HomTable) -> HomTableDocument:
        return HomTableDocument(
            diagram=table.diagram.label,
            method=table.method.value,
            profiles=[HomTableMapper.to_profile_document(p) for p in table.rows()],
        )

    @staticmethod
    def to_csv(table: HomTable) -> str:
        """Rows (q, q′, hom, ext1, method) with vertices written "i,n"."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(HomTableMapper.CSV_HEADER)
        for profile in table.rows():
            writer.writerow((
                f"{profile.source.node},{profile.source.level}",
                f"{profile.target.node},{profile.target.level}",
                profile.hom,
                profile.ext1,
                table.method.value,
            ))
        return buffer.getvalue()
