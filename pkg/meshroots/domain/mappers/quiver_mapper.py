from meshroots.domain.entities.quiver import HatQuiver
from meshroots.schemas.documents import QuiverDocument, VertexDocument


class QuiverMapper:
    """Mapper between HatQuiver (domain) and QuiverDocument (JSON)."""

    @staticmethod
    def to_document(quiver: HatQuiver) -> QuiverDocument:
        vertices = sorted(quiver.vertices, key=lambda v: v.sort_key)
        return QuiverDocument(
            vertices=[VertexDocument(node=v.node, level=v.level) for v in vertices],
            arrows=[
                [list(source.as_pair()), list(target.as_pair())]
                for source, target in quiver.arrows
            ],
        )
