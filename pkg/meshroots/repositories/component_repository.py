from typing import Callable, Hashable, Optional, Tuple

import structlog

from meshroots.domain.entities.linalg import ComplexDims
from meshroots.domain.entities.paths import EpsilonChoice
from meshroots.repositories.base_repository import BaseRepository

logger = structlog.get_logger(__name__)

ComponentKey = Tuple[Hashable, int, int, int, Tuple]


class ComponentRepository(BaseRepository[ComponentKey, ComplexDims]):
    """
    Cache of component homology, keyed by (graph, i, j, l, ε).

    Values are immutable, so a hit behaves exactly like a recomputation.
    """

    @staticmethod
    def key(graph: Hashable, i: int, j: int, l: int, eps: Optional[EpsilonChoice] = None) -> ComponentKey:
        return (graph, i, j, l, eps.key if eps else ())

    def get_or_compute(self, key: ComponentKey, compute: Callable[[], ComplexDims]) -> ComplexDims:
        """
        Return the cached homology for key, computing and storing it on a miss.

        Args:
            key: Component key from ComponentRepository.key
            compute: Zero-argument callable producing the homology

        Returns:
            ComplexDims: Cached or freshly computed homology
        """
        cached = self.get(key)
        if cached is not None:
            return cached
        logger.debug("Component cache miss", graph=getattr(key[0], "label", None), i=key[1], j=key[2], l=key[3])
        return self.add(key, compute())
