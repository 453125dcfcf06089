from .base_repository import BaseRepository
from .component_repository import ComponentRepository

__all__ = ["BaseRepository", "ComponentRepository"]
