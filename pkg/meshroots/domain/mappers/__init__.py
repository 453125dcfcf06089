"""Mappers from domain entities to schema documents."""
from .component_mapper import ComponentMapper
from .hom_table_mapper import HomTableMapper
from .quiver_mapper import QuiverMapper
from .roots_mapper import RootsMapper

__all__ = ["ComponentMapper", "HomTableMapper", "QuiverMapper", "RootsMapper"]
