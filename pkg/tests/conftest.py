import json

import pytest

from meshroots.domain.entities.diagram import DiagramFamily
from meshroots.repositories.component_repository import ComponentRepository
from meshroots.services import dynkin
from meshroots.services.meshcat import MeshCategoryService
from meshroots.services.verification import four_star


@pytest.fixture
def a1():
    return dynkin.build_diagram(DiagramFamily.A, 1)


@pytest.fixture
def a2():
    return dynkin.build_diagram(DiagramFamily.A, 2)


@pytest.fixture
def a3():
    return dynkin.build_diagram(DiagramFamily.A, 3)


@pytest.fixture
def a4():
    return dynkin.build_diagram(DiagramFamily.A, 4)


@pytest.fixture
def d4():
    return dynkin.build_diagram(DiagramFamily.D, 4)


@pytest.fixture
def d5():
    return dynkin.build_diagram(DiagramFamily.D, 5)


@pytest.fixture
def e6():
    return dynkin.build_diagram(DiagramFamily.E, 6)


@pytest.fixture
def star():
    """The 4-star D̃_4 used by the non-Dynkin checks"""
    return four_star()


@pytest.fixture
def component_repo():
    return ComponentRepository()


@pytest.fixture
def meshcat(component_repo):
    return MeshCategoryService(component_repo=component_repo)


@pytest.fixture
def tree_file(tmp_path):
    """4-star tree document written to a temporary file"""
    path = tmp_path / "dtilde4.json"
    path.write_text(json.dumps({"nodes": 5, "edges": [[1, 2], [1, 3], [1, 4], [1, 5]]}))
    return path
