"""
Weyl group helpers on the simple-root basis.

Vectors are integer tuples in the basis of simple roots α_1..α_n;
matrices are sympy ``Matrix`` objects with integer entries.
"""
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import structlog
from sympy import Matrix, eye

from meshroots.core.exceptions import NonFiniteTypeException

logger = structlog.get_logger(__name__)

Cartan = Sequence[Sequence[int]]
Vector = Tuple[int, ...]


def simple_reflection(cartan: Cartan, index: int) -> Matrix:
    """s_i(v) = v − (v, α_i) α_i, for 0-based index i."""
    size = len(cartan)
    matrix = eye(size)
    for col in range(size):
        matrix[index, col] -= cartan[index][col]
    return matrix


def simple_reflections(cartan: Cartan) -> Tuple[Matrix, ...]:
    return tuple(simple_reflection(cartan, index) for index in range(len(cartan)))


def reflection_product(cartan: Cartan, indices: Iterable[int]) -> Matrix:
    """s_{i_1} s_{i_2} ... s_{i_m} (s_{i_m} acts first)."""
    result = eye(len(cartan))
    for index in indices:
        result = result * simple_reflection(cartan, index)
    return result


def matrix_order(matrix: Matrix, limit: int) -> Optional[int]:
    """Smallest k ≥ 1 with matrix^k = I, or None if k > limit."""
    identity = eye(matrix.rows)
    power = matrix
    for exponent in range(1, limit + 1):
        if power == identity:
            return exponent
        power = power * matrix
    return None


def reflect_vector(cartan: Cartan, vector: Vector, index: int) -> Vector:
    pairing = sum(cartan[index][col] * vector[col] for col in range(len(vector)))
    if pairing == 0:
        return vector
    values = list(vector)
    values[index] -= pairing
    return tuple(values)


def reflection_closure(cartan: Cartan, limit: int) -> FrozenSet[Vector]:
    """Orbit of the simple roots under all simple reflections."""
    size = len(cartan)
    simple = [tuple(1 if col == row else 0 for col in range(size)) for row in range(size)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        vector = frontier.pop()
        for index in range(size):
            image = reflect_vector(cartan, vector, index)
            if image not in found:
                found.add(image)
                if len(found) > limit:
                    raise NonFiniteTypeException(limit)
                frontier.append(image)
    return frozenset(found)


def longest_element(cartan: Cartan, limit: int) -> Matrix:
    """
    w₀ by greedy descent: reflect 2ρ while some (x, α_i) > 0.

    Each step is a simple reflection that lengthens the word; the walk
    ends at −2ρ, where the accumulated product is w₀.
    """
    size = len(cartan)
    form = Matrix(cartan)
    if form.det() == 0:
        raise NonFiniteTypeException(limit)
    vector = form.LUsolve(Matrix([2] * size))
    word = eye(size)
    for length in range(limit):
        pairings = form * vector
        ascent = next((index for index in range(size) if pairings[index] > 0), None)
        if ascent is None:
            logger.debug("Longest element found", length=length)
            return word
        reflection = simple_reflection(cartan, ascent)
        vector = reflection * vector
        word = reflection * word
    raise NonFiniteTypeException(limit)


def involution_from_longest(longest: Matrix) -> Dict[int, int]:
    """1-based map i ↦ ǐ defined by w₀(α_ǐ) = −α_i."""
    size = longest.rows
    mapping = {}
    for col in range(size):
        image = [longest[row, col] for row in range(size)]
        for row in range(size):
            if image[row] == -1 and all(image[k] == 0 for k in range(size) if k != row):
                mapping[row + 1] = col + 1
    return mapping


def to_int_matrix(matrix: Matrix) -> Tuple[Tuple[int, ...], ...]:
    return tuple(
        tuple(int(matrix[row, col]) for col in range(matrix.cols))
        for row in range(matrix.rows)
    )

