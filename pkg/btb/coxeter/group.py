import dataclasses
import functools
import math
from typing import List, Tuple, Dict, Optional, Iterable, Sequence

import numpy as np
from tqdm import tqdm

from btb import config
from btb.logger import Logger
from .diagram import CoxeterDiagram, NonCrystallographicError


class UnknownGeneratorError(ValueError):
    pass


class LengthCutoffError(RuntimeError):
    pass


# Cartan integer pairs (A[i][j], A[j][i]) for i before j, by order of s_i s_j
CARTAN_PAIRS = {
    2: (0, 0),
    3: (-1, -1),
    4: (-2, -1),
    6: (-3, -1),
    math.inf: (-2, -2),
}


def cartan_matrix(diagram: CoxeterDiagram) -> np.ndarray:
    """
    Generalized Cartan matrix whose products A[i][j] * A[j][i] realize
    the orders of the diagram.
    """
    size = diagram.size
    matrix = np.identity(size, dtype=np.int64) * 2
    for i in range(size):
        for j in range(i + 1, size):
            m = diagram.orders[i][j]
            if m not in CARTAN_PAIRS:
                raise NonCrystallographicError(f"No Cartan integers for order {m}")
            matrix[i, j], matrix[j, i] = CARTAN_PAIRS[m]
    return matrix


def generator_matrices(diagram: CoxeterDiagram) -> List[np.ndarray]:
    """
    Reflection matrices on the simple-root basis, one per generator.

    sigma_i(alpha_j) = alpha_j - A[i][j] alpha_i, so sigma_i is the identity
    with row i replaced by `delta_ij - A[i][j]`.
    """
    cartan = cartan_matrix(diagram)
    matrices = []
    for i in range(diagram.size):
        m = np.identity(diagram.size, dtype=np.int64)
        m[i, :] -= cartan[i, :]
        m.setflags(write=False)
        matrices.append(m)
    return matrices


class GroupElement:
    """
    Element of a Coxeter group, identified by its integer reflection matrix.
    """
    __slots__ = ("matrix", "cached_length", "_key")

    def __init__(self, matrix: np.ndarray, cached_length: Optional[int] = None):
        matrix = np.ascontiguousarray(matrix, dtype=np.int64)
        matrix.setflags(write=False)
        self.matrix = matrix
        self.cached_length = cached_length
        self._key = matrix.tobytes()

    def __repr__(self):
        return f"{self.__class__.__name__}({self.matrix.tolist()})"

    @property
    def key(self) -> bytes:
        """
        Canonical hashable form
        """
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other: "GroupElement"):
        return self.matrix.tolist() < other.matrix.tolist()

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix)

    def is_identity(self) -> bool:
        return bool((self.matrix == np.identity(self.matrix.shape[0], dtype=np.int64)).all())


@dataclasses.dataclass(frozen=True)
class GrowthTable:
    counts: Tuple[int, ...]

    @property
    def cutoff(self) -> int:
        return len(self.counts) - 1

    def to_dict(self) -> dict:
        return {"cutoff": self.cutoff, "counts": list(self.counts)}


class CoxeterGroup:
    """
    A Coxeter system given by a crystallographic diagram.

    Elements are found level by level (breadth-first in the Cayley graph with
    right multiplication by generators). Every element found is stored with
    the first reduced word that reached it.
    """
    def __init__(self, diagram: CoxeterDiagram):
        self.diagram = diagram
        self.matrices = generator_matrices(diagram)
        self.identity = GroupElement(np.identity(diagram.size, dtype=np.int64), cached_length=0)
        self._generators = {
            s: GroupElement(m, cached_length=1)
            for s, m in zip(diagram.generators, self.matrices)
        }
        self._words: Dict[bytes, Tuple[int, ...]] = {self.identity.key: ()}
        self._levels: List[List[GroupElement]] = [[self.identity]]
        self.log = Logger(f"coxeter/{'-'.join(map(str, diagram.generators))}")

    def __repr__(self):
        return f"{self.__class__.__name__}({self.diagram.to_dict()})"

    @property
    def depth(self) -> int:
        """
        Largest length that has been completely enumerated
        """
        return len(self._levels) - 1

    def generator(self, s: int) -> GroupElement:
        try:
            return self._generators[s]
        except KeyError:
            raise UnknownGeneratorError(f"Unknown generator id {s!r}")

    def element_from_word(self, word: Iterable[int]) -> GroupElement:
        """
        Product of generator matrices, left to right
        """
        matrix = self.identity.matrix
        for s in word:
            matrix = matrix @ self.generator(s).matrix
        return GroupElement(matrix)

    def enumerate_to(self, depth: int):
        """
        Extend the enumeration to all elements of length <= depth
        """
        while self.depth < depth:
            self._expand()

    def _expand(self):
        level = self._levels[-1]
        next_level = []
        next_length = self.depth + 1
        for element in tqdm(level, disable=not config.VERBOSE, desc=f"length {next_length}"):
            word = self._words[element.key]
            for s in self.diagram.generators:
                product = GroupElement(element.matrix @ self._generators[s].matrix, cached_length=next_length)
                if product.key not in self._words:
                    self._words[product.key] = word + (s, )
                    next_level.append(product)

        self._levels.append(next_level)
        self.log.debug("level", length=next_length, elements=len(next_level))

    def elements_of_length(self, k: int) -> List[GroupElement]:
        self.enumerate_to(k)
        return list(self._levels[k])

    def growth(self, cutoff: int) -> GrowthTable:
        if cutoff < 0:
            raise ValueError(f"cutoff must be >= 0, got {cutoff}")
        self.enumerate_to(cutoff)
        return GrowthTable(counts=tuple(len(level) for level in self._levels[:cutoff + 1]))

    def _check_shape(self, element: GroupElement):
        if element.matrix.shape != self.identity.matrix.shape:
            raise UnknownGeneratorError(f"{element} does not belong to {self}")

    def _find(self, element: GroupElement, cutoff: Optional[int] = None) -> Tuple[int, ...]:
        cutoff = config.LENGTH_CUTOFF if cutoff is None else cutoff
        self._check_shape(element)
        while element.key not in self._words:
            if self.depth >= cutoff:
                raise LengthCutoffError(f"{element} not reached within length {cutoff}")
            self._expand()
        return self._words[element.key]

    def length(self, element: GroupElement, cutoff: Optional[int] = None) -> int:
        """
        Cayley distance from the identity
        """
        self._check_shape(element)
        # cached lengths may come from another group of the same rank
        if element.cached_length is not None and element.key in self._words:
            return len(self._words[element.key])
        return len(self._find(element, cutoff))

    def reduced_word(self, element: GroupElement, cutoff: Optional[int] = None) -> Tuple[int, ...]:
        return self._find(element, cutoff)


@functools.lru_cache(maxsize=64)
def coxeter_group(diagram: CoxeterDiagram) -> CoxeterGroup:
    """
    Shared `CoxeterGroup` per diagram, so enumerations are reused
    """
    return CoxeterGroup(diagram)


def bfs_growth(diagram: CoxeterDiagram, cutoff: int) -> GrowthTable:
    """
    Number N(k) of elements of length exactly k, for k = 0 .. cutoff
    """
    return coxeter_group(diagram).growth(cutoff)


def length(diagram: CoxeterDiagram, element: GroupElement) -> int:
    return coxeter_group(diagram).length(element)


def element_from_word(diagram: CoxeterDiagram, word: Sequence[int]) -> GroupElement:
    return coxeter_group(diagram).element_from_word(word)
