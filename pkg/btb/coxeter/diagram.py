import dataclasses
import math
import re
from typing import Tuple, Dict, Iterable, Union

Order = Union[int, float]

# crystallographic orders of a product st, `math.inf` for the free product
CRYSTALLOGRAPHIC_ORDERS = (2, 3, 4, 6, math.inf)


class InvalidTypeLabel(ValueError):
    pass


class NonCrystallographicError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class AffineTypeLabel:
    """
    Type of an irreducible root system, e.g. `A2` whose affine diagram is `A2~`.

    `rank` is the spherical rank r, the affine diagram has r + 1 nodes.
    """
    family: str
    rank: int

    VALID_RANKS = {
        "A": (1, None),
        "B": (3, None),
        "C": (2, None),
        "D": (4, None),
        "E": (6, 8),
        "F": (4, 4),
        "G": (2, 2),
    }

    def __post_init__(self):
        if self.family not in self.VALID_RANKS:
            raise InvalidTypeLabel(f"Unknown family '{self.family}'")
        min_rank, max_rank = self.VALID_RANKS[self.family]
        if not isinstance(self.rank, int) or self.rank < min_rank or (max_rank and self.rank > max_rank):
            raise InvalidTypeLabel(f"Invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}~"

    @classmethod
    def parse(cls, text: str) -> "AffineTypeLabel":
        """
        Parse labels like "A2~", "C2~" or "G2~" (the tilde is optional)
        """
        match = re.fullmatch(r"\s*([A-Za-z])(\d+)~?\s*", str(text))
        if not match:
            raise InvalidTypeLabel(f"Can not parse type label '{text}'")
        return cls(family=match.group(1).upper(), rank=int(match.group(2)))


@dataclasses.dataclass(frozen=True)
class CoxeterDiagram:
    """
    A Coxeter matrix over the generator ids `generators`.

    `orders[i][j]` is the order m_st of the product of generators i and j
    (positions in `generators`), with 1 on the diagonal.
    """
    generators: Tuple[int, ...]
    orders: Tuple[Tuple[Order, ...], ...]

    def __post_init__(self):
        size = len(self.generators)
        if len(set(self.generators)) != size:
            raise ValueError(f"Duplicate generator ids in {self.generators}")
        if len(self.orders) != size or any(len(row) != size for row in self.orders):
            raise ValueError(f"Coxeter matrix must be {size}x{size}")
        for i in range(size):
            if self.orders[i][i] != 1:
                raise ValueError(f"Diagonal entry m[{i}][{i}] must be 1")
            for j in range(i + 1, size):
                m = self.orders[i][j]
                if m != self.orders[j][i]:
                    raise ValueError(f"Coxeter matrix is not symmetric at ({i}, {j})")
                if m < 2:
                    raise ValueError(f"Off-diagonal order must be >= 2, got {m} at ({i}, {j})")
                if m not in CRYSTALLOGRAPHIC_ORDERS:
                    raise NonCrystallographicError(
                        f"Order {m} of generators {self.generators[i]}, {self.generators[j]}"
                        f" is not crystallographic"
                    )

    @classmethod
    def from_edges(
            cls,
            generators: Iterable[int],
            edges: Dict[Tuple[int, int], Order],
    ) -> "CoxeterDiagram":
        """
        Build from a dict of `(s, t) -> m_st`, unlisted pairs commute (m = 2).
        """
        generators = tuple(generators)
        index = {s: i for i, s in enumerate(generators)}
        orders = [
            [1 if i == j else 2 for j in range(len(generators))]
            for i in range(len(generators))
        ]
        for (s, t), m in edges.items():
            orders[index[s]][index[t]] = m
            orders[index[t]][index[s]] = m
        return cls(generators=generators, orders=tuple(tuple(row) for row in orders))

    @property
    def size(self) -> int:
        return len(self.generators)

    def index(self, s: int) -> int:
        return self.generators.index(s)

    def order(self, s: int, t: int) -> Order:
        return self.orders[self.index(s)][self.index(t)]

    def relabeled(self, permutation: Iterable[int]) -> "CoxeterDiagram":
        """
        Same Coxeter system with generators enumerated in a different order
        """
        permutation = tuple(permutation)
        edges = {
            (self.generators[i], self.generators[j]): self.orders[i][j]
            for i in range(self.size) for j in range(i + 1, self.size)
        }
        return self.from_edges([self.generators[i] for i in permutation], edges)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "orders": [["inf" if m == math.inf else m for m in row] for row in self.orders],
        }


def _chain(nodes: Iterable[int], m: Order = 3) -> Dict[Tuple[int, int], Order]:
    nodes = list(nodes)
    return {(a, b): m for a, b in zip(nodes, nodes[1:])}


def affine_diagram(label: AffineTypeLabel) -> CoxeterDiagram:
    """
    The affine Coxeter diagram of type `label`, generators `0 .. rank`.
    """
    r = label.rank
    family = label.family
    nodes = range(r + 1)

    if family == "A":
        if r == 1:
            edges = {(0, 1): math.inf}
        else:
            edges = {(i, (i + 1) % (r + 1)): 3 for i in nodes}

    elif family == "B":
        edges = {(0, 2): 3, (1, 2): 3, **_chain(range(2, r)), (r - 1, r): 4}

    elif family == "C":
        edges = {(0, 1): 4, **_chain(range(1, r)), (r - 1, r): 4}

    elif family == "D":
        edges = {(0, 2): 3, (1, 2): 3, **_chain(range(2, r)), (r - 2, r): 3}

    elif family == "E":
        if r == 6:
            edges = {**_chain([1, 2, 3, 4, 5]), (3, 6): 3, (6, 0): 3}
        elif r == 7:
            edges = {**_chain(range(7)), (3, 7): 3}
        else:
            edges = {**_chain(range(8)), (5, 8): 3}

    elif family == "F":
        edges = {(0, 1): 3, (1, 2): 3, (2, 3): 4, (3, 4): 3}

    elif family == "G":
        edges = {(0, 1): 3, (1, 2): 6}

    else:  # pragma: no cover, rejected by AffineTypeLabel
        raise InvalidTypeLabel(str(label))

    return CoxeterDiagram.from_edges(nodes, edges)
