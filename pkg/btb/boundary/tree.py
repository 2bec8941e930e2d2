from typing import Dict, List, Optional

from btb.building import LatticeClass, PrimeContext, adjacent_vertices, standard_lattice
from .cochain import Edge


def sphere_vertex_count(p: int, r: int) -> int:
    """
    Number of vertices at distance <= r from a vertex of the tree
    """
    return 1 + (p + 1) * (p ** r - 1) // (p - 1)


def end_count(p: int, r: int) -> int:
    return (p + 1) * p ** (r - 1) if r >= 1 else 0


class TreeSphere:
    """
    The vertices S(o, r) at distance <= r from `origin`, with BFS parents.
    """
    def __init__(self, origin: LatticeClass, radius: int, ctx: PrimeContext):
        if ctx.n != 2:
            raise ValueError("TreeSphere needs the tree, n = 2")
        if radius < 0:
            raise ValueError(f"radius must be >= 0, got {radius}")

        self.origin = origin
        self.radius = radius
        self.ctx = ctx
        self.parent: Dict[LatticeClass, Optional[LatticeClass]] = {origin: None}
        self.depth: Dict[LatticeClass, int] = {origin: 0}

        frontier = [origin]
        for d in range(radius):
            next_frontier = []
            for vertex in frontier:
                for neighbour in adjacent_vertices(vertex, ctx):
                    if neighbour not in self.parent:
                        self.parent[neighbour] = vertex
                        self.depth[neighbour] = d + 1
                        next_frontier.append(neighbour)
            frontier = sorted(next_frontier)

    def __repr__(self):
        return f"{self.__class__.__name__}(radius={self.radius}, vertices={len(self.parent)})"

    def __contains__(self, vertex: LatticeClass):
        return vertex in self.parent

    def __len__(self):
        return len(self.parent)

    @property
    def vertices(self) -> List[LatticeClass]:
        return sorted(self.parent, key=lambda v: (self.depth[v], v))

    def edges(self) -> List[Edge]:
        """
        Edges inside the sphere, oriented away from the origin
        """
        return [(self.parent[v], v) for v in self.vertices if self.parent[v] is not None]

    def ends(self) -> List[Edge]:
        """
        End directions (t, s) with s at distance exactly `radius`
        """
        if self.radius < 1:
            raise ValueError("End directions need radius >= 1")
        return [(self.parent[v], v) for v in self.vertices if self.depth[v] == self.radius]

    def path_from_origin(self, vertex: LatticeClass) -> List[LatticeClass]:
        path = [vertex]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return list(reversed(path))


def standard_sphere(radius: int, ctx: PrimeContext) -> TreeSphere:
    return TreeSphere(standard_lattice(0, ctx), radius, ctx)
