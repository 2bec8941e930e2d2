from typing import Dict, List, Tuple, Optional

from tqdm import tqdm

from btb import config
from btb.logger import Logger
from .context import PrimeContext
from .chamber import FlagChamber, Face, chambers_containing


class BallGraph:
    """
    All chambers within gallery distance `radius` of `base`.

    Faces of chambers at distance < radius are interior: all their p+1
    chambers belong to the ball. Adjacency is recorded through interior faces.
    """
    def __init__(
            self,
            base: FlagChamber,
            radius: int,
            ctx: PrimeContext,
            distance: Dict[FlagChamber, int],
            faces: Dict[Face, Tuple[FlagChamber, ...]],
    ):
        self.base = base
        self.radius = radius
        self.ctx = ctx
        self.distance = distance
        self.faces = faces
        self.chambers: List[FlagChamber] = sorted(distance, key=lambda c: (distance[c], c))
        self.index = {c: i for i, c in enumerate(self.chambers)}

        self.adjacency: Dict[FlagChamber, List[Tuple[int, FlagChamber]]] = {c: [] for c in self.chambers}
        for face in sorted(faces):
            for chamber in faces[face]:
                for other in faces[face]:
                    if other != chamber:
                        self.adjacency[chamber].append((face.type, other))

    def __repr__(self):
        return f"{self.__class__.__name__}(radius={self.radius}, chambers={len(self.chambers)})"

    def __len__(self):
        return len(self.chambers)

    def __contains__(self, chamber: FlagChamber):
        return chamber in self.distance

    def dist(self, chamber: FlagChamber) -> int:
        return self.distance[chamber]

    def shell(self, k: int) -> List[FlagChamber]:
        return [c for c in self.chambers if self.distance[c] == k]

    def shell_counts(self) -> List[int]:
        counts = [0] * (self.radius + 1)
        for d in self.distance.values():
            counts[d] += 1
        return counts

    def is_interior(self, face: Face) -> bool:
        return face in self.faces

    def interior_faces(self) -> List[Face]:
        return sorted(self.faces)

    def chambers_of(self, face: Face) -> Tuple[FlagChamber, ...]:
        return self.faces[face]

    def neighbours(self, chamber: FlagChamber, face_type: Optional[int] = None) -> List[FlagChamber]:
        return [
            other for t, other in self.adjacency[chamber]
            if face_type is None or t == face_type
        ]

    def to_dict(self) -> dict:
        return {
            "context": self.ctx.to_dict(),
            "radius": self.radius,
            "shell_counts": self.shell_counts(),
            "chambers": [
                {
                    "index": i,
                    "distance": self.distance[c],
                    "vertices": [v.hnf for v in c.vertices],
                    "adjacency": [
                        {"type": t, "index": self.index[other]}
                        for t, other in self.adjacency[c]
                    ],
                }
                for i, c in enumerate(self.chambers)
            ],
        }


def ball(base: FlagChamber, radius: int, ctx: PrimeContext) -> BallGraph:
    """
    Breadth-first enumeration of the chambers at gallery distance <= radius.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    ctx.check_radius(radius)

    log = Logger(f"ball/n{ctx.n}/p{ctx.p}")

    distance = {base: 0}
    faces = {}
    frontier = [base]
    for d in range(radius):
        next_frontier = []
        for chamber in tqdm(frontier, disable=not config.VERBOSE, desc=f"distance {d + 1}"):
            for face in chamber.faces():
                if face in faces:
                    continue
                faces[face] = tuple(chambers_containing(face, ctx))
                for other in faces[face]:
                    if other not in distance:
                        distance[other] = d + 1
                        next_frontier.append(other)

        log.debug("shell", distance=d + 1, chambers=len(next_frontier))
        frontier = sorted(next_frontier)

    graph = BallGraph(base=base, radius=radius, ctx=ctx, distance=distance, faces=faces)
    log.info("ball done", radius=radius, chambers=len(graph), faces=len(faces))
    return graph
