from fractions import Fraction
from typing import List, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from btb.building import BallGraph, FlagChamber, Face, act
from btb.logger import Logger
from .cochain import Cochain, pairing, MapCochain


class BoundaryFaceError(ValueError):
    pass


class NearestChamberError(AssertionError):
    pass


log = Logger("harmonic")


def _check_interior(face: Face, ball: BallGraph):
    if not ball.is_interior(face):
        raise BoundaryFaceError(f"{face} is not interior to {ball}")


def harmonicity_defect(f: Cochain, face: Face, ball: BallGraph) -> Fraction:
    """
    Sum of f over the p+1 chambers containing `face`
    """
    _check_interior(face, ball)
    return pairing(f, MapCochain.face_indicator(face, ball), ball)


def min_distance_chamber(face: Face, ball: BallGraph) -> Tuple[FlagChamber, int]:
    """
    The chamber containing `face` closest to the base and its distance δ.

    All other chambers of the face must be at distance δ + 1.
    """
    _check_interior(face, ball)
    chambers = sorted(ball.chambers_of(face), key=lambda c: (ball.dist(c), c))
    nearest, delta = chambers[0], ball.dist(chambers[0])
    others = [ball.dist(c) for c in chambers[1:]]
    if any(d != delta + 1 for d in others):
        raise NearestChamberError(
            f"{face}: nearest chamber at {delta}, others at {others}"
        )
    return nearest, delta


def decay_profile(f: Cochain, ball: BallGraph) -> List[Tuple[int, Fraction]]:
    """
    (k, max |f(C)|) over the chambers at distance k
    """
    maxima = [Fraction(0)] * (ball.radius + 1)
    for chamber in ball.chambers:
        k = ball.dist(chamber)
        maxima[k] = max(maxima[k], abs(f.value(chamber, ball)))
    return list(enumerate(maxima))


def defect_scan(f: Cochain, ball: BallGraph) -> Tuple[int, int]:
    """
    (number of interior faces with nonzero defect, number of interior faces)
    """
    faces = ball.interior_faces()
    nonzero = sum(1 for face in faces if harmonicity_defect(f, face, ball) != 0)
    return nonzero, len(faces)


def finite_support_rigidity(ball: BallGraph) -> bool:
    """
    True if the only cochain supported at distance <= R-1 with zero defect
    at every interior face is zero.
    """
    variables = [c for c in ball.chambers if ball.dist(c) < ball.radius]
    column = {c: i for i, c in enumerate(variables)}
    faces = ball.interior_faces()
    if not faces:
        return not variables

    rows = []
    for face in faces:
        row = [QQ(0)] * len(variables)
        for chamber in ball.chambers_of(face):
            if chamber in column:
                row[column[chamber]] = QQ(1)
        rows.append(row)

    rank = DomainMatrix(rows, (len(rows), len(variables)), QQ).rank()
    log.debug("rigidity", faces=len(rows), chambers=len(variables), rank=rank)
    return rank == len(variables)


def is_invariant(f: Cochain, g, ball: BallGraph) -> bool:
    """
    f(gC) == f(C) for every chamber C of the ball with gC inside the ball
    """
    for chamber in ball.chambers:
        image = act(g, chamber, ball.ctx)
        if image in ball and f.value(image, ball) != f.value(chamber, ball):
            return False
    return True
