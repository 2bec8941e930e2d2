"""
Right action of the Hecke generators on finitely supported chamber functions.

    (f * e_s)(C) = sum of f(C') over the chambers C' != C sharing the type-s face of C
"""
from fractions import Fraction
from typing import Dict

from btb.building import BallGraph, FlagChamber, generator_face_type
from btb.harmonic import MapCochain, BoundaryFaceError


def _check_support(f: MapCochain, ball: BallGraph):
    for chamber in f.values:
        if chamber not in ball or ball.dist(chamber) >= ball.radius:
            raise BoundaryFaceError(f"Support of cochain reaches the boundary of {ball} at {chamber}")


def convolve_chamber_function(f: MapCochain, s: int, ball: BallGraph) -> MapCochain:
    """
    f * e_s through the faces enumerated in `ball`
    """
    _check_support(f, ball)
    face_type = generator_face_type(s, ball.ctx)
    result: Dict[FlagChamber, Fraction] = {}
    for chamber, value in f.values.items():
        for other in ball.chambers_of(chamber.face(face_type)):
            if other != chamber:
                result[other] = result.get(other, 0) + value
    return MapCochain(result)


def convolve_by_relative_position(f: MapCochain, s: int, ball: BallGraph) -> MapCochain:
    """
    f * e_s from vertex sets: C is s-adjacent to C' when they share all
    vertices but the one of label (-s) mod n.
    """
    _check_support(f, ball)
    face_type = generator_face_type(s, ball.ctx)
    result: Dict[FlagChamber, Fraction] = {}
    for source, value in f.values.items():
        source_vertices = set(source.vertices)
        for chamber in ball.chambers:
            missing = [v for v in chamber.vertices if v not in source_vertices]
            if len(missing) == 1 and missing[0].label == face_type:
                result[chamber] = result.get(chamber, 0) + value
    return MapCochain(result)


def steinberg_relation_holds(chamber: FlagChamber, s: int, ball: BallGraph) -> bool:
    """
    1_C * e_s + 1_C equals the indicator of all chambers containing the type-s face of C
    """
    f = MapCochain.indicator(chamber)
    face = chamber.face(generator_face_type(s, ball.ctx))
    return convolve_chamber_function(f, s, ball) + f == MapCochain.face_indicator(face, ball)
