from .cochain import ZeroCochain, OneCochain, NotAdjacentError, coboundary, integrate, are_adjacent
from .tree import TreeSphere, standard_sphere, sphere_vertex_count, end_count
from .boundary_map import (
    BoundaryFunction, SupportError, MalformedPartitionError, NotExactError,
    boundary_value, lift, primitive, end_chart,
)
