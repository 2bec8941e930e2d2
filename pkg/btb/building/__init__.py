from .context import PrimeContext, PrecisionError, SUPPORTED_DIMENSIONS
from .lattice import (
    LatticeClass, SingularMatrixError,
    lattice_class, hermite_form, standard_lattice, vertex_label,
    apartment_vertex, vertex_distance, relative_exponents, contains,
)
from .chamber import (
    Face, FlagChamber, InvalidFaceError, InvalidChamberError,
    chain_representatives, chambers_containing, standard_chamber, act,
    pi_matrix, affine_generator_matrices, generator_face_type, word_matrix,
    weyl_to_chamber, epsilon, is_in_standard_iwahori, adjacent_vertices,
)
from .ball import BallGraph, ball
