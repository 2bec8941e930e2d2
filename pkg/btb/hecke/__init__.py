from .algebra import (
    HeckeElement, HeckeMismatchError,
    basis_element, generator_element, word_element, multiply, special_character,
    quadratic_relation_holds, braid_relation_holds,
)
from .convolution import (
    convolve_chamber_function, convolve_by_relative_position, steinberg_relation_holds,
)
