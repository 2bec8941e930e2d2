from .diagram import (
    AffineTypeLabel, CoxeterDiagram, affine_diagram,
    InvalidTypeLabel, NonCrystallographicError, CRYSTALLOGRAPHIC_ORDERS,
)
from .group import (
    GroupElement, GrowthTable, CoxeterGroup,
    cartan_matrix, generator_matrices,
    coxeter_group, bfs_growth, length, element_from_word,
    UnknownGeneratorError, LengthCutoffError,
)
