from .cochain import Cochain, MapCochain, IwahoriVector, iwahori_vector, pairing
from .harmonicity import (
    BoundaryFaceError, NearestChamberError,
    harmonicity_defect, min_distance_chamber, decay_profile, defect_scan,
    finite_support_rigidity, is_invariant,
)
