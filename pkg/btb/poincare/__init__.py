from .rational import (
    RationalFunction, SeriesTruncation, PoleError, SeriesError,
    X, polynomial, coefficients, expand, evaluate,
)
from .series import (
    ExponentTable, exponents_for, bott_rational, poincare_series, absolute_tail,
)
