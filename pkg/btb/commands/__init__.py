from .params import (
    ValidationError, Parameter, ParameterSelect, ParameterInt, ParameterPrime,
    ParameterFraction, ParameterTypeLabel, ParameterFilename,
)
from .form import Form
from .base import CommandBase, CommandResult, registered_commands, EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE

from .growth import GrowthCommand
from .period import PeriodCommand
from .ball import BallCommand
from .harmonic import HarmonicCommand
from .hecke import HeckeCommand
from .boundary import BoundaryCommand
