import dataclasses

from btb import config
from btb.util.padic import is_prime


# dimensions whose buildings are enumerated exhaustively
SUPPORTED_DIMENSIONS = (2, 3)


class PrecisionError(ArithmeticError):
    pass


@dataclasses.dataclass(frozen=True)
class PrimeContext:
    """
    Building of GL(n, Q_p); lattice entries are computed modulo p^precision.
    """
    p: int
    n: int
    precision: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n not in SUPPORTED_DIMENSIONS:
            raise ValueError(f"n must be one of {SUPPORTED_DIMENSIONS}, got {self.n}")
        if self.precision < 1:
            raise ValueError(f"precision must be positive, got {self.precision}")

    @classmethod
    def for_radius(cls, p: int, n: int, radius: int) -> "PrimeContext":
        """
        Context with enough precision for balls of the given radius
        around the standard chamber.
        """
        return cls(p=p, n=n, precision=radius + n + 1 + config.PRECISION_MARGIN)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    def check_radius(self, radius: int):
        if self.precision < radius + self.n + 1:
            raise PrecisionError(
                f"precision {self.precision} too small for radius {radius}, need {radius + self.n + 1}"
            )

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)
