from fractions import Fraction
from typing import Optional, Iterable, Any, Union, Callable, List

from btb.coxeter import AffineTypeLabel, InvalidTypeLabel
from btb.util.padic import is_prime


class ValidationError(Exception):

    def __init__(self, text: str, parameter: Optional["Parameter"] = None):
        super().__init__(text, parameter)
        self.text = text
        self.parameter = parameter

    def __str__(self):
        if self.parameter is not None:
            return f"--{self.parameter.name}: {self.text}"
        return self.text


class Parameter:
    """
    One `--name value` option of a command.

    Command line values arrive as strings, `validate` converts them
    to the type the computation needs. `default_value` may be a callable,
    it is evaluated on every access so configuration overloads apply.
    """
    def __init__(
            self,
            name: str,
            default_value: Union[Any, Callable[[], Any]] = None,
            required: bool = True,
            help: Optional[str] = None,
    ):
        self.name = name
        self.required = bool(required)
        self.help = " ".join(help.split()) if help else None
        self._default = default_value

    def __repr__(self):
        return f"{self.__class__.__name__}(--{self.name}, default={self.default_value!r})"

    @property
    def default_value(self) -> Any:
        return self._default() if callable(self._default) else self._default

    def validate(self, value):
        return value


class _Bounded(Parameter):
    """
    Number options with optional inclusive bounds
    """
    def __init__(self, name: str, min_value=None, max_value=None, **kwargs):
        super().__init__(name, **kwargs)
        self.min_value = min_value
        self.max_value = max_value

    def check_range(self, value):
        if self.min_value is not None and value < self.min_value:
            raise ValidationError(f"Expected value >= {self.min_value}, got {value}", self)
        if self.max_value is not None and value > self.max_value:
            raise ValidationError(f"Expected value <= {self.max_value}, got {value}", self)
        return value


class ParameterSelect(Parameter):

    def __init__(self, name: str, options: Iterable[Any] = tuple(), **kwargs):
        self.options: List[Any] = list(options)
        if len(set(self.options)) != len(self.options):
            raise ValueError(f"Options of --{name} contain duplicates: {self.options}")
        super().__init__(name, **kwargs)

    def validate(self, value):
        # command line strings match the option with the same text
        for option in self.options:
            if value == option or str(value).strip() == str(option):
                return option
        choices = ", ".join(str(o) for o in self.options)
        raise ValidationError(f"Expected one of {choices}, got '{value}'", self)


class ParameterInt(_Bounded):

    def validate(self, value) -> Optional[int]:
        if value is None and not self.required:
            return None
        if isinstance(value, bool):
            raise ValidationError(f"Expected integer, got {value}", self)
        try:
            value = int(value)
        except (ValueError, TypeError):
            raise ValidationError(f"Expected integer, got '{value}'", self)
        return self.check_range(value)


class ParameterPrime(ParameterInt):

    def validate(self, value) -> int:
        value = super().validate(value)
        if not is_prime(value):
            raise ValidationError(f"Expected a prime, got {value}", self)
        return value


class ParameterFraction(_Bounded):
    """
    Exact rational, accepts `7`, `7/2` or `Fraction` values
    """
    def validate(self, value) -> Fraction:
        if isinstance(value, float):
            raise ValidationError(f"Expected an exact rational, got float {value}", self)
        try:
            value = Fraction(value)
        except (ValueError, TypeError, ZeroDivisionError):
            raise ValidationError(f"Expected a rational like '7/2', got '{value}'", self)
        return self.check_range(value)


class ParameterTypeLabel(Parameter):

    def validate(self, value) -> AffineTypeLabel:
        if isinstance(value, AffineTypeLabel):
            return value
        try:
            return AffineTypeLabel.parse(value)
        except InvalidTypeLabel as e:
            raise ValidationError(str(e), self)


class ParameterFilename(Parameter):

    def validate(self, value) -> Optional[str]:
        if value is None or value == "":
            return None
        return str(value)
