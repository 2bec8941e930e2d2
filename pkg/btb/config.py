from typing import Dict, Any, Callable

from decouple import config, Choices


def _non_negative(x) -> int:
    x = int(x)
    if x < 0:
        raise ValueError(f"Expected a non-negative integer, got {x}")
    return x


def _positive(x) -> int:
    x = int(x)
    if x < 1:
        raise ValueError(f"Expected a positive integer, got {x}")
    return x


def _flag(x) -> bool:
    if isinstance(x, bool):
        return x
    return str(x).strip().lower() in ("1", "true", "yes", "on")


# setting name -> (environment variable, default, cast)
_SETTINGS: Dict[str, tuple] = {
    # write debug messages to stderr
    "DEBUG": ("BTB_DEBUG", "false", _flag),
    # show tqdm progress bars during long enumerations
    "VERBOSE": ("BTB_VERBOSE", "false", _flag),
    # maximal BFS depth when computing the length of a group element
    "LENGTH_CUTOFF": ("BTB_LENGTH_CUTOFF", 64, _positive),
    # p-adic digits added on top of the `R + n + 1` precision rule
    "PRECISION_MARGIN": ("BTB_PRECISION_MARGIN", 0, _non_negative),
    # seed of the sampled checks in `hecke` and `boundary`
    "RANDOM_SEED": ("BTB_RANDOM_SEED", 23, int),
    # default of every command's --format
    "OUTPUT_FORMAT": ("BTB_OUTPUT_FORMAT", "table", Choices(["table", "csv", "json"])),
}


def _cast(name: str) -> Callable[[Any], Any]:
    return _SETTINGS[name][2]


def _setting(name: str):
    env, default, cast = _SETTINGS[name]
    return config(env, default=default, cast=cast)


DEBUG: bool = _setting("DEBUG")
VERBOSE: bool = _setting("VERBOSE")
LENGTH_CUTOFF: int = _setting("LENGTH_CUTOFF")
PRECISION_MARGIN: int = _setting("PRECISION_MARGIN")
RANDOM_SEED: int = _setting("RANDOM_SEED")
OUTPUT_FORMAT: str = _setting("OUTPUT_FORMAT")


def to_dict(string_values: bool = False) -> dict:
    """
    Current settings, keyed by setting name
    """
    values = {name: globals()[name] for name in _SETTINGS}
    if string_values:
        values = {name: str(value) for name, value in values.items()}
    return values


class ConfigOverload:
    """
    Temporarily replaces settings, casting the new values
    like the environment values. Meant for unittests:

    ```python
    with config.ConfigOverload({
        "LENGTH_CUTOFF": 3,
    }):
        print(config.LENGTH_CUTOFF)
    ```
    """
    def __init__(self, new_values: Dict[str, Any]):
        unknown = sorted(set(new_values) - set(_SETTINGS))
        if unknown:
            raise KeyError(f"Unknown setting(s): {', '.join(unknown)}")
        self.new_values = {name: _cast(name)(value) for name, value in new_values.items()}
        self.old_values = {}

    def __enter__(self):
        for name, value in self.new_values.items():
            self.old_values[name] = globals()[name]
            globals()[name] = value
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        globals().update(self.old_values)
