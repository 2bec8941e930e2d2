import argparse
from typing import Iterable, Optional, Dict, Any

from .params import Parameter, ValidationError


class Form:
    """
    The option set of one command.

    Translates between argparse namespaces and validated parameter values.
    Options left out on the command line arrive as `None` and fall back
    to the parameter's default.
    """
    def __init__(self, id: str, parameters: Optional[Iterable[Parameter]] = None):
        self.id = id
        self.parameters: Dict[str, Parameter] = {}
        for param in parameters or []:
            if param.name in self.parameters:
                raise AssertionError(f"Duplicate option '--{param.name}' in command '{id}'")
            self.parameters[param.name] = param

    def __iter__(self):
        return iter(self.parameters.values())

    def add_to_parser(self, parser: argparse.ArgumentParser):
        for param in self:
            default = param.default_value
            parser.add_argument(
                f"--{param.name}", type=str, default=None, dest=param.name,
                help=f"{param.help or ''} (default: {'none' if default is None else default})".strip(),
            )

    def values_from_namespace(self, args: argparse.Namespace) -> Dict[str, Any]:
        return {name: getattr(args, name, None) for name in self.parameters}

    def get_default_values(self) -> Dict[str, Any]:
        return {name: p.default_value for name, p in self.parameters.items()}

    def get_values(self, values: Optional[dict] = None) -> Dict[str, Any]:
        """
        Defaults, overridden by every non-None entry of `values`
        """
        mapping = self.get_default_values()
        if values:
            mapping.update({
                key: value
                for key, value in values.items()
                if key in mapping and value is not None
            })
        return mapping

    def get_parameter(self, name: str) -> Optional[Parameter]:
        return self.parameters.get(name)

    def validate(self, values: Dict[str, Any], require_known: bool = False) -> Dict[str, Any]:
        unknown = sorted(set(values) - set(self.parameters))
        if unknown and require_known:
            raise ValidationError(f"Unknown option(s) for '{self.id}': {', '.join('--' + n for n in unknown)}")

        return {
            name: self.parameters[name].validate(value) if name in self.parameters else value
            for name, value in values.items()
        }

    def parse(self, values: Optional[dict] = None) -> Dict[str, Any]:
        """
        Fill in defaults and validate, the way a command receives its options
        """
        return self.validate(self.get_values(values), require_known=True)
