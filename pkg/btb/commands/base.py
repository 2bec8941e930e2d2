import argparse
import dataclasses
import inspect
import os
import sys
from typing import List, Dict, Any, Optional, Tuple

from btb import config
from btb.logger import Logger
from btb.util.table import FORMATS, render_table, write_output
from .form import Form
from .params import Parameter, ParameterSelect, ParameterFilename, ValidationError

registered_commands = dict()

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclasses.dataclass
class CommandResult:
    rows: List[Dict[str, Any]]
    checks: List[Tuple[str, bool]] = dataclasses.field(default_factory=list)
    summary: List[str] = dataclasses.field(default_factory=list)
    data: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return all(passed for _, passed in self.checks)

    def failed_checks(self) -> List[str]:
        return [name for name, passed in self.checks if not passed]

    def to_dict(self) -> dict:
        return {
            **(self.data if self.data is not None else {"rows": self.rows}),
            "checks": [{"name": name, "passed": passed} for name, passed in self.checks],
            "passed": self.passed,
        }


class CommandBase:
    """
    Base class of the command line verification suites.

    Layout a command like this:

        class MyCommand(CommandBase):
            name = "my-command"
            help = "What it checks"

            @classmethod
            def parameters(cls):
                return [ParameterInt("K", default_value=4, min_value=0)]

            def run(self) -> CommandResult:
                self.values["K"]  # validated parameter values
                return CommandResult(rows=[...], checks=[("all fine", True)])

    Every subclass is registered under its `name`.
    """
    name: str = None
    help: str = None

    def __init_subclass__(cls, **kwargs):
        assert cls.name, f"Must define {cls.__name__}.name property"
        if cls.name in registered_commands:
            registered_file = inspect.getabsfile(registered_commands[cls.name]).strip(os.path.sep)
            new_file = inspect.getabsfile(cls).strip(os.path.sep)
            if registered_file != new_file:
                raise AssertionError(
                    f"Duplicate command name '{cls.name}'"
                    f", class {registered_commands[cls.name]} is already registered"
                    f", can't register {cls}"
                )

        registered_commands[cls.name] = cls

    @classmethod
    def parameters(cls) -> List[Parameter]:
        return []

    @classmethod
    def form(cls) -> Form:
        return Form(id=cls.name, parameters=cls.parameters() + [
            ParameterSelect(
                "format", default_value=lambda: config.OUTPUT_FORMAT, options=FORMATS,
                help="Output format",
            ),
            ParameterFilename(
                "out", default_value=None, required=False,
                help="Write output to this file instead of stdout",
            ),
        ])

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        cls.form().add_to_parser(parser)
        parser.add_argument(
            "--raise", type=bool, nargs="?", default=False, const=True,
            help="Let exceptions propagate outside",
        )

    def __init__(self, values: Dict[str, Any], do_raise: bool = False):
        self.log = Logger(self.name)
        self.do_raise = do_raise
        self.values = self.form().parse(values)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.values})"

    @classmethod
    def run_from_values(cls, values: Dict[str, Any], do_raise: bool = False, file=None) -> int:
        """
        Validate `values`, run the command, write its output and return the exit status
        """
        log = Logger(cls.name)
        try:
            command = cls(values, do_raise=do_raise)
        except ValidationError as e:
            log.error(f"ValidationError: {e}")
            return EXIT_USAGE

        return command.run_and_catch(file=file or sys.stdout)

    def run_and_catch(self, file=None) -> int:
        try:
            self.log.info("start", **{k: v for k, v in self.values.items() if v is not None})
            result = self.run()

        except Exception as e:
            self.log.error(f"{type(e).__name__}: {e}")
            if not self.do_raise:
                return EXIT_CHECK_FAILED
            else:
                raise

        text = render_table(
            rows=result.rows,
            format=self.values["format"],
            data=result.to_dict(),
            summary=result.summary + [
                f"{'ok' if passed else 'FAILED'}: {name}" for name, passed in result.checks
            ],
        )
        write_output(text, filename=self.values["out"], file=file or sys.stdout)

        failed = result.failed_checks()
        if failed:
            self.log.error("checks failed", failed=len(failed), total=len(result.checks), names=",".join(failed))
            return EXIT_CHECK_FAILED

        self.log.info("checks passed", total=len(result.checks))
        return EXIT_OK

    def run(self) -> CommandResult:
        raise NotImplementedError
