import argparse
import sys

from btb import logger
from btb.commands import registered_commands


def add_arguments(parser: argparse.ArgumentParser):
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name, command_class in registered_commands.items():
        sub = subparsers.add_parser(name, help=command_class.help, description=command_class.help)
        command_class.add_arguments(sub)


def main(args) -> int:
    command_class = registered_commands[args.command]
    values = command_class.form().values_from_namespace(args)
    try:
        return command_class.run_from_values(values, do_raise=getattr(args, "raise"))
    except KeyboardInterrupt:
        logger.log.info("stopped")
        return 1


if __name__ == "__main__":
    parser = argparse.ArgumentParser(prog="btb")
    add_arguments(parser)
    sys.exit(main(parser.parse_args()))
