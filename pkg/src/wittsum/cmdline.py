"""
The `wittsum` command line.

    wittsum <command> --input job.json [--kmax N] [--guard N] [--smax N]
        [--threads N] [--budget N] [--twist s] [--json out] [--plot out]

Exit codes: 0 success, 1 verdict failure or refusal, 2 input error, 3 budget refusal.
"""
import argparse
import sys

from rich.markup import escape

from . import __title__, __version__
from .conf import Command
from .console import console
from .exceptions import EXIT_INPUT, WittsumError
from .helpers import import_attr
from .commands import WittsumCommand

__all__ = ("execute", "get_commands")


# command name -> class, one module per command under `wittsum.commands`
COMMANDS = {
    Command.DECOMPOSE: "wittsum.commands.decompose.DecomposeCmd",
    Command.POLYTOPE: "wittsum.commands.polytope.PolytopeCmd",
    Command.NONDEGEN: "wittsum.commands.nondegen.NondegenCmd",
    Command.SUMS: "wittsum.commands.sums.SumsCmd",
    Command.LFUNCTION: "wittsum.commands.lfunction.LFunctionCmd",
    Command.VERIFY: "wittsum.commands.verify.VerifyCmd",
}


def get_commands():
    return {command.value: import_attr(path)() for command, path in COMMANDS.items()}


def build_parser(commands):
    parser = argparse.ArgumentParser(
        prog=__title__, description="Exponential sums of p-power order and their L-functions")
    parser.add_argument("--version", action="version", version=f"{__title__} {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="<command>", required=True)
    for name, cmd in commands.items():
        sub = subparsers.add_parser(name, help=cmd.short_desc(), description=cmd.short_desc())
        cmd.add_options(sub)
    return parser


def execute(argv=None) -> int:
    commands = get_commands()
    parser = build_parser(commands)
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which is our input error code too
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    cmd: WittsumCommand = commands[opts.command]
    try:
        cmd.process_options(opts)
        return cmd.run(opts)
    except WittsumError as exc:
        console.print(f"[bold red]{type(exc).__name__}[/]: {escape(str(exc))}", highlight=False)
        return exc.exit_code


def main():
    sys.exit(execute())


if __name__ == "__main__":
    main()
