"""
Command Line Module for SymCover.

argparse front end: surface-info, decompose, constants, count, convergence
and schema subcommands.
"""

from .commands import build_parser, main, CommandContext

__all__ = [
    "build_parser",
    "main",
    "CommandContext",
]
