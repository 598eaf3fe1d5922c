"""
Main entry point for the SymCover command-line tool.
"""
import sys

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
