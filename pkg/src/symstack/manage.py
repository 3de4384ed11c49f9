#!/usr/bin/env python
"""Command-line entry point: every subcommand is a Django management command."""
import os
import sys


def _setup():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "symstack.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    return execute_from_command_line


def run(argv) -> int:
    """Dispatch argv (without the program name) and return the exit code."""
    execute_from_command_line = _setup()
    try:
        execute_from_command_line(["symstack"] + list(argv))
    except SystemExit as ex:
        if ex.code is None:
            return 0
        return ex.code if isinstance(ex.code, int) else 1
    return 0


def main():
    execute_from_command_line = _setup()
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
