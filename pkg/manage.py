#!/usr/bin/env python
"""Entry point for the ehrhart-lab management commands (hstar, count, verify, witness, surface, construct)."""
import os
import sys


def main() -> None:
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ehrhart_lab.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the requirements (pip install -r requirements.txt) "
            "into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
