#!/usr/bin/env python3
import os
import sys

PROJECT_ROOT = os.path.dirname(__file__)
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from cli_base.app_shell import CrystalCliApp


def main(argv: list[str] | None = None) -> int:
    app = CrystalCliApp()
    try:
        return app.run(argv)
    finally:
        app.close()


if __name__ == "__main__":
    sys.exit(main())
