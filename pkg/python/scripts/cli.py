"""
CLI entry point for running the playground from a source checkout.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from lambda_playground.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
