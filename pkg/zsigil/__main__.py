"""Allow ``python -m zsigil`` to invoke the CLI."""

import sys

from zsigil.cli import main

sys.exit(main())
