"""Allow ``python -m bell_switch``."""

import sys

from bell_switch.cli.main import main

sys.exit(main())
