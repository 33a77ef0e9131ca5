import sys

from quasizagreb.cli import main

sys.exit(main())
