import sys

from splitapply.cli import main

sys.exit(main())
