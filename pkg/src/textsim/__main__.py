import sys

from textsim.cli import main

sys.exit(main())
