import sys

from holoperiods.cli import main

sys.exit(main())
