import sys

from flipenum.cli import main

sys.exit(main())
