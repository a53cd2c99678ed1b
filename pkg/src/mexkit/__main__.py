import sys

from mexkit.cli import main

sys.exit(main())
