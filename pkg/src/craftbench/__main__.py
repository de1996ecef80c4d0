import sys

from craftbench.cli import main

sys.exit(main())
