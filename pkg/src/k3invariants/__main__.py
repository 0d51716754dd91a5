import sys

from k3invariants.cli import main

sys.exit(main())
