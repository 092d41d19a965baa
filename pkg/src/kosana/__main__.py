import sys

from kosana.cli import main

sys.exit(main())
