import sys

from ginvariant.cli import main

sys.exit(main())
