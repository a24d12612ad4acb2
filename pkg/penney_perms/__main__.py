import sys

from penney_perms.cli import main

sys.exit(main())
