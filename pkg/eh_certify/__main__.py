import sys

from eh_certify.cli import main

sys.exit(main())
