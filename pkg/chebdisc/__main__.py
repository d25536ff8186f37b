import sys

from chebdisc.harness.cli import main

sys.exit(main())
