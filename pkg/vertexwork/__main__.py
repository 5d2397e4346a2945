import sys

from vertexwork.cli import main

sys.exit(main())
