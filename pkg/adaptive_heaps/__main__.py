import sys

from adaptive_heaps.cli import main

if __name__ == "__main__":
    sys.exit(main())
