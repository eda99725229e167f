#!/usr/bin/env python3
"""
Entry point: python app.py analyze --d 87
"""

import sys

from ginvariant.cli import main

if __name__ == "__main__":
    sys.exit(main())
