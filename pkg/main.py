#!/usr/bin/env python3
"""Wheel30 - mod-30 wheel prime-candidate toolkit

Entry point: python main.py <subcommand> [flags]
"""

import sys
import logging
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.settings import Settings

# Setup logging (stderr; stdout carries reports only)
logging.basicConfig(
    level=getattr(logging, Settings.get().cli.log_level, logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)

if __name__ == "__main__":
    from core.cli import main
    sys.exit(main())
