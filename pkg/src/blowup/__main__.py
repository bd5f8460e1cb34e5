"""``python -m blowup``."""

from .cli import main

raise SystemExit(main())
