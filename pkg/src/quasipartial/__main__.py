"""Entry point for `python -m quasipartial`."""

from .cli import main

main()
