"""Cantor-Kronecker diagonalization games.

Rows and columns are 1-based throughout, as in transcripts and the CLI.
"""

from ._diaggames import *  # noqa: F401,F403
