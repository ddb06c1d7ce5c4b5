"""Exact-arithmetic toolkit: heights and places, word complexity, automatic
sequences, periodic-approximant data, power sums, and divisor criteria on
surfaces. All rationals cross the boundary as "p/q" strings."""

from ._subspacekit import *  # noqa: F401,F403
from ._subspacekit import __doc__ as _core_doc  # noqa: F401
