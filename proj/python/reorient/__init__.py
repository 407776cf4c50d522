"""Python interface to the reorient solvers.

Graphs are :class:`MixedGraph` values; solver results carry exact optima as
:class:`fractions.Fraction`.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
