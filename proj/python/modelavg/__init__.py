"""Optimal weighted model averaging for scalar mean estimation."""

from ._modelavg import *  # noqa: F401,F403
from ._modelavg import __doc__  # noqa: F401

__version__ = "0.1.0"
