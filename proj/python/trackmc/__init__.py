"""Tracklet clustering via minimum-cost multicut."""

from ._trackmc import *  # noqa: F401,F403
from ._trackmc import __doc__  # noqa: F401

__version__ = "0.1.0"
