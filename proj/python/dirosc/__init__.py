"""Dirac oscillator on line defects: spectra, su(1,1) algebra, radial modes,
and Perelomov coherent states. Thin re-export of the compiled module."""

from ._dirosc import *  # noqa: F401,F403
from ._dirosc import __doc__  # noqa: F401

__version__ = "1.0.0"
