"""Exact piecewise-linear toolkit for the group of absolutely continuous
homeomorphisms of [0,1]: the rho metric, fixed-point dynamics, the explicit
generator and conjugator constructions, and the free-group density search."""

from hac._core import *  # noqa: F401,F403
