"""weylab: numerical laboratory for alcove subdivisions, characters and
Weyl-type exponential sums on compact Lie groups."""

__version__ = "0.1.0"

from .rootsys import build_root_system, parabolic_subsystem, weyl_group_elements

__all__ = ["build_root_system", "parabolic_subsystem", "weyl_group_elements", "__version__"]
