"""Exact arithmetic for point configurations on P^1 with good reduction
outside a finite prime set: binary forms, S-unit discriminants, orbit
enumeration, group cohomology and a finite-field descent model."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
