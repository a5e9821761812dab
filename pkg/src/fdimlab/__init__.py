"""Homological computations over bound quiver algebras, aimed at finitistic dimension."""

from __future__ import annotations

from .fields import *  # noqa: F401,F403
from .quiver import *  # noqa: F401,F403
from .parser import *  # noqa: F401,F403
from .groebner import *  # noqa: F401,F403
from .algebra import *  # noqa: F401,F403
from .modules import *  # noqa: F401,F403
from .homology import *  # noqa: F401,F403
from .functors import *  # noqa: F401,F403
from .modspec import *  # noqa: F401,F403
from .findim import *  # noqa: F401,F403
from .lab import *  # noqa: F401,F403
from . import corpus  # noqa: F401

__version__ = "0.1.0"
