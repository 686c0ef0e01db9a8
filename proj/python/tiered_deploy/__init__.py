"""Energy-optimal two-tier AP/BS deployment over a sensing region."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
