"""Well-rounded ideals and lattices of quadratic number fields."""

from .config import PACKAGE_VERSION as __version__

__all__ = ["__version__"]
