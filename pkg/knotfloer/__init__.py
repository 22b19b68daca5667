"""
knotfloer - exact knot Floer computations over F2[U, V].

This package reads bigraded chain complexes over F2[U, V], computes the
Upsilon function and tau of a knot from them, evaluates the correction
terms that bound Upsilon across negative-definite cobordisms, and tracks
how decorated link cobordisms shift the Alexander and Maslov gradings.
"""

__version__ = "1.0.0"
__author__ = "knotfloer Team"

# Main API imports
from .core.application import KnotFloer, create_application
from .config.manager import ConfigManager, create_config_manager

__all__ = [
    "KnotFloer",
    "create_application",
    "ConfigManager",
    "create_config_manager",
    "__version__",
]
