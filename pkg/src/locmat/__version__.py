"""
locmat Version Information

Central location for package version management.
"""

__version__ = "1.0.0"
__version_info__ = (1, 0, 0)

# Package metadata
APP_NAME = "locmat"
APP_DESCRIPTION = "Exact arithmetic for periodic infinite matrices and locally matrix algebras"
