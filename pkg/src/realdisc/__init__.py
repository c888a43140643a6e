"""Sign calculus and a plane-cubic testbed for signed counts of real rational curves."""
from .sign_calculus import CountMode, Sign

__all__ = ["CountMode", "Sign"]
__version__ = "0.1.0"
