"""Exact enumeration of rooted binary trees up to flip-equivalence."""

from flipenum.errors import IntegrityError, UsageError
from flipenum.series import MultiSeries

__all__ = ["IntegrityError", "MultiSeries", "UsageError"]
__version__ = "0.1.0"
