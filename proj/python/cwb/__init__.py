"""Python bindings for the cwb enumeration and search kernels."""

import json as _json

from ._cwb import *  # noqa: F401,F403
from ._cwb import InvalidInput, LimitExceeded, __version__, _suite


def suite(name="quick", threads=1):
    """Run a check battery ("quick" or "acceptance"); one dict per check."""
    return _json.loads(_suite(name, threads))


__all__ = [n for n in dir() if not n.startswith("_")]
