"""Minimal absent words over run-length encoded text.

Thin python surface over the C++ core: RLE round-trips, output-sensitive MAW
enumeration from the O(m)-word representation, the brute-force oracle, the
lower-bound family generators, and the counting-bound audits.
"""

import os
import sys

_module_dir = os.environ.get("RLEMAW_MODULE_DIR")
if _module_dir and _module_dir not in sys.path:
    # Development layout: the extension sits in the CMake build tree.
    sys.path.insert(0, _module_dir)

try:
    from _core import (  # type: ignore[import-not-found]
        InvalidHandle,
        InvalidInput,
        audit,
        decode,
        encode,
        gen_family,
        maws,
        maws_bruteforce,
        stats,
        verify,
    )
except ImportError:
    from rlemaw._core import (  # type: ignore[no-redef]
        InvalidHandle,
        InvalidInput,
        audit,
        decode,
        encode,
        gen_family,
        maws,
        maws_bruteforce,
        stats,
        verify,
    )

__all__ = [
    "InvalidHandle",
    "InvalidInput",
    "audit",
    "decode",
    "encode",
    "gen_family",
    "maws",
    "maws_bruteforce",
    "stats",
    "verify",
]
