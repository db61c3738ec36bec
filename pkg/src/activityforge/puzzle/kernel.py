"""Kernel backend selection.

The compiled extension is preferred when it was built; otherwise the pure
Python twin is used. Both expose crossword_layout and wordsearch_layout
with identical semantics (bit-identical outputs for identical inputs).
"""

from . import _purekernel

try:
    from . import _fastkernel  # compiled at install time when Cython is present
except ImportError:
    _fastkernel = None

if _fastkernel is not None:
    _impl = _fastkernel
    BACKEND = "compiled"
else:
    _impl = _purekernel
    BACKEND = "pure"

crossword_layout = _impl.crossword_layout
wordsearch_layout = _impl.wordsearch_layout


def available_backends() -> dict:
    """Name -> module, for parity tests and the benchmark."""
    backends = {"pure": _purekernel}
    if _fastkernel is not None:
        backends["compiled"] = _fastkernel
    return backends
