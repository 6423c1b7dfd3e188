"""Reduction kernel backend selection.

Prefers the compiled extension and falls back to the pure Python twin when
the extension was not built. Set KUNZ_PURE_PYTHON=1 to force the fallback,
which the benchmark script and the backend cross-check test rely on.
"""

from __future__ import annotations

import os

from .poly import ELIMINATION, GREVLEX, LEX, MonomialOrder, Polynomial

if os.environ.get("KUNZ_PURE_PYTHON") == "1":
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernel_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

make_key = _impl.make_key
merge = _impl.merge
reduce_full = _impl.reduce_full
s_poly = _impl.s_poly
make_monic = _impl.make_monic

_KIND_CODE = {GREVLEX: 0, LEX: 1, ELIMINATION: 2}

TermList = list


def order_code(order: MonomialOrder) -> tuple[int, int]:
    """(kind, block) pair in the kernel's numeric encoding."""
    return _KIND_CODE[order.kind], order.block or 0


def to_terms(poly: Polynomial, order: MonomialOrder) -> TermList:
    """Flatten a polynomial into the kernel term representation."""
    kind, block = order_code(order)
    return [(make_key(e, kind, block), e, c) for e, c in poly.ordered_terms(order)]


def from_terms(terms: TermList, ring) -> Polynomial:
    """Rebuild a polynomial from a kernel term list."""
    return Polynomial(ring, {e: c for _, e, c in terms})
