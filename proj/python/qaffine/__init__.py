"""Exact q-series verification of coloured partition and affine character identities.

The heavy lifting lives in the compiled extension ``qaffine_core``; counts and
coefficients cross the boundary as decimal strings so no precision is lost.
This package re-exports the extension and adds integer-returning conveniences.
"""

try:  # installed layout: extension placed inside the package
    from .qaffine_core import *  # noqa: F401,F403
    from . import qaffine_core as _core
except ImportError:  # in-tree build: extension on sys.path
    from qaffine_core import *  # noqa: F401,F403
    import qaffine_core as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")] + [
    "count",
    "product_coefficients",
]


def count(family: str, i: int, nr: int, m: int) -> int:
    """Integer count for one weight: family in {c, cgeq, mp, ag, bressoud}."""
    fns = {
        "c": _core.count_exact,
        "cgeq": _core.count_atleast,
        "mp": _core.meurman_primc_count,
        "ag": _core.andrews_gordon_count,
        "bressoud": _core.bressoud_count,
    }
    try:
        fn = fns[family]
    except KeyError:
        raise ValueError(f"unknown family: {family!r}") from None
    return int(fn(i, nr, m))


def product_coefficients(family: str, i: int, rn: int, order: int) -> list[int]:
    """Integer coefficients q^0..q^order of the product side."""
    return [int(c) for c in _core.product_coeffs(family, i, rn, order)]
