"""Small worked examples kept as fixed reference values."""

from __future__ import annotations

from .coeff_ring import Ring
from .fock import FockVector, straighten
from .partitions import horizontal_strips, ribbon_tableaux

# u_1 ^ u_4 ^ u_1 ^ u_0 ^ ... for n = 2.  The two copies of u_1 do not
# cancel: u_1 ^ u_4 = g(-3) u_4 ^ u_1 + (v-1) u_3 ^ u_2, and only the
# correction term survives.
WEDGE_WORD = (1, 4, 1)
WEDGE_CHARGE = 3
WEDGE_N = 2


def wedge_example() -> FockVector:
    return straighten(list(WEDGE_WORD), WEDGE_CHARGE, WEDGE_N)


def wedge_expected() -> FockVector:
    R = Ring(WEDGE_N)
    return FockVector(WEDGE_N, WEDGE_CHARGE, {(): R.v - 1})


def wedge_printed() -> FockVector:
    """g(-3) |0; 3>, the value the leading term alone would suggest."""
    R = Ring(WEDGE_N)
    return FockVector(WEDGE_N, WEDGE_CHARGE, {(): R.g(-3)})


# A 3-ribbon tableau of shape (6,6,4,4,1,1)/(2,1,1) given as its chain of
# horizontal strips; expected weight (1,3,2) and spin 5.
RIBBON_CHAIN = ((2, 1, 1), (5, 1, 1), (6, 6, 4), (6, 6, 4, 4, 1, 1))
RIBBON_N = 3


def ribbon_chain_statistics(chain=RIBBON_CHAIN, n: int = RIBBON_N):
    """(weight, spin) of a chain of horizontal n-ribbon strips."""
    weight, spin = [], 0
    for inner, outer in zip(chain, chain[1:]):
        k = (sum(outer) - sum(inner)) // n
        strips = [s for s in horizontal_strips(outer, k, n) if tuple(s.inner) == tuple(inner)]
        if len(strips) != 1:
            raise ValueError(f"{outer}/{inner} is not a horizontal {n}-ribbon strip")
        weight.append(k)
        spin += strips[0].spin
    return tuple(weight), spin


def ribbon_example_in_enumeration() -> int:
    """How many tableaux of the same shape share weight (1,3,2) and spin 5."""
    ts = ribbon_tableaux(RIBBON_CHAIN[-1], RIBBON_CHAIN[0], len(RIBBON_CHAIN) - 1, RIBBON_N)
    return ts.count(ribbon_chain_statistics())
