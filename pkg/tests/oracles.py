"""Brute-force reference implementations used only by the tests."""

from itertools import product

from icefock.coeff_ring import Ring


def skew_cells(lam, mu):
    return [(i, j) for i in range(len(lam)) for j in range(mu[i] if i < len(mu) else 0, lam[i])]


def schur(lam, mu, r, n=1):
    """s_{lam/mu}(z_1..z_r) by trying every filling of the skew diagram."""
    R = Ring(n, r)
    cells = skew_cells(lam, mu)
    out = R.zero
    for vals in product(range(1, r + 1), repeat=len(cells)):
        fill = dict(zip(cells, vals))
        ok = all(
            (c not in fill or fill[c] <= v) and (d not in fill or fill[d] < v)
            for (i, j), v in fill.items()
            for c, d in [((i, j - 1), (i - 1, j))]
        )
        if ok:
            wt = [0] * r
            for v in vals:
                wt[v - 1] += 1
            out = out + R.monomial(1, z=wt)
    return out


def geometric_product(factors, cap, n):
    """prod 1/(1 - c_i x) in one variable x (stored as z1), truncated at x^cap.

    ``factors`` are RingElem constants c_i.
    """
    R = Ring(n, 1)
    x = R.z(1)
    out = R.one
    for c in factors:
        series = R.one
        p = R.one
        for _ in range(cap):
            p = p * c * x
            series = series + p
        out = (out * series).truncate(cap)
    return out
