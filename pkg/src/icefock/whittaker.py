"""Finite Whittaker ice systems and their relation to infinite rows.

Rows of every system are listed top to bottom, and the row parameters
z_1, ..., z_r are attached in that order.  The infinite side
<0| T(z_1) ... T(z_r) |lam * xi> does not depend on the order because the
transfer matrices commute.

Two versions of the star partition are provided.  ``star`` adds r - 1 to
the first r parts.  ``star_shifted`` adds r; with it the top boundary of
the finite system (columns N..0) sits exactly above infinite columns
N+1..1, and the r horizontal edges between infinite columns 1 and 0 are
all forced to be minus.  With ``star`` only r - 1 of them are, and the
decomposition into finite systems fails (see tests).
"""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Sequence, Tuple

from .coeff_ring import Ring, RingElem
from .lattice import DELTA, GAMMA, FiniteSystem, finite_partition_function, multi_row_element, transfer_states
from .partitions import Partition, as_partition, conjugate, partitions_up_to


def _check_star(lam: Partition, xi: Partition, r: int, bound: int) -> None:
    if r < 1:
        raise ValueError("r must be positive")
    if len(lam) > r:
        raise ValueError(f"lambda has more than {r} parts")
    if xi and xi[0] > bound:
        raise ValueError(f"xi_1 must be at most {bound}")


def star(lam, xi, r: int) -> Partition:
    """lam_j + r - 1 for j <= r, then the parts of xi (xi_1 <= r - 1)."""
    lam, xi = as_partition(lam), as_partition(xi)
    _check_star(lam, xi, r, r - 1)
    head = [(lam[j] if j < len(lam) else 0) + r - 1 for j in range(r)]
    return as_partition(head + list(xi))


def star_shifted(lam, xi, r: int) -> Partition:
    """lam_j + r for j <= r, then the parts of xi (xi_1 <= r)."""
    lam, xi = as_partition(lam), as_partition(xi)
    _check_star(lam, xi, r, r)
    head = [(lam[j] if j < len(lam) else 0) + r for j in range(r)]
    return as_partition(head + list(xi))


def frobenius(lam) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(arms | legs) with a_i = lam_i - i and b_i = lam'_i - i."""
    lam = as_partition(lam)
    lc = conjugate(lam)
    d = sum(1 for i, x in enumerate(lam) if x > i)
    return tuple(lam[i] - i - 1 for i in range(d)), tuple(lc[i] - i - 1 for i in range(d))


def _row_vars(n: int, r: int) -> List[RingElem]:
    R = Ring(n, r)
    return [R.z(i + 1) for i in range(r)]


def finite_system(lam, sigma: Sequence[int], flavor: str, n: int, r: int, N: int | None = None) -> FiniteSystem:
    """The r x (N+1) system with columns N..0.

    Delta: top minus at lam + rho, bottom plus, left +^0, right -^{sigma_i}.
    Gamma: same vertical boundary, left +^{sigma_i}, right -^0.  Delta rows
    are numbered from the top and Gamma rows from the bottom, so row i
    carries z_i and sigma_i in both cases.
    """
    lam = as_partition(lam)
    if len(lam) > r:
        raise ValueError(f"lambda has more than {r} parts")
    if len(sigma) != r:
        raise ValueError("sigma needs one charge per row")
    lam_rho = {(lam[j] if j < len(lam) else 0) + r - 1 - j for j in range(r)}
    if N is None:
        N = max(lam_rho)
    if N < max(lam_rho):
        raise ValueError(f"N must be at least lambda_1 + r - 1 = {max(lam_rho)}")
    cols = list(range(N, -1, -1))
    top = ["-" if c in lam_rho else "+" for c in cols]
    bottom = ["+"] * len(cols)
    zs = _row_vars(n, r)
    if flavor == DELTA:
        left = [("+", 0)] * r
        right = [("-", s % n) for s in sigma]
    elif flavor == GAMMA:
        zs = zs[::-1]
        left = [("+", s % n) for s in reversed(sigma)]
        right = [("-", 0)] * r
    else:
        raise ValueError(flavor)
    return FiniteSystem(flavor, zs, top, bottom, left, right)


def whittaker_Z(lam, sigma: Sequence[int], flavor: str, n: int, r: int, N: int | None = None) -> RingElem:
    """Partition function of the finite system (formal Gauss symbols)."""
    return finite_partition_function(finite_system(lam, sigma, flavor, n, r, N))


def gamma_delta_sum_factor(lam, n: int, r: int, N: int | None = None) -> RingElem:
    """(z_1 ... z_r)^{columns}: the observed factor between the sigma-sums of
    Delta and Gamma partition functions on columns N..0."""
    lam = as_partition(lam)
    if N is None:
        N = (lam[0] if lam else 0) + r - 1
    R = Ring(n, r)
    out = R.one
    for z in _row_vars(n, r):
        out = out * z ** (N + 1)
    return out


def _tail_top(xi: Partition, r: int, width: int) -> List[str]:
    """Top signs over infinite columns 0, -1, ..., -(width-1) for the
    shifted star; only the xi part of its Maya word reaches them."""
    minus = set()
    for j in range(r + 1, r + 1 + len(xi) + width + 1):
        part = xi[j - r - 1] if j - r - 1 < len(xi) else 0
        minus.add(part - (j - 1))
    return ["-" if -c in minus else "+" for c in range(width)]


def c_constant(xi, sigma: Sequence[int], n: int, r: int, max_width: int = 60) -> RingElem:
    """Partition function of the right tail: columns 0, -1, ..., with left
    boundary -^{sigma_k}, top from the shifted star, bottom all minus and
    right boundary +^0.  The width is grown by n until the value repeats."""
    xi = as_partition(xi)
    _check_star((), xi, r, r)
    zs = _row_vars(n, r)
    left = [("-", s % n) for s in sigma]
    right = [("+", 0)] * r

    def value(width):
        top = _tail_top(xi, r, width)
        return finite_partition_function(FiniteSystem(DELTA, zs, top, ["-"] * width, left, right))

    width = r + (len(xi) and xi[0]) + len(xi) + n
    prev = value(width)
    while width <= max_width:
        width += n
        cur = value(width)
        if cur == prev:
            return cur
        prev = cur
    raise RuntimeError("right tail did not stabilize")


def infinite_element(lam, xi, n: int, r: int, shifted: bool = True) -> RingElem:
    """<0| T(z_1) ... T(z_r) |lam * xi> with formal g."""
    p = star_shifted(lam, xi, r) if shifted else star(lam, xi, r)
    return multi_row_element(_row_vars(n, r), p, ())


def sigma_vectors(n: int, r: int):
    return [tuple(s) for s in product(range(n), repeat=r)]


def decomposition_sides(lam, xi, n: int, r: int, shifted: bool = True, constants: Dict | None = None):
    """(<0|T_z|lam * xi>, sum_sigma c(xi, sigma) Z(S^Delta_{lam, sigma}))."""
    lhs = infinite_element(lam, xi, n, r, shifted)
    R = Ring(n, r)
    rhs = R.zero
    for s in sigma_vectors(n, r):
        c = constants[s] if constants is not None else c_constant(xi, s, n, r)
        if c.is_zero():
            continue
        Z = whittaker_Z(lam, s, DELTA, n, r)
        rhs = rhs + c * Z
    return lhs, rhs


def verify_whittaker_decomposition(xi, r: int, n: int, max_size: int, shifted: bool = True) -> dict:
    xi = as_partition(xi)
    constants = {s: c_constant(xi, s, n, r) for s in sigma_vectors(n, r)}
    witnesses = []
    checked = 0
    for lam in partitions_up_to(max_size):
        if len(lam) > r:
            continue
        checked += 1
        lhs, rhs = decomposition_sides(lam, xi, n, r, shifted, constants)
        if lhs != rhs:
            witnesses.append({"lambda": list(lam), "difference": repr(lhs - rhs)})
    return {
        "identity": "<0|T_z|lambda*xi> = sum_sigma c(xi,sigma) Z(S_lambda,sigma)",
        "range": {"xi": list(xi), "r": r, "n": n, "max_size": max_size, "shifted_star": shifted, "checked": checked},
        "status": "pass" if not witnesses else "fail",
        "witnesses": witnesses[:5],
    }


def cut_distribution(lam, xi, n: int, r: int, shifted: bool = True, tail: int | None = None) -> Dict[tuple, RingElem]:
    """Weights of the infinite system grouped by the horizontal spins on the
    cut (between infinite columns 1 and 0 for the shifted star, between 0 and
    -1 for the literal one).  The full window is scanned column by column."""
    p = star_shifted(lam, xi, r) if shifted else star(lam, xi, r)
    cut = 1 if shifted else 0
    L = len(p) + r + n + (tail if tail is not None else 2 * n)
    entries = {(p[j] if j < len(p) else 0) - j for j in range(L)}
    lo = -L + 1
    hi = max(entries)
    zs = _row_vars(n, r)
    R = Ring(n, r)
    left_cols = list(range(hi, cut - 1, -1))
    right_cols = list(range(cut - 1, lo - 1, -1))
    vac = set(range(0, lo - 1, -1))

    def signs(cols, minus):
        return ["-" if c in minus else "+" for c in cols]

    before = transfer_states(DELTA, zs, {(("+", 0),) * r: R.one}, signs(left_cols, entries), signs(left_cols, vac))
    out = {}
    for state, w in before.items():
        after = transfer_states(DELTA, zs, {state: R.one}, signs(right_cols, entries), signs(right_cols, vac))
        tot = after.get((("+", 0),) * r)
        if tot is not None and not tot.is_zero():
            out[state] = w * tot
    return out


def tail_constant_from(lam, xi, sigma: Sequence[int], n: int, r: int, width: int | None = None) -> RingElem:
    """The right-tail partition function read off the Maya word of
    lam * xi itself (shifted star), for comparison with ``c_constant``."""
    p = star_shifted(lam, xi, r)
    if width is None:
        width = r + len(p) + 4 * n
    entries = {(p[j] if j < len(p) else 0) - j for j in range(len(p) + width + 1)}
    cols = list(range(0, -width, -1))
    top = ["-" if c in entries else "+" for c in cols]
    zs = _row_vars(n, r)
    left = [("-", s % n) for s in sigma]
    right = [("+", 0)] * r
    return finite_partition_function(FiniteSystem(DELTA, zs, top, ["-"] * width, left, right))
