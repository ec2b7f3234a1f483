"""Gamma and Delta metaplectic ice.

A decorated spin is a pair (sign, charge) with sign in {'+', '-'} and the
charge taken mod n.  Vertices are given as (left, top, right, bottom).
Rows are scanned left to right, i.e. from large column labels to small.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Sequence, Tuple

from .coeff_ring import Ring, RingElem
from .partitions import Partition, as_partition, contains

Spin = Tuple[str, int]
DELTA = "delta"
GAMMA = "gamma"


def _ring_of(z: RingElem) -> Ring:
    return Ring(z.n, z.arity)


def step(flavor: str, left: Spin, top: str, bottom: str, z: RingElem, zinv: RingElem | None = None):
    """Forced right spin and weight of a vertex, or None if no vertex fits."""
    R = _ring_of(z)
    n = R.n
    sign, a = left
    a %= n
    if flavor == DELTA:
        if sign == "+":
            if a != 0:
                return None
            if top == "+" and bottom == "+":
                return ("+", 0), R.one  # a1
            if top == "-" and bottom == "-":
                return ("+", 0), R.one  # b1
            if top == "-" and bottom == "+":
                return ("-", 1 % n), R.one  # c2
            return None
        if top == "-" and bottom == "-":
            return ("-", (a + 1) % n), R.g(a) * z  # a2
        if top == "+" and bottom == "+":
            return ("-", (a + 1) % n), z  # b2
        if top == "+" and bottom == "-":
            if a != 0:
                return None
            return ("+", 0), (1 - R.v) * z  # c1
        return None
    if flavor == GAMMA:
        if zinv is None:
            zinv = z.inverse_monomial()
        if sign == "-":
            if a != 0:
                return None
            if top == "+" and bottom == "+":
                return ("-", 0), R.one  # b2
            if top == "-" and bottom == "-":
                return ("-", 0), R.one  # a2
            if top == "+" and bottom == "-":
                return ("+", 0), 1 - R.v  # c1
            return None
        if top == "+" and bottom == "+":
            return ("+", (a - 1) % n), zinv  # a1
        if top == "-" and bottom == "-":
            return ("+", (a - 1) % n), zinv * R.g(a - 1)  # b1
        if top == "-" and bottom == "+":
            if a != 1 % n:
                return None
            return ("-", 0), zinv  # c2
        return None
    raise ValueError(f"unknown flavor {flavor!r}")


def vertex_weight(flavor: str, left: Spin, top: str, right: Spin, bottom: str, z: RingElem) -> RingElem:
    """Table lookup; configurations not in the table weigh 0."""
    n = z.n
    res = step(flavor, left, top, bottom, z)
    if res is None:
        return _ring_of(z).zero
    rt, w = res
    if rt[0] != right[0] or rt[1] % n != right[1] % n:
        return _ring_of(z).zero
    return w


def scan_row(flavor: str, left: Spin, columns: Sequence[Tuple[str, str]], z: RingElem):
    """Run the forced scan over (top, bottom) pairs; returns (weight, right)
    or (0, None) when no state exists."""
    R = _ring_of(z)
    zinv = z.inverse_monomial() if flavor == GAMMA else None
    w = R.one
    cur = left
    for top, bottom in columns:
        res = step(flavor, cur, top, bottom, z, zinv)
        if res is None:
            return R.zero, None
        cur, wt = res
        w = w * wt
    return w, cur


# infinite rows ---------------------------------------------------------------


def _entries(lam: Partition, m: int, length: int) -> List[int]:
    return [m - p + (lam[p] if p < len(lam) else 0) for p in range(length)]


def _columns(top: Partition, bottom: Partition, m: int, extra: int):
    L = max(len(top), len(bottom)) + extra
    ti = set(_entries(top, m, L))
    bi = set(_entries(bottom, m, L))
    hi = max(ti | bi)
    lo = m - L + 1
    return [("-" if c in ti else "+", "-" if c in bi else "+") for c in range(hi, lo - 1, -1)]


def delta_row_element(z: RingElem, xi, eta, m: int = 0, extra: int | None = None) -> RingElem:
    """<eta| T_Delta(z) |xi>; xi labels the top boundary."""
    xi, eta = as_partition(xi), as_partition(eta)
    R = _ring_of(z)
    if sum(eta) > sum(xi):
        return R.zero
    cols = _columns(xi, eta, m, z.n + 1 if extra is None else extra)
    w, right = scan_row(DELTA, ("+", 0), cols, z)
    if right is None or right != ("+", 0):
        return R.zero
    return w


def gamma_row_element(z: RingElem, xi, eta, m: int = 0, method: str = "scan", extra: int | None = None) -> RingElem:
    """<eta| T_Gamma(z) |xi>; xi labels the top boundary.

    ``method="adjoint"`` computes sigma of the Delta element at 1/z with the
    roles of the two boundaries exchanged.
    """
    xi, eta = as_partition(xi), as_partition(eta)
    R = _ring_of(z)
    if method == "adjoint":
        return delta_row_element(z.inverse_monomial(), eta, xi, m, extra).involute()
    if method != "scan":
        raise ValueError(method)
    if sum(eta) < sum(xi):
        return R.zero
    cols = _columns(xi, eta, m, z.n + 1 if extra is None else extra)
    w, right = scan_row(GAMMA, ("-", 0), cols, z)
    if right is None or right != ("-", 0):
        return R.zero
    return w


def row_element(flavor: str, z: RingElem, xi, eta, m: int = 0) -> RingElem:
    if flavor == DELTA:
        return delta_row_element(z, xi, eta, m)
    return gamma_row_element(z, xi, eta, m)


def partitions_between(inner: Partition, outer: Partition) -> List[Partition]:
    inner, outer = as_partition(inner), as_partition(outer)
    if not contains(outer, inner):
        return []
    L = len(outer)
    out = []

    def rec(i, prev, acc):
        if i == L:
            out.append(as_partition(acc))
            return
        lo = inner[i] if i < len(inner) else 0
        for x in range(min(prev, outer[i]), lo - 1, -1):
            rec(i + 1, x, acc + [x])

    rec(0, outer[0] if outer else 0, [])
    return sorted(set(out))


def multi_row_element(zs: Sequence[RingElem], xi, eta, flavor: str = DELTA, m: int = 0) -> RingElem:
    """<eta| T(z_1) ... T(z_r) |xi>; T(z_r) acts first on xi."""
    xi, eta = as_partition(xi), as_partition(eta)
    R = _ring_of(zs[0])
    cur: Dict[Partition, RingElem] = {xi: R.one}
    for idx, z in enumerate(reversed(zs)):
        last = idx == len(zs) - 1
        nxt: Dict[Partition, RingElem] = {}
        for kappa, c in cur.items():
            if flavor == DELTA:
                cands = [eta] if last else partitions_between(eta, kappa)
            else:
                cands = [eta] if last else partitions_between(kappa, eta)
            for nu in cands:
                w = row_element(flavor, z, kappa, nu, m)
                if w.is_zero():
                    continue
                t = c * w
                nxt[nu] = nxt[nu] + t if nu in nxt else t
        cur = {k: v for k, v in nxt.items() if not v.is_zero()}
    return cur.get(eta, R.zero)


# the (n+1)-column systems --------------------------------------------------


def hat_transfer_element(k: int, n: int, eps: Sequence[str], dlt: Sequence[str], z: RingElem):
    """Delta ice on columns k, k-1, ..., k-n with left boundary +^0.

    ``eps`` and ``dlt`` give the top and bottom signs in that column order.
    Returns (weight, right spin); right spin is None when no state exists.
    """
    if len(eps) != n + 1 or len(dlt) != n + 1:
        raise ValueError("need n+1 top and bottom signs")
    return scan_row(DELTA, ("+", 0), list(zip(eps, dlt)), z)


# finite systems ---------------------------------------------------------------


class FiniteSystem:
    """Rectangular grid, rows listed top to bottom, columns left to right.

    ``top`` and ``bottom`` are sign lists over the columns; ``left`` and
    ``right`` are decorated spins per row (top to bottom); ``zs`` gives the
    row parameters top to bottom.
    """

    def __init__(self, flavor, zs, top, bottom, left, right):
        if not (len(zs) == len(left) == len(right)):
            raise ValueError("one parameter and boundary spin per row")
        if len(top) != len(bottom):
            raise ValueError("top and bottom must cover the same columns")
        self.flavor = flavor
        self.zs = list(zs)
        self.top = list(top)
        self.bottom = list(bottom)
        self.left = [(s, c % zs[0].n) for s, c in left]
        self.right = [(s, c % zs[0].n) for s, c in right]

    @property
    def rows(self):
        return len(self.zs)

    @property
    def ncols(self):
        return len(self.top)


def _column_transitions(flavor, zs, zinvs, state, top, bottom):
    """All (new_state, weight) for one column with the given horizontal
    spins on its left."""
    R = _ring_of(zs[0])
    r = len(zs)
    results = []

    def rec(i, above, acc_state, w):
        if i == r:
            results.append((tuple(acc_state), w))
            return
        choices = [bottom] if i == r - 1 else ["+", "-"]
        for b in choices:
            res = step(flavor, state[i], above, b, zs[i], zinvs[i])
            if res is None:
                continue
            rt, wt = res
            rec(i + 1, b, acc_state + [rt], w * wt)

    rec(0, top, [], R.one)
    return results


def transfer_states(flavor, zs, states: Dict[tuple, RingElem], top, bottom) -> Dict[tuple, RingElem]:
    """Push a distribution over left-edge spins (one per row) through the
    given columns; returns the distribution over right-edge spins."""
    zinvs = [z.inverse_monomial() if flavor == GAMMA else None for z in zs]
    cur = dict(states)
    for c in range(len(top)):
        nxt: Dict[tuple, RingElem] = {}
        for state in sorted(cur):
            w0 = cur[state]
            for new, w in _column_transitions(flavor, zs, zinvs, state, top[c], bottom[c]):
                t = w0 * w
                nxt[new] = nxt[new] + t if new in nxt else t
        cur = {k: v for k, v in nxt.items() if not v.is_zero()}
        if not cur:
            break
    return cur


def finite_partition_function(s: FiniteSystem) -> RingElem:
    """Column-by-column dynamic programming over vertical cuts."""
    R = _ring_of(s.zs[0])
    cur = transfer_states(s.flavor, s.zs, {tuple(s.left): R.one}, s.top, s.bottom)
    return cur.get(tuple(s.right), R.zero)


def enumerate_states(s: FiniteSystem):
    """Brute force over every assignment of internal edges; yields
    (weight, horizontal spins, vertical spins) for admissible states.  Only
    sensible for tiny grids."""
    R = _ring_of(s.zs[0])
    n = R.n
    r, N = s.rows, s.ncols
    spins = [("+", 0)] + [("-", a) for a in range(n)] if s.flavor == DELTA else [("-", 0)] + [("+", a) for a in range(n)]
    n_h = r * (N - 1)
    n_v = (r - 1) * N
    zinvs = [z.inverse_monomial() if s.flavor == GAMMA else None for z in s.zs]
    for hv in product(spins, repeat=n_h):
        for vv in product("+-", repeat=n_v):
            w = R.one
            ok = True
            for i in range(r):
                for c in range(N):
                    left = s.left[i] if c == 0 else hv[i * (N - 1) + c - 1]
                    right = s.right[i] if c == N - 1 else hv[i * (N - 1) + c]
                    top = s.top[c] if i == 0 else vv[(i - 1) * N + c]
                    bottom = s.bottom[c] if i == r - 1 else vv[i * N + c]
                    res = step(s.flavor, left, top, bottom, s.zs[i], zinvs[i])
                    if res is None or res[0] != right:
                        ok = False
                        break
                    w = w * res[1]
                if not ok:
                    break
            if ok:
                yield w, hv, vv


def brute_partition_function(s: FiniteSystem) -> RingElem:
    R = _ring_of(s.zs[0])
    total = R.zero
    for w, _, _ in enumerate_states(s):
        total = total + w
    return total
