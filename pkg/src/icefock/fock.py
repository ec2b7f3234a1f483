"""Quantum fermionic Fock space.

Basis vectors |lam; m> = u_{m+lam_1} ^ u_{m-1+lam_2} ^ ... are stored as
partitions at a fixed charge.  Out-of-order wedges are rewritten with the
twisted quantum-wedge relations (alpha_ij = -q^{-1} g(i-j)).
"""

from __future__ import annotations

import sys
from typing import Dict, List, Mapping, Sequence, Tuple

from .coeff_ring import Ring, RingElem, StructureError
from .partitions import Partition, as_partition

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

MAX_REWRITES = 200000


class FockVector:
    """Finite sum of basis vectors at one charge with RingElem coefficients."""

    __slots__ = ("n", "charge", "terms", "arity")

    def __init__(self, n: int, charge: int, terms: Mapping[Partition, RingElem] | None = None, arity: int = 0):
        self.n = n
        self.charge = charge
        self.arity = arity
        self.terms: Dict[Partition, RingElem] = {}
        if terms:
            for lam, c in terms.items():
                self.add_term(as_partition(lam), c)

    @classmethod
    def basis(cls, n: int, lam: Sequence[int], m: int = 0, arity: int = 0) -> "FockVector":
        return cls(n, m, {as_partition(lam): Ring(n, arity).one}, arity)

    @classmethod
    def vacuum(cls, n: int, m: int = 0, arity: int = 0) -> "FockVector":
        return cls.basis(n, (), m, arity)

    def add_term(self, lam: Partition, c) -> None:
        if not isinstance(c, RingElem):
            c = Ring(self.n, self.arity)(c)
        if c.arity != self.arity:
            c = c.extend(self.arity)
        s = self.terms.get(lam)
        s = c if s is None else s + c
        if s.is_zero():
            self.terms.pop(lam, None)
        else:
            self.terms[lam] = s

    def copy(self) -> "FockVector":
        v = FockVector(self.n, self.charge, arity=self.arity)
        v.terms = dict(self.terms)
        return v

    def __add__(self, other: "FockVector") -> "FockVector":
        if other.charge != self.charge or other.n != self.n:
            raise StructureError("charge or modulus mismatch")
        v = self.copy()
        for lam, c in other.terms.items():
            v.add_term(lam, c)
        return v

    def __neg__(self):
        v = FockVector(self.n, self.charge, arity=self.arity)
        v.terms = {k: -c for k, c in self.terms.items()}
        return v

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FockVector":
        v = FockVector(self.n, self.charge, arity=self.arity)
        for lam, x in self.terms.items():
            v.add_term(lam, x * c)
        return v

    def extend(self, arity: int) -> "FockVector":
        v = FockVector(self.n, self.charge, arity=arity)
        v.terms = {k: c.extend(arity) for k, c in self.terms.items()}
        return v

    def shift_charge(self, d: int) -> "FockVector":
        """Shift every index by d; partitions are unchanged."""
        v = self.copy()
        v.charge += d
        return v

    def coeff(self, lam) -> RingElem:
        return self.terms.get(as_partition(lam), Ring(self.n, self.arity).zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.n == other.n and self.charge == other.charge and self.terms == other.terms

    def map_coeffs(self, f) -> "FockVector":
        v = FockVector(self.n, self.charge, arity=self.arity)
        for lam, c in self.terms.items():
            v.add_term(lam, f(c))
        return v

    def to_json(self) -> dict:
        return {
            "charge": self.charge,
            "terms": [
                {"partition": list(lam), "coeff": c.to_json()}
                for lam, c in sorted(self.terms.items())
            ],
        }

    def __repr__(self):
        if not self.terms:
            return f"0 (charge {self.charge})"
        return " + ".join(f"({c})|{list(lam)}>" for lam, c in sorted(self.terms.items()))


# two-factor relation --------------------------------------------------------


def pair_rule(l: int, m: int, n: int) -> List[Tuple[RingElem, int, int]]:
    """Rewrite u_l ^ u_m (l < m) as a sum of normal-ordered pairs u_x ^ u_y."""
    if l >= m:
        raise ValueError("pair_rule expects l < m")
    R = Ring(n)
    if (m - l) % n == 0:
        return [(-R.one, m, l)]
    g = R.g(l - m)
    out = [(g, m, l)]
    i = (m - l) % n
    c = R.v - 1
    t = 0
    while True:
        # t even: (m - tn/2 - i, l + tn/2 + i); t odd: (m - (t+1)n/2, l + (t+1)n/2)
        k = t // 2
        if t % 2 == 0:
            x, y = m - k * n - i, l + k * n + i
            coeff = c * R.vpow(k)
        else:
            x, y = m - (k + 1) * n, l + (k + 1) * n
            coeff = c * R.vpow(k) * g
        if x <= y:
            break
        out.append((coeff, x, y))
        t += 1
    return out


# straightening ---------------------------------------------------------------

_INSERT_CACHE: Dict[Tuple[int, int, Partition], Dict[Partition, RingElem]] = {}


def insert(a: int, lam: Partition, n: int) -> Dict[Partition, RingElem]:
    """u_a ^ |lam; 0>, returned as {mu: coeff} meaning a vector at charge 1."""
    key = (n, a, lam)
    hit = _INSERT_CACHE.get(key)
    if hit is not None:
        return hit
    out: Dict[Partition, RingElem] = {}
    if a - 1 + sum(lam) < 0:
        _INSERT_CACHE[key] = out
        return out
    b = lam[0] if lam else 0
    if a > b:
        # a == 1 forces lam empty
        out[(a - 1,) + lam if a > 1 else lam] = Ring(n).one
    elif a < b:
        rest = lam[1:]
        for c, x, y in pair_rule(a, b, n):
            # u_y ^ |rest; -1> is the shift of u_{y+1} ^ |rest; 0>
            for nu, c1 in insert(y + 1, rest, n).items():
                for mu, c2 in insert(x, nu, n).items():
                    s = out.get(mu)
                    t = c * c1 * c2
                    s = t if s is None else s + t
                    if s.is_zero():
                        out.pop(mu, None)
                    else:
                        out[mu] = s
    _INSERT_CACHE[key] = out
    return out


def _accumulate(acc: Dict[Partition, RingElem], vec: Mapping[Partition, RingElem], c: RingElem):
    for mu, x in vec.items():
        t = x * c
        s = acc.get(mu)
        s = t if s is None else s + t
        if s.is_zero():
            acc.pop(mu, None)
        else:
            acc[mu] = s


def wedge_onto(a: int, x: FockVector) -> FockVector:
    """u_a ^ x, straightened; charge goes up by one."""
    n, m = x.n, x.charge
    acc: Dict[Partition, RingElem] = {}
    for lam, c in x.terms.items():
        vec = insert(a - m, lam, n)
        if x.arity:
            vec = {mu: y.extend(x.arity) for mu, y in vec.items()}
        _accumulate(acc, vec, c)
    out = FockVector(n, m + 1, arity=x.arity)
    out.terms = acc
    return out


psi_star = wedge_onto


def rho_star(k: int, zpow, x: FockVector) -> FockVector:
    """psi*_k(x) - zpow * psi*_{k-n}(x)."""
    first = wedge_onto(k, x)
    if isinstance(zpow, (int,)) and zpow == 0:
        return first
    return first - wedge_onto(k - x.n, x).scale(zpow)


def straighten(word: Sequence[int], m: int, n: int) -> FockVector:
    """Straighten u_{w_1} ^ ... ^ u_{w_L} ^ (vacuum tail) at total charge m.

    The tail below the explicit prefix is the vacuum of charge m - L.
    """
    word = list(word)
    x = FockVector.vacuum(n, m - len(word))
    for a in reversed(word):
        x = wedge_onto(a, x)
    return x


def prepend_entries(entries: Sequence[int], x: FockVector) -> FockVector:
    for a in reversed(entries):
        x = wedge_onto(a, x)
    return x


def maya_entries(lam: Partition, m: int, length: int) -> List[int]:
    return [m - p + (lam[p] if p < len(lam) else 0) for p in range(length)]


# naive rewriting (used to test confluence) ---------------------------------


def straighten_naive(word: Sequence[int], m: int, n: int, strategy: str = "leftmost") -> FockVector:
    """Rewrite adjacent inversions one at a time, leftmost or rightmost first."""
    R = Ring(n)
    L = len(word)
    tail_top = m - L
    todo = [(tuple(word), tail_top, R.one)]
    result = FockVector(n, m)
    steps = 0
    while todo:
        w, t, c = todo.pop()
        steps += 1
        if steps > MAX_REWRITES:
            raise AssertionError("straightening did not terminate")
        w = list(w)
        # degree of any word is preserved; negative degree means zero
        deg = sum(w[p] - (m - p) for p in range(len(w)))
        if deg < 0:
            continue
        # materialize tail entries until the explicit part ends above the tail
        while w and w[-1] <= t:
            w.append(t)
            t -= 1
        pairs = [p for p in range(len(w) - 1) if w[p] <= w[p + 1]]
        if not pairs:
            lam = tuple(w[p] - (m - p) for p in range(len(w)))
            result.add_term(as_partition([x for x in lam if x > 0]), c)
            continue
        p = pairs[0] if strategy == "leftmost" else pairs[-1]
        l_, r_ = w[p], w[p + 1]
        if l_ == r_:
            continue
        for cc, x, y in pair_rule(l_, r_, n):
            todo.append((tuple(w[:p] + [x, y] + w[p + 2:]), t, c * cc))
    return result


# Heisenberg generators -------------------------------------------------------


def J_apply(k: int, x: FockVector) -> FockVector:
    """J_k for k >= 1: replace one factor u_i by u_{i - nk} in every way."""
    if k < 1:
        raise ValueError("J_apply expects k >= 1; use J_neg_apply or bras")
    n, m = x.n, x.charge
    out = FockVector(n, m, arity=x.arity)
    acc: Dict[Partition, RingElem] = {}
    for lam, c in x.terms.items():
        for mu, d in _J_basis(k, lam, n).items():
            _accumulate(acc, {mu: d.extend(x.arity) if x.arity else d}, c)
    out.terms = acc
    return out


_J_CACHE: Dict[Tuple[int, int, Partition], Dict[Partition, RingElem]] = {}


def _J_basis(k: int, lam: Partition, n: int) -> Dict[Partition, RingElem]:
    key = (n, k, lam)
    hit = _J_CACHE.get(key)
    if hit is not None:
        return hit
    acc: Dict[Partition, RingElem] = {}
    L = len(lam)
    ent = maya_entries(lam, 0, L)
    # tail positions contribute nothing: the moved factor lands below degree 0
    for p in range(L):
        suffix = lam[p + 1:]
        # u_{e_p - nk} ^ |suffix; -p-1>  ==  shift of insert(e_p - nk + p + 1, suffix)
        vec = insert(ent[p] - n * k + p + 1, suffix, n)
        if not vec:
            continue
        prefix = ent[:p]
        for nu, c in vec.items():
            # nu sits at charge -p; prefix entries are all larger, so prepend
            mu = tuple(prefix[j] + j for j in range(p)) + nu
            _accumulate(acc, {as_partition(mu): c}, Ring(n).one)
    _J_CACHE[key] = acc
    return acc


def J_neg_apply(k: int, x: FockVector, window_extra: int | None = None) -> FockVector:
    """J_{-k} on a ket, computed directly with a window stabilization check."""
    if k < 1:
        raise ValueError("J_neg_apply expects k >= 1")
    n, m = x.n, x.charge

    def attempt(extra):
        out = FockVector(n, m, arity=x.arity)
        for lam, c in x.terms.items():
            P = len(lam) + extra
            ent = maya_entries(lam, m, P)
            for p in range(P):
                suffix = FockVector.basis(n, lam[p + 1:], m - p - 1, x.arity)
                y = wedge_onto(ent[p] + n * k, suffix)
                y = prepend_entries(ent[:p], y)
                out = out + y.scale(c)
        return out

    base = n * k + n if window_extra is None else window_extra
    a, b = attempt(base), attempt(base + n)
    if a != b:
        raise AssertionError("J_{-k} window did not stabilize")
    return a


def inner_product(bra: FockVector, ket: FockVector) -> RingElem:
    if bra.charge != ket.charge:
        raise StructureError("charge mismatch")
    R = Ring(ket.n, max(bra.arity, ket.arity))
    total = R.zero
    for lam, c in ket.terms.items():
        b = bra.terms.get(lam)
        if b is not None:
            total = total + R(b.involute()) * R(c)
    return total


def J_bra_apply(k: int, mu: Sequence[int], m: int, n: int) -> FockVector:
    """The bra <mu| J_{-k}.

    Bras are stored as vectors b with <b|x> = sum sigma(b_lam) x_lam.  Since
    J_{-k} is the adjoint of J_k this is just J_k|mu>.
    """
    if k < 1:
        raise ValueError("J_bra_apply expects k >= 1")
    return J_apply(k, FockVector.basis(n, mu, m))


def clear_caches() -> None:
    _INSERT_CACHE.clear()
    _J_CACHE.clear()
