"""Affine Hecke algebra acting on V_n(z)^{tensor N}, and the twisted R-matrix.

A basis vector v_j (x) z_1^{k_1} ... z_N^{k_N} is keyed by the pair of tuples
(j, k) with 1 <= j_i <= n.  Coefficients are RingElems; the twist
parameters alpha_ab live in the coefficient ring, so any ring that contains
them works (a free Laurent ring, the Gauss-symbol ring, or plain q).

All Hecke operators act on the right: x.T_i, and x.(T_a T_b) = (x.T_a).T_b.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterable, List, Sequence, Tuple

from .coeff_ring import Ring, RingElem, StructureError

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]


class TwistParameters:
    """alpha_ab for residues 1 <= a, b <= n with alpha_aa = 1 and
    alpha_ab alpha_ba = 1."""

    def __init__(self, n: int, ring: Ring, table: Dict[Tuple[int, int], RingElem]):
        self.n = n
        self.ring = ring
        self.table = dict(table)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a == b:
                    continue
                if self(a, b) * self(b, a) != ring.one:
                    raise ValueError(f"alpha_{a}{b} alpha_{b}{a} != 1")

    def __call__(self, a: int, b: int) -> RingElem:
        if a == b:
            return self.ring.one
        return self.table[(a, b)]

    @classmethod
    def untwisted(cls, n: int) -> "TwistParameters":
        R = Ring(n, 0)
        return cls(n, R, {(a, b): R.one for a in range(1, n + 1) for b in range(1, n + 1) if a != b})

    @classmethod
    def formal(cls, n: int) -> "TwistParameters":
        """One free invertible generator per pair a < b, stored as a Laurent
        variable of the coefficient ring; alpha_ba is its inverse."""
        pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        R = Ring(n, len(pairs))
        table = {}
        for idx, (a, b) in enumerate(pairs):
            table[(a, b)] = R.z(idx + 1)
            table[(b, a)] = R.z(idx + 1, -1)
        return cls(n, R, table)

    @classmethod
    def gauss(cls, n: int) -> "TwistParameters":
        """alpha_ab = -q^{-1} g(a - b), the choice behind the Fock space."""
        R = Ring(n, 0)
        table = {}
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a != b:
                    table[(a, b)] = R.g(a - b) * R.qpow(-1) * -1
        return cls(n, R, table)


class TensorVector:
    __slots__ = ("n", "N", "ring", "terms")

    def __init__(self, n: int, N: int, ring: Ring, terms: Dict[Key, RingElem] | None = None):
        self.n, self.N, self.ring = n, N, ring
        self.terms: Dict[Key, RingElem] = {}
        for key, c in (terms or {}).items():
            self.add(key, c)

    @classmethod
    def basis(cls, n: int, js: Sequence[int], ks: Sequence[int], ring: Ring) -> "TensorVector":
        if len(js) != len(ks):
            raise ValueError("need one z-exponent per tensor factor")
        if any(not 1 <= j <= n for j in js):
            raise ValueError("tensor labels run over 1..n")
        return cls(n, len(js), ring, {(tuple(js), tuple(ks)): ring.one})

    @classmethod
    def from_u(cls, n: int, ls: Sequence[int], ring: Ring) -> "TensorVector":
        """u_{l_1} (x) ... with u_{j - kn} = v_j z^k."""
        js, ks = zip(*(u_label(l, n) for l in ls))
        return cls.basis(n, js, ks, ring)

    def add(self, key: Key, c) -> None:
        if not isinstance(c, RingElem):
            c = self.ring(c)
        s = self.terms.get(key)
        s = c if s is None else s + c
        if s.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = s

    def _empty(self) -> "TensorVector":
        return TensorVector(self.n, self.N, self.ring)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = self.copy()
        for key, c in other.terms.items():
            out.add(key, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "TensorVector":
        out = self._empty()
        for key, d in self.terms.items():
            out.add(key, d * c)
        return out

    def copy(self) -> "TensorVector":
        out = self._empty()
        out.terms = dict(self.terms)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*v{list(j)}z{list(k)}" for (j, k), c in sorted(self.terms.items()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "terms": [{"j": list(j), "z": list(k), "coeff": c.to_json()} for (j, k), c in sorted(self.terms.items())],
        }


def u_label(l: int, n: int) -> Tuple[int, int]:
    """(j, k) with l = j - kn and 1 <= j <= n."""
    j = (l - 1) % n + 1
    return j, (j - l) // n


def _check_index(i: int, N: int) -> None:
    if not 1 <= i <= N - 1:
        raise IndexError(f"T_{i} needs 1 <= i <= {N - 1}")


def _shift(ks: Tuple[int, ...], pos: int, d: int) -> Tuple[int, ...]:
    out = list(ks)
    out[pos] += d
    return tuple(out)


def _swap(t: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    out = list(t)
    out[p], out[p + 1] = out[p + 1], out[p]
    return tuple(out)


def divide_difference(x: TensorVector, i: int) -> TensorVector:
    """Exact quotient x / (z_i - z_{i+1}); raises if it does not divide."""
    p = i - 1
    groups: Dict[tuple, Dict[int, RingElem]] = {}
    for (js, ks), c in x.terms.items():
        rest = ks[:p] + ks[p + 2:]
        e = ks[p] + ks[p + 1]
        groups.setdefault((js, rest, e), {})[ks[p]] = c
    out = x._empty()
    for (js, rest, e), poly in groups.items():
        lo, hi = min(poly), max(poly)
        d = x.ring.zero
        for a in range(lo, hi + 1):
            d = d - poly.get(a, x.ring.zero)
            if a == hi:
                if not d.is_zero():
                    raise StructureError(f"not divisible by z_{i} - z_{i + 1}")
                break
            if not d.is_zero():
                ks = rest[:p] + (a, e - 1 - a) + rest[p:]
                out.add((js, ks), d)
    return out


def twisted_R_apply(i: int, x: TensorVector, alpha: TwistParameters, literal_display: bool = False) -> TensorVector:
    """(tau R^alpha)(z_i, z_{i+1}) on tensor positions i, i+1.

    v_a (x) v_a   -> (q z_i - q^{-1} z_{i+1}) v_a (x) v_a
    v_a (x) v_b   -> alpha_ab (z_i - z_{i+1}) v_b (x) v_a
                     + (q - q^{-1}) z_{i+1} v_a (x) v_b   (a < b)
                     + (q - q^{-1}) z_i     v_a (x) v_b   (a > b)

    ``literal_display=True`` swaps z_i and z_{i+1} in the last two lines;
    that variant does not reproduce the direct Hecke action.
    """
    _check_index(i, x.N)
    p = i - 1
    R = x.ring
    q, qi = R.q, R.qpow(-1)
    out = x._empty()
    for (js, ks), c in x.terms.items():
        a, b = js[p], js[p + 1]
        if a == b:
            out.add((js, _shift(ks, p, 1)), c * q)
            out.add((js, _shift(ks, p + 1, 1)), c * -qi)
            continue
        al = alpha(a, b)
        sj = _swap(js, p)
        out.add((sj, _shift(ks, p, 1)), c * al)
        out.add((sj, _shift(ks, p + 1, 1)), c * -al)
        upper = (a < b) != literal_display
        out.add((js, _shift(ks, p + 1 if upper else p, 1)), c * (q - qi))
    return out


def _swap_z(x: TensorVector, i: int) -> TensorVector:
    out = x._empty()
    for (js, ks), c in x.terms.items():
        out.add((js, _swap(ks, i - 1)), c)
    return out


def _times_z(x: TensorVector, pos: int, e: int = 1) -> TensorVector:
    out = x._empty()
    for (js, ks), c in x.terms.items():
        out.add((js, _shift(ks, pos - 1, e)), c)
    return out


def hecke_T_rmatrix(i: int, x: TensorVector, alpha: TwistParameters, literal_display: bool = False) -> TensorVector:
    """x.T_i = [(q^2 - 1) z_i x - q tauR(x^{s_i})] / (z_i - z_{i+1})."""
    _check_index(i, x.N)
    R = x.ring
    num = _times_z(x, i).scale(R.v - 1) - twisted_R_apply(i, _swap_z(x, i), alpha, literal_display).scale(R.q)
    return divide_difference(num, i)


def hecke_T_direct(i: int, x: TensorVector, alpha: TwistParameters) -> TensorVector:
    """The three-case formula, with the twist on the swapped term."""
    _check_index(i, x.N)
    p = i - 1
    R = x.ring
    out = x._empty()
    for (js, ks), c in x.terms.items():
        a, b = js[p], js[p + 1]
        single = TensorVector(x.n, x.N, R, {(js, ks): R.one})
        swapped = _swap_z(single, i)
        if a < b:
            frac = _times_z(swapped, i + 1) - _times_z(single, i)
        else:
            frac = _times_z(swapped - single, i)
        part = divide_difference(frac, i).scale(1 - R.v)
        sk = _swap(ks, p)
        if a == b:
            part.add((js, sk), -R.one)
        else:
            part.add((_swap(js, p), sk), alpha(a, b) * -R.q)
        out = out + part.scale(c)
    return out


def y_apply(i: int, x: TensorVector) -> TensorVector:
    """x.y_i = x z_i^{-1}."""
    if not 1 <= i <= x.N:
        raise IndexError(i)
    return _times_z(x, i, -1)


def y_inverse_apply(i: int, x: TensorVector) -> TensorVector:
    return _times_z(x, i, 1)


# permutations ------------------------------------------------------------------


def _length(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def reduced_words(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    """All reduced words (i_1, ..., i_l) with perm = s_{i_1} ... s_{i_l}.

    ``perm`` is in one-line notation on 1..N; s_i swaps positions i, i+1.
    """
    perm = tuple(perm)
    if _length(perm) == 0:
        return [()]
    out = []
    for i in range(1, len(perm)):
        # right descent: perm = perm' s_i with l(perm') = l(perm) - 1
        if perm[i - 1] > perm[i]:
            shorter = _swap(perm, i - 1)
            out.extend(w + (i,) for w in reduced_words(shorter))
    return sorted(set(out))


def T_word(word: Iterable[int], x: TensorVector, alpha: TwistParameters, action=None) -> TensorVector:
    """x.(T_{i_1} ... T_{i_l})."""
    act = action or hecke_T_rmatrix
    for i in word:
        x = act(i, x, alpha)
    return x


def T_sigma(perm: Sequence[int], x: TensorVector, alpha: TwistParameters, word_index: int = 0) -> TensorVector:
    """x.T_perm through one chosen reduced word."""
    words = reduced_words(perm)
    return T_word(words[word_index], x, alpha)


def antisymmetrize(x: TensorVector, alpha: TwistParameters) -> TensorVector:
    """x.A^{(N)} with A^{(N)} = sum over S_N of T_sigma."""
    out = x._empty()
    for perm in permutations(range(1, x.N + 1)):
        out = out + T_sigma(perm, x, alpha)
    return out


# the R-matrix itself, for the Yang-Baxter equation ------------------------------


def R_matrix_entries(a: int, b: int, alpha: TwistParameters, literal_display: bool = False):
    """R^alpha(z, w) on v_a (x) v_b as [(coeff, z-exp, w-exp, a', b')].

    R is tau composed with the matrix of twisted_R_apply.
    """
    R = alpha.ring
    q, qi = R.q, R.qpow(-1)
    if a == b:
        return [(q, 1, 0, a, a), (-qi, 0, 1, a, a)]
    al = alpha(a, b)
    upper = (a < b) != literal_display
    # tau R sends v_a v_b to al (z - w) v_b v_a + (q - 1/q) z_? v_a v_b; apply tau
    return [
        (al, 1, 0, a, b),
        (-al, 0, 1, a, b),
        (q - qi, 0 if upper else 1, 1 if upper else 0, b, a),
    ]


def R_apply(x: TensorVector, s: int, t: int, alpha: TwistParameters, literal_display: bool = False) -> TensorVector:
    """R_{st}(z_s, z_t) on tensor factors s < t; spectral variables are the
    z-slots of those factors (z-exponents record the polynomial weights)."""
    out = x._empty()
    for (js, ks), c in x.terms.items():
        for coef, ez, ew, a2, b2 in R_matrix_entries(js[s - 1], js[t - 1], alpha, literal_display):
            nj = list(js)
            nj[s - 1], nj[t - 1] = a2, b2
            nk = list(ks)
            nk[s - 1] += ez
            nk[t - 1] += ew
            out.add((tuple(nj), tuple(nk)), c * coef)
    return out


def yang_baxter_holds(alpha: TwistParameters, literal_display: bool = False) -> bool:
    """R12 R13 R23 = R23 R13 R12 on every basis vector of V^{(x)3}."""
    n = alpha.n
    for js in _all_labels(n, 3):
        x = TensorVector.basis(n, js, (0, 0, 0), alpha.ring)
        lhs = R_apply(R_apply(R_apply(x, 2, 3, alpha, literal_display), 1, 3, alpha, literal_display), 1, 2, alpha, literal_display)
        rhs = R_apply(R_apply(R_apply(x, 1, 2, alpha, literal_display), 1, 3, alpha, literal_display), 2, 3, alpha, literal_display)
        if lhs != rhs:
            return False
    return True


def _all_labels(n: int, N: int):
    if N == 0:
        yield ()
        return
    for rest in _all_labels(n, N - 1):
        for j in range(1, n + 1):
            yield rest + (j,)


def basis_vectors(n: int, N: int, ring: Ring, exps: Sequence[int] = (-1, 0, 1)):
    """Every v_j (x) z^k with k_i drawn from ``exps``."""
    for js in _all_labels(n, N):
        for ks in _product(exps, N):
            yield TensorVector.basis(n, js, ks, ring)


def _product(vals, N):
    if N == 0:
        yield ()
        return
    for rest in _product(vals, N - 1):
        for v in vals:
            yield rest + (v,)
