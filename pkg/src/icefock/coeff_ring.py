"""Exact coefficient ring.

Elements are Laurent polynomials in q and z_1..z_r with rational
coefficients, extended by formal Gauss symbols G_1..G_{n-1}.  The symbols
obey G_a G_{n-a} = q^2 (and G_{n/2}^2 = q^2 for even n); g(0) is -q^2.
v is always q^2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Key = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


class StructureError(ValueError):
    """Raised when elements over different moduli or arities are combined."""


def gauss_normal_form(exps: Iterable[int], n: int) -> Tuple[Tuple[int, ...], int]:
    """Reduce a raw Gauss exponent vector (index a-1 holds e_a).

    Returns the reduced vector and the q-power that was extracted.
    """
    e = list(exps)
    if len(e) != max(n - 1, 0):
        raise StructureError(f"expected {n - 1} Gauss exponents, got {len(e)}")
    if any(x < 0 for x in e):
        raise ValueError("Gauss exponents must be non-negative")
    qpow = 0
    for a in range(1, n):
        b = n - a
        if a < b:
            m = min(e[a - 1], e[b - 1])
            if m:
                e[a - 1] -= m
                e[b - 1] -= m
                qpow += 2 * m
        elif a == b:
            m = e[a - 1] // 2
            e[a - 1] -= 2 * m
            qpow += 2 * m
    return tuple(e), qpow


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class RingElem:
    __slots__ = ("n", "arity", "terms")

    def __init__(self, n: int, arity: int = 0, terms: Mapping[Key, object] | None = None):
        self.n = n
        self.arity = arity
        self.terms: Dict[Key, object] = {}
        if terms:
            for (qe, ze, ge), c in terms.items():
                self._add_raw(qe, tuple(ze), tuple(ge), c)

    # construction helpers -------------------------------------------------
    def _add_raw(self, qe, ze, ge, c):
        if len(ze) != self.arity:
            raise StructureError("z-exponent length does not match arity")
        ge, extra = gauss_normal_form(ge, self.n)
        key = (qe + extra, ze, ge)
        s = self.terms.get(key, 0) + c
        if s == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = _norm_coeff(s)

    @classmethod
    def _trusted(cls, n, arity, terms):
        x = cls.__new__(cls)
        x.n = n
        x.arity = arity
        x.terms = terms
        return x

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.n != self.n:
                raise StructureError(f"modulus mismatch: {self.n} vs {other.n}")
            if other.arity != self.arity:
                raise StructureError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Fraction)):
            return constant(other, self.n, self.arity)
        return NotImplemented

    # ring operations -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = _norm_coeff(s)
        return RingElem._trusted(self.n, self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElem._trusted(self.n, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RingElem._trusted(self.n, self.arity, {})
            return RingElem._trusted(
                self.n, self.arity, {k: _norm_coeff(c * other) for k, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.n
        out: Dict[Key, object] = {}
        cache = {}
        for (q1, z1, g1), c1 in self.terms.items():
            for (q2, z2, g2), c2 in other.terms.items():
                if n > 1:
                    gk = (g1, g2)
                    red = cache.get(gk)
                    if red is None:
                        red = gauss_normal_form([a + b for a, b in zip(g1, g2)], n)
                        cache[gk] = red
                    ge, extra = red
                else:
                    ge, extra = (), 0
                ze = tuple(a + b for a, b in zip(z1, z2)) if z1 else z1
                key = (q1 + q2 + extra, ze, ge)
                s = out.get(key, 0) + c1 * c2
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return RingElem._trusted(n, self.arity, {k: _norm_coeff(c) for k, c in out.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        return self * other.inverse_monomial()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse_monomial() ** (-e)
        result = constant(1, self.n, self.arity)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse_monomial(self) -> "RingElem":
        """Inverse of a single term that carries no Gauss symbols other than
        those invertible through the relations."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible")
        (qe, ze, ge), c = next(iter(self.terms.items()))
        # G_a^{-1} = q^{-2} G_{n-a}
        inv_g = [0] * len(ge)
        qe_inv = -qe
        for a in range(1, self.n):
            e = ge[a - 1]
            if e:
                inv_g[self.n - a - 1] += e
                qe_inv -= 2 * e
        x = RingElem(self.n, self.arity)
        x._add_raw(qe_inv, tuple(-t for t in ze), tuple(inv_g), Fraction(1) / c)
        return x

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == constant(other, self.n, self.arity).terms
        if isinstance(other, RingElem):
            return self.n == other.n and self.arity == other.arity and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structural maps -------------------------------------------------------
    def involute(self) -> "RingElem":
        """sigma: fixes q and z, sends G_a to G_{n-a}."""
        x = RingElem(self.n, self.arity)
        for (qe, ze, ge), c in self.terms.items():
            flipped = [0] * len(ge)
            for a in range(1, self.n):
                flipped[self.n - a - 1] = ge[a - 1]
            x._add_raw(qe, ze, tuple(flipped), c)
        return x

    def specialize_g(self, spec: Mapping[int, "RingElem"] | None = None) -> "RingElem":
        """Replace every G_a by spec[a]; default g(a) = -q."""
        if spec is None:
            spec = default_g_spec(self.n)
        validate_g_spec(spec, self.n)
        out = RingElem(self.n, self.arity)
        powcache = {}
        for (qe, ze, ge), c in self.terms.items():
            t = RingElem(self.n, self.arity, {(qe, ze, (0,) * len(ge)): c})
            for a in range(1, self.n):
                e = ge[a - 1]
                if e:
                    p = powcache.get((a, e))
                    if p is None:
                        p = _lift(spec[a % self.n], self.arity) ** e
                        powcache[(a, e)] = p
                    t = t * p
            out = out + t
        return out

    def extend(self, arity: int) -> "RingElem":
        """Embed into a ring with more z-variables (new ones absent)."""
        return _lift(self, arity)

    def substitute_z(self, images) -> "RingElem":
        """Ring map z_i -> images[i]; negative powers need monomial images."""
        images = list(images)
        if len(images) != self.arity:
            raise StructureError("need one image per z-variable")
        target_arity = images[0].arity if images else 0
        out = RingElem(self.n, target_arity)
        for (qe, ze, ge), c in self.terms.items():
            t = RingElem(self.n, target_arity, {(qe, (0,) * target_arity, ge): c})
            for img, e in zip(images, ze):
                if e:
                    t = t * (img ** e)
            out = out + t
        return out

    def truncate(self, cap: "SeriesCap | int") -> "RingElem":
        d = cap.total_degree if isinstance(cap, SeriesCap) else cap
        return RingElem._trusted(
            self.n, self.arity, {k: c for k, c in self.terms.items() if sum(k[1]) <= d}
        )

    def z_coefficient(self, zexp) -> "RingElem":
        zexp = tuple(zexp)
        return RingElem._trusted(
            self.n, self.arity, {k: c for k, c in self.terms.items() if k[1] == zexp}
        )

    def z_degrees(self):
        return sorted({sum(k[1]) for k in self.terms})

    def has_gauss(self) -> bool:
        return any(any(k[2]) for k in self.terms)

    def denominator_free(self) -> bool:
        return all(not isinstance(c, Fraction) or c.denominator == 1 for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    # serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for (qe, ze, ge), c in self.sorted_terms():
            c = Fraction(c)
            terms.append(
                {
                    "coeff": {"num": c.numerator, "den": c.denominator},
                    "q": qe,
                    "z": list(ze),
                    "g": list(ge),
                }
            )
        return {"n": self.n, "arity": self.arity, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "RingElem":
        x = cls(data["n"], data["arity"])
        for t in data["terms"]:
            c = Fraction(t["coeff"]["num"], t["coeff"]["den"])
            x._add_raw(t["q"], tuple(t["z"]), tuple(t["g"]), c)
        return x

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (qe, ze, ge), c in self.sorted_terms():
            factors = []
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            for i, e in enumerate(ze):
                if e:
                    factors.append(f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}")
            for a, e in enumerate(ge, start=1):
                if e:
                    factors.append(f"G{a}" if e == 1 else f"G{a}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class SeriesCap:
    __slots__ = ("total_degree",)

    def __init__(self, total_degree: int):
        if total_degree < 0:
            raise ValueError("series cap must be non-negative")
        self.total_degree = total_degree

    def __repr__(self):
        return f"SeriesCap({self.total_degree})"


def _lift(x: RingElem, arity: int) -> RingElem:
    if x.arity == arity:
        return x
    if x.arity > arity:
        raise StructureError("cannot drop z-variables")
    pad = (0,) * (arity - x.arity)
    return RingElem._trusted(x.n, arity, {(qe, ze + pad, ge): c for (qe, ze, ge), c in x.terms.items()})


def constant(c, n: int, arity: int = 0) -> RingElem:
    if c == 0:
        return RingElem._trusted(n, arity, {})
    return RingElem._trusted(n, arity, {(0, (0,) * arity, (0,) * max(n - 1, 0)): _norm_coeff(c)})


class Ring:
    """Factory for elements over a fixed modulus n and z-arity."""

    def __init__(self, n: int, arity: int = 0):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n
        self.arity = arity
        self._g0 = (0,) * max(n - 1, 0)

    def __call__(self, c) -> RingElem:
        if isinstance(c, RingElem):
            return _lift(c, self.arity)
        return constant(c, self.n, self.arity)

    @property
    def zero(self) -> RingElem:
        return constant(0, self.n, self.arity)

    @property
    def one(self) -> RingElem:
        return constant(1, self.n, self.arity)

    def monomial(self, coeff=1, q: int = 0, z=None, g=None) -> RingElem:
        z = tuple(z) if z is not None else (0,) * self.arity
        g = tuple(g) if g is not None else self._g0
        x = RingElem(self.n, self.arity)
        x._add_raw(q, z, g, coeff)
        return x

    def qpow(self, e: int) -> RingElem:
        return self.monomial(q=e)

    @property
    def q(self) -> RingElem:
        return self.qpow(1)

    @property
    def v(self) -> RingElem:
        return self.qpow(2)

    def vpow(self, e: int) -> RingElem:
        return self.qpow(2 * e)

    def z(self, i: int, e: int = 1) -> RingElem:
        """z_i**e, variables numbered from 1."""
        if not 1 <= i <= self.arity:
            raise StructureError(f"z_{i} outside arity {self.arity}")
        ze = [0] * self.arity
        ze[i - 1] = e
        return self.monomial(z=ze)

    def G(self, a: int) -> RingElem:
        a %= self.n
        if a == 0:
            raise ValueError("G_0 is not a generator; use g(0)")
        ge = [0] * (self.n - 1)
        ge[a - 1] = 1
        return self.monomial(g=ge)

    def g(self, a: int) -> RingElem:
        if a % self.n == 0:
            return self.monomial(-1, q=2)
        return self.G(a)


def default_g_spec(n: int) -> Dict[int, RingElem]:
    R = Ring(n)
    return {a: (R.monomial(-1, q=2) if a == 0 else R.monomial(-1, q=1)) for a in range(n)}


def validate_g_spec(spec: Mapping[int, RingElem], n: int) -> None:
    if any(a not in spec for a in range(1, n)):
        raise ValueError("g-specialization must give a value for every nonzero residue")
    if 0 in spec and spec[0] != Ring(n, spec[0].arity).monomial(-1, q=2):
        raise ValueError("g(0) must be -q^2")
    for a in range(1, n):
        ga = spec[a]
        gb = spec[(n - a) % n]
        if ga.has_gauss() or (ga * gb) != Ring(n, ga.arity).v:
            raise ValueError(f"g({a})g({-a}) must equal q^2")


def ring_mul(x: RingElem, y: RingElem) -> RingElem:
    return x * y


def involute(x: RingElem) -> RingElem:
    return x.involute()


def specialize_g(x: RingElem, spec=None) -> RingElem:
    return x.specialize_g(spec)


def power_sum(k: int, arity: int, n: int = 1) -> RingElem:
    if k < 1 or arity < 1:
        raise ValueError("power_sum needs k >= 1 and arity >= 1")
    R = Ring(n, arity)
    out = R.zero
    for i in range(1, arity + 1):
        out = out + R.z(i, k)
    return out


def llt_g_spec(n: int) -> Dict[int, RingElem]:
    """g(a) = +q off the zero residue, i.e. -sqrt(v) with sqrt(v) = -q.

    This is the choice under which <mu|exp L_+(z)|lam> reproduces the spin
    generating function of ribbon tableaux.
    """
    R = Ring(n)
    return {a: (R.monomial(-1, q=2) if a == 0 else R.q) for a in range(n)}


def flip_q(x: RingElem) -> RingElem:
    """Substitute q -> -q."""
    out = RingElem(x.n, x.arity)
    for (qe, ze, ge), c in x.terms.items():
        out._add_raw(qe, ze, ge, -c if qe % 2 else c)
    return out
