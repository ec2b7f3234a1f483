"""Half-vertex operators, the map psi, LLT and metaplectic symmetric functions.

Only raising exponentials (those built from J_k with k > 0) are ever applied
to kets.  Anything involving J_{-k} is evaluated as a finite matrix element
through adjoints: <mu| exp(sum c_k J_{-k}) |lam> is sigma of the coefficient
of |mu> in exp(sum sigma(c_k) J_k) |lam>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, List, Mapping, Sequence

from .coeff_ring import Ring, RingElem, SeriesCap, llt_g_spec
from .fock import FockVector, J_apply
from .lattice import DELTA, delta_row_element, gamma_row_element, multi_row_element
from .partitions import (
    Partition,
    as_partition,
    contains,
    horizontal_strips,
    n_core,
    partitions_of,
    ribbon_tableaux,
    super_ribbon_tableaux,
    vertical_strips,
)


@dataclass(frozen=True)
class OperatorSpec:
    """exp(sum_k coeff(k) J_{+k}) for direction "+", or its J_{-k} analogue."""

    direction: str
    coeff: Callable[[int], RingElem]
    name: str = ""


# exponentials ----------------------------------------------------------------


def exp_raising(x: FockVector, coeff: Callable[[int], RingElem]) -> FockVector:
    """exp(sum_{k>=1} coeff(k) J_k) x as sum_d X^d / d!.

    J_k lowers the degree by nk, so the series stops once every surviving
    partition is smaller than n.
    """
    n = x.n
    total = x.copy()
    term = x
    d = 0
    while not term.is_zero():
        d += 1
        new = FockVector(n, x.charge, arity=x.arity)
        top = max(sum(lam) for lam in term.terms)
        for k in range(1, top // n + 1):
            new = new + J_apply(k, term).scale(coeff(k))
        term = new.scale(Fraction(1, d))
        total = total + term
    return total


def _H_coeff(z: RingElem) -> Callable[[int], RingElem]:
    R = Ring(z.n, z.arity)
    return lambda k: (1 - R.vpow(k)) * z ** (z.n * k) * Fraction(1, k)


def _L_coeff(zs: Sequence[RingElem], sign: int = 1) -> Callable[[int], RingElem]:
    R = Ring(zs[0].n, zs[0].arity)

    def c(k):
        s = R.zero
        for z in zs:
            s = s + z ** k
        return s * Fraction(sign, k)

    return c


def exp_H_plus_apply(z: RingElem, x: FockVector) -> FockVector:
    """exp(H_+(z)) x with H_+(z) = sum_k (1 - v^k) z^{nk} J_k / k.

    ``z`` is any monomial of the coefficient ring (a variable, its inverse,
    or a scaled variable such as v z_1^n).
    """
    if x.arity != z.arity:
        x = x.extend(z.arity)
    return exp_raising(x, _H_coeff(z))


def exp_L_plus_apply(zs: Sequence[RingElem], x: FockVector, sign: int = 1) -> FockVector:
    """exp(sign * L_+(zs)) x with L_+ = sum_k p_k(zs) J_k / k."""
    if x.arity != zs[0].arity:
        x = x.extend(zs[0].arity)
    return exp_raising(x, _L_coeff(zs, sign))


def exp_H_minus_bra(z: RingElem, mu, m: int = 0) -> FockVector:
    """The bra <mu| exp(H_-(z)), stored so that bra_element picks entries.

    H_-(z) is the adjoint of H_+(1/z) (the coefficients 1 - v^k are fixed by
    sigma), so the bra is exp(H_+(1/z)) |mu>.
    """
    mu = as_partition(mu)
    return exp_H_plus_apply(z.inverse_monomial(), FockVector.basis(z.n, mu, m, z.arity))


def bra_element(bra: FockVector, lam) -> RingElem:
    """<bra|lam> = sigma(bra_lam)."""
    lam = as_partition(lam)
    c = bra.terms.get(lam)
    if c is None:
        return Ring(bra.n, bra.arity).zero
    return c.involute()


def h_plus_element(z: RingElem, lam, mu, m: int = 0) -> RingElem:
    """<mu| exp(H_+(z)) |lam>."""
    return exp_H_plus_apply(z, FockVector.basis(z.n, lam, m, z.arity)).coeff(as_partition(mu))


def h_minus_element(z: RingElem, lam, mu, m: int = 0) -> RingElem:
    """<mu| exp(H_-(z)) |lam>."""
    return bra_element(exp_H_minus_bra(z, mu, m), lam)


# psi and strip operators -----------------------------------------------------


def z_lambda(rho: Partition) -> int:
    out = 1
    for part in set(rho):
        c = rho.count(part)
        out *= part ** c * factorial(c)
    return out


def h_in_p(k: int) -> Dict[Partition, Fraction]:
    return {rho: Fraction(1, z_lambda(rho)) for rho in partitions_of(k)}


def e_in_p(k: int) -> Dict[Partition, Fraction]:
    return {rho: Fraction((-1) ** (k - len(rho)), z_lambda(rho)) for rho in partitions_of(k)}


def psi_apply(f: Mapping[Partition, object], x: FockVector) -> FockVector:
    """Apply f(J_1, J_2, ...) where f is given in the power-sum basis."""
    out = FockVector(x.n, x.charge, arity=x.arity)
    for rho, c in f.items():
        y = x
        for part in as_partition(rho):
            y = J_apply(part, y)
            if y.is_zero():
                break
        if not y.is_zero():
            out = out + y.scale(c)
    return out


def strip_operator(k: int, x: FockVector, orientation: str = "horizontal") -> FockVector:
    """Combinatorial U_k (horizontal) or its vertical twin: remove a strip of
    k ribbons, weight q^spin."""
    if orientation not in ("horizontal", "vertical"):
        raise ValueError(orientation)
    strips = horizontal_strips if orientation == "horizontal" else vertical_strips
    R = Ring(x.n, x.arity)
    out = FockVector(x.n, x.charge, arity=x.arity)
    for lam, c in x.terms.items():
        for s in strips(lam, k, x.n):
            out.add_term(s.inner, c * R.qpow(s.spin))
    return out


# LLT and friends -------------------------------------------------------------


def _variables(R: Ring, first: int, count: int) -> List[RingElem]:
    return [R.z(first + i) for i in range(count)]


def llt(lam, mu, r: int, n: int, method: str = "combinatorial", g_spec="llt") -> RingElem:
    """G^n_{lam/mu}(z_1..z_r; q).

    ``method="operator"`` evaluates <mu| exp L_+(z) |lam>; ``g_spec`` is
    "llt" (g(a) = +q), "default" (g(a) = -q), None (formal) or a table.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    R = Ring(n, r)
    if method == "combinatorial":
        out = R.zero
        for wt, spin in ribbon_tableaux(lam, mu, r, n):
            out = out + R.monomial(1, q=spin, z=wt)
        return out
    if method != "operator":
        raise ValueError(method)
    val = exp_L_plus_apply(_variables(R, 1, r), FockVector.basis(n, lam, 0, r)).coeff(mu)
    return _specialize(val, g_spec)


def _specialize(val: RingElem, g_spec):
    if g_spec is None or g_spec == "formal":
        return val
    if g_spec == "llt":
        return val.specialize_g(llt_g_spec(val.n))
    if g_spec == "default":
        return val.specialize_g()
    return val.specialize_g(g_spec)


def super_llt_combinatorial(lam, mu, n: int, zs: Sequence[RingElem], ws: Sequence[RingElem]) -> RingElem:
    """sum over super ribbon tableaux of q^spin z^wt (-w)^wt'."""
    R = Ring(n, zs[0].arity)
    out = R.zero
    for T in super_ribbon_tableaux(lam, mu, len(zs), n):
        t = R.qpow(T.spin)
        for z, e in zip(zs, T.wt):
            t = t * z ** e
        for w, e in zip(ws, T.wt_prime):
            t = t * (-w) ** e
        out = out + t
    return out


def super_llt_operator(lam, mu, n: int, zs: Sequence[RingElem], ws: Sequence[RingElem], m: int = 0) -> RingElem:
    """<mu| exp L_+(zs) exp(-L_+(ws)) |lam> with formal g."""
    x = FockVector.basis(n, lam, m, zs[0].arity)
    x = exp_L_plus_apply(ws, x, sign=-1)
    x = exp_L_plus_apply(zs, x)
    return x.coeff(as_partition(mu))


def super_llt(lam, mu, r: int, n: int, method: str = "combinatorial", g_spec="llt") -> RingElem:
    """G^n_{lam/mu}(z|w) in 2r variables: z_i is variable i, w_i is r + i."""
    lam, mu = as_partition(lam), as_partition(mu)
    R = Ring(n, 2 * r)
    zs, ws = _variables(R, 1, r), _variables(R, r + 1, r)
    if method == "combinatorial":
        return super_llt_combinatorial(lam, mu, n, zs, ws)
    if method != "operator":
        raise ValueError(method)
    return _specialize(super_llt_operator(lam, mu, n, zs, ws), g_spec)


def metaplectic_sf(lam, mu, r: int, n: int, method: str = "lattice") -> RingElem:
    """M^n_{lam/mu}(z_1..z_r) with formal g.

    "lattice":   <mu| T_Delta(z_1) ... T_Delta(z_r) |lam> by row scans.
    "operator":  <mu| exp H_+(z_1) ... exp H_+(z_r) |lam>.
    "super_llt": the operator super-LLT at (z^n | v z^n).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    R = Ring(n, r)
    zs = _variables(R, 1, r)
    if method == "lattice":
        return multi_row_element(zs, lam, mu, DELTA)
    if method == "operator":
        x = FockVector.basis(n, lam, 0, r)
        for z in reversed(zs):
            x = exp_H_plus_apply(z, x)
        return x.coeff(mu)
    if method == "super_llt":
        zn = [z ** n for z in zs]
        return super_llt_operator(lam, mu, n, zn, [R.v * t for t in zn])
    raise ValueError(method)


def metaplectic_via_combinatorial_super_llt(lam, mu, r: int, n: int) -> RingElem:
    """The combinatorial super-LLT polynomial at (z^n | v z^n)."""
    R = Ring(n, r)
    zn = [R.z(i + 1) ** n for i in range(r)]
    return super_llt_combinatorial(lam, mu, n, zn, [R.v * t for t in zn])


# scalar kernels ----------------------------------------------------------------


def _geometric(ratio: RingElem, cap: int) -> RingElem:
    """sum_{d=0}^{cap} ratio^d."""
    out = Ring(ratio.n, ratio.arity).one
    p = out
    for _ in range(cap):
        p = p * ratio
        out = out + p
    return out


def _keep(x: RingElem, max_z: int) -> RingElem:
    """Drop monomials whose z-exponent exceeds max_z."""
    return RingElem(x.n, x.arity, {k: c for k, c in x.terms.items() if k[1][0] <= max_z})


def scalar_factor(kind: str, n: int, cap) -> RingElem:
    """Truncated expansion of a commutation kernel in z = variable 1 and
    w = variable 2.

    ``cap`` bounds the power of the kernel's own expansion variable:
    zw for "omega", (zw)^n for "theta", (z/w)^n for "C", z/w for
    "diamond" and "locality_U".
    """
    if cap is None:
        raise ValueError("a series cap is required")
    D = cap.total_degree if isinstance(cap, SeriesCap) else int(cap)
    if D < 0:
        raise ValueError("series cap must be non-negative")
    R = Ring(n, 2)
    z, w = R.z(1), R.z(2)
    if kind == "omega":
        out = R.one
        for t in range(n):
            out = _keep(out * _geometric(R.vpow(t) * z * w, D), D)
        return out
    if kind in ("theta", "C"):
        x = z ** n * w ** n if kind == "theta" else z ** n * w ** (-n)
        num = (1 - R.v * x) * (1 - R.vpow(n) * x)
        out = num * _geometric(x, D) * _geometric(R.vpow(n + 1) * x, D)
        return _keep(out, n * D)
    t = z * w.inverse_monomial()
    if kind == "diamond":
        out = R.one
        for j in range(n):
            out = _keep(out * _geometric(R.vpow(j) * t, D), D)
        return out
    if kind == "locality_U":
        out = R.one
        for j in range(n):
            out = _keep(out * (t - R.vpow(j)) * _geometric(R.vpow(j) * t, D), D)
        return out
    raise ValueError(f"unknown kernel {kind!r}")


def log_kernel_coefficients(kind: str, n: int, order: int) -> List[RingElem]:
    """Coefficients c_1..c_order of the commutator series sum_k c_k x^k."""
    R = Ring(n)
    out = []
    for k in range(1, order + 1):
        if kind == "omega" or kind == "diamond":
            c = R.zero
            for j in range(n):
                c = c + R.vpow(j * k)
            out.append(c * Fraction(1, k))
        elif kind == "theta" or kind == "C":
            out.append((1 - R.vpow(k) - R.vpow(n * k) + R.vpow((n + 1) * k)) * Fraction(1, k))
        else:
            raise ValueError(kind)
    return out


# commutation checks ------------------------------------------------------------


def _partitions_up_to(k: int) -> List[Partition]:
    return [lam for s in range(k + 1) for lam in partitions_of(s)]


def _report(identity: str, rng: dict, witnesses: list) -> dict:
    return {"identity": identity, "range": rng, "status": "pass" if not witnesses else "fail", "witnesses": witnesses[:5]}


def gamma_delta_sides(xi, eta, n: int, cap: int):
    """Both sides of T_Delta(z) T_Gamma(w) = C(z, w) T_Gamma(w) T_Delta(z)
    at <eta| . |xi>, truncated to z-exponent <= max(|xi|, |eta|) - |eta| + cap."""
    xi, eta = as_partition(xi), as_partition(eta)
    R = Ring(n, 2)
    z, w = R.z(1), R.z(2)
    a_max = max(sum(xi), sum(eta)) - sum(eta) + cap
    lhs = R.zero
    for zeta in _partitions_up_to(sum(eta) + a_max):
        if not (contains(zeta, xi) and contains(zeta, eta)):
            continue
        d = delta_row_element(z, zeta, eta)
        if d.is_zero():
            continue
        lhs = lhs + d * gamma_row_element(w, xi, zeta)
    rhs = R.zero
    for kappa in _partitions_up_to(min(sum(xi), sum(eta))):
        if not (contains(xi, kappa) and contains(eta, kappa)):
            continue
        d = delta_row_element(z, xi, kappa)
        if d.is_zero():
            continue
        rhs = rhs + gamma_row_element(w, kappa, eta) * d
    # C has z-exponents in multiples of n, up to n * (cap // n)
    rhs = _keep(scalar_factor("C", n, cap // n + 1) * rhs, a_max)
    return _keep(lhs, a_max), rhs


@lru_cache(maxsize=None)
def _unit_L_expansion(lam: Partition, n: int):
    """exp(L_+(1)) |lam> as a dict with formal g; the z-power is implicit."""
    one = Ring(n).one
    vec = exp_raising(FockVector.basis(n, lam), lambda k: one * Fraction(1, k))
    return dict(vec.terms)


def diamond_sides(lam, mu, n: int, cap: int):
    """<mu| U(z) U(w) |lam> for the diamond operators, against the normal
    ordered product times prod_j 1/(1 - v^j z/w).  Truncated at z-exponent
    a_min + cap where a_min = (|core| - |mu|)/n."""
    lam, mu = as_partition(lam), as_partition(mu)
    R = Ring(n, 2)
    z, w = R.z(1), R.z(2)
    core = n_core(lam, n)
    if core != n_core(mu, n):
        return R.zero, R.zero
    a_min = (sum(core) - sum(mu)) // n
    a_max = a_min + cap

    def M(top, bottom):
        # <top| U_-(1) U_+(1) |bottom>
        Et, Eb = _unit_L_expansion(top, n), _unit_L_expansion(bottom, n)
        s = Ring(n).zero
        for alpha, c in Eb.items():
            d = Et.get(alpha)
            if d is not None:
                s = s + d.involute() * c
        return s

    lhs = R.zero
    for size_beta in range(sum(core), sum(mu) + n * a_max + 1, n):
        for beta in partitions_of(size_beta):
            if n_core(beta, n) != core:
                continue
            c = M(mu, beta) * M(beta, lam)
            if c.is_zero():
                continue
            e_z = (sum(beta) - sum(mu)) // n
            e_w = (sum(lam) - sum(beta)) // n
            lhs = lhs + R(c.extend(2)) * z ** e_z * w ** e_w

    # normal order: U_-(z) U_-(w) U_+(z) U_+(w)
    def plus_pair(top, bottom):
        # <top| U_+(z) U_+(w) |bottom>
        out = R.zero
        for theta, c1 in _unit_L_expansion(bottom, n).items():
            c2 = _unit_L_expansion(theta, n).get(top)
            if c2 is None:
                continue
            out = out + (c1 * c2).extend(2) * z ** ((sum(theta) - sum(top)) // n) * w ** ((sum(bottom) - sum(theta)) // n)
        return out

    def minus_pair(top, bottom):
        # <top| U_-(z) U_-(w) |bottom> is the adjoint of <bottom|U_+(1/w)U_+(1/z)|top>
        out = R.zero
        for theta, c1 in _unit_L_expansion(top, n).items():
            c2 = _unit_L_expansion(theta, n).get(bottom)
            if c2 is None:
                continue
            out = out + (c1 * c2).involute().extend(2) * w ** (-((sum(top) - sum(theta)) // n)) * z ** (-((sum(theta) - sum(bottom)) // n))
        return out

    normal = R.zero
    for s in range(sum(core), min(sum(lam), sum(mu)) + 1, n):
        for eps in partitions_of(s):
            if n_core(eps, n) != core:
                continue
            a = minus_pair(mu, eps)
            if a.is_zero():
                continue
            normal = normal + a * plus_pair(eps, lam)
    rhs = scalar_factor("diamond", n, cap) * normal
    return _keep(lhs, a_max), _keep(rhs, a_max)


def U_prefactor(m: int, n: int, first: RingElem, second: RingElem) -> RingElem:
    """Scalar from S z^{J_0} bookkeeping in <.| U(first) U(second) |.; m>:
    the right factor sees charge m, the left one charge m + n."""
    return first ** (m + n) * second ** m


def verify_commutation(kind: str, n: int = 2, cap: int = 6, max_size: int = 4) -> dict:
    """Series check of a commutation identity on all |lam|, |mu| <= max_size."""
    witnesses = []
    parts = _partitions_up_to(max_size)
    if kind == "gamma-delta":
        for xi in parts:
            for eta in parts:
                lhs, rhs = gamma_delta_sides(xi, eta, n, cap)
                if lhs != rhs:
                    witnesses.append({"xi": list(xi), "eta": list(eta), "difference": repr(lhs - rhs)})
        return _report("T_Delta(z)T_Gamma(w) = C T_Gamma(w)T_Delta(z)", {"n": n, "cap": cap, "max_size": max_size}, witnesses)
    if kind == "diamond":
        for lam in parts:
            for mu in parts:
                lhs, rhs = diamond_sides(lam, mu, n, cap)
                if lhs != rhs:
                    witnesses.append({"lambda": list(lam), "mu": list(mu), "difference": repr(lhs - rhs)})
        return _report("U(z)U(w) = prod 1/(1 - v^j z/w) :U(z)U(w):", {"n": n, "cap": cap, "max_size": max_size}, witnesses)
    if kind == "locality_U":
        R = Ring(n, 2)
        z, w = R.z(1), R.z(2)
        for m in range(-2, 3):
            # U(z)U(w) = z^{m+n} w^m phi(z/w) N and U(w)U(z) = w^{m+n} z^m phi(w/z) N
            # with phi(t) = prod_j 1/(1 - v^j t).  Both sides of the claimed
            # relation are multiplied through by prod_j (w - v^j z)(z - v^j w).
            lhs = U_prefactor(m, n, z, w)
            rhs = U_prefactor(m, n, w, z)
            for j in range(n):
                lhs = lhs * w * (z - R.vpow(j) * w)
                rhs = rhs * z * (z - R.vpow(j) * w)
            if lhs != rhs:
                witnesses.append({"m": m, "difference": repr(lhs - rhs)})
        return _report("U(z)U(w) = prod (z - v^j w)/(w - v^j z) U(w)U(z)", {"n": n, "charges": [-2, 2]}, witnesses)
    raise ValueError(f"unknown identity {kind!r}")


# Cauchy identities -------------------------------------------------------------


def cauchy_llt_sides(n: int, delta=(), cap: int = 6):
    """sum over lam with n-core delta, |lam/delta| <= n*cap, of
    G_{lam/delta}(z) G_{lam/delta}(w), against Omega truncated at (zw)^cap."""
    delta = as_partition(delta)
    if n_core(delta, n) != delta:
        raise ValueError(f"{delta} is not an {n}-core")
    R = Ring(n, 2)
    z, w = R.z(1), R.z(2)
    total = R.zero
    for d in range(cap + 1):
        for lam in partitions_of(sum(delta) + n * d):
            if not contains(lam, delta) or n_core(lam, n) != delta:
                continue
            G = llt(lam, delta, 1, n)
            if G.is_zero():
                continue
            total = total + G.substitute_z([z]) * G.substitute_z([w])
    return total, scalar_factor("omega", n, cap)


def cauchy_metaplectic_sides(n: int, cap: int = 6):
    """sum over lam with empty n-core, |lam| <= n*cap, of
    M_lam(z) sigma(M_lam(w)), against Theta truncated at (zw)^{n cap}.

    With formal Gauss symbols one factor has to be conjugated: the identity
    comes from <0| exp H_+(z) exp(H_+(w)^*) |0>, and the adjoint conjugates
    the matrix elements of exp H_+(w).
    """
    R = Ring(n, 2)
    z, w = R.z(1), R.z(2)
    total = R.zero
    for d in range(cap + 1):
        for lam in partitions_of(n * d):
            if n_core(lam, n):
                continue
            a = delta_row_element(z, lam, ())
            if a.is_zero():
                continue
            total = total + a * delta_row_element(w, lam, ()).involute()
    return total, scalar_factor("theta", n, cap)
