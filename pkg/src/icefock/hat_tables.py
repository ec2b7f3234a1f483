"""Replay of the four-term check on (n+1)-column Delta systems.

For a window of columns k, k-1, ..., k-n with top spins eps and bottom
spins dlt, the identity

    <dlt|T psi*_k|eps> - z^n <dlt|T psi*_{k-n}|eps>
        = <dlt|psi*_k T|eps> - v z^n <dlt|psi*_{k-n} T|eps>

is checked term by term.  T is the one-row Delta system of
``hat_transfer_element`` and psi*_j is computed by straightening, so the
Gauss factors come from the wedge relations rather than a hand formula.

``LITERAL_TABLES`` holds the printed tables as formulas in z, v, n and the
products G, G', G''.  ``replay`` evaluates them on every interior pattern
and reports the rows that disagree with the computed terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from .coeff_ring import Ring, RingElem
from .fock import straighten
from .lattice import hat_transfer_element
from .partitions import as_partition

Pattern = Tuple[str, ...]


def _z(n: int) -> RingElem:
    return Ring(n, 1).z(1)


def _weight(n: int, eps: Pattern, dlt: Pattern):
    w, right = hat_transfer_element(n, n, eps, dlt, _z(n))
    if right is None:
        return Ring(n, 1).zero, None
    return w, right


def _wedge_window(j: int, eps: Pattern, n: int) -> Dict[Pattern, RingElem]:
    """u_j ^ (window word of eps), written in window patterns.

    The window is columns n..0 and the rest of the wedge is the vacuum
    below column 0.  Terms that leave the window raise ValueError.
    """
    cols = list(range(n, -1, -1))
    word = [j] + [c for c, s in zip(cols, eps) if s == "-"]
    m = -1 + len(word)
    vec = straighten(word, m, n)
    out: Dict[Pattern, RingElem] = {}
    for lam, c in vec.terms.items():
        lam = as_partition(lam)
        entries = [m - p + (lam[p] if p < len(lam) else 0) for p in range(len(word) + 1)]
        inside = set(e for e in entries if e >= 0)
        if entries[len(word)] != -1 or any(e > n for e in inside):
            raise ValueError("wedge left the window")
        pat = tuple("-" if col in inside else "+" for col in cols)
        out[pat] = c.extend(1)
    return out


@dataclass(frozen=True)
class FourTerms:
    eps: Pattern
    dlt: Pattern
    a: RingElem  # <dlt|T psi*_k|eps>
    b: RingElem  # -z^n <dlt|T psi*_{k-n}|eps>
    c: RingElem  # <dlt|psi*_k T|eps>
    d: RingElem  # -v z^n <dlt|psi*_{k-n} T|eps>
    rights: Tuple

    def holds(self) -> bool:
        return self.a + self.b == self.c + self.d

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


def four_terms(n: int, eps: Sequence[str], dlt: Sequence[str]) -> FourTerms:
    eps, dlt = tuple(eps), tuple(dlt)
    if len(eps) != n + 1 or len(dlt) != n + 1:
        raise ValueError("need n+1 signs")
    R = Ring(n, 1)
    z = R.z(1)
    k, kn = n, 0
    rights = []

    def lhs(j):
        tot = R.zero
        for pat, coef in _wedge_window(j, eps, n).items():
            w, right = _weight(n, pat, dlt)
            if not w.is_zero():
                rights.append(right)
                tot = tot + coef * w
        return tot

    def rhs(j):
        tot = R.zero
        for zeta in product("+-", repeat=n + 1):
            w, right = _weight(n, eps, zeta)
            if w.is_zero():
                continue
            coef = _wedge_window(j, zeta, n).get(dlt)
            if coef is not None:
                rights.append(right)
                tot = tot + coef * w
        return tot

    a = lhs(k)
    b = -(z ** n) * lhs(kn)
    c = rhs(k)
    d = -(R.v * z ** n) * rhs(kn)
    return FourTerms(eps, dlt, a, b, c, d, tuple(sorted(set(rights))))


# printed tables ----------------------------------------------------------------


@dataclass
class Symbols:
    n: int
    z: RingElem
    v: RingElem
    G: RingElem
    Gp: RingElem
    Gpp: RingElem
    sk: int  # s - k
    g: Callable[[int], RingElem]


Entry = Callable[[Symbols], RingElem]


def _zero(c: Symbols):
    return c.z * 0


def _one(c: Symbols):
    return c.z ** 0


# Keys are the row labels as printed: (eps_k, eps_{k-n}, delta_k, delta_{k-n}).
CASE_I: List[Tuple[str, Tuple[Entry, Entry, Entry, Entry]]] = [
    ("++++", (lambda c: c.z ** c.n * c.G, lambda c: -(c.z ** c.n) * c.G, _zero, _zero)),
    ("+++-", (lambda c: c.G * c.z ** c.n * (1 - c.v) * c.z, lambda c: -(c.z ** c.n) * c.G, _zero,
              lambda c: -c.v * c.z ** (c.n + 1) * c.G)),
    ("++-+", (_one, _zero, _one, _zero)),
    ("+-+-", (lambda c: -c.G * c.z ** (c.n - 1), _zero, _zero, lambda c: -c.G * c.z ** (c.n - 1))),
    ("++-+", (_one, _zero, _one, _zero)),
    ("++--", (_zero, _zero, _zero, _zero)),
    ("+--+", (_one, _zero, _one, _zero)),
    ("+---", (_one, _zero, _one, _zero)),
    ("-+++", (_zero, _zero, _zero, _zero)),
    ("-++-", (_zero, lambda c: -c.v * c.z ** (2 * c.n) * c.G ** 2, _zero,
              lambda c: -c.v * c.z ** (2 * c.n) * c.G ** 2)),
    ("--++", (_zero, _zero, _zero, _zero)),
    ("--+-", (_zero, _zero, _zero, _zero)),
    ("-+-+", (_zero, lambda c: c.z ** c.n * c.G, lambda c: c.z ** c.n * c.G, _zero)),
    ("-+--", (_zero, lambda c: c.z ** c.n * c.G, lambda c: (1 - c.v) * c.z ** c.n * c.G,
              lambda c: c.v * c.z ** c.n * c.G)),
    ("---+", (_zero, _zero, _zero, _zero)),
    ("----", (_zero, _zero, lambda c: -c.v * c.z ** c.n * c.G, lambda c: c.v * c.z ** c.n * c.G)),
]


def _ii_big(c: Symbols):
    return -c.Gp * c.Gpp * c.v * c.z ** (c.sk + 2 * c.n)


def _ii_small(c: Symbols):
    return c.Gpp * c.z ** (c.sk + c.n)


CASE_II: List[Tuple[str, Tuple[Entry, Entry, Entry, Entry]]] = [
    ("++++", (_zero, _zero, _zero, _zero)),
    ("+++-", (_zero, _ii_big, _zero, _ii_big)),
    ("++-+", (_ii_small, _zero, _ii_small, _zero)),
    ("+-+-", (_zero, _zero, _zero, _zero)),
    ("++-+", (_ii_small, _zero, _ii_small, _zero)),
    ("++--", (lambda c: c.Gpp * (1 - c.v) * c.z ** (c.sk + c.n), _zero,
              lambda c: c.Gpp * (1 - c.v) * c.z ** (c.sk + c.n), _zero)),
    ("+--+", (_zero, _zero, _zero, _zero)),
    ("+---", (lambda c: c.Gpp * c.z ** (c.sk + c.n) * c.g(c.sk), _zero,
              lambda c: c.Gpp * c.z ** (c.sk + c.n) * c.g(c.sk), _zero)),
    ("-+++", (_zero, _zero, _zero, _zero)),
    ("-++-", (_zero, _zero, _zero, _zero)),
    ("--++", (_zero, _zero, _zero, _zero)),
    ("--+-", (_zero, _zero, _zero, _zero)),
    ("-+-+", (_zero, _zero, _zero, _zero)),
    ("-+--", (_zero, lambda c: -_ii_big(c), _zero, lambda c: -_ii_big(c))),
    ("---+", (_zero, _zero, _zero, _zero)),
    ("----", (_zero, _zero, _zero, _zero)),
]

LITERAL_TABLES = {"i": CASE_I, "ii": CASE_II}

KEY_ORDERS = {
    # position of (eps_k, eps_{k-n}, delta_k, delta_{k-n}) inside the label
    "printed": (0, 1, 2, 3),
    "alternate": (0, 2, 1, 3),  # label read as (eps_k, delta_k, eps_{k-n}, delta_{k-n})
}


def interior_cases(n: int, case: str, max_minus: int = 2):
    """Yield (interior eps, interior dlt, s) for the window interior
    (columns k-1..k-n+1).  s is None in case (i)."""
    width = n - 1
    for inner in product("+-", repeat=width):
        if inner.count("-") > max_minus:
            continue
        if case == "i":
            yield inner, inner, None
        else:
            for pos, sgn in enumerate(inner):
                if sgn == "-":
                    d = list(inner)
                    d[pos] = "+"
                    yield inner, tuple(d), n - 1 - pos


def symbols(n: int, inner_eps: Pattern, s: int | None) -> Symbols:
    R = Ring(n, 1)
    k = n
    cols = list(range(n - 1, 0, -1))
    G = R.one
    for col, sgn in zip(cols, inner_eps):
        if sgn == "-":
            G = G * R.g(k - col)
    Gp, Gpp = R.one, R.one
    if s is not None:
        for col, sgn in zip(cols, inner_eps):
            if sgn != "-":
                continue
            if col != s:
                Gp = Gp * R.g(k - col)
            if col < s:
                Gpp = Gpp * R.g(s - col)
    return Symbols(n, R.z(1), R.v, G, Gp, Gpp, (s - k) if s is not None else 0, R.g)


@dataclass
class RowReport:
    case: str
    index: int
    label: str
    n: int
    inner_eps: Pattern
    inner_dlt: Pattern
    computed: Tuple[RingElem, ...]
    printed: Tuple[RingElem, ...]
    identity_holds: bool
    rights: Tuple

    @property
    def matches(self) -> bool:
        return self.computed == self.printed

    def mismatched_columns(self) -> List[str]:
        return [name for name, x, y in zip("ABCD", self.computed, self.printed) if x != y]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "row": self.index + 1,
            "label": self.label,
            "n": self.n,
            "interior_eps": "".join(self.inner_eps),
            "interior_delta": "".join(self.inner_dlt),
            "computed": [repr(x) for x in self.computed],
            "printed": [repr(x) for x in self.printed],
            "matches": self.matches,
            "four_term_identity": self.identity_holds,
            "right_edges": [f"{s}{a}" for s, a in self.rights],
        }


def replay(n: int, order: str = "printed", max_minus: int = 2) -> List[RowReport]:
    perm = KEY_ORDERS[order]
    out = []
    for case, rows in LITERAL_TABLES.items():
        for idx, (label, entries) in enumerate(rows):
            e_k, e_kn, d_k, d_kn = (label[perm[i]] for i in range(4))
            for inner_e, inner_d, s in interior_cases(n, case, max_minus):
                eps = (e_k,) + inner_e + (e_kn,)
                dlt = (d_k,) + inner_d + (d_kn,)
                ft = four_terms(n, eps, dlt)
                sym = symbols(n, inner_e, s)
                printed = tuple(f(sym) for f in entries)
                out.append(RowReport(case, idx, label, n, inner_e, inner_d, ft.as_tuple(), printed,
                                     ft.holds(), ft.rights))
    return out


def summarize(reports: Sequence[RowReport]) -> dict:
    rows: Dict[Tuple[str, int], List[RowReport]] = {}
    for r in reports:
        rows.setdefault((r.case, r.index), []).append(r)
    bad = []
    for (case, idx), rs in sorted(rows.items()):
        miss = [r for r in rs if not r.matches]
        if miss:
            bad.append({"case": case, "row": idx + 1, "label": rs[0].label,
                        "columns": sorted({c for r in miss for c in r.mismatched_columns()}),
                        "patterns": len(miss), "of": len(rs)})
    return {
        "rows": len(rows),
        "patterns": len(reports),
        "identity_failures": sum(1 for r in reports if not r.identity_holds),
        "mismatched_rows": bad,
    }


# Printed rows that the replay does not reproduce, keyed (case, row number).
# Values name the columns that differ and the computed entry.
KNOWN_MISPRINTS = {
    ("i", 2): (("A", "D"), "A = (1-v) z^n G and D = -v z^n G; the printed entries carry one more z"),
    ("i", 4): (("A", "D"), "A = D = -v z^n G rather than -G z^(n-1)"),
    ("ii", 6): (("A", "C"), "every pattern with this label gives four zero terms"),
}


def cases_exhaustive(n: int) -> dict:
    """Check that windows outside cases (i) and (ii) give four zero terms,
    and that nonzero terms share one right-edge spin."""
    R = Ring(n, 1)
    outside = 0
    bad = []
    split_edges = []
    for eps in product("+-", repeat=n + 1):
        for dlt in product("+-", repeat=n + 1):
            diff = [i for i in range(1, n) if eps[i] != dlt[i]]
            in_case = not diff or (len(diff) == 1 and eps[diff[0]] == "-")
            ft = four_terms(n, eps, dlt)
            if len(ft.rights) > 1:
                split_edges.append(("".join(eps), "".join(dlt)))
            if in_case:
                continue
            outside += 1
            if any(x != R.zero for x in ft.as_tuple()):
                bad.append(("".join(eps), "".join(dlt)))
    return {"outside": outside, "nonzero_outside": bad, "split_right_edges": split_edges}


def verify_tables(n: int) -> dict:
    """Report for one n: identity per pattern, literal rows versus the
    pinned misprints, and the case split."""
    reports = replay(n)
    summary = summarize(reports)
    found = {(b["case"], b["row"]): tuple(b["columns"]) for b in summary["mismatched_rows"]}
    pinned = {key: cols for key, (cols, _) in KNOWN_MISPRINTS.items()}
    exhaust = cases_exhaustive(n)
    ok = (summary["identity_failures"] == 0 and found == pinned
          and not exhaust["nonzero_outside"] and not exhaust["split_right_edges"])
    return {
        "identity": "four-term relation on (n+1)-column windows",
        "range": {"n": n, "max_interior_minus": 2, "patterns": summary["patterns"]},
        "status": "pass" if ok else "fail",
        "literal_rows_reproduced": summary["rows"] - len(found),
        "literal_rows": summary["rows"],
        "misprints": [{"case": c, "row": r, "columns": list(cols), "note": KNOWN_MISPRINTS.get((c, r), (None, "unexpected"))[1]}
                      for (c, r), cols in sorted(found.items())],
        "identity_failures": summary["identity_failures"],
        "outside_cases": exhaust,
    }
