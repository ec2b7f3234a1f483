"""Partitions, Maya words, n-cores and n-ribbon strips."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Sequence, Tuple

Partition = Tuple[int, ...]
Cell = Tuple[int, int]  # (row, column), both starting at 1


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {list(parts)}")
    return p


def size(lam: Partition) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def partitions_of(k: int, max_part: int | None = None) -> Tuple[Partition, ...]:
    if max_part is None:
        max_part = k
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(kmax: int) -> List[Partition]:
    return [lam for k in range(kmax + 1) for lam in partitions_of(k)]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def diagram(lam: Partition) -> FrozenSet[Cell]:
    return frozenset((i + 1, j + 1) for i, row in enumerate(lam) for j in range(row))


# Maya words ---------------------------------------------------------------


@dataclass(frozen=True)
class MayaWord:
    """Window of the strictly decreasing sequence i_m > i_{m-1} > ...

    ``entries`` lists i_m, i_{m-1}, ... down to the window bottom; below the
    window every entry equals its index.
    """

    charge: int
    entries: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        e = self.entries
        if any(e[i] <= e[i + 1] for i in range(len(e) - 1)):
            raise ValueError("Maya entries must be strictly decreasing")
        if e and e[-1] != self.charge - len(e) + 1:
            raise ValueError("window bottom must agree with the vacuum tail")

    def entry(self, k: int) -> int:
        """i_k for k <= charge."""
        pos = self.charge - k
        return self.entries[pos] if pos < len(self.entries) else k

    def window(self, length: int) -> Tuple[int, ...]:
        return tuple(self.entry(self.charge - p) for p in range(length))

    def extended(self, length: int) -> "MayaWord":
        return MayaWord(self.charge, self.window(max(length, len(self.entries))))


def maya_from_partition(lam: Sequence[int], m: int = 0, length: int | None = None) -> MayaWord:
    lam = as_partition(lam)
    L = len(lam) + 1 if length is None else max(length, len(lam) + 1)
    ent = tuple(m - k + (lam[k] if k < len(lam) else 0) for k in range(L))
    return MayaWord(m, ent)


def partition_from_maya(x: MayaWord) -> Partition:
    parts = [x.entries[p] - (x.charge - p) for p in range(len(x.entries))]
    return as_partition([p for p in parts if p > 0])


def degree(x: MayaWord) -> int:
    """Sum of (i_r - r) over r <= m."""
    return sum(x.entries[p] - (x.charge - p) for p in range(len(x.entries)))


# beta numbers, cores, rim hooks -------------------------------------------


def _beta(lam: Partition, extra: int) -> List[int]:
    L = len(lam) + extra
    return [(lam[i] if i < len(lam) else 0) - i - 1 for i in range(L)]


def _from_beta(beads: Sequence[int]) -> Partition:
    b = sorted(beads, reverse=True)
    return as_partition([x + i + 1 for i, x in enumerate(b)])


def rim_hook_removals(lam: Partition, n: int) -> List[Partition]:
    """All partitions obtained from lam by removing one n-ribbon."""
    beads = _beta(lam, n)
    occupied = set(beads)
    low = -len(beads) - 1
    out = []
    for b in beads:
        t = b - n
        if t in occupied or t <= low:
            continue
        nb = [t if x == b else x for x in beads]
        out.append(_from_beta(nb))
    return sorted(set(out))


def n_core(lam: Sequence[int], n: int) -> Partition:
    lam = as_partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    beads = _beta(lam, n)
    L = len(beads)
    # slide every bead down its runner; runners are residues mod n
    runners = {}
    for b in beads:
        runners.setdefault((b + L) % n, []).append(b)
    new = []
    for r in range(n):
        cnt = len(runners.get(r, []))
        new.extend(-L + r + n * i for i in range(cnt))
    return _from_beta(new)


def ribbon_cells(outer: Partition, inner: Partition) -> FrozenSet[Cell]:
    return diagram(outer) - diagram(inner)


def ribbon_head(cells) -> Cell:
    top = min(r for r, _ in cells)
    return (top, max(c for r, c in cells if r == top))


def ribbon_tail(cells) -> Cell:
    bottom = max(r for r, _ in cells)
    return (bottom, min(c for r, c in cells if r == bottom))


def ribbon_spin(cells) -> int:
    rows = {r for r, _ in cells}
    return len(rows) - 1


def is_ribbon(cells) -> bool:
    cells = set(cells)
    if not cells:
        return False
    for r, c in cells:
        if {(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class RibbonStrip:
    outer: Partition
    inner: Partition
    size_in_ribbons: int
    spin: int
    orientation: str
    ribbons: Tuple[FrozenSet[Cell], ...] = ()


@lru_cache(maxsize=None)
def _decompositions(lam: Partition, k: int, n: int):
    """Map inner partition -> set of ribbon decompositions of lam/inner
    reachable by k successive rim-hook removals."""
    if k == 0:
        return {lam: {frozenset()}}
    out = {}
    for mu in rim_hook_removals(lam, n):
        rib = ribbon_cells(lam, mu)
        for inner, decs in _decompositions(mu, k - 1, n).items():
            bucket = out.setdefault(inner, set())
            for d in decs:
                bucket.add(d | {rib})
    return out


def _horizontal_ok(ribbons, inner: Partition) -> bool:
    for rib in ribbons:
        r, c = ribbon_head(rib)
        if r == 1:
            continue
        if not (r - 1 <= len(inner) and inner[r - 2] >= c):
            return False
    return True


def horizontal_strips(lam: Sequence[int], k: int, n: int) -> List[RibbonStrip]:
    """All mu with lam/mu a horizontal strip of k n-ribbons, sorted by mu."""
    lam = as_partition(lam)
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if n * k > size(lam):
        return []
    out = []
    for mu, decs in _decompositions(lam, k, n).items():
        good = [d for d in decs if _horizontal_ok(d, mu)]
        if not good:
            continue
        if len(good) > 1:
            raise AssertionError(f"non-unique horizontal decomposition of {lam}/{mu}")
        d = good[0]
        ribs = tuple(sorted(d, key=lambda r: ribbon_head(r)))
        out.append(RibbonStrip(lam, mu, k, sum(ribbon_spin(r) for r in ribs), "horizontal", ribs))
    return sorted(out, key=lambda s: s.inner)


def vertical_strips(lam: Sequence[int], k: int, n: int) -> List[RibbonStrip]:
    """Transpose of a horizontal strip; spins are those of the original ribbons."""
    lam = as_partition(lam)
    out = []
    for s in horizontal_strips(conjugate(lam), k, n):
        ribs = tuple(frozenset((c, r) for r, c in rib) for rib in s.ribbons)
        spin = sum(ribbon_spin(r) for r in ribs)
        out.append(RibbonStrip(lam, conjugate(s.inner), k, spin, "vertical", ribs))
    return sorted(out, key=lambda s: s.inner)


def is_horizontal_strip(lam, mu, n) -> RibbonStrip | None:
    lam, mu = as_partition(lam), as_partition(mu)
    d = size(lam) - size(mu)
    if d < 0 or d % n or not contains(lam, mu):
        return None
    for s in horizontal_strips(lam, d // n, n):
        if s.inner == mu:
            return s
    return None


# tableaux ------------------------------------------------------------------


def ribbon_tableaux(lam, mu, r: int, n: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Chains mu = a0 < a1 < ... < ar = lam of horizontal strips.

    Returns (weight, spin) per tableau; letter i fills a_i / a_{i-1}.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        return []
    return sorted(_tableaux(lam, mu, r, n))


@lru_cache(maxsize=None)
def _tableaux(lam, mu, r, n):
    if r == 0:
        return (((), 0),) if lam == mu else ()
    out = []
    budget = size(lam) - size(mu)
    for k in range(budget // n + 1):
        for s in horizontal_strips(lam, k, n):
            if not contains(s.inner, mu):
                continue
            for wt, sp in _tableaux(s.inner, mu, r - 1, n):
                out.append((wt + (k,), sp + s.spin))
    return tuple(out)


@dataclass(frozen=True)
class SuperRibbonTableau:
    chain: Tuple[Partition, ...]
    wt: Tuple[int, ...]
    wt_prime: Tuple[int, ...]
    spin: int


def super_ribbon_tableaux(lam, mu, r: int, n: int) -> List[SuperRibbonTableau]:
    """Chains lam = l_1 > l_1' > l_2 > ... > l_r' > l_{r+1} = mu where
    l_i / l_i' is horizontal (letter i) and l_i' / l_{i+1} vertical (letter i')."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        return []
    out = []

    def rec(cur, i, chain, wt, wtp, spin):
        if i == r:
            if cur == mu:
                out.append(SuperRibbonTableau(tuple(chain), tuple(wt), tuple(wtp), spin))
            return
        budget = size(cur) - size(mu)
        for k in range(budget // n + 1):
            for h in horizontal_strips(cur, k, n):
                if not contains(h.inner, mu):
                    continue
                rest = size(h.inner) - size(mu)
                for kk in range(rest // n + 1):
                    for v in vertical_strips(h.inner, kk, n):
                        if not contains(v.inner, mu):
                            continue
                        rec(
                            v.inner,
                            i + 1,
                            chain + [h.inner, v.inner],
                            wt + [k],
                            wtp + [kk],
                            spin + h.spin + v.spin,
                        )

    rec(lam, 0, [lam], [], [], 0)
    return out


def partitions_with_core(core: Partition, n: int, max_extra: int) -> Iterator[Partition]:
    """Partitions lam with the given n-core and |lam| - |core| <= max_extra."""
    for k in range(size(core), size(core) + max_extra + 1):
        if (k - size(core)) % n:
            continue
        for lam in partitions_of(k):
            if contains(lam, core) and n_core(lam, n) == core:
                yield lam
