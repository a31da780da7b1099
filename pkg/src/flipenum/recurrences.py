"""Exact counting recurrences, evaluated bottom-up.

Five families are provided:

``catalan``     C_n, ordered binary trees with n nodes
``wedderburn``  B_n, flip-equivalence classes of n-node binary trees
``k2``          K[n, l], classes of n nodes with l non-isomorphic sibling pairs
``bcolor``      B[n, k], 2-colored classes with n nodes, k of them black
``k3``          K[n, l, c], 2-colored classes by nodes, sibling count, black count

Every division by two is checked to be exact; an odd value raises
:class:`IntegrityError` naming the cell being filled.  Tables are cached per
kind and extended in place when a larger ``n`` is requested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from flipenum.errors import IntegrityError, UsageError

KINDS = ("catalan", "wedderburn", "k2", "bcolor", "k3")

#: default largest n per kind; pass ``force=True`` to go beyond
DEFAULT_CAPS = {"catalan": 200, "wedderburn": 200, "k2": 100, "bcolor": 100, "k3": 60}


def _half(value: int, where) -> int:
    if value & 1:
        raise IntegrityError(f"odd value {value} halved while computing {where}")
    return value >> 1


def _is_mersenne(n: int) -> bool:
    """True iff n == 2**r - 1 for some r >= 0."""
    return n >= 0 and (n + 1) & n == 0


@dataclass
class CountTable:
    """Filled cells of one recurrence family.

    ``entries`` maps index tuples to counts; only cells inside the region of
    definition are stored and every other index reads as zero.
    """

    kind: str
    entries: dict = field(default_factory=dict)
    nmax: int = -1
    _work: dict = field(default_factory=dict, repr=False)

    def __getitem__(self, index) -> int:
        if not isinstance(index, tuple):
            index = (index,)
        if index[0] > self.nmax:
            raise UsageError(f"{self.kind} table only filled to n={self.nmax}, asked {index}")
        return self.entries.get(index, 0)

    def row(self, n: int, c: int | None = None) -> list[int]:
        """Values for fixed n (and fixed c for k3), indexed by the next coordinate."""
        if self.kind in ("catalan", "wedderburn"):
            raise UsageError(f"{self.kind} is one-dimensional")
        if self.kind == "k3":
            return [self[n, l, c] for l in range(n + 1)]
        return [self[n, j] for j in range(n + 1)]


# -- one-dimensional --------------------------------------------------------


def _extend_catalan(t: CountTable, nmax: int) -> None:
    c = t.entries
    if t.nmax < 0:
        c[(0,)] = 1
        t.nmax = 0
    for n in range(t.nmax + 1, nmax + 1):
        c[(n,)] = sum(c[(n - 1 - k,)] * c[(k,)] for k in range(n))
        t.nmax = n


def _extend_wedderburn(t: CountTable, nmax: int) -> None:
    b = t.entries
    if t.nmax < 0:
        b[(0,)] = b[(1,)] = 1
        t.nmax = 1
    for N in range(t.nmax + 1, nmax + 1):
        h = N // 2
        if N % 2 == 0:
            total = sum(b[(N - 1 - k,)] * b[(k,)] for k in range(N))
        else:
            total = sum(b[(N - 1 - k,)] * b[(k,)] for k in range(N)) + b[(h,)]
        b[(N,)] = _half(total, f"B_{N}")
        t.nmax = N


# -- K[n, l] ----------------------------------------------------------------


def _k2_base(n: int, l: int) -> int | None:
    """Base-case value of K[n, l], or None when the recurrence applies."""
    if n < 0 or l < 0:
        return 0
    if l == 0:
        return 1 if _is_mersenne(n) else 0
    if l >= n:
        return 0
    if l == n - 1 and n > 1:
        return 1
    return None


def _k2_cell(K, n: int, l: int, bounded: bool) -> int:
    def get(a, b):
        return K.get((a, b), 0)

    N = n
    if N % 2 == 0:
        m = N // 2
        total = 0
        for k in range(2 * m):
            lo, hi = (max(0, l + k - 2 * m), min(l - 1, k)) if bounded else (0, l - 1)
            for v in range(lo, hi + 1):
                total += get(k, v) * get(2 * m - 1 - k, l - 1 - v)
        return _half(total, f"K[{n},{l}]")
    m = (N - 1) // 2
    if l % 2 == 0:
        h = l // 2
        total = 0
        for k in range(2 * m + 1):
            lo, hi = (max(0, k + 2 * h - 2 * m - 1), min(2 * h - 1, k)) if bounded else (0, 2 * h - 1)
            for v in range(lo, hi + 1):
                total += get(k, v) * get(2 * m - k, 2 * h - 1 - v)
        return get(m, h) + _half(total, f"K[{n},{l}]")
    h = (l - 1) // 2
    total = -get(m, h)
    for k in range(2 * m + 1):
        lo, hi = (max(0, k + 2 * h - 2 * m), min(2 * h, k)) if bounded else (0, 2 * h)
        for v in range(lo, hi + 1):
            total += get(k, v) * get(2 * m - k, 2 * h - v)
    return _half(total, f"K[{n},{l}]")


def _extend_k2(t: CountTable, nmax: int, bounded: bool = True) -> None:
    K = t.entries
    for n in range(t.nmax + 1, nmax + 1):
        for l in range(n + 1):
            v = _k2_base(n, l)
            if v is None:
                v = _k2_cell(K, n, l, bounded)
            if v:
                K[(n, l)] = v
        t.nmax = n


# -- B[n, k] ----------------------------------------------------------------


def _extend_bcolor(t: CountTable, nmax: int) -> None:
    B = t.entries
    wed = table("wedderburn", max(nmax, 1), force=True)

    def get(a, b):
        return B.get((a, b), 0)

    for N in range(t.nmax + 1, nmax + 1):
        if N <= 1:
            B[(N, 0)] = 1
            if N == 1:
                B[(1, 1)] = 1
            t.nmax = N
            continue
        B[(N, 0)] = wed[N]
        for k in range(1, N + 1):
            if N % 2 == 0:
                # children sizes differ, so no isomorphic sibling pair arises
                black = white = 0
                for l in range(N):
                    for m in range(max(0, l + k - N), min(l, k - 1) + 1):
                        black += get(l, m) * get(N - 1 - l, k - 1 - m)
                    for m in range(max(0, l + k + 1 - N), min(l, k) + 1):
                        white += get(l, m) * get(N - 1 - l, k - m)
                value = _half(black, f"B[{N},{k}] black root") + _half(white, f"B[{N},{k}] white root")
            else:
                n = (N - 1) // 2
                black = white = 0
                for l in range(2 * n + 1):
                    for m in range(max(0, l + k - 1 - 2 * n), min(l, k - 1) + 1):
                        black += get(l, m) * get(2 * n - l, k - 1 - m)
                    for m in range(max(0, l + k - 2 * n), min(l, k) + 1):
                        white += get(l, m) * get(2 * n - l, k - m)
                # the isomorphic-sibling correction goes to whichever root colour
                # leaves an even number of black nodes for the two children
                if k % 2 == 0:
                    white += get(n, k // 2)
                else:
                    black += get(n, (k - 1) // 2)
                value = _half(black, f"B[{N},{k}] black root") + _half(white, f"B[{N},{k}] white root")
            if value:
                B[(N, k)] = value
        t.nmax = N


# -- K[n, l, c] -------------------------------------------------------------


def _k3_base(n: int, l: int, c: int) -> int | None:
    if n == 0 and l == 0 and c == 0:
        return 1
    if (l >= n > 0) or l < 0 or c < 0 or n < 0 or c > n:
        return 0
    if n == 0:
        return 0
    if l == n - 1:
        return comb(n, c)
    if l == 0:
        return 1 if _is_mersenne(n) else 0
    return None


def _extend_k3(t: CountTable, nmax: int) -> None:
    K = t.entries
    # pair[(s, v, m)] = sum over ordered child pairs of total size s, total
    # sibling count v and total black count m; the recurrence sums this at
    # s = n - 1, v = l - 1 and m = c - root colour.
    pair = t._work.setdefault("pair", {})
    by_n = t._work.setdefault("by_n", {})

    for N in range(t.nmax + 1, nmax + 1):
        s = N - 1
        if s >= 0:
            acc: dict = {}
            for k in range(s + 1):
                for (v1, m1), a in by_n.get(k, {}).items():
                    for (v2, m2), b in by_n.get(s - k, {}).items():
                        key = (v1 + v2, m1 + m2)
                        acc[key] = acc.get(key, 0) + a * b
            pair[s] = acc
        cells = {}
        n, p = divmod(N, 2)
        for l in range(N + 1):
            ell, q = divmod(l, 2)
            for c in range(N + 1):
                v = _k3_base(N, l, c)
                if v is None:
                    cc = c // 2
                    row = pair.get(s, {})
                    total = row.get((l - 1, c), 0) + row.get((l - 1, c - 1), 0)
                    if p:
                        inner = K.get((n, ell, cc), 0)
                        # +K when l is even, -K/2 when l is odd
                        total += 2 * inner if q == 0 else -inner
                    v = _half(total, f"K[{N},{l},{c}]")
                if v:
                    K[(N, l, c)] = v
                    cells[(l, c)] = v
        by_n[N] = cells
        t.nmax = N


# -- public API -------------------------------------------------------------

_TABLES: dict[str, CountTable] = {}
_EXTEND = {
    "catalan": _extend_catalan,
    "wedderburn": _extend_wedderburn,
    "k2": _extend_k2,
    "bcolor": _extend_bcolor,
    "k3": _extend_k3,
}


def table(kind: str, nmax: int, *, force: bool = False) -> CountTable:
    """The cached table for ``kind``, filled at least through ``nmax``."""
    if kind not in _EXTEND:
        raise UsageError(f"unknown table kind {kind!r}; expected one of {KINDS}")
    if nmax < 0:
        raise UsageError(f"nmax must be >= 0, got {nmax}")
    if nmax > DEFAULT_CAPS[kind] and not force:
        raise UsageError(f"nmax={nmax} exceeds the {kind} cap {DEFAULT_CAPS[kind]}; use force")
    t = _TABLES.get(kind)
    if t is None:
        t = _TABLES[kind] = CountTable(kind)
    if t.nmax < nmax:
        _EXTEND[kind](t, nmax)
    return t


def k2_table(nmax: int, *, bounded: bool = True) -> CountTable:
    """A fresh K[n, l] table using the bounded or the plain summation ranges."""
    t = CountTable("k2")
    _extend_k2(t, nmax, bounded=bounded)
    return t


def catalan(n: int) -> int:
    if n < 0:
        raise UsageError(f"catalan index must be >= 0, got {n}")
    return table("catalan", n, force=True)[n]


def wedderburn(n: int) -> int:
    if n < 0:
        raise UsageError(f"wedderburn index must be >= 0, got {n}")
    return table("wedderburn", n, force=True)[n]


def k2(n: int, l: int) -> int:
    if n < 0:
        return 0
    return table("k2", n, force=True)[n, l]


def bcolor(n: int, k: int) -> int:
    if n < 0:
        return 0
    return table("bcolor", n, force=True)[n, k]


def k3(n: int, l: int, c: int) -> int:
    if n < 0:
        return 0
    return table("k3", n, force=True)[n, l, c]


def catalan_closed_form(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def clear_caches() -> None:
    """Drop all cached tables (used to time cold builds)."""
    _TABLES.clear()
