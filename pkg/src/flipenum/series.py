"""Truncated formal power series in up to three variables with exact integer coefficients.

A series is stored sparsely as a map from exponent triples ``(i, j, k)``
(degrees in x, y, z) to nonzero Python ints.  Truncation is by x-degree
only: every stored term has ``i <= order``.  All series in this package
also satisfy ``j <= i`` and ``k <= i``; that is checked on construction,
so arithmetic that would step outside it fails loudly.
"""

from __future__ import annotations

from collections import defaultdict
from types import MappingProxyType
from typing import Iterator, Mapping

from flipenum.errors import IntegrityError, UsageError

Exponent = tuple[int, int, int]

_DEFAULT_NAMES = ("x", "y", "z")


def _pad(key) -> Exponent:
    if isinstance(key, int):
        return (key, 0, 0)
    key = tuple(key)
    if not 1 <= len(key) <= 3:
        raise UsageError(f"exponent {key!r} must have 1 to 3 entries")
    return key + (0,) * (3 - len(key))  # type: ignore[return-value]


class MultiSeries:
    """Immutable truncated series.

    ``names`` labels the variable slots (x-slot first); it only matters to
    :func:`flipenum.gf_solvers.specialize` and is ignored by equality.
    """

    __slots__ = ("_coeffs", "order", "nvars", "names", "_hash")

    def __init__(
        self,
        coeffs: Mapping | None = None,
        order: int = 0,
        nvars: int = 1,
        names: tuple[str, ...] | None = None,
    ):
        if order < 0:
            raise UsageError(f"order must be >= 0, got {order}")
        if nvars not in (1, 2, 3):
            raise UsageError(f"nvars must be 1, 2 or 3, got {nvars}")
        if names is None:
            names = _DEFAULT_NAMES[:nvars]
        if len(names) != nvars:
            raise UsageError(f"{len(names)} names given for {nvars} variables")
        store: dict[Exponent, int] = {}
        for key, value in (coeffs or {}).items():
            i, j, k = _pad(key)
            if i > order or value == 0:
                continue
            if i < 0 or j < 0 or k < 0:
                raise UsageError(f"negative exponent {(i, j, k)}")
            if (nvars < 2 and j) or (nvars < 3 and k):
                raise UsageError(f"exponent {(i, j, k)} uses a variable beyond nvars={nvars}")
            if j > i or k > i:
                raise UsageError(f"exponent {(i, j, k)} violates y,z-degree <= x-degree")
            store[(i, j, k)] = store.get((i, j, k), 0) + int(value)
        self._coeffs = {e: c for e, c in store.items() if c}
        self.order = order
        self.nvars = nvars
        self.names = tuple(names)
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, value: int, order: int, nvars: int = 1, names=None) -> MultiSeries:
        return cls({(0, 0, 0): value}, order, nvars, names)

    @classmethod
    def monomial(cls, i: int, j: int = 0, k: int = 0, *, order: int, nvars: int = 1,
                 coeff: int = 1) -> MultiSeries:
        return cls({(i, j, k): coeff}, order, nvars)

    @classmethod
    def from_sequence(cls, values, order: int | None = None) -> MultiSeries:
        """Univariate series whose x^n coefficient is ``values[n]``."""
        values = list(values)
        if order is None:
            order = max(len(values) - 1, 0)
        return cls({(n, 0, 0): v for n, v in enumerate(values)}, order, 1)

    def _like(self, coeffs: Mapping[Exponent, int]) -> MultiSeries:
        return MultiSeries(coeffs, self.order, self.nvars, self.names)

    # -- inspection -----------------------------------------------------------

    @property
    def coeffs(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, key) -> int:
        i, j, k = _pad(key)
        return coefficient(self, i, j, k)

    def terms(self) -> Iterator[tuple[Exponent, int]]:
        """Nonzero terms in graded-lexicographic exponent order."""
        for e in sorted(self._coeffs, key=lambda e: (sum(e), e)):
            yield e, self._coeffs[e]

    def to_list(self) -> list[int]:
        """Coefficients of x^0..x^order with y and z summed out; univariate view."""
        out = [0] * (self.order + 1)
        for (i, _, _), c in self._coeffs.items():
            out[i] += c
        return out

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({(0, 0, 0): other} if other else {})
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._coeffs:
            body = "0"
        else:
            parts = []
            for (i, j, k), c in self.terms():
                mono = "".join(
                    f"{n}^{p}" if p > 1 else n
                    for n, p in zip(_DEFAULT_NAMES, (i, j, k))
                    if p
                )
                if not mono:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
            body = " + ".join(parts).replace("+ -", "- ")
        return f"MultiSeries({body} + O(x^{self.order + 1}))"

    # -- operators ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiSeries.constant(other, self.order, self.nvars)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> MultiSeries:
        return self._like({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiSeries.constant(other, self.order, self.nvars)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__


def _check_compatible(a: MultiSeries, b: MultiSeries) -> None:
    if a.order != b.order:
        raise UsageError(f"order mismatch: {a.order} vs {b.order}")
    if a.nvars != b.nvars:
        raise UsageError(f"nvars mismatch: {a.nvars} vs {b.nvars}")


def add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    _check_compatible(a, b)
    out = dict(a._coeffs)
    for e, c in b._coeffs.items():
        out[e] = out.get(e, 0) + c
    return a._like(out)


def mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    """Cauchy product, discarding terms of x-degree above the common order."""
    _check_compatible(a, b)
    order = a.order
    by_degree: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for (i, j, k), c in b._coeffs.items():
        by_degree[i].append((j, k, c))
    out: dict[Exponent, int] = defaultdict(int)
    for (i1, j1, k1), c1 in a._coeffs.items():
        for i2 in range(order - i1 + 1):
            row = by_degree.get(i2)
            if not row:
                continue
            i = i1 + i2
            for j2, k2, c2 in row:
                out[(i, j1 + j2, k1 + k2)] += c1 * c2
    return a._like(out)


def halve(a: MultiSeries) -> MultiSeries:
    """Divide every coefficient by two; an odd coefficient is an integrity failure."""
    out = {}
    for e, c in a._coeffs.items():
        if c & 1:
            raise IntegrityError(f"cannot halve odd coefficient {c} at exponent {e}")
        out[e] = c >> 1
    return a._like(out)


def substitute_powers(a: MultiSeries, px: int, py: int = 1, pz: int = 1) -> MultiSeries:
    """a(x^px, y^py, z^pz), truncated at a's order."""
    return a._like(
        {(px * i, py * j, pz * k): c for (i, j, k), c in a._coeffs.items() if px * i <= a.order}
    )


def substitute_squares(a: MultiSeries) -> MultiSeries:
    """a(x^2, y^2, z^2), truncated at a's order."""
    return substitute_powers(a, 2, 2, 2)


def coefficient(a: MultiSeries, i: int, j: int = 0, k: int = 0) -> int:
    if i > a.order:
        raise UsageError(f"x-degree {i} exceeds truncation order {a.order}; coefficient unknown")
    return a._coeffs.get((i, j, k), 0)


def scale_by_monomial(a: MultiSeries, i: int, j: int = 0, k: int = 0) -> MultiSeries:
    """Multiply by x^i y^j z^k, dropping terms beyond the order."""
    return a._like({(i + e0, j + e1, k + e2): c for (e0, e1, e2), c in a._coeffs.items()})
