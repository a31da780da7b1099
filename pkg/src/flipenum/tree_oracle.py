"""Brute-force ground truth: enumerate ordered (optionally 2-colored) binary trees
and group them into flip-equivalence classes.

Nothing here uses the counting recurrences.  Classes are identified by a
canonical code built from the trees themselves; the census then tallies
classes by node count, non-isomorphic sibling count and black-node count.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from flipenum.errors import IntegrityError, UsageError

#: default largest n enumerated per colour count
ENUMERATION_CAPS = {1: 12, 2: 9}


@dataclass(frozen=True, slots=True)
class ColoredTree:
    """Ordered binary tree node; ``None`` stands for the empty tree."""

    left: Optional["ColoredTree"] = None
    right: Optional["ColoredTree"] = None
    color: int = 0

    def __post_init__(self):
        if self.color not in (0, 1):
            raise UsageError(f"color must be 0 or 1, got {self.color}")


Tree = Optional[ColoredTree]


def size(t: Tree) -> int:
    return 0 if t is None else 1 + size(t.left) + size(t.right)


def black_count(t: Tree) -> int:
    return 0 if t is None else t.color + black_count(t.left) + black_count(t.right)


def mirror(t: Tree) -> Tree:
    if t is None:
        return None
    return ColoredTree(mirror(t.right), mirror(t.left), t.color)


def _check_args(n: int, colors: int, cap: int | None) -> None:
    if colors not in (1, 2):
        raise UsageError(f"colors must be 1 or 2, got {colors}")
    if n < 0:
        raise UsageError(f"n must be >= 0, got {n}")
    limit = ENUMERATION_CAPS[colors] if cap is None else cap
    if n > limit:
        raise UsageError(f"n={n} exceeds the enumeration cap {limit} for colors={colors}")


@lru_cache(maxsize=None)
def _trees_of_size(n: int, colors: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        lefts = _trees_of_size(k, colors)
        rights = _trees_of_size(n - 1 - k, colors)
        for color in range(colors):
            for left in lefts:
                for right in rights:
                    out.append(ColoredTree(left, right, color))
    return tuple(out)


def enumerate_trees(n: int, colors: int = 1, *, cap: int | None = None) -> Iterator[Tree]:
    """Yield every ordered binary tree with ``n`` nodes exactly once.

    With ``colors=2`` every node is independently white (0) or black (1), so
    ``catalan(n) * 2**n`` trees come out.  Order is deterministic: left
    subtree size ascending, then root colour, then left and right subtrees
    in their own enumeration order.
    """
    _check_args(n, colors, cap)
    if n == 0:
        yield None
        return
    # the top level is generated lazily so only subtrees of size < n are cached
    for k in range(n):
        lefts = _trees_of_size(k, colors)
        rights = _trees_of_size(n - 1 - k, colors)
        for color in range(colors):
            for left in lefts:
                for right in rights:
                    yield ColoredTree(left, right, color)


def two_color_iso(a: Tree, b: Tree) -> bool:
    """Flip-equivalence with matching node colours, by direct recursion."""
    if a is None and b is None:
        return True
    if a is None or b is None:
        return False
    if a.color != b.color:
        return False
    if two_color_iso(a.right, b.right) and two_color_iso(a.left, b.left):
        return True
    return two_color_iso(a.right, b.left) and two_color_iso(a.left, b.right)


def canonical_form(t: Tree) -> bytes:
    """Code that is equal for two trees iff they are flip-equivalent.

    A node encodes as its colour byte followed by its two child codes in
    sorted order, each prefixed with a 4-byte length.
    """
    if t is None:
        return b""
    a, b = canonical_form(t.left), canonical_form(t.right)
    if b < a:
        a, b = b, a
    return bytes((t.color,)) + len(a).to_bytes(4, "big") + a + len(b).to_bytes(4, "big") + b


def noniso_sibling_count(t: Tree) -> int:
    """Number of nodes whose two (possibly empty) child subtrees are not isomorphic."""
    if t is None:
        return 0
    here = 0 if two_color_iso(t.left, t.right) else 1
    return here + noniso_sibling_count(t.left) + noniso_sibling_count(t.right)


@dataclass
class CensusRow:
    class_count: int = 0
    ordered_tree_count: int = 0


@dataclass
class ClassCensus:
    """Equivalence classes of ``n``-node trees tallied by (l, c)."""

    n: int
    colors: int
    rows: dict = field(default_factory=dict)
    class_sizes: dict = field(default_factory=dict, repr=False)

    def count(self, l: int, c: int = 0) -> int:
        row = self.rows.get((l, c))
        return row.class_count if row else 0

    def l_profile(self, c: int = 0) -> list[int]:
        return [self.count(l, c) for l in range(self.n + 1)]

    def total_classes(self) -> int:
        return sum(r.class_count for r in self.rows.values())

    def total_trees(self) -> int:
        return sum(r.ordered_tree_count for r in self.rows.values())


class _Interner:
    """Assigns small integer ids to canonical node codes (color, min child, max child)."""

    def __init__(self):
        self.ids: dict = {None: 0}

    def node(self, color: int, a: int, b: int) -> int:
        key = (color, a, b) if a <= b else (color, b, a)
        got = self.ids.get(key)
        if got is None:
            got = self.ids[key] = len(self.ids)
        return got


def census(n: int, colors: int = 1, *, cap: int | None = None) -> ClassCensus:
    """Group every ordered tree with ``n`` nodes into flip-equivalence classes.

    Trees are enumerated exhaustively but represented by records
    ``(class id, l, c)`` built bottom-up from their children's records, so
    each tree costs constant work.  Class ids come from interning the same
    sorted-children key that :func:`canonical_form` encodes.  Each tree's
    ``l`` is computed from its own children, so checking that ``l`` is
    constant within a class (and that the class has exactly ``2**l``
    members) is a genuine test, not a tautology.
    """
    _check_args(n, colors, cap)
    interner = _Interner()
    records: list[list[tuple[int, int, int]]] = [[(0, 0, 0)]]
    for s in range(1, n):
        level = []
        for k in range(s):
            R = records[s - 1 - k]
            for color in range(colors):
                for ia, la, ca in records[k]:
                    for ib, lb, cb in R:
                        level.append(
                            (interner.node(color, ia, ib), la + lb + (ia != ib), ca + cb + color)
                        )
        records.append(level)

    members: dict[int, int] = defaultdict(int)
    props: dict[int, tuple[int, int]] = {}
    if n == 0:
        members[0] = 1
        props[0] = (0, 0)
    for k in range(n):
        R = records[n - 1 - k]
        for color in range(colors):
            for ia, la, ca in records[k]:
                for ib, lb, cb in R:
                    cid = interner.node(color, ia, ib)
                    lc = (la + lb + (ia != ib), ca + cb + color)
                    seen = props.setdefault(cid, lc)
                    if seen != lc:
                        raise IntegrityError(
                            f"class {cid} of size {n} has members with (l, c) {seen} and {lc}"
                        )
                    members[cid] += 1

    result = ClassCensus(n, colors)
    for cid, card in members.items():
        l, c = props[cid]
        if card != 1 << l:
            raise IntegrityError(f"class {cid} (n={n}, l={l}, c={c}) has {card} members, expected 2**{l}")
        row = result.rows.setdefault((l, c), CensusRow())
        row.class_count += 1
        row.ordered_tree_count += card
        result.class_sizes[cid] = (l, c, card)
    return result


def census_from_trees(n: int, colors: int = 1, *, cap: int | None = None) -> ClassCensus:
    """Slow census over explicit :class:`ColoredTree` objects and byte codes.

    Used to cross-check :func:`census` at small sizes.
    """
    groups: dict[bytes, list] = defaultdict(list)
    for t in enumerate_trees(n, colors, cap=cap):
        groups[canonical_form(t)].append(t)
    result = ClassCensus(n, colors)
    for code, trees in groups.items():
        lcs = {(noniso_sibling_count(t), black_count(t)) for t in trees}
        if len(lcs) != 1:
            raise IntegrityError(f"class {code!r} has mixed (l, c) values {sorted(lcs)}")
        ((l, c),) = lcs
        if len(trees) != 1 << l:
            raise IntegrityError(f"class {code!r} has {len(trees)} members, expected 2**{l}")
        row = result.rows.setdefault((l, c), CensusRow())
        row.class_count += 1
        row.ordered_tree_count += len(trees)
        result.class_sizes[code] = (l, c, len(trees))
    return result


def clear_caches() -> None:
    _trees_of_size.cache_clear()
