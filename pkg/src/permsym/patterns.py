"""Finite patterns: a set of points carrying two linear orders.

A pattern of size n is stored as the tuple ``ranks`` of length n, a
permutation of range(n): the point with rank i in the first order has
rank ranks[i] in the second order.  Points are referenced by their
first-order rank (0-based).  The text form is 1-based, e.g. "231" for
ranks (1, 2, 0); sizes above 9 use commas ("2,10,1,...").
"""

from itertools import combinations, permutations

# The four isomorphism types of an ordered pair (x, y) of distinct points.
T1 = 1  # x below y in both orders
T2 = 2  # x below y in the first order, above in the second
T3 = 3  # reversal of T1
T4 = 4  # reversal of T2

PAIR_TYPES = (T1, T2, T3, T4)

# Swapping the two arguments of a pair swaps T1<->T3 and T2<->T4.
REVERSED_TYPE = {T1: T3, T2: T4, T3: T1, T4: T2}


class Pattern:
    """An immutable pattern, hashable and totally ordered by rank sequence."""

    __slots__ = ("ranks",)

    def __init__(self, ranks):
        ranks = tuple(ranks)
        if sorted(ranks) != list(range(len(ranks))):
            raise ValueError("ranks must be a permutation of range(n): %r" % (ranks,))
        object.__setattr__(self, "ranks", ranks)

    def __setattr__(self, name, value):
        raise AttributeError("Pattern is immutable")

    @property
    def n(self):
        return len(self.ranks)

    def __eq__(self, other):
        return isinstance(other, Pattern) and self.ranks == other.ranks

    def __hash__(self):
        return hash(self.ranks)

    def __lt__(self, other):
        return self.ranks < other.ranks

    def __repr__(self):
        return "Pattern(%r)" % (pattern_to_text(self),)


def pattern_from_text(text):
    """Parse "231" or "2,3,1" (1-based second-order ranks in first-order order)."""
    text = text.strip()
    if text == "":
        return Pattern(())
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError("bad pattern text: %r" % (text,))
    return Pattern(v - 1 for v in values)


def pattern_to_text(p):
    """Inverse of pattern_from_text; digits up to size 9, commas beyond."""
    values = [r + 1 for r in p.ranks]
    if p.n <= 9:
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def from_points(coords):
    """Build the Pattern realized by a list of (x1, x2) coordinate pairs.

    Coordinates may be any mutually comparable numbers; both coordinates
    must be pairwise distinct (the points are independent).
    """
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise ValueError("coordinates must be distinct in each order")
    order1 = sorted(range(len(coords)), key=lambda k: xs[k])
    rank2 = {k: r for r, k in enumerate(sorted(range(len(coords)), key=lambda k: ys[k]))}
    return Pattern(rank2[k] for k in order1)


def pair_type(p, i, j):
    """Type of the ordered pair (point i, point j), one of T1..T4."""
    if i == j:
        raise ValueError("pair_type needs two distinct points")
    _check_index(p, i)
    _check_index(p, j)
    if i < j:
        return T1 if p.ranks[i] < p.ranks[j] else T2
    return T3 if p.ranks[j] < p.ranks[i] else T4


def sub_pattern(p, s):
    """Pattern induced by the point set s, ranks recompressed."""
    idx = sorted(set(s))
    for i in idx:
        _check_index(p, i)
    second = sorted(p.ranks[i] for i in idx)
    rank2 = {v: r for r, v in enumerate(second)}
    return Pattern(rank2[p.ranks[i]] for i in idx)


def copies_of(host, small):
    """All index sets S (sorted tuples) with sub_pattern(host, S) == small."""
    out = []
    for s in combinations(range(host.n), small.n):
        if sub_pattern(host, s) == small:
            out.append(s)
    return out


def enumerate_patterns(n):
    """Yield all n! patterns of size n in lexicographic rank order."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    for ranks in permutations(range(n)):
        yield Pattern(ranks)


def is_diagonal(p, s):
    """True iff the points of s are pairwise straight, or pairwise twisted."""
    idx = sorted(set(s))
    for i in idx:
        _check_index(p, i)
    straight = [p.ranks[i] < p.ranks[j] for i, j in combinations(idx, 2)]
    return all(straight) or not any(straight)


def _check_index(p, i):
    if not 0 <= i < p.n:
        raise ValueError("point index %r out of range for size %d" % (i, p.n))
