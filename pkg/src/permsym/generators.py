"""The six geometric symmetry moves acting on patterns.

A move sends a pattern to a pattern of the same size together with a
point correspondence (``mapping[i]`` is the image point of point i).
Kinds, with their CLI spellings:

  rev1     reverse the first order
  rev2     reverse the second order
  revrev   reverse both orders
  sw       exchange the two orders (rank sequence inverts)
  t1@k     rotate the first order at cut k: the k lowest points become
           the k highest, order kept inside each block, 0 <= k <= n
  t2@k     the same rotation on the second order

Words are applied left to right; the empty word is the identity.
"""

from collections import namedtuple

from .patterns import Pattern

GeneratorId = namedtuple("GeneratorId", ["kind", "cut"])
# Image pattern plus the point correspondence of a move application.
MappedTuple = namedtuple("MappedTuple", ["pattern", "mapping"])

REV1 = GeneratorId("rev1", None)
REV2 = GeneratorId("rev2", None)
REVREV = GeneratorId("revrev", None)
SW = GeneratorId("sw", None)

PLAIN_KINDS = ("rev1", "rev2", "revrev", "sw")
TURN_KINDS = ("t1", "t2")


def turn_first(k):
    if k < 0:
        raise ValueError("cut must be nonnegative")
    return GeneratorId("t1", k)


def turn_second(k):
    if k < 0:
        raise ValueError("cut must be nonnegative")
    return GeneratorId("t2", k)


def apply(g, p):
    """Apply one move to a pattern, returning a MappedTuple."""
    n = p.n
    r = p.ranks
    if g.kind == "rev1":
        mapping = tuple(n - 1 - i for i in range(n))
        ranks = tuple(r[n - 1 - k] for k in range(n))
    elif g.kind == "rev2":
        mapping = tuple(range(n))
        ranks = tuple(n - 1 - v for v in r)
    elif g.kind == "revrev":
        mapping = tuple(n - 1 - i for i in range(n))
        ranks = tuple(n - 1 - r[n - 1 - k] for k in range(n))
    elif g.kind == "sw":
        mapping = r
        ranks = [0] * n
        for i in range(n):
            ranks[r[i]] = i
    elif g.kind == "t1":
        k = _check_cut(g, n)
        mapping = tuple((i + n - k) % n for i in range(n))
        ranks = [0] * n
        for i in range(n):
            ranks[mapping[i]] = r[i]
    elif g.kind == "t2":
        k = _check_cut(g, n)
        mapping = tuple(range(n))
        ranks = tuple((v + n - k) % n for v in r)
    else:
        raise ValueError("unknown generator kind: %r" % (g.kind,))
    return MappedTuple(Pattern(ranks), mapping)


def inverse(g, n):
    """The move undoing g on patterns of size n."""
    if g.kind in PLAIN_KINDS:
        return g
    if g.kind in TURN_KINDS:
        k = _check_cut(g, n)
        return GeneratorId(g.kind, n - k)
    raise ValueError("unknown generator kind: %r" % (g.kind,))


def apply_word(word, p):
    """Apply a list of moves left to right; composes the correspondences."""
    mapping = tuple(range(p.n))
    current = p
    for g in word:
        step = apply(g, current)
        current = step.pattern
        mapping = tuple(step.mapping[m] for m in mapping)
    return MappedTuple(current, mapping)


def generator_to_text(g):
    if g.kind in PLAIN_KINDS:
        return g.kind
    return "%s@%d" % (g.kind, g.cut)


def word_to_text(word):
    return ",".join(generator_to_text(g) for g in word)


def generator_from_text(text):
    """Parse one move name, e.g. "sw" or "t1@2"."""
    text = text.strip()
    if text in PLAIN_KINDS:
        return GeneratorId(text, None)
    if "@" in text:
        kind, _, cut = text.partition("@")
        if kind in TURN_KINDS:
            try:
                k = int(cut)
            except ValueError:
                k = -1
            if k >= 0:
                return GeneratorId(kind, k)
    raise ValueError("unknown generator: %r" % (text,))


def word_from_text(text):
    """Parse a comma-separated word, e.g. "sw,rev2,t1@2"; "" is the identity."""
    text = text.strip()
    if not text:
        return []
    return [generator_from_text(part) for part in text.split(",")]


def _check_cut(g, n):
    if g.cut is None or not 0 <= g.cut <= n:
        raise ValueError("turn cut %r invalid for size %d" % (g.cut, n))
    return g.cut
