"""Closure-rule engine over the ten basic symmetry letters.

Letters name the basic symmetry families:

  a  reverse the second order          b  turn the second order
  c  reverse the first order           d  turn the first order
  e  reverse both orders               f  exchange the orders
  g  exchange composed with e          h  the order-4 exchange rotation
  i  arbitrary second-order scramble (first order kept)
  j  arbitrary first-order scramble (second order kept)

A set of letters is closed when no rule below adds anything.  Closing
all 1024 subsets yields a fixed 39-element lattice; each element is
labelled by its smallest generating subset.
"""

from collections import namedtuple
from functools import lru_cache
from itertools import combinations

from .behaviors import generated_subgroup

LETTERS = "abcdefghij"
FULL = frozenset(LETTERS)

# Letters realized by a single order-exchanging or order-reversing map.
BEHAVIOR_LETTERS = {
    "a": "id/rev",
    "c": "rev/id",
    "e": "rev/rev",
    "f": "sw",
    "g": "sw.rev/rev",
    "h": "sw.id/rev",
}
SWAP_LETTERS = frozenset("fgh")
TURN_LETTERS = frozenset("bd")

ClosedSet = namedtuple("ClosedSet", ["members", "name"])


def _rule_turn_pairing(members):
    # An order exchange conjugates one turn family into the other.
    if members & SWAP_LETTERS and members & TURN_LETTERS:
        return TURN_LETTERS - members
    return frozenset()


def _rule_rotation_reversal(members):
    # The order-4 rotation squares to the double reversal.
    if "h" in members:
        return frozenset("e") - members
    return frozenset()


def _rule_behavior_subgroup(members):
    # Behavior letters close under the subgroup their behaviors generate.
    present = {BEHAVIOR_LETTERS[x] for x in members if x in BEHAVIOR_LETTERS}
    if not present:
        return frozenset()
    subgroup = generated_subgroup(present)
    forced = {x for x, name in BEHAVIOR_LETTERS.items() if name in subgroup}
    return frozenset(forced) - members


def _rule_order_absorption(members):
    # A full one-order scramble plus any move not fixing that order is
    # already the full symmetric group.
    if "i" in members and members - {"i", "c", "d"}:
        return FULL - members
    if "j" in members and members - {"j", "a", "b"}:
        return FULL - members
    return frozenset()


RULES = (
    ("turn-pairing", _rule_turn_pairing),
    ("rotation-reversal", _rule_rotation_reversal),
    ("behavior-subgroup", _rule_behavior_subgroup),
    ("order-absorption", _rule_order_absorption),
)


def _check_letters(s):
    bad = set(s) - set(LETTERS)
    if bad:
        raise ValueError("unknown letters: %s" % ",".join(sorted(bad)))
    return frozenset(s)


def closure_trace(s):
    """Close a letter set, recording (rule name, letters added) steps."""
    members = set(_check_letters(s))
    trace = []
    changed = True
    while changed:
        changed = False
        for name, rule in RULES:
            added = rule(frozenset(members))
            if added:
                trace.append((name, "".join(sorted(added))))
                members.update(added)
                changed = True
                break
    return frozenset(members), trace


def closure(s):
    return _closure_cached(_check_letters(s))


@lru_cache(maxsize=None)
def _closure_cached(s):
    return closure_trace(s)[0]


@lru_cache(maxsize=1)
def _all_closed():
    seen = {}
    for k in range(len(LETTERS) + 1):
        for combo in combinations(LETTERS, k):
            c = _closure_cached(frozenset(combo))
            seen.setdefault(_bitmask(c), c)
    return tuple(seen[m] for m in sorted(seen))


def _bitmask(members):
    return sum(1 << LETTERS.index(x) for x in members)


def minimal_label(members):
    """Smallest generating subset, ties broken alphabetically."""
    members = _check_letters(members)
    if closure(members) != members:
        raise ValueError("not a closed set: %r" % (sorted(members),))
    if not members:
        return "bottom"
    if members == FULL:
        return "sym"
    base = sorted(members)
    for k in range(1, len(base) + 1):
        for combo in combinations(base, k):
            if closure(frozenset(combo)) == members:
                return "".join(combo)
    raise AssertionError("unreachable: members generate themselves")


def enumerate_lattice():
    """All closed sets, ordered by member bitmask, named; must number 39."""
    closed = _all_closed()
    if len(closed) != 39:
        raise RuntimeError(
            "expected 39 closed sets, found %d: %s"
            % (len(closed), sorted("".join(sorted(c)) for c in closed)))
    return [ClosedSet(c, minimal_label(c)) for c in closed]


def by_label():
    """Label -> ClosedSet for all 39 lattice elements."""
    return {x.name: x for x in enumerate_lattice()}


def find(label):
    table = by_label()
    if label not in table:
        raise ValueError("unknown group label: %r" % (label,))
    return table[label]


def join(x, y):
    members = closure(x.members | y.members)
    return ClosedSet(members, minimal_label(members))


def meet(x, y):
    members = x.members & y.members
    return ClosedSet(members, minimal_label(members))


def hasse():
    """Covering edges (lower name, upper name) of the 39-element order."""
    elements = enumerate_lattice()
    edges = []
    for low in elements:
        for high in elements:
            if not low.members < high.members:
                continue
            strict_between = any(
                low.members < mid.members < high.members for mid in elements)
            if not strict_between:
                edges.append((low.name, high.name))
    order = {x.name: _bitmask(x.members) for x in elements}
    edges.sort(key=lambda e: (order[e[0]], order[e[1]]))
    return edges


def export_dot():
    """Hasse diagram as deterministic DOT text, bottom drawn lowest."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for x in enumerate_lattice():
        lines.append('  "%s";' % x.name)
    for low, high in hasse():
        lines.append('  "%s" -> "%s";' % (low, high))
    lines.append("}")
    return "\n".join(lines) + "\n"
