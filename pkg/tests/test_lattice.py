from itertools import chain, combinations

import pytest

from permsym.lattice import (
    LETTERS, FULL,
    closure, closure_trace, minimal_label, enumerate_lattice, by_label,
    find, join, meet, hasse, export_dot,
)
from lattice_expectations import EXPECTED_MEMBERS, LABELS_BY_MASK, PROPER_LABELS


def _subsets(letters):
    items = list(letters)
    return chain.from_iterable(
        combinations(items, k) for k in range(len(items) + 1))


def test_lattice_count_and_order():
    elements = enumerate_lattice()
    assert len(elements) == 39
    assert [x.name for x in elements] == LABELS_BY_MASK


def test_member_sets_frozen():
    table = by_label()
    assert set(table) == set(EXPECTED_MEMBERS)
    for label, letters in EXPECTED_MEMBERS.items():
        assert table[label].members == frozenset(letters), label


def test_proper_labels():
    assert sorted(PROPER_LABELS) == sorted(set(LABELS_BY_MASK) - {"bottom", "sym"})
    assert len(PROPER_LABELS) == 37


def test_closure_is_extensive_and_idempotent():
    for s in _subsets(LETTERS):
        c = closure(s)
        assert frozenset(s) <= c
        assert closure(c) == c


def test_closure_is_monotone():
    for t in _subsets(LETTERS):
        big = closure(t)
        for s in _subsets(t):
            assert closure(s) <= big


def test_closure_rejects_unknown_letters():
    with pytest.raises(ValueError):
        closure("ax")


TRACE_CASES = [
    ("h", "eh", [("rotation-reversal", "e")]),
    ("bf", "bdf", [("turn-pairing", "d")]),
    ("fg", "efg", [("behavior-subgroup", "e")]),
    ("ai", "abcdefghij", [("order-absorption", "bcdefghj")]),
    ("a", "a", []),
]


@pytest.mark.parametrize("start,expect,steps", TRACE_CASES)
def test_closure_traces(start, expect, steps):
    members, trace = closure_trace(start)
    assert members == frozenset(expect)
    assert trace == steps
    # replaying the trace reconstructs the closure
    rebuilt = set(start)
    for _, added in trace:
        rebuilt.update(added)
    assert frozenset(rebuilt) == members


def test_minimal_label_examples():
    assert minimal_label("") == "bottom"
    assert minimal_label(FULL) == "sym"
    assert minimal_label(frozenset("acefgh")) == "af"
    assert minimal_label(frozenset("bdeh")) == "bh"
    assert minimal_label(frozenset("abcde")) == "abcd"
    assert minimal_label(frozenset("eh")) == "h"


def test_minimal_label_rejects_open_sets():
    with pytest.raises(ValueError):
        minimal_label("bf")


def test_minimal_label_is_minimal():
    # no strictly smaller or lexically earlier subset regenerates the set
    for x in enumerate_lattice():
        if x.name in ("bottom", "sym"):
            continue
        k = len(x.name)
        for combo in combinations(sorted(x.members), k):
            label = "".join(combo)
            if label == x.name:
                break
            assert closure(combo) != x.members, (x.name, label)
        for smaller in range(1, k):
            for combo in combinations(sorted(x.members), smaller):
                assert closure(combo) != x.members, (x.name, combo)


def test_find_and_errors():
    assert find("bf").members == frozenset("bdf")
    with pytest.raises(ValueError):
        find("zz")
    with pytest.raises(ValueError):
        find("ba")  # canonical spelling is "ab"


def test_join_meet_examples():
    table = by_label()
    assert join(table["a"], table["j"]).name == "aj"
    assert join(table["b"], table["d"]).name == "bd"
    assert join(table["c"], table["i"]).name == "ci"
    assert join(table["f"], table["b"]).name == "bf"
    assert meet(table["ac"], table["e"]).name == "e"
    assert meet(table["af"], table["bh"]).name == "h"
    assert meet(table["i"], table["j"]).name == "bottom"


def test_lattice_is_closed_under_join_and_meet():
    elements = enumerate_lattice()
    names = {x.name for x in elements}
    for x in elements:
        for y in elements:
            assert join(x, y).name in names
            assert meet(x, y).name in names


def test_scramble_family_counts():
    elements = enumerate_lattice()
    with_i = [x.name for x in elements if "i" in x.members]
    with_j = [x.name for x in elements if "j" in x.members]
    assert sorted(with_i) == ["cdi", "ci", "di", "i", "sym"]
    assert sorted(with_j) == ["abj", "aj", "bj", "j", "sym"]


def test_closures_of_basic_letter_subsets():
    # closures of subsets of {a, b, c, d, i, j} hit 25 distinct sets
    hits = {closure(s) for s in _subsets("abcdij")}
    assert len(hits) == 25


def test_proper_closed_subsets_of_bf():
    target = find("bf").members
    inside = [x.name for x in enumerate_lattice()
              if x.members < target and x.members]
    assert sorted(inside) == ["b", "bd", "d", "f"]


def test_hasse_shape():
    edges = hasse()
    assert len(edges) == 86
    atoms = sorted(high for low, high in edges if low == "bottom")
    assert atoms == ["a", "b", "c", "d", "e", "f", "g", "i", "j"]
    below_top = sorted(low for low, high in edges if high == "sym")
    assert below_top == ["abf", "abj", "cdi"]


def test_hasse_edges_are_covers():
    table = by_label()
    members = [x.members for x in enumerate_lattice()]
    for low, high in hasse():
        a, b = table[low].members, table[high].members
        assert a < b
        assert not any(a < m < b for m in members)


def test_export_dot():
    text = export_dot()
    assert text == export_dot()  # deterministic
    lines = text.splitlines()
    assert lines[0] == "digraph lattice {"
    assert lines[-1] == "}"
    assert sum(1 for x in lines if "->" in x) == 86
    assert '  "bottom" -> "a";' in lines
    assert '  "abf" -> "sym";' in lines
