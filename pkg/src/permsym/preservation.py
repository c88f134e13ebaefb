"""Preservation checks: which symmetry groups keep which relations invariant.

A group preserves a relation when every element maps true tuples to true
tuples.  Each of the ten letters contributes a family of concrete moves
closed under inverses; a closed letter set preserves a relation exactly
when each member letter does, so rows of the table are computed letter
by letter and combined.  Positive cells are exhaustive checks up to a
size bound; negative cells come with a replayable witness.
"""

import csv
from collections import namedtuple
from functools import lru_cache
from importlib import resources
from itertools import permutations, product

from . import relations
from .patterns import enumerate_patterns, pattern_to_text
from .generators import (
    GeneratorId, REV1, REV2, REVREV, SW,
    turn_first, turn_second, apply_word, word_to_text,
    PLAIN_KINDS, TURN_KINDS,
)
from .lattice import LETTERS, closure, minimal_label, enumerate_lattice

DEFAULT_MAX_SIZE = 5
DEFAULT_MAX_WORD = 3
DEFAULT_WITNESS_SIZE = 6
WITNESS_NODE_BUDGET = 10 ** 7

PreservationRow = namedtuple("PreservationRow", ["label", "bits"])
RowResult = namedtuple("RowResult", ["row", "witnesses", "unconfirmed"])
TableResult = namedtuple("TableResult", ["rows", "witnesses", "unconfirmed"])
CellDiff = namedtuple("CellDiff", ["label", "relation", "golden", "computed"])
# A replayable counterexample: applying the moves left to right sends a
# true tuple to a false one.
Witness = namedtuple(
    "Witness",
    ["relation", "pattern", "points", "moves", "image_pattern", "image_points"])
Move = namedtuple("Move", ["text", "func"])

# Which generator kind realizes which single-map letter.
KIND_LETTER = {"rev2": "a", "t2": "b", "rev1": "c", "t1": "d",
               "revrev": "e", "sw": "f"}
WORD_LETTERS = "abcdefgh"
SCRAMBLE_LETTERS = "ij"


def letter_words(letter, n):
    """The generator words realizing one letter's moves at size n."""
    if letter == "a":
        return [[REV2]]
    if letter == "c":
        return [[REV1]]
    if letter == "e":
        return [[REVREV]]
    if letter == "f":
        return [[SW]]
    if letter == "g":
        return [[REVREV, SW]]
    if letter == "h":
        # The two order-4 rotations; inverses of each other.
        return [[REV2, SW], [REV1, SW]]
    if letter == "b":
        return [[turn_second(k)] for k in range(n + 1)]
    if letter == "d":
        return [[turn_first(k)] for k in range(n + 1)]
    raise ValueError("letter %r has no word moves" % (letter,))


def _scramble_apply(letter, target, p):
    """Move keeping one order and freely rewriting the other to reach target."""
    if target.n != p.n:
        raise ValueError("scramble target size mismatch")
    if letter == "i":
        return target, tuple(range(p.n))
    inv = [0] * target.n
    for idx, v in enumerate(target.ranks):
        inv[v] = idx
    return target, tuple(inv[v] for v in p.ranks)


def letter_moves(letter, n):
    """All moves of one letter at size n, deterministic order."""
    if letter in SCRAMBLE_LETTERS:
        return [
            Move("%s@%s" % (letter, pattern_to_text(q)),
                 lambda p, q=q, letter=letter: _scramble_apply(letter, q, p))
            for q in enumerate_patterns(n)
        ]
    return [
        Move(word_to_text(w), lambda p, w=w: _apply(w, p))
        for w in letter_words(letter, n)
    ]


def _apply(word, p):
    res = apply_word(word, p)
    return res.pattern, res.mapping


def letter_preserves(letter, relation, max_size=DEFAULT_MAX_SIZE):
    """True iff every move of the letter preserves the relation up to max_size."""
    if letter not in LETTERS:
        raise ValueError("unknown letter: %r" % (letter,))
    f = relations.evaluator(relation)
    ar = relations.arity(relation)
    if letter in SCRAMBLE_LETTERS:
        return _scramble_preserves(letter, f, ar, max_size)
    for n in range(ar, max_size + 1):
        pats = list(enumerate_patterns(n))
        tuples = list(permutations(range(n), ar))
        for word in letter_words(letter, n):
            for p in pats:
                image, mapping = _apply(word, p)
                pr, ir = p.ranks, image.ranks
                for t in tuples:
                    if f(pr, t) and not f(ir, tuple(mapping[x] for x in t)):
                        return False
    return True


def _scramble_preserves(letter, f, ar, max_size):
    # The scramble family identifies tuples that agree on the kept order:
    # for i that is the index tuple itself, for j the rank tuple.  The
    # relation survives iff its value is constant on each class.
    for n in range(ar, max_size + 1):
        seen = {}
        for p in enumerate_patterns(n):
            pr = p.ranks
            for t in permutations(range(n), ar):
                key = t if letter == "i" else tuple(pr[x] for x in t)
                v = f(pr, t)
                if seen.setdefault(key, v) != v:
                    return False
        # Classes do not mix across sizes.
        seen.clear()
    return True


@lru_cache(maxsize=None)
def letter_matrix(max_size=DEFAULT_MAX_SIZE):
    """(letter, relation) -> preserved, for all 10 letters and 20 relations."""
    return {
        (letter, rel): letter_preserves(letter, rel, max_size)
        for letter in LETTERS
        for rel in relations.RELATION_NAMES
    }


def normalize_generators(gens):
    """Map generator kinds or letters to the closed letter set they generate."""
    found = set()
    for g in gens:
        token = g.kind if isinstance(g, GeneratorId) else g
        if token in KIND_LETTER:
            found.add(KIND_LETTER[token])
        elif token in LETTERS:
            found.add(token)
        else:
            raise ValueError("unknown generator or letter: %r" % (token,))
    return closure(found)


def generator_preserves(g, relation, max_size=DEFAULT_MAX_SIZE, backward=False):
    """True iff the single move (all cuts, for turns) preserves the relation.

    With backward=True the implication is checked from image to source,
    i.e. preservation by the inverse map.
    """
    f = relations.evaluator(relation)
    ar = relations.arity(relation)
    if max_size < ar:
        raise ValueError("max_size %d below relation arity %d" % (max_size, ar))
    for n in range(ar, max_size + 1):
        if g.kind in TURN_KINDS:
            cuts = range(n + 1) if g.cut is None else [g.cut]
            words = [[GeneratorId(g.kind, k)] for k in cuts]
        elif g.kind in PLAIN_KINDS:
            words = [[g]]
        else:
            raise ValueError("unknown generator kind: %r" % (g.kind,))
        tuples = list(permutations(range(n), ar))
        for word in words:
            for p in enumerate_patterns(n):
                image, mapping = _apply(word, p)
                pr, ir = p.ranks, image.ranks
                for t in tuples:
                    src = f(pr, t)
                    dst = f(ir, tuple(mapping[x] for x in t))
                    bad = (dst and not src) if backward else (src and not dst)
                    if bad:
                        return False
    return True


def find_witness(members, relation, max_size=DEFAULT_WITNESS_SIZE,
                 max_word=DEFAULT_MAX_WORD):
    """Breadth-first search for a violating move word over the member letters.

    Scans word length, then pattern size, then move words, patterns and
    tuples in lexicographic order, so the first hit is reproducible.
    None when the budget is exhausted without a hit.
    """
    f = relations.evaluator(relation)
    ar = relations.arity(relation)
    letters = sorted(members)
    budget = WITNESS_NODE_BUDGET
    for depth in range(1, max_word + 1):
        for n in range(ar, max_size + 1):
            moves = []
            for letter in letters:
                moves.extend(letter_moves(letter, n))
            pats = list(enumerate_patterns(n))
            tuples = list(permutations(range(n), ar))
            for seq in product(moves, repeat=depth):
                budget -= len(pats)
                if budget < 0:
                    return None
                for p in pats:
                    current, mapping = p, tuple(range(n))
                    for move in seq:
                        current, step = move.func(current)
                        mapping = tuple(step[m] for m in mapping)
                    pr, ir = p.ranks, current.ranks
                    for t in tuples:
                        if f(pr, t):
                            it = tuple(mapping[x] for x in t)
                            if not f(ir, it):
                                return Witness(relation, p, t,
                                               tuple(m.text for m in seq),
                                               current, it)
    return None


def group_row(gens, max_size=DEFAULT_MAX_SIZE, max_word=DEFAULT_MAX_WORD,
              witness_size=DEFAULT_WITNESS_SIZE):
    """Preservation row of the closed group generated by gens, with witnesses."""
    members = normalize_generators(gens)
    matrix = letter_matrix(max_size)
    bits = tuple(
        all(matrix[(letter, rel)] for letter in members)
        for rel in relations.RELATION_NAMES)
    witnesses = {}
    unconfirmed = []
    for rel, bit in zip(relations.RELATION_NAMES, bits):
        if bit:
            continue
        w = find_witness(members, rel, witness_size, max_word)
        witnesses[rel] = w
        if w is None:
            unconfirmed.append(rel)
    row = PreservationRow(minimal_label(members), bits)
    return RowResult(row, witnesses, unconfirmed)


@lru_cache(maxsize=None)
def full_table(max_size=DEFAULT_MAX_SIZE, max_word=DEFAULT_MAX_WORD):
    """Rows for all 39 lattice elements, with witnesses for false cells."""
    rows = []
    witnesses = {}
    unconfirmed = []
    matrix = letter_matrix(max_size)
    for element in enumerate_lattice():
        bits = tuple(
            all(matrix[(letter, rel)] for letter in element.members)
            for rel in relations.RELATION_NAMES)
        rows.append(PreservationRow(element.name, bits))
        for rel, bit in zip(relations.RELATION_NAMES, bits):
            if bit:
                continue
            w = find_witness(element.members, rel, DEFAULT_WITNESS_SIZE, max_word)
            witnesses[(element.name, rel)] = w
            if w is None:
                unconfirmed.append((element.name, rel))
    return TableResult(tuple(rows), witnesses, tuple(unconfirmed))


@lru_cache(maxsize=1)
def golden_table():
    """The published 37-row table: (ordered labels, label -> bit tuple)."""
    text = resources.files("permsym.data").joinpath("golden_table.csv").read_text()
    return _parse_golden(text)


def _parse_golden(text):
    reader = csv.reader(text.strip().splitlines())
    header = next(reader)
    if tuple(header) != ("label",) + relations.RELATION_NAMES:
        raise ValueError("golden table header mismatch: %r" % (header,))
    order = []
    table = {}
    for row in reader:
        if len(row) != 21:
            raise ValueError("golden row needs 21 fields: %r" % (row,))
        label, bits = row[0], row[1:]
        if label in table:
            raise ValueError("duplicate golden label: %r" % (label,))
        if any(b not in ("0", "1") for b in bits):
            raise ValueError("golden bits must be 0/1: %r" % (row,))
        order.append(label)
        table[label] = tuple(b == "1" for b in bits)
    return tuple(order), table


def load_golden(path):
    """Golden rows from an alternative CSV file (same shape as the resource)."""
    with open(path) as fh:
        return _parse_golden(fh.read())


def diff_golden(computed, golden=None):
    """Cells where computed rows disagree with the golden table.

    Rows absent from `computed` report all 20 cells with computed=None.
    """
    order, table = golden if golden is not None else golden_table()
    by_label = {row.label: row.bits for row in computed}
    diffs = []
    for label in order:
        bits = by_label.get(label)
        for k, rel in enumerate(relations.RELATION_NAMES):
            want = table[label][k]
            got = None if bits is None else bits[k]
            if got != want:
                diffs.append(CellDiff(label, rel, want, got))
    return diffs
