"""Framed chord diagrams: representation, canonical form, enumeration."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


class DiagramFormatError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FramedChordDiagram:
    """Chord endpoints read along the oriented circle, plus chord framings.

    ``word`` lists chord labels 1..n, each exactly twice. ``framing[k - 1]``
    is the framing of chord ``k``: 0 for an oriented chord, 1 for a
    disorienting one. Diagrams are equal as circle diagrams iff their
    :func:`canonicalize` results are equal; only rotations are quotiented.
    """

    word: tuple
    framing: tuple

    def __post_init__(self):
        n = len(self.framing)
        if len(self.word) != 2 * n:
            raise DiagramFormatError(
                f"framing has length {n} but word has {len(self.word)} endpoints")
        counts: dict = {}
        for x in self.word:
            counts[x] = counts.get(x, 0) + 1
        if set(counts) != set(range(1, n + 1)):
            raise DiagramFormatError(f"labels must be exactly 1..{n}, got {sorted(counts)}")
        bad = [x for x, c in counts.items() if c != 2]
        if bad:
            raise DiagramFormatError(f"labels {sorted(bad)} do not occur exactly twice")
        if any(b not in (0, 1) for b in self.framing):
            raise DiagramFormatError("framing bits must be 0 or 1")

    @property
    def order(self) -> int:
        return len(self.framing)

    @property
    def code(self) -> str:
        return " ".join(map(str, self.word)) + ";" + "".join(map(str, self.framing))

    def __str__(self):
        return self.code

    @property
    def is_black(self) -> bool:
        return not any(self.framing)

    @property
    def is_white(self) -> bool:
        return all(self.framing)

    @property
    def n_disorienting(self) -> int:
        return sum(self.framing)

    def frame(self, label: int) -> int:
        return self.framing[label - 1]

    def positions(self, label: int) -> tuple:
        return tuple(i for i, x in enumerate(self.word) if x == label)

    def oriented_chords(self) -> tuple:
        return tuple(k for k in range(1, self.order + 1) if self.framing[k - 1] == 0)


EMPTY_DIAGRAM = FramedChordDiagram((), ())


def _relabel(word: Iterable, framing_of) -> tuple:
    """Renumber labels by first occurrence; ``framing_of`` maps old labels."""
    mapping: dict = {}
    new_word = []
    for x in word:
        if x not in mapping:
            mapping[x] = len(mapping) + 1
        new_word.append(mapping[x])
    new_framing = [0] * len(mapping)
    for old, new in mapping.items():
        new_framing[new - 1] = framing_of(old)
    return tuple(new_word), tuple(new_framing)


def diagram_from_word(word, framing_of) -> FramedChordDiagram:
    """Canonical diagram from an arbitrary labelled endpoint sequence.

    ``framing_of`` is a dict or callable giving each label's framing.
    """
    if isinstance(framing_of, dict):
        framing_of = framing_of.__getitem__
    w, f = _relabel(word, framing_of)
    return canonicalize(FramedChordDiagram(w, f))


def canonicalize(d: FramedChordDiagram) -> FramedChordDiagram:
    """Lexicographically least (word, framing) over all 2n rotations."""
    word = d.word
    m = len(word)
    if m == 0:
        return d
    frame = d.framing
    best = None
    for r in range(m):
        key = _relabel(word[r:] + word[:r], lambda x: frame[x - 1])
        if best is None or key < best:
            best = key
    if best == (word, frame):
        return d
    return FramedChordDiagram(*best)


def parse_diagram(text: str) -> FramedChordDiagram:
    """Parse ``"1 2 1 2;01"`` style codes; the result is canonical.

    Errors name the 1-based column of the offending character.
    """
    if text.count(";") != 1:
        raise DiagramFormatError(f"expected exactly one ';' in {text!r}")
    word_part, frame_part = text.split(";")
    word = []
    for m in re.finditer(r"\S+", word_part):
        if not m.group().isdigit():
            raise DiagramFormatError(f"non-integer label {m.group()!r} at column {m.start() + 1}")
        word.append(int(m.group()))
    offset = len(word_part) + 2
    for i, ch in enumerate(frame_part):
        if ch not in "01" and not ch.isspace():
            raise DiagramFormatError(f"framing must be a 0/1 string: {ch!r} at column {offset + i}")
    framing = tuple(int(ch) for ch in frame_part if ch in "01")
    return canonicalize(FramedChordDiagram(tuple(word), framing))


def _matchings(m: int):
    """All perfect matchings of m points, as first-occurrence labelled words."""
    word = [0] * m

    def rec(label):
        try:
            i = word.index(0)
        except ValueError:
            yield tuple(word)
            return
        word[i] = label
        for j in range(i + 1, m):
            if word[j] == 0:
                word[j] = label
                yield from rec(label + 1)
                word[j] = 0
        word[i] = 0

    yield from rec(1)


@lru_cache(maxsize=None)
def enumerate_diagrams(n: int, framed: bool = True) -> tuple:
    """All canonical order-``n`` diagrams, sorted; all-black only if not framed."""
    if n < 0:
        raise ValueError("order must be non-negative")
    seen = set()
    framings = list(itertools.product((0, 1), repeat=n)) if framed else [(0,) * n]
    for word in _matchings(2 * n):
        for framing in framings:
            seen.add(canonicalize(FramedChordDiagram(word, framing)))
    return tuple(sorted(seen))


def _check_subset(d: FramedChordDiagram, chords) -> set:
    chords = set(chords)
    bad = [k for k in chords if not 1 <= k <= d.order]
    if bad:
        raise IndexError(f"chords {sorted(bad)} out of range 1..{d.order}")
    return chords


def subdiagram(d: FramedChordDiagram, chords) -> FramedChordDiagram:
    """Keep only the chords with labels in ``chords``."""
    keep = _check_subset(d, chords)
    return diagram_from_word([x for x in d.word if x in keep], d.frame)


def remove_chords(d: FramedChordDiagram, chords) -> FramedChordDiagram:
    """Complement of :func:`subdiagram`."""
    drop = _check_subset(d, chords)
    return diagram_from_word([x for x in d.word if x not in drop], d.frame)


def chord_subsets(chords):
    chords = tuple(chords)
    for r in range(len(chords) + 1):
        yield from itertools.combinations(chords, r)
