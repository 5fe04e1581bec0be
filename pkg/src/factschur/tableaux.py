"""Partitions, multishapes and barred skew tableaux.

A multishape ``(lam1, ..., lamr)`` places each Young diagram strictly below and
to the left of the previous one, so diagrams share no row and no column.
Boxes are addressed ``(d, r, c)`` with the diagram index ``d`` and the local
row/column all 1-based.  Global columns are numbered left to right starting at
1; the last diagram holds the leftmost columns.

Tableau entries are stored as signed integers: ``v`` is an unbarred ``v`` and
``-v`` is a barred ``v``.  Entries are kept in *reading order*: global columns
right to left, each column top to bottom, which is the order of the unbarred
column word.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .polyring import ONE, Polynomial, yvar

Partition = tuple[int, ...]
Box = tuple[int, int, int]


class TableauError(ValueError):
    pass


# -- partitions ---------------------------------------------------------------

def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise TableauError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise TableauError(f"parts must weakly decrease: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def is_partition(vec: Sequence[int]) -> bool:
    return all(v >= 0 for v in vec) and all(a >= b for a, b in zip(vec, vec[1:]))


def padded(lam: Partition, n: int) -> tuple[int, ...]:
    if len(lam) > n:
        raise TableauError(f"{lam} has more than {n} nonzero parts")
    return tuple(lam) + (0,) * (n - len(lam))


def conjugate(lam: Partition) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > k) for k in range(lam[0]))


def partitions_of(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = total

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(total, max_part, total if max_parts is None else max_parts)


def partitions_up_to(size: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    for total in range(size + 1):
        yield from partitions_of(total, max_parts, max_part)


# -- multishapes --------------------------------------------------------------

@dataclass(frozen=True)
class MultiShape:
    diagrams: tuple[Partition, ...]
    offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)
    boxes: tuple[Box, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        diagrams = tuple(as_partition(lam) for lam in self.diagrams)
        object.__setattr__(self, "diagrams", diagrams)
        widths = [lam[0] if lam else 0 for lam in diagrams]
        offsets = tuple(sum(widths[d + 1:]) for d in range(len(diagrams)))
        object.__setattr__(self, "offsets", offsets)
        boxes = []
        for d, lam in enumerate(diagrams, start=1):
            conj = conjugate(lam)
            for c in range(len(conj), 0, -1):
                boxes.extend((d, r, c) for r in range(1, conj[c - 1] + 1))
        object.__setattr__(self, "boxes", tuple(boxes))

    @classmethod
    def of(cls, *diagrams: Iterable[int]) -> MultiShape:
        return cls(tuple(tuple(lam) for lam in diagrams))

    @property
    def r(self) -> int:
        return len(self.diagrams)

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def num_columns(self) -> int:
        return sum(lam[0] for lam in self.diagrams if lam)

    def global_column(self, box: Box) -> int:
        d, _, c = box
        return self.offsets[d - 1] + c

    def max_rows(self) -> int:
        return max((len(lam) for lam in self.diagrams), default=0)

    def to_json(self) -> list[list[int]]:
        return [list(lam) for lam in self.diagrams]


def multishapes(max_boxes: int, max_r: int, max_rows: int | None = None, allow_empty: bool = False) -> Iterator[MultiShape]:
    """Every multishape with ``1 <= r <= max_r`` and at most ``max_boxes`` boxes."""
    parts = list(partitions_up_to(max_boxes, max_rows))
    if not allow_empty:
        parts = [p for p in parts if p]
    for r in range(1, max_r + 1):
        for combo in itertools.product(parts, repeat=r):
            if sum(sum(p) for p in combo) <= max_boxes:
                yield MultiShape(combo)


# -- barred tableaux ------------------------------------------------------------

class EntryKind(enum.Enum):
    FREE = "free"
    SEMI_FREE = "semi-free"
    LOCKED = "locked"


@dataclass(frozen=True)
class BarredTableau:
    """A filling of (part of) a multishape by possibly barred values in ``1..n``.

    ``boxes`` defaults to every box of ``shape``; column pieces produced by
    :func:`split_columns` carry a subset.
    """

    shape: MultiShape
    n: int
    entries: tuple[int, ...]
    boxes: tuple[Box, ...] = None

    def __post_init__(self):
        if self.boxes is None:
            object.__setattr__(self, "boxes", self.shape.boxes)
        if len(self.entries) != len(self.boxes):
            raise TableauError("entry count does not match box count")

    @classmethod
    def from_cells(cls, shape: MultiShape, n: int, cells: dict[Box, int], validate: bool = True) -> BarredTableau:
        """Build from ``{(d, r, c): signed value}`` covering every box of ``shape``."""
        if set(cells) != set(shape.boxes):
            raise TableauError("cells do not match the shape")
        t = cls(shape, n, tuple(cells[b] for b in shape.boxes))
        if validate:
            t.validate()
        return t

    @classmethod
    def from_rows(cls, n: int, *diagrams: Sequence[Sequence[int | str]]) -> BarredTableau:
        """Build from row lists per diagram; a barred entry is ``-v`` or the string ``"v~"``."""
        def parse(e):
            if isinstance(e, str):
                e = e.strip()
                return -int(e[:-1]) if e.endswith("~") else int(e)
            return int(e)

        shape = MultiShape(tuple(tuple(len(row) for row in rows) for rows in diagrams))
        cells = {}
        for d, rows in enumerate(diagrams, start=1):
            for r, row in enumerate(rows, start=1):
                for c, e in enumerate(row, start=1):
                    cells[(d, r, c)] = parse(e)
        return cls.from_cells(shape, n, cells)

    def cells(self) -> dict[Box, int]:
        return dict(zip(self.boxes, self.entries))

    def entry(self, box: Box) -> tuple[int, bool]:
        s = self.cells()[box]
        return abs(s), s < 0

    def validate(self) -> None:
        cells = self.cells()
        for (d, r, c), s in cells.items():
            v = abs(s)
            if not 1 <= v <= self.n:
                raise TableauError(f"value {v} at {(d, r, c)} outside 1..{self.n}")
            right = cells.get((d, r, c + 1))
            if right is not None and abs(right) < v:
                raise TableauError(f"row decreases at {(d, r, c)}")
            below = cells.get((d, r + 1, c))
            if below is not None and abs(below) <= v:
                raise TableauError(f"column does not strictly increase at {(d, r, c)}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except TableauError:
            return False
        return True

    def __str__(self) -> str:
        return render(self)


def _diagram_fillings(lam: Partition, n: int, barred: bool) -> list[tuple[int, ...]]:
    shape = MultiShape((lam,))
    boxes = shape.boxes
    index = {b: k for k, b in enumerate(boxes)}
    conj = conjugate(lam)
    right_of = [index.get((1, r, c + 1)) for (_, r, c) in boxes]
    above_of = [index.get((1, r - 1, c)) for (_, r, c) in boxes]
    room_below = [conj[c - 1] - r for (_, r, c) in boxes]
    out = []
    vals = [0] * len(boxes)

    def rec(k):
        if k == len(boxes):
            out.append(tuple(vals))
            return
        lo = 1 if above_of[k] is None else vals[above_of[k]] + 1
        hi = n - room_below[k]
        if right_of[k] is not None:
            hi = min(hi, vals[right_of[k]])
        for v in range(lo, hi + 1):
            vals[k] = v
            rec(k + 1)

    rec(0)
    if barred:
        out = [
            tuple(-v if bar else v for v, bar in zip(t, bars))
            for t in out
            for bars in itertools.product((False, True), repeat=len(t))
        ]
    # lexicographic order of the reading word, unbarred before barred
    out.sort(key=lambda t: tuple((abs(s), s < 0) for s in t))
    return out


@functools.lru_cache(maxsize=None)
def diagram_fillings(lam: Partition, n: int, barred: bool = True) -> tuple[tuple[int, ...], ...]:
    return tuple(_diagram_fillings(as_partition(lam), n, barred))


def enumerate_barred(shape: MultiShape, n: int) -> Iterator[BarredTableau]:
    """Every barred skew tableau of ``shape`` with values in ``1..n``.

    The diagrams are independent, so this is the product of the per-diagram
    streams, each sorted by reading word.
    """
    if n < 1:
        raise TableauError("n must be >= 1")
    per_diagram = [diagram_fillings(lam, n, True) for lam in shape.diagrams]
    for combo in itertools.product(*per_diagram):
        yield BarredTableau(shape, n, tuple(itertools.chain.from_iterable(combo)))


def enumerate_semistandard(lam: Iterable[int], n: int) -> Iterator[BarredTableau]:
    """Unbarred semistandard tableaux of the single shape ``lam``."""
    lam = as_partition(lam)
    shape = MultiShape((lam,))
    for t in diagram_fillings(lam, n, False):
        yield BarredTableau(shape, n, t)


# -- statistics -----------------------------------------------------------------

def unbarred_column_word(t: BarredTableau) -> tuple[int, ...]:
    if t.boxes is t.shape.boxes:
        return tuple(s for s in t.entries if s > 0)
    order = sorted(range(len(t.boxes)), key=lambda k: (-t.shape.global_column(t.boxes[k]), t.boxes[k][1]))
    return tuple(t.entries[k] for k in order if t.entries[k] > 0)


def is_yamanouchi(word: Iterable[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def unbarred_content(t: BarredTableau) -> tuple[int, ...]:
    counts = [0] * t.n
    for s in t.entries:
        if s > 0:
            counts[s - 1] += 1
    return tuple(counts)


def weight(t: BarredTableau) -> Polynomial:
    """Product over barred boxes of ``y^(d)_(value + column - row)``."""
    acc: dict = {}
    for (d, r, c), s in zip(t.boxes, t.entries):
        if s < 0:
            v = yvar(d, -s + c - r)
            acc[v] = acc.get(v, 0) + 1
    if not acc:
        return ONE
    return Polynomial.monomial(acc.items())


def weight_key(t: BarredTableau) -> tuple:
    """Hashable form of :func:`weight` for fast grouping."""
    return tuple(sorted((d, -s + c - r) for (d, r, c), s in zip(t.boxes, t.entries) if s < 0))


# -- Bender-Knuth type involutions ------------------------------------------------

def classify_entry(t: BarredTableau, box: Box, i: int) -> EntryKind:
    cells = t.cells()
    return _classify(cells, box, i)


def _classify(cells: dict[Box, int], box: Box, i: int) -> EntryKind:
    s = cells[box]
    v = abs(s)
    d, r, c = box
    if v == i:
        partner = cells.get((d, r + 1, c))
        want = i + 1
    elif v == i + 1:
        partner = cells.get((d, r - 1, c))
        want = i
    else:
        raise TableauError(f"entry at {box} has value {v}, not {i} or {i + 1}")
    if partner is None or abs(partner) != want:
        return EntryKind.FREE
    if (s < 0) != (partner < 0):
        return EntryKind.SEMI_FREE
    return EntryKind.LOCKED


def _toggle_free_string(string: list[int], i: int) -> list[int]:
    """Free-string step of s_i on one row.

    ``string`` holds the signed entries of a maximal run of free entries, all
    of value ``i`` followed by all of value ``i + 1``.  The unbarred counts of
    ``i`` and ``i + 1`` are exchanged while every bar keeps its weight.
    """
    ip = i + 1
    l = string.count(i)
    r = string.count(ip)
    if l == r:
        return string
    out = list(string)
    if l < r:
        start = next(k for k, s in enumerate(out) if abs(s) == ip)
        seen = 0
        for end in range(start, len(out)):
            if out[end] == ip:
                seen += 1
                if seen == r - l:
                    break
        created = []
        for k in range(start, end + 1):
            if out[k] == ip:
                out[k] = i
            else:
                out[k] = -i
                created.append(k)
        for k in reversed(created):
            if out[k + 1] != i:
                raise AssertionError("free string has no unbarred i right of a new bar")
            out[k], out[k + 1] = out[k + 1], out[k]
    else:
        end = max(k for k, s in enumerate(out) if abs(s) == i)
        seen = 0
        for start in range(end, -1, -1):
            if out[start] == i:
                seen += 1
                if seen == l - r:
                    break
        created = []
        for k in range(start, end + 1):
            if out[k] == i:
                out[k] = ip
            else:
                out[k] = -ip
                created.append(k)
        for k in created:
            if out[k - 1] != ip:
                raise AssertionError("free string has no unbarred i+1 left of a new bar")
            out[k], out[k - 1] = out[k - 1], out[k]
    return out


def bender_knuth(t: BarredTableau, i: int) -> BarredTableau:
    """The involution ``s_i``.

    Semi-free pairs trade their bar; each maximal row run of free entries goes
    through :func:`_toggle_free_string`; locked entries stay put.
    """
    if not 1 <= i <= t.n - 1:
        raise TableauError(f"s_{i} undefined for n={t.n}")
    ip = i + 1
    cells = dict(zip(t.boxes, t.entries))
    new = None
    free_rows: dict[tuple[int, int], list[int]] = {}
    for box, s in cells.items():
        v = s if s > 0 else -s
        if v == i:
            partner = cells.get((box[0], box[1] + 1, box[2]))
            want = ip
        elif v == ip:
            partner = cells.get((box[0], box[1] - 1, box[2]))
            want = i
        else:
            continue
        if partner is None or (partner if partner > 0 else -partner) != want:
            free_rows.setdefault(box[:2], []).append(box[2])
        elif (s < 0) != (partner < 0):
            # semi-free pair: the bar moves to the partner
            if new is None:
                new = dict(cells)
            new[box] = -s
    for (d, r), cols in free_rows.items():
        cols.sort()
        if cols[-1] - cols[0] + 1 != len(cols):
            raise AssertionError(f"free entries of row {(d, r)} are not consecutive")
        string = [cells[(d, r, c)] for c in cols]
        toggled = _toggle_free_string(string, i)
        if toggled is not string:
            if new is None:
                new = dict(cells)
            for c, s in zip(cols, toggled):
                new[(d, r, c)] = s
    if new is None:
        return t
    return BarredTableau(t.shape, t.n, tuple(new[b] for b in t.boxes), t.boxes)


def apply_permutation(t: BarredTableau, word: Sequence[int]) -> BarredTableau:
    """``s_{i1} s_{i2} ... s_{it} T`` for ``word = (i1, ..., it)``; the last index acts first."""
    for i in word:
        if not 1 <= i <= t.n - 1:
            raise TableauError(f"s_{i} undefined for n={t.n}")
    for i in reversed(word):
        t = bender_knuth(t, i)
    return t


def permute_vector(vec: Sequence[int], word: Sequence[int]) -> tuple[int, ...]:
    """Action of ``sigma_{i1} ... sigma_{it}`` on a vector, swapping positions ``i, i+1``."""
    out = list(vec)
    for i in reversed(word):
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


# -- column pieces and the bad-guy pairing ------------------------------------

def split_columns(t: BarredTableau, j: int) -> tuple[BarredTableau, BarredTableau]:
    """``(T_<j, T_>=j)``: the boxes in global columns left of ``j`` and the rest."""
    if not 1 <= j <= t.shape.num_columns + 1:
        raise TableauError(f"column {j} outside 1..{t.shape.num_columns + 1}")
    left_b, left_e, right_b, right_e = [], [], [], []
    for b, s in zip(t.boxes, t.entries):
        if t.shape.global_column(b) < j:
            left_b.append(b)
            left_e.append(s)
        else:
            right_b.append(b)
            right_e.append(s)
    return (
        BarredTableau(t.shape, t.n, tuple(left_e), tuple(left_b)),
        BarredTableau(t.shape, t.n, tuple(right_e), tuple(right_b)),
    )


def join_columns(left: BarredTableau, right: BarredTableau) -> BarredTableau:
    cells = left.cells()
    cells.update(right.cells())
    shape = left.shape
    boxes = tuple(b for b in shape.boxes if b in cells)
    return BarredTableau(shape, left.n, tuple(cells[b] for b in boxes), boxes if len(boxes) != shape.size else None)


def bad_guy_site(t: BarredTableau) -> tuple[int, int] | None:
    """``(j, i)`` selecting the pairing move, or ``None`` for a Yamanouchi tableau.

    ``j`` is the largest column with ``content(T_>=j)`` not a partition and
    ``i`` the smallest index where that content increases.
    """
    by_col: dict[int, list[int]] = {}
    for b, s in zip(t.boxes, t.entries):
        if s > 0:
            by_col.setdefault(t.shape.global_column(b), []).append(s)
    counts = [0] * (t.n + 1)
    for j in range(t.shape.num_columns, 0, -1):
        for v in by_col.get(j, ()):
            counts[v] += 1
        for i in range(1, t.n):
            if counts[i] < counts[i + 1]:
                return j, i
    return None


def bad_guy_pair(t: BarredTableau) -> BarredTableau | None:
    site = bad_guy_site(t)
    if site is None:
        return None
    j, i = site
    left, right = split_columns(t, j)
    return join_columns(bender_knuth(left, i), right)


# -- pruned enumeration of Yamanouchi tableaux --------------------------------------

def enumerate_yamanouchi(shape: MultiShape, n: int, mu: Partition | None = None) -> Iterator[BarredTableau]:
    """Barred tableaux whose unbarred column word is Yamanouchi, optionally of content ``mu``.

    Boxes are filled in reading order; a branch dies as soon as the word
    prefix stops being Yamanouchi or the remaining boxes cannot supply the
    content still missing from ``mu``.
    """
    boxes = shape.boxes
    nb = len(boxes)
    index = {b: k for k, b in enumerate(boxes)}
    right_of = [index.get((d, r, c + 1)) for (d, r, c) in boxes]
    above_of = [index.get((d, r - 1, c)) for (d, r, c) in boxes]
    conjs = [conjugate(lam) for lam in shape.diagrams]
    room_below = [conjs[d - 1][c - 1] - r for (d, r, c) in boxes]
    target = None
    if mu is not None:
        mu = as_partition(mu)
        if len(mu) > n or sum(mu) > nb:
            return
        target = list(padded(mu, n))
    counts = [0] * (n + 2)
    vals = [0] * nb
    missing = sum(target) if target else 0

    def rec(k):
        nonlocal missing
        if k == nb:
            if not missing:
                yield BarredTableau(shape, n, tuple(vals))
            return
        lo = 1 if above_of[k] is None else abs(vals[above_of[k]]) + 1
        hi = n - room_below[k]
        if right_of[k] is not None:
            hi = min(hi, abs(vals[right_of[k]]))
        left_after = nb - k - 1
        for v in range(lo, hi + 1):
            if (v == 1 or counts[v] < counts[v - 1]) and (target is None or counts[v] < target[v - 1]):
                counts[v] += 1
                if target is not None:
                    missing -= 1
                if missing <= left_after:
                    vals[k] = v
                    yield from rec(k + 1)
                counts[v] -= 1
                if target is not None:
                    missing += 1
            if missing <= left_after:
                vals[k] = -v
                yield from rec(k + 1)

    yield from rec(0)


# -- rendering and JSON ---------------------------------------------------------

def render(t: BarredTableau) -> str:
    """ASCII picture; barred entries carry a trailing ``~``."""
    shape = t.shape
    # diagram 1 is on top, so it takes the first rows
    top = []
    acc = 0
    for lam in shape.diagrams:
        top.append(acc)
        acc += len(lam)
    width = max(2, len(str(t.n)) + 1)
    grid = [[" " * (width + 1) for _ in range(shape.num_columns)] for _ in range(acc)]
    for (d, r, c), s in zip(t.boxes, t.entries):
        text = f"{abs(s)}{'~' if s < 0 else ''}"
        grid[top[d - 1] + r - 1][shape.global_column((d, r, c)) - 1] = text.rjust(width) + " "
    return "\n".join("".join(row).rstrip() for row in grid)


def tableau_to_json(t: BarredTableau) -> dict:
    return {
        "shape": t.shape.to_json(),
        "n": t.n,
        "cells": [
            {"d": d, "r": r, "c": c, "v": abs(s), "b": s < 0}
            for (d, r, c), s in zip(t.boxes, t.entries)
        ],
    }


def tableau_from_json(data: dict) -> BarredTableau:
    shape = MultiShape(tuple(tuple(lam) for lam in data["shape"]))
    cells = {(c["d"], c["r"], c["c"]): -c["v"] if c["b"] else c["v"] for c in data["cells"]}
    n = data.get("n") or max((abs(s) for s in cells.values()), default=1)
    return BarredTableau.from_cells(shape, n, cells)
