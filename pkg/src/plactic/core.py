"""Words, tableaux, Schensted insertion, and Knuth equivalence.

Letters are plain ints 1..rank, words are tuples of letters.  A tableau is
stored canonically as its list of columns (each strictly decreasing, written
top-to-bottom); row views are derived on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from plactic.errors import ParseError, RankError, ResourceLimit
from plactic.kernel import insert_letter, insert_letter_trace, word_tableau

Word = tuple[int, ...]
Column = tuple[int, ...]

DEFAULT_CLASS_BOUND = 10**6


def check_rank(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise RankError(f"rank must be a positive integer, got {n!r}")
    return n


def check_word(w: Sequence[int], rank: int) -> Word:
    word = tuple(w)
    for x in word:
        if not isinstance(x, int) or not 1 <= x <= rank:
            raise RankError(f"letter {x!r} outside 1..{rank}")
    return word


def parse_word(text: str, rank: int) -> Word:
    """Parse the text form of a word: digit string for rank <= 9,
    comma-separated integers above."""
    check_rank(rank)
    text = text.strip()
    if not text:
        return ()
    try:
        if rank <= 9:
            word = tuple(int(c) for c in text)
        else:
            word = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse word {text!r}") from exc
    return check_word(word, rank)


def format_word(word: Sequence[int], rank: int) -> str:
    if rank <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def is_row(w: Sequence[int]) -> bool:
    """True iff w is non-decreasing (vacuously true for the empty word)."""
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1))


def is_column(w: Sequence[int]) -> bool:
    """True iff w is strictly decreasing in written order."""
    return all(w[i] > w[i + 1] for i in range(len(w) - 1))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Row domination: a is no longer than b and exceeds it letterwise."""
    return len(a) <= len(b) and all(a[i] > b[i] for i in range(len(a)))


def column_ge(a: Sequence[int], b: Sequence[int]) -> bool:
    """Column order: a may stand immediately left of b in a tableau.

    Holds iff a is at least as long as b and, aligning both at the bottom,
    each letter of a is <= the letter of b beside it.
    """
    if len(a) < len(b):
        return False
    for i in range(1, len(b) + 1):
        if a[-i] > b[-i]:
            return False
    return True


@dataclass(frozen=True)
class Tableau:
    """A tableau as its tuple of columns, chained under `column_ge`."""

    columns: tuple[Column, ...] = ()

    @classmethod
    def from_columns(cls, columns) -> "Tableau":
        t = cls(tuple(tuple(c) for c in columns))
        if not t.is_valid():
            raise ParseError(f"columns do not form a tableau: {columns!r}")
        return t

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "Tableau":
        return cls(word_tableau(tuple(word)))

    def is_valid(self) -> bool:
        cols = self.columns
        if not all(c and is_column(c) for c in cols):
            return False
        return all(column_ge(cols[i], cols[i + 1]) for i in range(len(cols) - 1))

    def __len__(self) -> int:
        return sum(len(c) for c in self.columns)

    @property
    def height(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def width(self) -> int:
        return len(self.columns)

    def rows(self) -> tuple[Word, ...]:
        """Rows top to bottom (order of domination)."""
        cols = self.columns
        out = []
        for m in range(self.height, 0, -1):
            out.append(tuple(c[len(c) - m] for c in cols if len(c) >= m))
        return tuple(out)

    def column_reading(self) -> Word:
        out: list[int] = []
        for c in self.columns:
            out.extend(c)
        return tuple(out)

    def row_reading(self) -> Word:
        out: list[int] = []
        for r in self.rows():
            out.extend(r)
        return tuple(out)

    def pretty(self, rank: int | None = None) -> str:
        """Planar form, top row first, left-justified."""
        rank = rank if rank is not None else (max(self.column_reading(), default=1))
        return "\n".join(format_word(r, rank) for r in self.rows())

    def to_json_dict(self, rank: int | None = None) -> dict:
        rank = rank if rank is not None else (max(self.column_reading(), default=1))
        return {"columns": [format_word(c, rank) for c in self.columns]}

    @classmethod
    def from_json_dict(cls, data: dict, rank: int) -> "Tableau":
        return cls.from_columns([parse_word(c, rank) for c in data["columns"]])


def insert(t: Tableau, g: int) -> Tableau:
    """Schensted insertion of one letter."""
    return Tableau(insert_letter(t.columns, g))


def insert_with_trace(t: Tableau, g: int) -> tuple[Tableau, tuple[tuple[int, int], ...]]:
    """Insertion plus the (row, column-index) landing site of every step."""
    cols, trace = insert_letter_trace(t.columns, g)
    return Tableau(cols), trace


def tableau_of_word(w: Sequence[int]) -> Tableau:
    return Tableau(word_tableau(tuple(w)))


def column_reading(t: Tableau) -> Word:
    return t.column_reading()


def row_reading(t: Tableau) -> Word:
    return t.row_reading()


def lnds(w: Sequence[int]) -> int:
    """Length of the longest non-decreasing subsequence (quadratic DP)."""
    best = [0] * len(w)
    for i in range(len(w)):
        best[i] = 1 + max((best[j] for j in range(i) if w[j] <= w[i]), default=0)
    return max(best, default=0)


def lds(w: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence."""
    best = [0] * len(w)
    for i in range(len(w)):
        best[i] = 1 + max((best[j] for j in range(i) if w[j] > w[i]), default=0)
    return max(best, default=0)


def knuth_relations(n: int) -> frozenset[tuple[Word, Word]]:
    """The defining relations xzy=zxy (x<=y<z) and yxz=yzx (x<y<=z) over 1..n."""
    check_rank(n)
    rels = set()
    for x in range(1, n + 1):
        for y in range(x, n + 1):
            for z in range(y + 1, n + 1):
                rels.add(((x, z, y), (z, x, y)))
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            for z in range(y, n + 1):
                rels.add(((y, x, z), (y, z, x)))
    return frozenset(rels)


def _relation_map(n: int) -> dict[Word, tuple[Word, ...]]:
    moves: dict[Word, list[Word]] = {}
    for left, right in knuth_relations(n):
        moves.setdefault(left, []).append(right)
        moves.setdefault(right, []).append(left)
    return {k: tuple(v) for k, v in moves.items()}


def knuth_class(w: Sequence[int], max_class_size: int = DEFAULT_CLASS_BOUND) -> frozenset[Word]:
    """The full equivalence class of w, by breadth-first search.

    Raises ResourceLimit if the class exceeds `max_class_size`; the defining
    relations preserve length so the search space is finite.
    """
    start = tuple(w)
    n = max(start, default=1)
    moves = _relation_map(n)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 2):
            piece = cur[i : i + 3]
            for rep in moves.get(piece, ()):
                nxt = cur[:i] + rep + cur[i + 3 :]
                if nxt not in seen:
                    if len(seen) >= max_class_size:
                        raise ResourceLimit(
                            f"equivalence class of {start!r} exceeds {max_class_size}"
                        )
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(seen)


def knuth_equivalent(
    u: Sequence[int], v: Sequence[int], max_class_size: int = DEFAULT_CLASS_BOUND
) -> bool:
    """Brute-force congruence test: v reachable from u by relation moves."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        return False
    return v in knuth_class(u, max_class_size)


def iter_columns(rank: int) -> Iterator[Column]:
    """All nonempty strictly decreasing words over 1..rank, shortest first."""
    check_rank(rank)
    subsets: list[tuple[int, ...]] = [()]
    for x in range(1, rank + 1):
        subsets.extend([s + (x,) for s in subsets])
    cols = [tuple(sorted(s, reverse=True)) for s in subsets if s]
    cols.sort(key=lambda c: (len(c), c))
    return iter(cols)


def iter_tableaux(rank: int, max_cells: int) -> Iterator[Tableau]:
    """Every tableau over 1..rank with at most `max_cells` cells."""
    check_rank(rank)
    cols = list(iter_columns(rank))

    def extend(chain: tuple[Column, ...], used: int) -> Iterator[tuple[Column, ...]]:
        yield chain
        for c in cols:
            if used + len(c) > max_cells:
                continue
            if chain and not column_ge(chain[-1], c):
                continue
            yield from extend(chain + (c,), used + len(c))

    for chain in extend((), 0):
        yield Tableau(chain)
