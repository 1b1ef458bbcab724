"""The finite complete rewriting system over column generators.

Generators are the nonempty columns over 1..rank; a word over them rewrites
by replacing an adjacent incomparable pair with the one or two columns of
the tableau of its concatenation.  The module also certifies termination,
checks confluence constructively through overlaps, and exports the rule set
as a binomial basis of the free algebra on the column generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from plactic.core import (
    Column,
    Word,
    check_rank,
    column_ge,
    format_word,
    iter_columns,
    tableau_of_word,
)
from plactic.errors import ParseError, ResourceLimit, ViolationFound

CWord = tuple[Column, ...]

# (2^n - 1)^2 rule-table entries; refuse ranks that blow the table up.
DEFAULT_PAIR_BUDGET = 4_000_000

ORDER_DESCRIPTION = "order: deglex; symbol order: |subscript| desc, then lex"


def all_columns(n: int) -> list[Column]:
    """The 2^n - 1 column generators, shortest subscripts first, then lex."""
    return list(iter_columns(n))


def column_key(c: Column):
    """Sort key realizing the generator order: longer subscripts first,
    ties broken lexicographically."""
    return (-len(c), c)


def symbol_less(a: Column, b: Column) -> bool:
    return column_key(a) < column_key(b)


def word_less(u: CWord, v: CWord) -> bool:
    """Length-first word order induced by the generator order; a well-order."""
    if len(u) != len(v):
        return len(u) < len(v)
    for a, b in zip(u, v):
        if a != b:
            return symbol_less(a, b)
    return False


def product_columns(a: Column, b: Column) -> Optional[tuple[Column, ...]]:
    """Columns of the tableau of ab for an incomparable pair, else None.

    The result has one or two columns; in the two-column case the left one
    is strictly longer than a.
    """
    if column_ge(a, b):
        return None
    cols = tableau_of_word(a + b).columns
    if len(cols) > 2:
        raise AssertionError(f"product of two columns gave {len(cols)} columns")
    return cols


@dataclass(frozen=True)
class RewritingSystem:
    rank: int
    rules: Mapping[tuple[Column, Column], tuple[Column, ...]]

    def sorted_rules(self) -> list[tuple[tuple[Column, Column], tuple[Column, ...]]]:
        return sorted(self.rules.items(), key=lambda kv: (column_key(kv[0][0]), column_key(kv[0][1])))


def generate_rules(n: int, pair_budget: int = DEFAULT_PAIR_BUDGET) -> RewritingSystem:
    """One rule per ordered incomparable pair of columns."""
    check_rank(n)
    count = (2**n - 1) ** 2
    if count > pair_budget:
        raise ResourceLimit(f"rank {n} needs {count} rule-table entries (budget {pair_budget})")
    rules = {}
    for a in iter_columns(n):
        for b in iter_columns(n):
            rhs = product_columns(a, b)
            if rhs is not None:
                rules[(a, b)] = rhs
    return RewritingSystem(n, rules)


def rewrite_step(w: CWord, system: RewritingSystem) -> Optional[CWord]:
    """Apply one rule at the leftmost redex, or None if w is irreducible."""
    rules = system.rules
    for i in range(len(w) - 1):
        rhs = rules.get((w[i], w[i + 1]))
        if rhs is not None:
            return w[:i] + rhs + w[i + 2 :]
    return None


def normalize(w: CWord, system: RewritingSystem) -> CWord:
    """Leftmost rewriting to the unique normal form."""
    rules = system.rules
    out = list(w)
    i = 0
    while i < len(out) - 1:
        rhs = rules.get((out[i], out[i + 1]))
        if rhs is None:
            i += 1
        else:
            out[i : i + 2] = rhs
            # a new redex can appear one position to the left at most
            i = max(i - 1, 0)
    return tuple(out)


def is_normal_form(w: CWord, system: RewritingSystem) -> bool:
    return rewrite_step(w, system) is None


@dataclass(frozen=True)
class TerminationCertificate:
    rank: int
    comparisons: tuple[tuple[tuple[Column, Column], tuple[Column, ...], str], ...]

    @property
    def rule_count(self) -> int:
        return len(self.comparisons)


def check_termination(system: RewritingSystem) -> TerminationCertificate:
    """Verify every rule strictly decreases under the word order.

    Raises ViolationFound at the first offending rule; success returns a
    certificate listing the per-rule comparison that applied.
    """
    comparisons = []
    for lhs, rhs in system.sorted_rules():
        if not word_less(rhs, lhs):
            raise ViolationFound((lhs, rhs))
        reason = "shorter" if len(rhs) < len(lhs) else "first symbol drops"
        comparisons.append((lhs, rhs, reason))
    return TerminationCertificate(system.rank, tuple(comparisons))


@dataclass(frozen=True)
class Overlap:
    word: CWord  # three symbols, both adjacent pairs reducible
    left_result: CWord
    right_result: CWord

    @property
    def converged(self) -> bool:
        return self.left_result == self.right_result


def critical_pairs(system: RewritingSystem) -> list[Overlap]:
    """All overlap words c_a c_b c_c with both pairs reducible, with the
    normal forms of the two one-step descendants.

    Left-hand sides all have length two, so these are the only overlaps.
    """
    rules = system.rules
    by_first: dict[Column, list[Column]] = {}
    for a, b in rules:
        by_first.setdefault(a, []).append(b)
    out = []
    for (a, b), rhs_ab in sorted(rules.items(), key=lambda kv: (column_key(kv[0][0]), column_key(kv[0][1]))):
        for c in sorted(by_first.get(b, []), key=column_key):
            rhs_bc = rules[(b, c)]
            left = normalize(rhs_ab + (c,), system)
            right = normalize((a,) + rhs_bc, system)
            out.append(Overlap((a, b, c), left, right))
    return out


@dataclass(frozen=True)
class Binomial:
    leading: CWord
    trailing: CWord
    leading_coeff: int = 1
    trailing_coeff: int = -1


@dataclass(frozen=True)
class GsbBasis:
    rank: int
    generators: tuple[Column, ...]
    order: str
    elements: tuple[Binomial, ...]


def gsb_export(system: RewritingSystem) -> GsbBasis:
    """One binomial lhs - rhs per rule; leading terms are the rule left sides
    and exceed the trailing terms under the declared order."""
    check_termination(system)
    elements = []
    for lhs, rhs in system.sorted_rules():
        binom = Binomial(leading=lhs, trailing=rhs)
        if not word_less(binom.trailing, binom.leading):
            raise ViolationFound((lhs, rhs), "leading term does not dominate")
        elements.append(binom)
    generators = tuple(sorted(iter_columns(system.rank), key=column_key))
    return GsbBasis(system.rank, generators, ORDER_DESCRIPTION, tuple(elements))


def encode_word(w: Word) -> CWord:
    """Letters to single-letter column symbols."""
    return tuple((x,) for x in w)


def decode_word(v: CWord) -> Word:
    """Concatenate the column subscripts."""
    out: list[int] = []
    for c in v:
        out.extend(c)
    return tuple(out)


# -- text / JSON forms --------------------------------------------------


def format_column(c: Column, rank: int) -> str:
    return format_word(c, rank)


def parse_cword(text: str, rank: int) -> CWord:
    """Parse `c:`-prefixed column words: c:21,1 (dots separate letters when
    the rank needs multi-digit letters, e.g. c:10.2,1)."""
    from plactic.core import check_word, is_column

    body = text[2:] if text.startswith("c:") else text
    body = body.strip()
    if not body:
        return ()
    cols = []
    for part in body.split(","):
        part = part.strip()
        try:
            if rank <= 9:
                letters = tuple(int(ch) for ch in part)
            else:
                letters = tuple(int(p) for p in part.split("."))
        except ValueError as exc:
            raise ParseError(f"cannot parse column {part!r}") from exc
        check_word(letters, rank)
        if not letters or not is_column(letters):
            raise ParseError(f"{part!r} is not a column")
        cols.append(letters)
    return tuple(cols)


def format_cword(w: CWord, rank: int) -> str:
    """Human form of a column word: c_21 c_1 (empty word prints as nothing)."""
    if rank > 9:
        return " ".join("c_" + ".".join(str(x) for x in c) for c in w)
    return " ".join("c_" + format_word(c, rank) for c in w)


def rules_json(system: RewritingSystem) -> dict:
    return {
        "rank": system.rank,
        "rules": [
            {
                "lhs": [format_column(c, system.rank) for c in lhs],
                "rhs": [format_column(c, system.rank) for c in rhs],
            }
            for lhs, rhs in system.sorted_rules()
        ],
    }


def rules_text(system: RewritingSystem) -> str:
    lines = [f"rank: {system.rank}"]
    for lhs, rhs in system.sorted_rules():
        left = " ".join(f"c[{format_column(c, system.rank)}]" for c in lhs)
        right = " ".join(f"c[{format_column(c, system.rank)}]" for c in rhs)
        lines.append(f"{left} -> {right}")
    return "\n".join(lines) + "\n"


def _monomial(word: CWord, rank: int) -> str:
    if not word:
        return "1"
    return "*".join(f"c[{format_column(c, rank)}]" for c in word)


def gsb_text(basis: GsbBasis) -> str:
    lines = [basis.order]
    for el in basis.elements:
        lines.append(f"{_monomial(el.leading, basis.rank)} - {_monomial(el.trailing, basis.rank)}")
    return "\n".join(lines) + "\n"


def gsb_json(basis: GsbBasis) -> dict:
    return {
        "rank": basis.rank,
        "order": basis.order,
        "generators": [format_column(c, basis.rank) for c in basis.generators],
        "binomials": [
            {
                "leading": [format_column(c, basis.rank) for c in el.leading],
                "trailing": [format_column(c, basis.rank) for c in el.trailing],
                "leading_coeff": el.leading_coeff,
                "trailing_coeff": el.trailing_coeff,
            }
            for el in basis.elements
        ],
    }
