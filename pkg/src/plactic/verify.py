"""Exhaustive desk-scale verification suites driven by the CLI.

Each suite re-checks a family of structural facts by enumeration and
reports counts; any witness of failure is named in the report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from plactic import automata, multipliers, rewriting
from plactic.core import (
    Tableau,
    column_ge,
    insert_with_trace,
    iter_columns,
    iter_tableaux,
    knuth_class,
    lds,
    lnds,
    tableau_of_word,
)


@dataclass
class Config:
    rank: int = 3
    max_len: int = 6
    thorough: bool = False
    max_class_size: int = 10**6
    state_limit: int = 10**6
    pair_budget: int = rewriting.DEFAULT_PAIR_BUDGET


@dataclass
class Report:
    suite: str
    lines: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, label: str, count: int, witnesses: list) -> None:
        if witnesses:
            self.failures.append(f"{label}: {len(witnesses)} failures, first: {witnesses[0]!r}")
            self.lines.append(f"FAIL {label}: {len(witnesses)}/{count} items failed")
        else:
            self.lines.append(f"ok   {label}: {count} items")


def _words(rank: int, max_len: int):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in range(1, rank + 1)]
        out.extend(frontier)
    return out


def verify_core(cfg: Config) -> Report:
    rep = Report("core")
    rank, max_len = cfg.rank, cfg.max_len
    words = _words(rank, max_len)

    bad = [w for w in words if tableau_of_word(w).width != lnds(w) or tableau_of_word(w).height != lds(w)]
    rep.check("columns=lnds and rows=lds", len(words), bad)

    bad = [w for w in words if len(tableau_of_word(w).row_reading()) != len(w)]
    rep.check("length preserved", len(words), bad)

    bad = []
    for w in words:
        t = Tableau()
        for g in w:
            t, trace = insert_with_trace(t, g)
            if any(trace[i + 1][1] > trace[i][1] for i in range(len(trace) - 1)):
                bad.append((w, trace))
        if not t.is_valid():
            bad.append(w)
    rep.check("insertion stays weakly left and valid", len(words), bad)

    # readings are congruent to the word; classes coincide exactly with tableaux
    short = [w for w in words if len(w) <= min(max_len, 5)]
    classes = {w: knuth_class(w, cfg.max_class_size) for w in short}
    bad = [
        w
        for w in short
        if tableau_of_word(w).column_reading() not in classes[w]
        or tableau_of_word(w).row_reading() not in classes[w]
    ]
    rep.check("readings stay in the congruence class", len(short), bad)

    bad = []
    pairs = 0
    by_len: dict[int, list] = {}
    for w in short:
        by_len.setdefault(len(w), []).append(w)
    for group in by_len.values():
        for u, v in itertools.combinations(group, 2):
            pairs += 1
            if (v in classes[u]) != (tableau_of_word(u) == tableau_of_word(v)):
                bad.append((u, v))
    rep.check("equivalence iff equal tableaux", pairs, bad)

    cols = list(iter_columns(min(rank, 5)))
    bad = []
    for a in cols:
        if not column_ge(a, a):
            bad.append(a)
        for b in cols:
            if column_ge(a, b) and column_ge(b, a) and a != b:
                bad.append((a, b))
            for c in cols:
                if column_ge(a, b) and column_ge(b, c) and not column_ge(a, c):
                    bad.append((a, b, c))
    rep.check("column order is a partial order", len(cols) ** 3, bad)
    return rep


def verify_rewriting(cfg: Config) -> Report:
    rep = Report("rewriting")
    top = min(cfg.rank + 2, 6) if cfg.thorough else cfg.rank
    for n in range(1, min(top, 6) + 1):
        rs = rewriting.generate_rules(n, cfg.pair_budget)
        cols = list(iter_columns(n))
        bad = [
            (a, b)
            for a in cols
            for b in cols
            if column_ge(a, b) == (((a, b)) in rs.rules)
        ]
        rep.check(f"rank {n}: rules cover exactly incomparable pairs", len(cols) ** 2, bad)

        bad = []
        for (a, b), rhs in rs.rules.items():
            if len(rhs) == 2 and len(rhs[0]) <= len(a):
                bad.append((a, b))
            flat = tuple(sorted(x for c in rhs for x in c))
            if flat != tuple(sorted(a + b)):
                bad.append((a, b))
        rep.check(f"rank {n}: rule shapes and letter multisets", len(rs.rules), bad)

        cert = rewriting.check_termination(rs)
        rep.lines.append(f"ok   rank {n}: termination certificate over {cert.rule_count} rules")

        overlaps = rewriting.critical_pairs(rs)
        bad = [o for o in overlaps if not o.converged]
        rep.check(f"rank {n}: critical pairs converge", len(overlaps), bad)

    rs = rewriting.generate_rules(cfg.rank, cfg.pair_budget)
    words = _words(cfg.rank, cfg.max_len)
    bad = []
    for w in words:
        nf = rewriting.normalize(rewriting.encode_word(w), rs)
        if rewriting.decode_word(nf) != tableau_of_word(w).column_reading():
            bad.append(w)
        if tuple(sorted(rewriting.decode_word(nf))) != tuple(sorted(w)):
            bad.append(w)
    rep.check("normal form matches tableau reading", len(words), bad)

    tabs = list(iter_tableaux(cfg.rank, cfg.max_len))
    k = multipliers.build_k_acceptor(cfg.rank)
    kwords = {t.columns for t in tabs}
    universe = set(kwords)
    for t in tabs:
        for c in iter_columns(cfg.rank):
            w = t.columns + (c,)
            if sum(len(x) for x in w) <= cfg.max_len + 2:
                universe.add(w)
    bad = [w for w in universe if k.accepts(w) != rewriting.is_normal_form(w, rs)]
    rep.check("normal forms coincide with the K language", len(universe), bad)
    return rep


def verify_automata(cfg: Config) -> Report:
    rep = Report("automata")
    sigma = (1, 2, 3)
    words = [w for L in range(5) for w in itertools.product(sigma, repeat=L)]
    bad = [
        (u, v)
        for u in words
        for v in words
        if tuple(reversed(automata.delta_r(u, v)))
        != automata.delta_l(tuple(reversed(u)), tuple(reversed(v)))
    ]
    rep.check("padded encodings are mirror images", len(words) ** 2, bad)

    copy = automata.Transducer(
        sigma, sigma, {0}, {0}, {0}, [(0, a, (a,), 0) for a in sigma]
    )
    append = automata.Transducer(
        sigma, sigma, {0, 1}, {0}, {1}, [(0, a, (a,), 0) for a in sigma] + [(0, None, (1,), 1)]
    )
    bad = []
    for t, name in ((copy, "copy"), (append, "append")):
        for direction in "RL":
            pa = automata.synchronize(t, direction, 3)
            for u in words:
                expect = {u} if name == "copy" else {u + (1,)}
                for v in words:
                    if pa.accepts_pair(u, v) != (v in expect):
                        bad.append((name, direction, u, v))
    rep.check("synchronization agrees with relation membership", 4 * len(words) ** 2, bad)

    rel = automata.Transducer(sigma, sigma, {0, 1}, {0}, {1}, [(0, 1, (2, 3), 1)])
    twice = automata.reverse_relation(automata.reverse_relation(rel))
    bad = [
        (u, v)
        for u in words
        for v in words
        if automata.transducer_accepts_pair(rel, u, v) != automata.transducer_accepts_pair(twice, u, v)
    ]
    rep.check("double reversal restores the relation", len(words) ** 2, bad)

    composed = automata.compose_relations(copy, append)
    bad = [
        (u, v)
        for u in words
        for v in words
        if automata.transducer_accepts_pair(composed, u, v) != (v == u + (1,))
    ]
    rep.check("composition matches set composition", len(words) ** 2, bad)

    pa = automata.synchronize(append, "R", 3)
    image = {automata.delta_r(u, u + (1,)) for u in words}
    bad = [
        s
        for s in automata.enumerate_accepted(pa.nfa, 5)
        if s not in image
    ]
    rep.check("accepted pair strings are well-formed encodings", len(image), bad)
    return rep


def verify_multipliers(cfg: Config) -> Report:
    rep = Report("multipliers")
    rank = min(cfg.rank, 3)
    cells = min(cfg.max_len, 6)
    rs = rewriting.generate_rules(rank)
    tabs = list(iter_tableaux(rank, cells))
    kwords = [t.columns for t in tabs]
    lwords = [t.column_reading() for t in tabs]

    bad = []
    for gamma in range(1, rank + 1):
        rm = multipliers.right_multiplier(rank, gamma)
        lm = multipliers.left_multiplier(rank, gamma)
        for u in kwords:
            if automata.transducer_outputs(rm, u) != {rewriting.normalize(u + ((gamma,),), rs)}:
                bad.append(("right", gamma, u))
            if automata.transducer_outputs(lm, u) != {rewriting.normalize(((gamma,),) + u, rs)}:
                bad.append(("left", gamma, u))
    rep.check("column multipliers match normalization", 2 * rank * len(kwords), bad)

    rm = multipliers.right_multiplier(rank, 1)
    non_k = [
        w
        for w in itertools.product(list(iter_columns(rank)), repeat=2)
        if not column_ge(w[0], w[1])
    ]
    bad = [u for u in non_k if automata.transducer_outputs(rm, u)]
    rep.check("multiplier domain excludes non-normal words", len(non_k), bad)

    bad = []
    count = 0
    for gamma in [None] + list(range(1, rank + 1)):
        for side in ("right", "left"):
            lifted = multipliers.lifted_multiplier(rank, gamma, side)
            g = (gamma,) if gamma else ()
            for u in lwords:
                count += 1
                prod = u + g if side == "right" else g + u
                if automata.transducer_outputs(lifted, u) != {tableau_of_word(prod).column_reading()}:
                    bad.append((side, gamma, u))
    rep.check("lifted multipliers match tableau products", count, bad)

    bad = []
    count = 0
    for gamma in [None] + list(range(1, rank + 1)):
        machines = multipliers.multiplier_pair_automata(rank, gamma, state_limit=cfg.state_limit)
        g = (gamma,) if gamma else ()
        for (side, direction), pa in machines.items():
            expected = {
                u: tableau_of_word(u + g if side == "right" else g + u).column_reading()
                for u in lwords
            }
            for u in lwords:
                for v in lwords:
                    count += 1
                    if pa.accepts_pair(u, v) != (v == expected[u]):
                        bad.append((side, direction, gamma, u, v))
    rep.check("pair automata agree with the product oracle", count, bad)

    seen = {}
    bad = []
    for t in tabs:
        w = t.column_reading()
        if w in seen:
            bad.append(w)
        seen[w] = t
        if tableau_of_word(w) != t:
            bad.append(w)
    rep.check("column readings biject with tableaux", len(tabs), bad)

    if cfg.thorough:
        # rank-4 spot checks: exhaustive sweeps stay at rank 3 by design
        rs4 = rewriting.generate_rules(4)
        spot = [t.columns for t in iter_tableaux(4, 4)]
        bad = []
        for gamma in range(1, 5):
            rm = multipliers.right_multiplier(4, gamma)
            lm = multipliers.left_multiplier(4, gamma)
            for u in spot:
                if automata.transducer_outputs(rm, u) != {rewriting.normalize(u + ((gamma,),), rs4)}:
                    bad.append(("right", gamma, u))
                if automata.transducer_outputs(lm, u) != {rewriting.normalize(((gamma,),) + u, rs4)}:
                    bad.append(("left", gamma, u))
        rep.check("rank-4 spot: column multipliers", 8 * len(spot), bad)

        lspot = [t.column_reading() for t in iter_tableaux(4, 4)]
        machines = multipliers.multiplier_pair_automata(4, 1, state_limit=cfg.state_limit)
        bad = []
        for (side, direction), pa in machines.items():
            expected = {
                u: tableau_of_word(u + (1,) if side == "right" else (1,) + u).column_reading()
                for u in lspot
            }
            for u in lspot:
                for v in lspot:
                    if pa.accepts_pair(u, v) != (v == expected[u]):
                        bad.append((side, direction, u, v))
        rep.check("rank-4 spot: pair automata", 4 * len(lspot) ** 2, bad)
    return rep


SUITES = {
    "core": verify_core,
    "rewriting": verify_rewriting,
    "automata": verify_automata,
    "multipliers": verify_multipliers,
}


def run(suite: str, cfg: Config) -> list[Report]:
    if suite == "all":
        return [fn(cfg) for fn in SUITES.values()]
    return [SUITES[suite](cfg)]
