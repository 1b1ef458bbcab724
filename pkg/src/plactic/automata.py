"""Finite automata, transducers, padded pair encodings, and synchronization.

Symbols and states are arbitrary hashable values; epsilon is represented by
None.  Machines are immutable after construction and all operations here are
pure.  `synchronize` turns a bounded-length-discrepancy rational relation
into an automaton over padded letter pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from plactic.errors import DelayExceeded, ResourceLimit

PAD = "$"

Symbol = Hashable
State = Hashable


def _skey(x) -> str:
    return repr(x)


class Nfa:
    """Nondeterministic finite automaton with epsilon moves (symbol None)."""

    def __init__(self, alphabet, states, initial, accepting, transitions):
        self.alphabet = frozenset(alphabet)
        self.states = frozenset(states)
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        self.transitions = tuple(sorted(set(transitions), key=_skey))
        if not self.initial <= self.states or not self.accepting <= self.states:
            raise ValueError("initial/accepting states must be declared states")
        self._eps: dict[State, tuple[State, ...]] = {}
        self._step: dict[tuple[State, Symbol], list[State]] = {}
        for src, sym, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError(f"undeclared state in transition {(src, sym, dst)!r}")
            if sym is None:
                self._eps.setdefault(src, ())
                self._eps[src] = self._eps[src] + (dst,)
            else:
                if sym not in self.alphabet:
                    raise ValueError(f"undeclared symbol {sym!r}")
                self._step.setdefault((src, sym), []).append(dst)
        self._closure_cache: dict[frozenset, frozenset] = {}
        self._move_cache: dict[tuple[frozenset, Symbol], frozenset] = {}

    def closure(self, states: frozenset) -> frozenset:
        cached = self._closure_cache.get(states)
        if cached is not None:
            return cached
        out = set(states)
        queue = deque(states)
        while queue:
            for nxt in self._eps.get(queue.popleft(), ()):
                if nxt not in out:
                    out.add(nxt)
                    queue.append(nxt)
        result = frozenset(out)
        self._closure_cache[states] = result
        return result

    def start_set(self) -> frozenset:
        return self.closure(self.initial)

    def move(self, frontier: frozenset, sym: Symbol) -> frozenset:
        """One consumed symbol, with closure; memoized per frontier set."""
        key = (frontier, sym)
        cached = self._move_cache.get(key)
        if cached is not None:
            return cached
        nxt: set[State] = set()
        for q in frontier:
            nxt.update(self._step.get((q, sym), ()))
        result = self.closure(frozenset(nxt)) if nxt else frozenset()
        self._move_cache[key] = result
        return result

    def accepts(self, word: Sequence[Symbol]) -> bool:
        cur = self.start_set()
        for sym in word:
            cur = self.move(cur, sym)
            if not cur:
                return False
        return bool(cur & self.accepting)


def nfa_accepts(a: Nfa, w: Sequence[Symbol]) -> bool:
    return a.accepts(w)


def enumerate_accepted(a: Nfa, max_len: int) -> Iterator[tuple]:
    """All accepted words of length <= max_len, by pruned depth-first search."""
    symbols = sorted(a.alphabet, key=_skey)

    def walk(frontier: frozenset, prefix: tuple):
        if frontier & a.accepting:
            yield prefix
        if len(prefix) == max_len:
            return
        for sym in symbols:
            nxt = a.move(frontier, sym)
            if nxt:
                yield from walk(nxt, prefix + (sym,))

    yield from walk(a.start_set(), ())


class Transducer:
    """Finite transducer: transitions consume one input symbol (or None) and
    emit a bounded output word."""

    def __init__(self, in_alphabet, out_alphabet, states, initial, accepting, transitions):
        self.in_alphabet = frozenset(in_alphabet)
        self.out_alphabet = frozenset(out_alphabet)
        self.states = frozenset(states)
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        norm = set()
        for src, sym, out, dst in transitions:
            norm.add((src, sym, tuple(out), dst))
        self.transitions = tuple(sorted(norm, key=_skey))
        if not self.initial <= self.states or not self.accepting <= self.states:
            raise ValueError("initial/accepting states must be declared states")
        self._by_state: dict[State, list[tuple[Symbol, tuple, State]]] = {}
        for src, sym, out, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise ValueError("undeclared state in transducer transition")
            if sym is not None and sym not in self.in_alphabet:
                raise ValueError(f"undeclared input symbol {sym!r}")
            for y in out:
                if y not in self.out_alphabet:
                    raise ValueError(f"undeclared output symbol {y!r}")
            self._by_state.setdefault(src, []).append((sym, out, dst))

    def arcs_from(self, state: State):
        return self._by_state.get(state, ())

    def max_output_len(self) -> int:
        return max((len(out) for _, _, out, _ in self.transitions), default=0)


def transducer_outputs(t: Transducer, u: Sequence[Symbol], bound: int = 10**6) -> set[tuple]:
    """All outputs paired with input u, by bounded configuration search.

    Raises ResourceLimit when more than `bound` configurations get explored,
    which signals an output-unbounded machine or too small a bound.
    """
    u = tuple(u)
    results: set[tuple] = set()
    seen: set[tuple] = set()
    queue: deque = deque()
    for q in t.initial:
        cfg = (q, 0, ())
        seen.add(cfg)
        queue.append(cfg)
    while queue:
        q, i, out = queue.popleft()
        if i == len(u) and q in t.accepting:
            results.add(out)
        for sym, emitted, dst in t.arcs_from(q):
            if sym is None:
                nxt = (dst, i, out + emitted)
            elif i < len(u) and u[i] == sym:
                nxt = (dst, i + 1, out + emitted)
            else:
                continue
            if nxt not in seen:
                if len(seen) >= bound:
                    raise ResourceLimit(f"transducer exploration exceeded {bound} configurations")
                seen.add(nxt)
                queue.append(nxt)
    return results


def transducer_accepts_pair(t: Transducer, u: Sequence[Symbol], v: Sequence[Symbol]) -> bool:
    """Membership of (u, v) in the relation, by search over (state, i, j)."""
    u, v = tuple(u), tuple(v)
    seen = set()
    queue: deque = deque()
    for q in t.initial:
        cfg = (q, 0, 0)
        seen.add(cfg)
        queue.append(cfg)
    while queue:
        q, i, j = queue.popleft()
        if i == len(u) and j == len(v) and q in t.accepting:
            return True
        for sym, out, dst in t.arcs_from(q):
            ni = i
            if sym is not None:
                if i >= len(u) or u[i] != sym:
                    continue
                ni = i + 1
            nj = j + len(out)
            if nj > len(v) or v[j:nj] != out:
                continue
            cfg = (dst, ni, nj)
            if cfg not in seen:
                seen.add(cfg)
                queue.append(cfg)
    return False


def trim(t: Transducer) -> Transducer:
    """Restrict to states both reachable and co-reachable."""
    fwd: dict[State, set[State]] = {}
    bwd: dict[State, set[State]] = {}
    for src, _, _, dst in t.transitions:
        fwd.setdefault(src, set()).add(dst)
        bwd.setdefault(dst, set()).add(src)

    def sweep(seeds, edges):
        seen = set(seeds)
        queue = deque(seeds)
        while queue:
            for nxt in edges.get(queue.popleft(), ()):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return seen

    reach = sweep(t.initial, fwd)
    coreach = sweep(t.accepting, bwd)
    keep = reach & coreach
    return Transducer(
        t.in_alphabet,
        t.out_alphabet,
        keep or {"dead"},
        t.initial & keep,
        t.accepting & keep,
        [tr for tr in t.transitions if tr[0] in keep and tr[3] in keep],
    )


def reverse_relation(t: Transducer) -> Transducer:
    """The reversed relation: flip every transition, reverse its output word,
    and swap initial with accepting states."""
    return Transducer(
        t.in_alphabet,
        t.out_alphabet,
        t.states,
        t.accepting,
        t.initial,
        [(dst, sym, tuple(reversed(out)), src) for src, sym, out, dst in t.transitions],
    )


def compose_relations(s: Transducer, t: Transducer) -> Transducer:
    """Relational composition: pairs (u, w) with some v where (u,v) in s and
    (v,w) in t.  Product construction; s-outputs are buffered and fed to t
    symbol by symbol, so buffers never exceed one s-transition's output."""
    start = [(q, r, ()) for q in s.initial for r in t.initial]
    seen = set(start)
    queue = deque(start)
    transitions = []
    while queue:
        state = queue.popleft()
        q, r, pending = state

        def push(sym, out, nxt):
            transitions.append((state, sym, out, nxt))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)

        if pending:
            head, rest = pending[0], pending[1:]
            for sym, out, r2 in t.arcs_from(r):
                if sym == head:
                    push(None, out, (q, r2, rest))
        else:
            for sym, out, q2 in s.arcs_from(q):
                push(sym, (), (q2, r, tuple(out)))
        for sym, out, r2 in t.arcs_from(r):
            if sym is None:
                push(None, out, (q, r2, pending))
    accepting = {
        (q, r, pend) for (q, r, pend) in seen if pend == () and q in s.accepting and r in t.accepting
    }
    composed = Transducer(
        s.in_alphabet,
        t.out_alphabet,
        seen,
        {st for st in start},
        accepting,
        transitions,
    )
    return trim(composed)


def rational_image(t: Transducer, m: Nfa) -> Nfa:
    """The image of a regular language under a rational relation, as an NFA
    over the transducer's output alphabet."""
    m_eps: dict[State, list[State]] = {}
    m_step: dict[State, list[tuple[Symbol, State]]] = {}
    for src, sym, dst in m.transitions:
        if sym is None:
            m_eps.setdefault(src, []).append(dst)
        else:
            m_step.setdefault(src, []).append((sym, dst))

    start = [(p, q, ()) for p in m.initial for q in t.initial]
    seen = set(start)
    queue = deque(start)
    transitions = []
    while queue:
        state = queue.popleft()
        p, q, pending = state

        def push(sym, nxt):
            transitions.append((state, sym, nxt))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)

        if pending:
            push(pending[0], (p, q, pending[1:]))
            continue
        for p2 in m_eps.get(p, ()):
            push(None, (p2, q, ()))
        for sym, out, q2 in t.arcs_from(q):
            if sym is None:
                push(None, (p, q2, tuple(out)))
            else:
                for x, p2 in m_step.get(p, ()):
                    if x == sym:
                        push(None, (p2, q2, tuple(out)))
    accepting = {
        (p, q, pend) for (p, q, pend) in seen if pend == () and p in m.accepting and q in t.accepting
    }
    return Nfa(t.out_alphabet, seen, set(start), accepting, transitions)


# -- padded pair encodings ----------------------------------------------


def delta_r(u: Sequence, v: Sequence) -> tuple:
    """Right-padded convolution: letters pair up from the left, the shorter
    word is padded with $ at its end."""
    lu, lv = len(u), len(v)
    if lu == lv:
        return tuple(zip(u, v))
    if lu > lv:
        return tuple(zip(u, v)) + tuple((x, PAD) for x in u[lv:])
    return tuple(zip(u, v)) + tuple((PAD, y) for y in v[lu:])


def delta_l(u: Sequence, v: Sequence) -> tuple:
    """Left-padded convolution: words align at their right ends and the
    shorter one is padded with $ at its start."""
    lu, lv = len(u), len(v)
    if lu == lv:
        return tuple(zip(u, v))
    if lu > lv:
        d = lu - lv
        return tuple((x, PAD) for x in u[:d]) + tuple(zip(u[d:], v))
    d = lv - lu
    return tuple((PAD, y) for y in v[:d]) + tuple(zip(u, v[d:]))


@dataclass(frozen=True)
class PairAutomaton:
    """An NFA over padded letter pairs, tagged with its encoding direction."""

    nfa: Nfa
    direction: str  # "R" or "L"

    def accepts_pair(self, u: Sequence, v: Sequence) -> bool:
        enc = delta_r(u, v) if self.direction == "R" else delta_l(u, v)
        return self.nfa.accepts(enc)


def pair_automaton_accepts(p: PairAutomaton, u: Sequence, v: Sequence) -> bool:
    return p.accepts_pair(u, v)


def _relation_samples(t: Transducer, max_arcs: int, cap: int) -> set[tuple[tuple, tuple]]:
    """Pairs of the relation realized by accepting paths of <= max_arcs arcs."""
    pairs: set[tuple[tuple, tuple]] = set()
    queue = deque(((q, (), ()) for q in t.initial))
    depth = {cfg: 0 for cfg in queue}
    while queue:
        cfg = queue.popleft()
        q, u, v = cfg
        if q in t.accepting:
            pairs.add((u, v))
            if len(pairs) >= cap:
                return pairs
        if depth[cfg] == max_arcs:
            continue
        for sym, out, dst in t.arcs_from(q):
            nxt = (dst, u + ((sym,) if sym is not None else ()), v + out)
            if nxt not in depth:
                depth[nxt] = depth[cfg] + 1
                queue.append(nxt)
    return pairs


def synchronize(
    t: Transducer,
    direction: str,
    max_delay: int,
    state_limit: int = 10**6,
) -> PairAutomaton:
    """Letter-to-letter automaton accepting the padded encodings of t's relation.

    Simulates t against the pair string with a buffer of emitted-but-unmatched
    (or awaited) output symbols; configurations whose buffer would exceed
    `max_delay` are dropped.  When drops occurred, short relation pairs
    enumerated straight from t's transition graph are re-checked against the
    result and any miss raises DelayExceeded (the bound was genuinely too
    small).  Construction aborts with ResourceLimit past `state_limit`
    configurations.
    """
    if direction not in ("R", "L"):
        raise ValueError(f"direction must be 'R' or 'L', got {direction!r}")
    t = trim(t)
    base = sorted(t.in_alphabet | t.out_alphabet, key=_skey)
    letters = [(x, y) for x in base + [PAD] for y in base + [PAD] if (x, y) != (PAD, PAD)]

    pruned = 0

    def emit(out, prod, owed, v_closed):
        # feed emitted symbols through the awaited queue, overflow to prod;
        # once the right word closed, only awaited symbols may still be emitted
        prod = list(prod)
        owed = list(owed)
        for sym in out:
            if owed:
                if owed[0] != sym:
                    return None
                owed.pop(0)
            else:
                if v_closed:
                    return None
                prod.append(sym)
        return tuple(prod), tuple(owed)

    # configuration: (t-state, produced, awaited, left flag, right flag)
    # R: flags mean "that side already hit $"; L: "that side started real letters"
    init = [(q, (), (), False, False) for q in sorted(t.initial, key=_skey)]
    seen = set(init)
    queue = deque(init)
    transitions = []
    accepting = set()

    def store(cfg, label, nxt):
        # buffer caps apply to stored configurations only; within one pair
        # letter the awaited queue may transiently exceed the bound
        nonlocal pruned
        if len(nxt[1]) > max_delay or len(nxt[2]) > max_delay:
            pruned += 1
            return
        transitions.append((cfg, label, nxt))
        if nxt not in seen:
            if len(seen) >= state_limit:
                raise ResourceLimit(f"synchronize exceeded {state_limit} configurations")
            seen.add(nxt)
            queue.append(nxt)

    while queue:
        cfg = queue.popleft()
        q, prod, owed, fl, fr = cfg
        if q in t.accepting and not prod and not owed:
            accepting.add(cfg)
        # epsilon arcs of t run freely between pair letters
        v_closed = fr if direction == "R" else False
        for sym, out, dst in t.arcs_from(q):
            if sym is not None:
                continue
            buf = emit(out, prod, owed, v_closed)
            if buf is not None:
                store(cfg, None, (dst, buf[0], buf[1], fl, fr))
        for x, y in letters:
            if direction == "R":
                if x == PAD:
                    nfl = True
                elif fl:
                    continue
                else:
                    nfl = False
                if y == PAD:
                    if prod:
                        continue  # emitted symbols beyond the right word
                    nfr = True
                elif fr:
                    continue
                else:
                    nfr = False
            else:
                if x == PAD:
                    if fl:
                        continue  # $ only as a prefix
                    nfl = False
                else:
                    nfl = True
                if y == PAD:
                    if fr:
                        continue
                    nfr = False
                else:
                    nfr = True
            # the right letter first: match it or add to the awaited queue
            prod2, owed2 = prod, owed
            if y != PAD:
                if prod2:
                    if prod2[0] != y:
                        continue
                    prod2 = prod2[1:]
                else:
                    owed2 = owed2 + (y,)
            v_closed = nfr if direction == "R" else False
            if x == PAD:
                store(cfg, (x, y), (q, prod2, owed2, nfl, nfr))
            else:
                for sym, out, dst in t.arcs_from(q):
                    if sym != x:
                        continue
                    buf = emit(out, prod2, owed2, v_closed)
                    if buf is not None:
                        store(cfg, (x, y), (dst, buf[0], buf[1], nfl, nfr))

    nfa = Nfa(set(letters), seen, set(init), accepting, transitions)
    result = PairAutomaton(nfa, direction)
    if pruned:
        # cheap soundness probe: short pairs read off the transition graph
        # must survive; subtle losses on longer pairs are the exhaustive
        # verification suites' job to catch
        encode = delta_r if direction == "R" else delta_l
        for u, v in sorted(_relation_samples(t, max_arcs=6, cap=4000), key=_skey):
            if not nfa.accepts(encode(u, v)):
                raise DelayExceeded(
                    f"pair {(u, v)!r} lost at max_delay={max_delay} (direction {direction})"
                )
    return result


# -- export --------------------------------------------------------------


def _number_states(initial, transitions_by_state, all_states) -> dict:
    """Stable numbering: breadth-first from the initial states, then any rest."""
    order: dict[State, int] = {}
    queue = deque(sorted(initial, key=_skey))
    for q in queue:
        order[q] = len(order)
    while queue:
        q = queue.popleft()
        for dst in transitions_by_state.get(q, ()):
            if dst not in order:
                order[dst] = len(order)
                queue.append(dst)
    for q in sorted(all_states, key=_skey):
        if q not in order:
            order[q] = len(order)
    return order


def _sym_label(sym) -> str:
    if sym is None:
        return "eps"
    if isinstance(sym, tuple):
        return "".join(str(x) for x in sym) if sym else "eps"
    return str(sym)


def nfa_to_json(a: Nfa) -> dict:
    succ: dict[State, list[State]] = {}
    for src, _, dst in a.transitions:
        succ.setdefault(src, []).append(dst)
    num = _number_states(a.initial, {k: sorted(v, key=_skey) for k, v in succ.items()}, a.states)
    return {
        "type": "nfa",
        "states": len(num),
        "alphabet": sorted(_sym_label(s) for s in a.alphabet),
        "initial": sorted(num[q] for q in a.initial),
        "accepting": sorted(num[q] for q in a.accepting),
        "transitions": sorted(
            [num[src], _sym_label(sym), num[dst]] for src, sym, dst in a.transitions
        ),
    }


def transducer_to_json(t: Transducer) -> dict:
    succ: dict[State, list[State]] = {}
    for src, _, _, dst in t.transitions:
        succ.setdefault(src, []).append(dst)
    num = _number_states(t.initial, {k: sorted(v, key=_skey) for k, v in succ.items()}, t.states)
    return {
        "type": "transducer",
        "states": len(num),
        "input_alphabet": sorted(_sym_label(s) for s in t.in_alphabet),
        "output_alphabet": sorted(_sym_label(s) for s in t.out_alphabet),
        "initial": sorted(num[q] for q in t.initial),
        "accepting": sorted(num[q] for q in t.accepting),
        "transitions": sorted(
            [num[src], _sym_label(sym), [_sym_label(y) for y in out], num[dst]]
            for src, sym, out, dst in t.transitions
        ),
    }


def nfa_to_dot(a: Nfa, name: str = "nfa") -> str:
    data = nfa_to_json(a)
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for q in data["accepting"]:
        lines.append(f'  "{q}" [shape=doublecircle];')
    for q in data["initial"]:
        lines.append(f'  "start{q}" [shape=point]; "start{q}" -> "{q}";')
    for src, sym, dst in data["transitions"]:
        lines.append(f'  "{src}" -> "{dst}" [label="{sym}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def transducer_to_dot(t: Transducer, name: str = "transducer") -> str:
    data = transducer_to_json(t)
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for q in data["accepting"]:
        lines.append(f'  "{q}" [shape=doublecircle];')
    for q in data["initial"]:
        lines.append(f'  "start{q}" [shape=point]; "start{q}" -> "{q}";')
    for src, sym, out, dst in data["transitions"]:
        label = f"{sym}/{''.join(out) if out else 'eps'}"
        lines.append(f'  "{src}" -> "{dst}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def pair_automaton_to_dot(p: PairAutomaton, name: str = "pair") -> str:
    data = nfa_to_json(p.nfa)
    lines = [f"digraph {name} {{", "  rankdir=LR;", f'  label="direction {p.direction}";', "  node [shape=circle];"]
    for q in data["accepting"]:
        lines.append(f'  "{q}" [shape=doublecircle];')
    for q in data["initial"]:
        lines.append(f'  "start{q}" [shape=point]; "start{q}" -> "{q}";')
    for src, sym, dst in data["transitions"]:
        lines.append(f'  "{src}" -> "{dst}" [label="({sym})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
