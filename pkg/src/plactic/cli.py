"""Command-line front end.

Exit codes: 0 success, 1 verification failure or cross-check mismatch,
2 usage or parse errors.  All exports are byte-deterministic for a fixed
set of flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from plactic import automata, multipliers, rewriting, verify
from plactic.core import (
    check_rank,
    format_word,
    parse_word,
    tableau_of_word,
)
from plactic.errors import NotInL, ParseError, PlacticError, RankError


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def cmd_tableau(args) -> int:
    word = parse_word(args.word, args.rank)
    if not word:
        return 0
    t = tableau_of_word(word)
    print(t.pretty(args.rank))
    print(format_word(t.column_reading(), args.rank))
    return 0


def cmd_normalize(args) -> int:
    rs = rewriting.generate_rules(args.rank, args.pair_budget)
    if args.word.startswith("c:"):
        cword = rewriting.parse_cword(args.word, args.rank)
    else:
        cword = rewriting.encode_word(parse_word(args.word, args.rank))
    nf = rewriting.normalize(cword, rs)
    print(rewriting.format_cword(nf, args.rank))
    print(format_word(rewriting.decode_word(nf), args.rank))
    return 0


def cmd_multiply(args) -> int:
    rank = args.rank
    u = parse_word(args.word, rank)
    gamma = parse_word(args.gamma, rank)
    if len(gamma) != 1:
        raise ParseError(f"generator must be a single letter, got {args.gamma!r}")
    if not multipliers.build_l_acceptor(rank).accepts(u):
        raise NotInL(f"{args.word!r} is not a column reading of a tableau")
    machine = multipliers.lifted_multiplier(rank, gamma[0], args.side)
    outputs = automata.transducer_outputs(machine, u)
    if len(outputs) != 1:
        print(f"internal error: multiplier produced {len(outputs)} outputs", file=sys.stderr)
        return 1
    (result,) = outputs
    if args.check:
        product = u + gamma if args.side == "right" else gamma + u
        expected = tableau_of_word(product).column_reading()
        if result != expected:
            print(
                f"internal error: transducer gave {format_word(result, rank)}, "
                f"normalization gives {format_word(expected, rank)}",
                file=sys.stderr,
            )
            return 1
    print(format_word(result, rank))
    return 0


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_rules(args) -> int:
    rs = rewriting.generate_rules(args.rank, args.pair_budget)
    if args.format == "json":
        _emit(args, json.dumps(rewriting.rules_json(rs), indent=2, sort_keys=True) + "\n")
    else:
        _emit(args, rewriting.rules_text(rs))
    return 0


def cmd_gsb(args) -> int:
    basis = rewriting.gsb_export(rewriting.generate_rules(args.rank, args.pair_budget))
    if args.format == "json":
        _emit(args, json.dumps(rewriting.gsb_json(basis), indent=2, sort_keys=True) + "\n")
    else:
        _emit(args, rewriting.gsb_text(basis))
    return 0


def cmd_machines(args) -> int:
    rank = args.rank
    gamma = None if args.gamma in ("e", "eps", "") else parse_word(args.gamma, rank)[0]
    exports: list[tuple[str, str]] = []

    def render_t(name, machine):
        if args.format == "dot":
            exports.append((f"{name}.dot", automata.transducer_to_dot(machine, name)))
        else:
            exports.append(
                (f"{name}.json", json.dumps(automata.transducer_to_json(machine), sort_keys=True, indent=2) + "\n")
            )

    if gamma is not None:
        render_t(f"right_multiplier_col_{gamma}", multipliers.right_multiplier(rank, gamma))
        render_t(f"left_multiplier_col_{gamma}", multipliers.left_multiplier(rank, gamma))
    for side in ("right", "left"):
        render_t(f"{side}_multiplier_{gamma or 'eps'}", multipliers.lifted_multiplier(rank, gamma, side))
    for (side, direction), pa in sorted(multipliers.multiplier_pair_automata(rank, gamma).items()):
        name = f"pair_{side}_{direction}_{gamma or 'eps'}"
        if args.format == "dot":
            exports.append((f"{name}.dot", automata.pair_automaton_to_dot(pa, name)))
        else:
            payload = automata.nfa_to_json(pa.nfa)
            payload["direction"] = pa.direction
            exports.append((f"{name}.json", json.dumps(payload, sort_keys=True, indent=2) + "\n"))

    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for fname, text in exports:
            (outdir / fname).write_text(text)
        print(f"wrote {len(exports)} files to {outdir}")
    else:
        for fname, text in exports:
            print(f"== {fname} ==")
            sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    cfg = verify.Config(
        rank=args.rank,
        max_len=args.max_len,
        thorough=args.thorough,
        max_class_size=_env_int("PLACTIC_MAX_CLASS", 10**6),
        state_limit=_env_int("PLACTIC_MAX_STATES", 10**6),
        pair_budget=args.pair_budget,
    )
    if args.thorough:
        cfg.rank = max(cfg.rank, 4)
        cfg.max_len = max(cfg.max_len, 7)
    reports = verify.run(args.suite, cfg)
    failed = False
    for rep in reports:
        print(f"[{rep.suite}]")
        for line in rep.lines:
            print("  " + line)
        for failure in rep.failures:
            failed = True
            print("  FAILURE " + failure)
    print("FAIL" if failed else "PASS")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plactic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, rank_default=None):
        if rank_default is None:
            p.add_argument("--rank", type=int, required=True, help="alphabet size")
        else:
            p.add_argument("--rank", type=int, default=rank_default, help="alphabet size")
        p.add_argument(
            "--pair-budget",
            type=int,
            default=_env_int("PLACTIC_PAIR_BUDGET", rewriting.DEFAULT_PAIR_BUDGET),
            help="refuse ranks whose rule table exceeds this many entries",
        )

    p = sub.add_parser("tableau", help="planar tableau and column reading of a word")
    common(p)
    p.add_argument("word")
    p.set_defaults(fn=cmd_tableau)

    p = sub.add_parser("normalize", help="normal form of a word over letters or columns")
    common(p)
    p.add_argument("word", help="letter word, or c:-prefixed column word like c:21,1")
    p.set_defaults(fn=cmd_normalize)

    p = sub.add_parser("multiply", help="multiply a normal form by a generator via transducer")
    common(p)
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("--check", action="store_true", help="cross-validate against normalization")
    p.add_argument("word")
    p.add_argument("gamma")
    p.set_defaults(fn=cmd_multiply)

    p = sub.add_parser("rules", help="export the rewriting rules")
    common(p)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_rules)

    p = sub.add_parser("gsb", help="export the binomial basis")
    common(p)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gsb)

    p = sub.add_parser("machines", help="export multiplier transducers and pair automata")
    common(p)
    p.add_argument("--gamma", required=True, help="a letter, or 'eps' for the identity")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--out", default=None, help="directory for one file per machine")
    p.set_defaults(fn=cmd_machines)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    common(p, rank_default=3)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--thorough", action="store_true", help="raise bounds to rank 4, length 7")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        check_rank(args.rank)
        return args.fn(args)
    except (ParseError, RankError, NotInL) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PlacticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
