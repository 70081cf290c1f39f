"""Command-line interface.

Exit codes: 0 success / holds, 1 violation or counterexample found, 2 error.
"""
from __future__ import annotations

import argparse
import logging
import os
import random
import sys
import warnings

from . import axioms, emit
from .attacks import TooLarge, attack_graph, omit_trivial
from .dsl import DslSyntaxError, parse
from .framework import FrameworkError
from .generate import random_framework
from .nmr import Direction, Mode, NmrProperty, Setting, SettingMismatch, evaluate
from .oracle import Oracle
from .semantics import ALL_SEMANTICS, Family, SemanticsId, all_extensions, extensions

log = logging.getLogger("abaplus")

FAMILIES = [f.value for f in Family]
CHECKS = [
    "contraposition",
    "weak-contraposition",
    "conflict-preservation",
    "empty-preferences",
    "maximal-elements",
    "principle-one",
]


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        fw = parse(_read(args.input))
    for w in caught:
        log.warning("%s", w.message)
    return fw


def _families(args):
    return [Family(s) for s in (args.sem or FAMILIES)]


def cmd_solve(args):
    fw = _load(args)
    result = extensions(fw, SemanticsId(Family(args.sem), not args.plain), args.max_assumptions)
    for note in result.notes:
        log.warning("%s", note)
    print(emit.emit_extensions(result))
    return 0


def cmd_check(args):
    fw = _load(args)
    pref = not args.plain
    if args.name == "contraposition":
        reports = [axioms.check_contraposition(fw)]
    elif args.name == "weak-contraposition":
        reports = [axioms.check_weak_contraposition(fw)]
    elif args.name == "empty-preferences":
        reports = [axioms.check_empty_preferences(fw, f) for f in _families(args)]
    else:
        fn = {
            "conflict-preservation": axioms.check_conflict_preservation,
            "maximal-elements": axioms.check_maximal_elements,
            "principle-one": axioms.check_principle_one,
        }[args.name]
        reports = [fn(fw, SemanticsId(f, pref)) for f in _families(args)]
    print(emit.dumps({"reports": [r.to_dict() for r in reports]}))
    return 0 if all(r.holds for r in reports) else 1


def cmd_nmr(args):
    fw = _load(args)
    prop = NmrProperty(Direction(args.prop), Mode(args.mode))
    reports = [
        evaluate(fw, SemanticsId(f), Setting(args.setting), prop, args.psi, args.max_assumptions)
        for f in _families(args)
    ]
    print(emit.dumps({"reports": [r.to_dict() for r in reports]}))
    return 1 if any(r.violations for r in reports) else 0


def cmd_graph(args):
    fw = _load(args)
    node_filter = omit_trivial(fw) if args.omit_trivial else None
    print(emit.emit_dot(attack_graph(fw, args.preferences, node_filter)), end="")
    return 0


def _cross_check(fw, bound):
    oracle = Oracle(fw)
    diffs = []
    for sem, result in all_extensions(fw, ALL_SEMANTICS, bound).items():
        expected = oracle.extensions(sem.family.value, sem.preference_aware)
        if result.members() != expected:
            diffs.append({
                "semantics": str(sem),
                "engine": sorted(sorted(e) for e in result.members()),
                "oracle": sorted(sorted(e) for e in expected),
            })
    return diffs


def cmd_oracle(args):
    out = []
    if args.random:
        rng = random.Random(args.seed)
        for i in range(args.random):
            fw = random_framework(rng, max_assumptions=min(args.max_assumptions, 6))
            diffs = _cross_check(fw, args.max_assumptions)
            if diffs:
                from .dsl import render

                out.append({"instance": i, "framework": render(fw), "divergences": diffs})
        print(emit.dumps({"seed": args.seed, "instances": args.random, "divergent": out}))
    else:
        diffs = _cross_check(_load(args), args.max_assumptions)
        out = diffs
        print(emit.dumps({"divergences": diffs}))
    return 1 if out else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=int(os.environ.get("ABAP_SEED", 0)))
    common.add_argument("--max-assumptions", type=int, default=int(os.environ.get("ABAP_MAX_A", 20)),
                        help="enumeration bound on the number of assumptions")
    common.add_argument("-v", "--verbose", action="store_true")
    p = argparse.ArgumentParser(prog="abaplus", description="Reasoning over flat ABA frameworks with preferences.")
    sub = p.add_subparsers(dest="command", required=True)
    commands = p.commands = {}

    def with_input(sp, *first):
        for name, kw in first:
            sp.add_argument(name, **kw)
        sp.add_argument("input", nargs="?", default="-", help="framework file (default: stdin)")
        return sp

    def command(name, help):
        sp = sub.add_parser(name, help=help, parents=[common])
        commands[name] = sp
        return sp

    sp = with_input(command("solve", "enumerate extensions"))
    sp.add_argument("--sem", choices=FAMILIES, required=True)
    sp.add_argument("--plain", action="store_true", help="ignore preferences")
    sp.set_defaults(func=cmd_solve)

    sp = with_input(command("check", "axioms and preference-handling principles"),
                    ("name", {"choices": CHECKS}))
    sp.add_argument("--sem", choices=FAMILIES, action="append", help="repeatable; default all")
    sp.add_argument("--plain", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_check)

    sp = with_input(command("nmr", "CUT / MON under the STRICT or ASM transform"))
    sp.add_argument("--setting", choices=[s.value for s in Setting], required=True)
    sp.add_argument("--prop", choices=[d.value for d in Direction], required=True)
    sp.add_argument("--mode", choices=[m.value for m in Mode], required=True)
    sp.add_argument("--psi", help="only this sentence")
    sp.add_argument("--sem", choices=FAMILIES, action="append", help="repeatable; default all")
    sp.set_defaults(func=cmd_nmr)

    sp = with_input(command("graph", "assumption-set attack graph as DOT"))
    sp.add_argument("--preferences", action="store_true", help="use the preference-aware relation")
    sp.add_argument("--omit-trivial", action="store_true", help="drop the empty and the full set")
    sp.set_defaults(func=cmd_graph)

    sp = with_input(command("oracle", "cross-check the engine against brute force"))
    sp.add_argument("--random", type=int, metavar="N", help="check N random frameworks instead of input")
    sp.set_defaults(func=cmd_oracle)
    return p


def parse_args(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    if argv and argv[0] in parser.commands:
        # options and positionals may interleave after the subcommand
        args = parser.commands[argv[0]].parse_intermixed_args(argv[1:])
        args.command = argv[0]
        return args
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (DslSyntaxError, FrameworkError, TooLarge, SettingMismatch, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
