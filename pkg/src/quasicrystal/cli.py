"""Command-line front end.

Exit codes: 0 success (or "congruent" / "identity holds"), 1 negative answer,
2 usage or parse error, 3 vertex budget exceeded, 4 invalid data.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import hypoplactic as hp
from . import qc_core, rootsys
from .errors import BudgetExceeded, QuasiCrystalError, RankTooSmall, WordParseError
from .qgraph import congruent, explore, export
from .word_monoid import StandardAlphabet, alphabet, format_word, parse_word, word_class

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET, EXIT_INVALID = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _alphabet(kind: str, n: int) -> StandardAlphabet:
    if n < 2:
        raise RankTooSmall(f"rank must be >= 2, got {n}")
    return alphabet(kind, n)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_explore(args) -> int:
    alpha = _alphabet(args.type, args.rank)
    w = parse_word(alpha, args.word)
    comp = explore(alpha, w, args.budget)
    out = export(comp, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if args.plot:
        from .plotting import plot_component

        plot_component(comp, args.plot, title=f"{args.type}{args.rank}: {format_word(w) or 'ε'}")
    return EXIT_OK


def cmd_congruent(args) -> int:
    alpha = _alphabet(args.type, args.rank)
    u, v = parse_word(alpha, args.left), parse_word(alpha, args.right)
    if args.classical:
        if args.type != "A":
            raise UsageError("--classical applies to type A only")
        verdict = hp.classical_congruent_A(args.rank, u, v)
    else:
        verdict = congruent(alpha, u, v, args.budget)
    payload = {"left": list(u), "right": list(v), "congruent": verdict, "method": "classical" if args.classical else "graph"}
    _emit(args, payload, "congruent" if verdict else "not congruent")
    return EXIT_OK if verdict else EXIT_NO


def cmd_classify(args) -> int:
    alpha = _alphabet(args.type, args.rank)
    w = parse_word(alpha, args.word)
    cls = word_class(alpha, w)
    payload = {
        "word": list(w),
        "weight": list(alpha.wt(w)),
        "highest_weight": cls.highest_weight,
        "lowest_weight": cls.lowest_weight,
        "isolated": cls.isolated,
        "commutative": hp.is_commutative(alpha, w),
        "idempotent": hp.is_idempotent(alpha, w),
    }
    if alpha.kind is rootsys.Kind.C:
        payload["inv"] = list(hp.inv_signature(alpha, w))
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_normalize(args) -> int:
    if args.rank != 2:
        raise UsageError("the normal form is available for type C on two letters only")
    alpha = _alphabet("C", 2)
    w = parse_word(alpha, args.word)
    nf = hp.normal_form_C2(w, method=args.method)
    text = (f"family: {nf.family.value}\nparams: {' '.join(map(str, nf.params))}\n"
            f"representative: {format_word(nf.representative)}\nword: {format_word(nf.word)}")
    _emit(args, nf.to_json(), text)
    return EXIT_OK


def cmd_identity(args) -> int:
    alpha = _alphabet(args.type, args.rank)
    if not args.lhs.isalpha() or not args.rhs.isalpha():
        raise UsageError("identity sides must be strings of variable letters")
    found = hp.check_identity(args.lhs, args.rhs, alpha, args.max_len, args.budget, args.jobs)
    if found is None:
        payload = {"holds_up_to_bound": True, "max_len": args.max_len, "counterexample": None}
        _emit(args, payload, f"holds up to bound {args.max_len}")
        return EXIT_OK
    payload = {"holds_up_to_bound": False, "max_len": args.max_len,
               "counterexample": {k: list(v) for k, v in found.items()}}
    text = "counterexample: " + ", ".join(f"{k}={format_word(v) or 'ε'}" for k, v in found.items())
    _emit(args, payload, text)
    return EXIT_NO


def cmd_validate(args) -> int:
    results: dict = {}
    if args.root:
        with open(args.root, encoding="utf-8") as fh:
            rd = rootsys.from_json(fh.read())
        results["root_axioms"] = rootsys.validate_root_axioms(rd, rootsys.reflection_closure(rd)).to_json()
    if args.table:
        with open(args.table, encoding="utf-8") as fh:
            table = qc_core.table_from_json(fh.read())
    elif args.type:
        rd = rootsys.named(args.type, args.rank)
        results["root_axioms"] = rootsys.validate_root_axioms(rd, rootsys.generated_roots(rd)).to_json()
        table = qc_core.standard_A(args.rank) if args.type == "A" else qc_core.standard_C(args.rank)
    else:
        table = None
    if table is not None:
        report = qc_core.validate_quasicrystal(table)
        results["quasicrystal"] = report.to_json()
        results["seminormal"] = report.ok and qc_core.is_seminormal(table)
        if args.fuzz:
            results["mutation_trials"] = args.fuzz
            results["mutations_missed"] = qc_core.mutation_misses(table, args.fuzz, args.seed)
    if not results:
        raise UsageError("give --type/--rank, --table or --root")
    ok = all(v.get("ok", True) for v in results.values() if isinstance(v, dict)) and not results.get("mutations_missed")
    lines = []
    for name, value in results.items():
        if isinstance(value, dict):
            lines.append(f"{name}: {'ok' if value['ok'] else 'violations'}")
            lines += [f"  {v}" for v in value["violations"]]
        else:
            lines.append(f"{name}: {value}")
    _emit(args, results, "\n".join(lines))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_embed(args) -> int:
    n = args.rank
    source_kind = args.source
    src = _alphabet(source_kind, n - 1) if n - 1 >= 2 else None
    w = parse_word(src, args.word) if src else tuple(int(t) for t in args.word.split())
    image = hp.embed_A_to_C(w, n) if source_kind == "A" else hp.embed_C_to_C(w, n)
    payload = {"source": list(w), "image": list(image), "target": {"kind": "C", "n": n}}
    _emit(args, payload, format_word(image))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--budget", type=int, default=None, help="vertex budget (default: QCK_BUDGET or 1000000)")

    p = argparse.ArgumentParser(prog="quasicrystal", description="Quasi-crystals, word monoids and hypoplactic congruence.")
    sub = p.add_subparsers(dest="command", required=True)

    def typed(name: str, help_: str, need_type: bool = True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if need_type:
            sp.add_argument("--type", choices=("A", "C"), required=True)
            sp.add_argument("--rank", type=int, required=True, help="alphabet size n")
        return sp

    sp = typed("explore", "export the component of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    sp.add_argument("--out")
    sp.add_argument("--plot", metavar="FILE", help="also render the component to an image file")
    sp.set_defaults(func=cmd_explore)

    sp = typed("congruent", "decide hypoplactic congruence of two words")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--classical", action="store_true", help="use the type A rewriting procedure")
    sp.set_defaults(func=cmd_congruent)

    sp = typed("classify", "highest/lowest weight, isolation, commutativity, idempotence")
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_classify)

    sp = typed("normalize", "normal form of a type C word on two letters", need_type=False)
    sp.add_argument("--type", choices=("C",), default="C")
    sp.add_argument("--rank", type=int, default=2)
    sp.add_argument("--word", required=True)
    sp.add_argument("--method", choices=("cases", "search"), default="cases")
    sp.set_defaults(func=cmd_normalize)

    sp = typed("identity", "check an identity for all substitutions up to a length")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.set_defaults(func=cmd_identity)

    sp = typed("validate", "check root axioms and quasi-crystal axioms", need_type=False)
    sp.add_argument("--type", choices=("A", "C"))
    sp.add_argument("--rank", type=int, default=2)
    sp.add_argument("--table", help="quasi-crystal table JSON file")
    sp.add_argument("--root", help="explicit root data JSON file")
    sp.add_argument("--fuzz", type=int, default=0, help="number of seeded mutation trials")
    sp.set_defaults(func=cmd_validate)

    sp = typed("embed", "embed a word into type C on --rank letters", need_type=False)
    sp.add_argument("--source", choices=("A", "C"), required=True, help="source alphabet kind on rank-1 letters")
    sp.add_argument("--rank", type=int, required=True, help="target alphabet size n >= 3")
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_embed)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.budget is not None and args.budget < 1:
            raise UsageError("--budget must be >= 1")
        return args.func(args)
    except (WordParseError, UsageError, RankTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (QuasiCrystalError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
