"""Command line: ``ltlearn learn | generate | check``.

Exit codes for ``learn``: 0 found, 3 no separator exists, 4 none within
the size bound, 2 bad input.  ``check``: 0 separates, 1 does not, 2 bad
input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .dispatch import MODES, learn
from .exact import ResourceExhaustedError
from .formula import evaluate
from .reductions import (
    HittingSetInstance, SetCoverInstance, gen_hitting_Fand_fixed3,
    gen_hitting_Fand_unbounded, gen_hitting_For, gen_hitting_Gor_fixed3,
    gen_setcover_Xand, pad_for_X_fragments,
)
from .sample import SampleError, Status, load_sample, save_sample, separates, word_text
from .syntax import FormulaSyntaxError, parse
from .validation import check_fragment

EXIT_FOUND = 0
EXIT_INPUT = 2
EXIT_NO_SEPARATOR = 3
EXIT_NONE_WITHIN = 4

_STATUS_EXIT = {
    Status.FOUND: EXIT_FOUND,
    Status.NO_SEPARATOR: EXIT_NO_SEPARATOR,
    Status.NONE_WITHIN_BOUND: EXIT_NONE_WITHIN,
}

GENERATORS = ("hitting-for", "setcover-xand", "hitting-fand", "fixed3-fand", "fixed3-gor", "pad-x")


def _err(msg: str) -> int:
    print(f"ltlearn: error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def cmd_learn(args) -> int:
    try:
        sample = load_sample(args.input)
        ops = check_fragment(args.fragment)
    except (SampleError, ValueError) as exc:
        return _err(str(exc))
    t0 = time.perf_counter()
    try:
        res = learn(sample, ops, args.mode, args.max_size, args.jobs)
    except ResourceExhaustedError as exc:
        return _err(str(exc))
    except ValueError as exc:
        return _err(str(exc))
    elapsed = time.perf_counter() - t0
    if args.output == "json":
        d = res.to_dict()
        d["time"] = round(elapsed, 6)
        print(json.dumps(d))
    else:
        if res.is_found:
            print(f"formula: {res.formula}")
            print(f"size: {res.size}")
        elif res.status is Status.NO_SEPARATOR:
            print("no separating formula exists in this fragment")
        else:
            print(f"no separating formula of size <= {res.bound}")
        print(f"time: {elapsed:.3f}s")
    return _STATUS_EXIT[res.status]


def _parse_sets(text: str) -> list[list[int]]:
    sets = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            sets.append([int(x) for x in part.replace(" ", "").split(",") if x])
    return sets


def _instance(args):
    if args.instance:
        with open(args.instance, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict) or "sets" not in data:
            raise ValueError("instance file needs a 'sets' field")
        ground = data.get("ground", data.get("universe", data.get("m")))
        return ground, data["sets"], data.get("k", 0)
    if args.ground is None or args.sets is None:
        raise ValueError("give --instance or both -m and -T")
    return args.ground, _parse_sets(args.sets), args.k


def cmd_generate(args) -> int:
    try:
        if args.reduction == "pad-x":
            if not args.input:
                raise ValueError("pad-x needs --input")
            padded = pad_for_X_fragments(load_sample(args.input), dual=args.dual)
            out_dir = Path(args.output_dir)
            out_dir.mkdir(parents=True, exist_ok=True)
            out = out_dir / f"{args.stem or 'pad-x'}.sample.json"
            save_sample(padded, out)
            print(f"sample: {out}")
            return 0
        ground, sets, k = _instance(args)
        if args.reduction == "setcover-xand":
            bench = gen_setcover_Xand(SetCoverInstance(ground, sets, k))
        else:
            inst = HittingSetInstance(ground, sets, k)
            gen = {
                "hitting-for": gen_hitting_For,
                "hitting-fand": gen_hitting_Fand_unbounded,
                "fixed3-fand": gen_hitting_Fand_fixed3,
                "fixed3-gor": gen_hitting_Gor_fixed3,
            }[args.reduction]
            bench = gen(inst)
    except (SampleError, ValueError, OSError, json.JSONDecodeError) as exc:
        return _err(str(exc))
    sample_path, man = bench.write(args.output_dir, args.stem)
    print(f"K: {bench.K}")
    if bench.witness is not None:
        print(f"witness size: {bench.witness.size}")
    else:
        print("witness: none")
    if sample_path is not None:
        print(f"sample: {sample_path}")
    print(f"manifest: {man}")
    return 0


def cmd_check(args) -> int:
    try:
        phi = parse(args.formula)
    except FormulaSyntaxError as exc:
        return _err(f"cannot parse formula: {exc}")
    try:
        sample = load_sample(args.input)
    except SampleError as exc:
        return _err(str(exc))
    ok = True
    for sign, words, want in (("+", sample.P, True), ("-", sample.N, False)):
        for w in words:
            got = evaluate(phi, w)
            good = got == want
            ok &= good
            print(f"{sign} {word_text(w)}\t{'sat' if got else 'unsat'}\t{'ok' if good else 'WRONG'}")
    assert ok == separates(phi, sample)
    print("separates" if ok else "does not separate")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ltlearn", description="Learn LTL formulas from example words.")
    p.add_argument("--version", action="version", version=f"ltlearn {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True)

    lp = sub.add_parser("learn", help="find a separating formula")
    lp.add_argument("-i", "--input", required=True, help="sample file (JSON or +/- text)")
    lp.add_argument("-f", "--fragment", default="F,G,X,and,or",
                    help="comma list from U,F,G,X,and,or,not")
    lp.add_argument("--mode", choices=MODES, default="auto")
    lp.add_argument("-k", "--max-size", type=int, default=None)
    lp.add_argument("-o", "--output", choices=("text", "json"), default="text")
    lp.add_argument("-j", "--jobs", type=int, default=1)
    lp.set_defaults(func=cmd_learn)

    gp = sub.add_parser("generate", help="emit a benchmark from a reduction")
    gp.add_argument("reduction", choices=GENERATORS)
    gp.add_argument("--instance", help="JSON instance {ground, sets, k}")
    gp.add_argument("-m", "--ground", type=int, help="ground set size (universe size for setcover-xand)")
    gp.add_argument("-T", "--sets", help="sets, e.g. '1,2;3'")
    gp.add_argument("-k", type=int, default=0, help="budget")
    gp.add_argument("-i", "--input", help="sample to pad (pad-x)")
    gp.add_argument("--dual", action="store_true", help="pad-x with roles swapped")
    gp.add_argument("-o", "--output-dir", default=".")
    gp.add_argument("--stem", default=None, help="file name stem")
    gp.set_defaults(func=cmd_generate)

    cp = sub.add_parser("check", help="test a formula against a sample")
    cp.add_argument("--formula", required=True)
    cp.add_argument("-i", "--input", required=True)
    cp.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
