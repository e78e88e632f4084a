"""
Command-line interface for lamina.

Usage:
    lamina make rational -w ab -n 6 --out L.json
    lamina make ends --left a --right b -n 6
    lamina make subst -r "a:ab,b:a" --seed a -n 6
    lamina apply --auto phi.json --in L.json -n 4 --out L2.json
    lamina dist L.json L2.json
    lamina chop --in L.json -k 1
    lamina check laminary --in L.json
    lamina bbt --auto phi.json --kmax 8 --window 3
    lamina approx --in L.json -m 3
    lamina rauzy --in L.json -k 2 --dot rauzy.dot
    lamina repro notdense -n 2 --max-len 8
    lamina repro limitset subst -r "a:ab,b:a" --seed a --m-max 5
    lamina repro fixedpoint --trials 100 --nielsen-len 6 --seed 0
    lamina converge --target L.json -n 3 L1.json L2.json
    lamina serve

Exit codes: 0 when every certification passed, 1 on a certification failure,
2 on usage or horizon errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from . import config, langkit, lamgen
from .autaction import act
from .cancellation import bbt_estimate, probe_cyclic
from .exceptions import ActionError, CertificationError, LaminaError
from .models import FactorLanguage
from .schemas import AutomorphismFile, ConvergenceReport, LanguageFile, LanguageRecipe
from .workbench import (
    converge_check,
    rauzy_export,
    rauzy_graph,
    repro_fixedpoint,
    repro_limitset,
    repro_notdense,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CERTIFICATION = 1
EXIT_USAGE = 2


def add_recipe_arguments(parser: argparse.ArgumentParser):
    """Positional generator kind plus the parameters each kind needs"""
    parser.add_argument("kind", choices=["rational", "ends", "subst"])
    parser.add_argument("--word", "-w", help="Word w of the rational lamination L(w)")
    parser.add_argument("--left", help="Left period of ^∞(left)·center·(right)^∞")
    parser.add_argument("--center", default="", help="Center word (default: empty)")
    parser.add_argument("--right", help="Right period")
    parser.add_argument("--rules", "-r", help='Substitution rules, e.g. "a:ab,b:a"')
    parser.add_argument("--seed", help="Prolongable generator of the substitution")
    parser.add_argument("--rank", type=int, help="Alphabet rank (default: inferred)")


def add_horizon_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--horizon",
        "-n",
        type=int,
        default=config.DEFAULT_HORIZON,
        help=f"Horizon n (default: {config.DEFAULT_HORIZON})",
    )


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--out", "-o", help="Write the JSON result to this file")
    parser.add_argument("--json", action="store_true", help="Print JSON instead of a table")


def parse_arguments(argv: Optional[List[str]] = None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        prog="lamina",
        description="Laminations on free groups as truncated laminary languages",
    )
    parser.add_argument(
        "--log-level",
        default=config.LOG_LEVEL,
        help=f"Logging level (default: {config.LOG_LEVEL})",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    make = commands.add_parser("make", help="Generate an exact language")
    add_recipe_arguments(make)
    add_horizon_argument(make)
    add_output_arguments(make)

    apply = commands.add_parser("apply", help="Act by an automorphism on a language")
    apply.add_argument("--auto", required=True, help="Automorphism JSON file")
    apply.add_argument("--in", dest="input", required=True, help="Language JSON file")
    add_horizon_argument(apply)
    add_output_arguments(apply)

    dist = commands.add_parser("dist", help="Distance between two languages")
    dist.add_argument("left")
    dist.add_argument("right")
    dist.add_argument("--json", action="store_true")

    chop = commands.add_parser("chop", help="Chop k letters from both ends")
    chop.add_argument("--in", dest="input", required=True)
    chop.add_argument("-k", type=int, required=True)
    add_output_arguments(chop)

    check = commands.add_parser("check", help="Check a language property")
    check.add_argument("property", choices=["laminary", "gap", "positive"])
    check.add_argument("--in", dest="input", required=True)
    check.add_argument("-m", type=int, default=1, help="Word length for the gap check")
    check.add_argument("--json", action="store_true")

    bbt = commands.add_parser("bbt", help="Bounded cancellation estimate")
    bbt.add_argument("--auto", required=True)
    bbt.add_argument("--kmax", type=int, help="Search radius (default: 4·|φ|, capped)")
    bbt.add_argument("--window", type=int, default=config.BBT_WINDOW)
    bbt.add_argument(
        "--probe", type=int, default=0, help="Also probe cyclic words up to this length"
    )
    bbt.add_argument("--json", action="store_true")

    approx = commands.add_parser("approx", help="Rational approximant of a minimal language")
    approx.add_argument("--in", dest="input", required=True)
    approx.add_argument("-m", type=int, required=True)
    approx.add_argument("--json", action="store_true")

    rauzy = commands.add_parser("rauzy", help="Rauzy graph of level k as DOT")
    rauzy.add_argument("--in", dest="input", required=True)
    rauzy.add_argument("-k", type=int, required=True)
    rauzy.add_argument("--dot", help="Write the DOT source to this file")

    repro = commands.add_parser("repro", help="Run a reproduction")
    runs = repro.add_subparsers(dest="run", required=True)
    notdense = runs.add_parser("notdense")
    notdense.add_argument("-n", type=int, default=2)
    notdense.add_argument("--max-len", type=int, default=8)
    notdense.add_argument("--workers", type=int, default=config.WORKERS)
    notdense.add_argument("--json", action="store_true")
    limitset = runs.add_parser("limitset")
    add_recipe_arguments(limitset)
    limitset.add_argument("--m-max", type=int, default=5)
    limitset.add_argument("--json", action="store_true")
    fixedpoint = runs.add_parser("fixedpoint")
    fixedpoint.add_argument("--trials", type=int, default=100)
    fixedpoint.add_argument("--nielsen-len", type=int, default=6)
    fixedpoint.add_argument("--seed", type=int, default=config.SEED)
    fixedpoint.add_argument("--workers", type=int, default=config.WORKERS)
    fixedpoint.add_argument("--json", action="store_true")

    converge = commands.add_parser("converge", help="Convergence index of a sequence")
    converge.add_argument("sequence", nargs="+", help="Language JSON files, in order")
    converge.add_argument("--target", required=True)
    add_horizon_argument(converge)
    converge.add_argument("--json", action="store_true")

    serve = commands.add_parser("serve", help="Run the HTTP service")
    serve.add_argument("--host", default=config.API_HOST)
    serve.add_argument("--port", type=int, default=config.API_PORT)

    return parser.parse_args(argv)


def recipe_from(args) -> LanguageRecipe:
    return LanguageRecipe(
        kind=args.kind,
        word=args.word,
        left=args.left,
        center=args.center,
        right=args.right,
        rules=args.rules,
        seed=args.seed,
        rank=args.rank,
    )


def read_language(path: str) -> FactorLanguage:
    return LanguageFile.model_validate_json(Path(path).read_text()).to_language()


def emit(model: BaseModel, out: Optional[str] = None):
    text = model.model_dump_json(indent=2)
    if out:
        Path(out).write_text(text + "\n")
        print(f"💾 Written to {out}")
    else:
        print(text)


def show_language(language: FactorLanguage, args):
    if args.json or args.out:
        emit(LanguageFile.from_language(language), args.out)
        return
    print(f"📋 Language over {list(language.alphabet.generators)}, horizon {language.horizon}"
          f"{' (exact)' if language.exact else ''}")
    for k, words in langkit.as_table(language).items():
        print(f"   {k}: {' '.join(words)}")


def run_make(args) -> int:
    language = recipe_from(args).build(args.horizon)
    show_language(language, args)
    return EXIT_OK


def run_apply(args) -> int:
    alpha = AutomorphismFile.model_validate_json(Path(args.auto).read_text()).to_automorphism()
    language = act(alpha, read_language(args.input), args.horizon)
    show_language(language, args)
    return EXIT_OK


def run_dist(args) -> int:
    result = langkit.distance(read_language(args.left), read_language(args.right))
    if args.json:
        emit(result)
    else:
        print(f"📏 d = {result} (agreement {result.agreement})")
    return EXIT_OK


def run_chop(args) -> int:
    show_language(langkit.chop(read_language(args.input), args.k), args)
    return EXIT_OK


def run_check(args) -> int:
    language = read_language(args.input)
    if args.property == "laminary":
        passed, value = langkit.is_laminary_at(language), None
    elif args.property == "positive":
        passed, value = langkit.is_positive(language), None
    else:
        value = langkit.gap_bound(language, args.m)
        passed = value is not None
    if args.json:
        print(json.dumps({"property": args.property, "passed": passed, "value": value}))
    else:
        detail = f" (K = {value})" if value is not None else ""
        print(f"{'✅' if passed else '❌'} {args.property}{detail}")
    return EXIT_OK if passed else EXIT_CERTIFICATION


def run_bbt(args) -> int:
    phi = AutomorphismFile.model_validate_json(Path(args.auto).read_text()).to_morphism()
    estimate = bbt_estimate(phi, k_max=args.kmax, window=args.window)
    if args.probe:
        estimate = probe_cyclic(phi, estimate, args.probe)
    if args.json:
        emit(estimate)
    else:
        print(f"📊 BBT lower bound for {phi.describe()}: {estimate.lower}")
        if estimate.lower:
            print(f"   • Witness: u = {estimate.witness_u}, v = {estimate.witness_v}")
        print(f"   • Search radius: {estimate.search_radius}")
        print(f"   • Stabilized (window {estimate.window}): "
              f"{'✓' if estimate.stabilized else '✗'}")
        print(f"   • History: {estimate.history}")
    return EXIT_OK


def run_approx(args) -> int:
    word = lamgen.rational_approximant(read_language(args.input), args.m)
    if args.json:
        print(json.dumps({"m": args.m, "approximant": word.word, "length": len(word)}))
    else:
        print(f"✅ v' = {word.word} (|v'| = {len(word)}) reproduces 𝓛_{args.m}")
    return EXIT_OK


def run_rauzy(args) -> int:
    language = read_language(args.input)
    source = rauzy_export(language, args.k)
    if args.dot:
        Path(args.dot).write_text(source)
        graph = rauzy_graph(language, args.k)
        print(f"💾 Rauzy graph ({graph.number_of_nodes()} nodes, "
              f"{graph.number_of_edges()} edges) written to {args.dot}")
    else:
        print(source)
    return EXIT_OK


def run_repro(args) -> int:
    if args.run == "notdense":
        report = repro_notdense(args.n, args.max_len, workers=args.workers)
        passed = report.all_fail
        if not args.json:
            print(f"🔍 ^∞a·b^∞ against L(w), |w| ≤ {args.max_len}, n = {args.n}")
            print("=" * 60)
            for row in report.rows:
                side = "L(w) only" if row.missing_from_ends else "ends only"
                mark = "❌ equal" if row.equal else f"✓ {row.distinguishing} ({side})"
                print(f"   {row.word:<{args.max_len}}  {mark}")
    elif args.run == "limitset":
        report = repro_limitset(recipe_from(args), args.m_max)
        passed = report.passed
        if not args.json:
            print(f"🔍 Rational approximants of {report.recipe.describe()}")
            print("=" * 60)
            for row in report.rows:
                if row.certified:
                    print(f"   m={row.m}  K={row.gap}  |v'|={row.length}  "
                          f"d ≤ {row.bound:.6g}  ✅  v' = {row.approximant}")
                else:
                    print(f"   m={row.m}  ❌ {row.detail}")
    else:
        report = repro_fixedpoint(
            args.trials, args.nielsen_len, seed=args.seed, workers=args.workers
        )
        passed = report.passed
        if not args.json:
            print(f"🔍 L([a,b]) under {args.trials} automorphisms "
                  f"(≤ {args.nielsen_len} Nielsen moves, seed {args.seed})")
            print("=" * 60)
            for row in report.rows:
                print(f"   #{row.trial:<3} {'✅' if row.passed else '❌'} "
                      f"[{row.cyclic_class}] sep={row.separating_word} d={row.distance:g}  "
                      f"{row.automorphism}")
    if args.json:
        emit(report)
    else:
        print(f"\n{'✅ All certifications passed' if passed else '❌ Certification failed'}")
    return EXIT_OK if passed else EXIT_CERTIFICATION


def run_converge(args) -> int:
    sequence = [read_language(path) for path in args.sequence]
    index = converge_check(sequence, read_language(args.target), args.horizon)
    if args.json:
        emit(ConvergenceReport(n=args.horizon, count=len(sequence), index=index))
    elif index is None:
        print(f"❌ No convergence at n = {args.horizon}")
    else:
        print(f"✅ K({args.horizon}) = {index}")
    return EXIT_OK if index is not None else EXIT_CERTIFICATION


def run_serve(args) -> int:
    import uvicorn

    uvicorn.run("lamina.main:app", host=args.host, port=args.port)
    return EXIT_OK


COMMANDS = {
    "make": run_make,
    "apply": run_apply,
    "dist": run_dist,
    "chop": run_chop,
    "check": run_check,
    "bbt": run_bbt,
    "approx": run_approx,
    "rauzy": run_rauzy,
    "repro": run_repro,
    "converge": run_converge,
    "serve": run_serve,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_arguments(argv)
    config.configure_logging(args.log_level)
    logger.debug("Running %s", args.command)
    try:
        return COMMANDS[args.command](args)
    except (CertificationError, ActionError) as error:
        print(f"❌ Certification failed: {error}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except (LaminaError, ValidationError, ValueError, OSError) as error:
        print(f"❌ Error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
