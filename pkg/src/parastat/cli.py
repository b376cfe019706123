"""Command line entry point ``parastat``.

Exit status: 0 on success, 1 when a check or blind test fails, 2 for bad
input (unknown labels, degenerate l values and the like).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from . import algebra, chirality, gedanken, grading, multiparticle
from .gmatrix import OutOfRegime

SPACE_LABELS = algebra.LABELS + tuple(multiparticle.SPACE_ALIASES)


def _pair_name(text: str) -> str:
    for sep in ("<->", "/", ","):
        if sep in text:
            a, b = (s.strip() for s in text.split(sep, 1))
            for name, p in chirality.PAIRS.items():
                if {a, b} == {p.ordinary, p.colored}:
                    return name
    raise argparse.ArgumentTypeError(
        f"unknown pair {text!r}; choose from {', '.join(chirality.PAIRS)}"
    )


def _cmd_form(args) -> int:
    form = grading.preset(args.preset)
    sys.stdout.write(grading.format_form(form))
    if args.classify:
        print(f"# {grading.classify(form).value}")
    return 0


def _cmd_algebra_list(args) -> int:
    for label in algebra.LABELS:
        spec = algebra.catalog(label)
        sectors = "  ".join(
            f"{g}:{','.join(names)}" for g, names in sorted(spec.sectors().items())
        )
        print(f"{label:<9} {spec.form.name:<3}  {sectors}")
    return 0


def _cmd_algebra_check(args) -> int:
    spec = algebra.catalog(args.label)
    try:
        closure = algebra.closure_check(spec)
    except algebra.NotClosed as exc:
        print(f"{args.label}: not closed: {exc}")
        return 1
    jac = algebra.jacobi_check(spec.generators, spec.form)
    print(f"{args.label}: form {spec.form.name}, {len(spec.generators)} generators")
    print(f"closure: {'ok' if closure.closed else 'FAILED'}")
    print(f"catalog relations: {'ok' if closure.relations_ok else 'FAILED'}")
    for m in closure.mismatches:
        print(f"  mismatch: {m}")
    print(f"jacobi: {'ok' if jac.ok else 'FAILED'} ({jac.triples_checked} triples)")
    if jac.failure:
        print(f"  failing triple: {', '.join(jac.failure)}")
    return 0 if closure.closed and closure.relations_ok and jac.ok else 1


def _cmd_spectrum(args) -> int:
    fp = multiparticle.fingerprint(multiparticle.space(args.label))
    if args.format == "json":
        doc = {
            "label": args.label,
            "dim": fp.dim,
            "spectrum": {str(e): m for e, m in fp.entries},
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"{args.label}  dim={fp.dim}")
        for e, m in fp.entries:
            print(f"  E={str(e):<8} x{m}")
    return 0


def _cmd_hilbert(args) -> int:
    sys.stdout.write(multiparticle.space(args.label).format())
    return 0


def _matrix(p: chirality.Projector) -> list[list[str]]:
    return [[str(x) for x in row] for row in p.matrix]


def _cmd_discriminate(args) -> int:
    pair = chirality.PAIRS[args.pair]
    level = chirality.parse_level(args.level)
    u, v = chirality.sign_pair(pair, level)
    verdict = chirality.discriminate(u, v)
    doc = {
        "pair": pair.name,
        "level": str(level),
        "ordinary": {"label": pair.ordinary, "ray": str(u)},
        "colored": {"label": pair.colored, "ray": str(v)},
    }
    if isinstance(verdict, chirality.Discriminable):
        doc.update(
            verdict="Discriminable",
            overlap="0",
            support=[f"w{i + 1}" for i in verdict.p_plus.support],
            p_plus=_matrix(verdict.p_plus),
            p_minus=_matrix(verdict.p_minus),
        )
    else:
        doc.update(verdict="Indistinguishable", overlap=str(verdict.overlap))
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_gedanken_run(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", OutOfRegime)
        cfg = gedanken.TrialConfig(
            seed=args.seed, pair=args.pair, trials=args.trials, lam=args.lam, level=args.level
        )
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    report = gedanken.run_blind_test(cfg)
    sys.stdout.write(gedanken.emit_report(report, args.format))
    return 0 if report.correct else 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parastat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("form", help="print a preset sign form")
    p.add_argument("preset", choices=grading.PRESET_NAMES)
    p.add_argument("--classify", action="store_true", help="append the statistics class")
    p.set_defaults(func=_cmd_form)

    p = sub.add_parser("algebra", help="spectrum-generating algebra catalog")
    asub = p.add_subparsers(dest="action", required=True)
    q = asub.add_parser("list", help="labels with their graded sectors")
    q.set_defaults(func=_cmd_algebra_list)
    q = asub.add_parser("check", help="closure and graded Jacobi check")
    q.add_argument("label", choices=algebra.LABELS)
    q.set_defaults(func=_cmd_algebra_check)

    p = sub.add_parser("spectrum", help="two-particle energy levels and multiplicities")
    p.add_argument("label", choices=SPACE_LABELS)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("hilbert", help="canonical eigenvector rays of a two-particle space")
    p.add_argument("label", choices=SPACE_LABELS)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("discriminate", help="projectors separating a pair at one level")
    p.add_argument("pair", type=_pair_name)
    p.add_argument("--level", default="l+2", help="energy, e.g. l+2 or 2l+1 (default l+2)")
    p.set_defaults(func=_cmd_discriminate)

    p = sub.add_parser("gedanken", help="blind identification protocol")
    gsub = p.add_subparsers(dest="action", required=True)
    q = gsub.add_parser("run", help="run one seeded blind test")
    q.add_argument("--pair", type=_pair_name, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--trials", type=int, default=1)
    q.add_argument("--lambda", dest="lam", type=_fraction, default=None)
    q.add_argument("--level", default="l+2", choices=("l+2", "2l+1", "lambda+2", "2lambda+1"))
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=_cmd_gedanken_run)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (chirality.ChiralityError, gedanken.GedankenError, grading.GradingError) as exc:
        print(f"parastat: error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"parastat: internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
