"""``mcgrep`` command line.

Matrices and reports are written to stdout as tab-separated text; figures go
to the files named by ``--figure``. The exit status is 0 only when every
requested check passes (1 for a failing or undecided check, 2 for bad input).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .algebra import ExactMatrix
from .assembly import (
    DISTINCT,
    EQUAL_EXACT,
    assemble,
    compare_words,
    dimension_report,
    export_matrix,
    l1_block,
    l2_block,
    l_eval,
)
from .certify import CHECKS, certify
from .config import MODES, load_config
from .garside import normal_form_letters
from .homology import residue_check
from .lk import build_lk_table, lk_eval, lk_eval_specialized
from .presentation import relator_suite
from .rescale import check_scalarity, solve_rescale_unit
from .words import Alphabet, parse_word


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS defaults let the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--genus", "-g", type=int, default=argparse.SUPPRESS, help="genus g >= 4 (default 4)")
    p.add_argument("--config", default=argparse.SUPPRESS, help="INI config file (default: shipped defaults)")
    p.add_argument("--precision", type=int, default=argparse.SUPPRESS, help="interval precision in bits")
    p.add_argument("--mode", choices=MODES, default=argparse.SUPPRESS, help="evaluation mode")
    return p


def _settings(args):
    cfg = load_config(getattr(args, "config", None))
    cfg = cfg.with_(precision=getattr(args, "precision", None), mode=getattr(args, "mode", None))
    return getattr(args, "genus", 4), cfg


def print_matrix(m: ExactMatrix, label: str) -> None:
    print(f"# {label}\tdim={m.dim}\tdomain={m.domain}")
    for row in m.rows:
        print("\t".join(str(v) for v in row))


# -- subcommands ------------------------------------------------------------


def cmd_eval(args) -> int:
    g, cfg = _settings(args)
    rep = assemble(g, cfg)
    w = parse_word(args.word, Alphabet.HYPER_MCG, g)
    m = l_eval(rep, w)
    print_matrix(m, f"L({w})")
    if args.figure:
        from .plotting import plot_sparsity

        # LK block, then the second coset block, then homology
        plot_sparsity(m, args.figure, (rep.l1_dim // 2, rep.l1_dim), f"L({w}), g = {g}")
        print(f"# figure\t{args.figure}")
    return 0


def cmd_compare(args) -> int:
    g, cfg = _settings(args)
    rep = assemble(g, cfg)
    a = parse_word(args.a, Alphabet.HYPER_MCG, g)
    b = parse_word(args.b, Alphabet.HYPER_MCG, g)
    v = compare_words(rep, a, b)
    print(v)
    return 0 if v.kind in (DISTINCT, EQUAL_EXACT) else 1


def cmd_certify(args) -> int:
    _, cfg = _settings(args)
    genera = args.genera or [getattr(args, "genus", 4)]
    report = certify(genera, cfg, jobs=args.jobs, only=args.only)
    text = report.to_tsv()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if report.ok else 1


def cmd_relators(args) -> int:
    g, cfg = _settings(args)
    rep = assemble(g, cfg)
    print("name\tresidue\tword")
    for r in relator_suite(g, rep.model.residues):
        print(r)
    return 0


def cmd_braid_nf(args) -> int:
    g, _ = _settings(args)
    n = args.strands or g
    if n < 2:
        raise ValueError("need at least 2 strands")
    # words are parsed at genus >= 4; the solver itself works for any n
    w = parse_word(args.word, Alphabet.BRAID, max(n, 4))
    letters = [(gen.index, e) for gen, e in w.expanded()]
    if any(i >= n for i, _ in letters):
        raise ValueError(f"generator index out of range for B_{n}")
    print(normal_form_letters(n, letters))
    return 0


def cmd_lk_eval(args) -> int:
    g, cfg = _settings(args)
    w = parse_word(args.word, Alphabet.BRAID, g)
    if args.symbolic:
        print_matrix(lk_eval(build_lk_table(g), w), f"LK({w})")
    else:
        print_matrix(lk_eval_specialized(w, cfg.q0, cfg.t0), f"LK({w}) at q={cfg.q0} t={cfg.t0}")
    return 0


def cmd_l1_eval(args) -> int:
    g, cfg = _settings(args)
    rep = assemble(g, cfg)
    w = parse_word(args.word, Alphabet.HYPER_MCG, g)
    print_matrix(l1_block(rep, w), f"L1({w})")
    return 0


def cmd_l2_eval(args) -> int:
    g, cfg = _settings(args)
    rep = assemble(g, cfg)
    w = parse_word(args.word, Alphabet.HYPER_MCG, g)
    print_matrix(l2_block(rep, w), f"L2({w})")
    return 0


def cmd_l2_check(args) -> int:
    g, cfg = _settings(args)
    rep = assemble(g, cfg)
    report = residue_check(rep.model, g)
    sys.stdout.write(report.to_tsv())
    return 0 if report.ok else 1


def cmd_rescale_solve(args) -> int:
    g, cfg = _settings(args)
    q0 = Fraction(args.q0) if args.q0 else cfg.q0
    t0 = Fraction(args.t0) if args.t0 else cfg.t0
    sc = check_scalarity(build_lk_table(g), q0, t0)
    unit = solve_rescale_unit(sc.lam_z, g, cfg.precision, q0=q0, t0=t0)
    print("key\tvalue")
    print(f"genus\t{g}")
    print(f"q0\t{q0}")
    print(f"t0\t{t0}")
    print(f"lambda_z\t{sc.lam_z}")
    print(f"exponent\t{unit.exponent}")
    if unit.is_exact:
        print(f"unit\t{unit.exact}\nkind\texact")
    else:
        print(f"unit\t[{unit.interval.lo}, {unit.interval.hi}]\nkind\tinterval ({unit.precision} bits)")
    print(f"tau\t{sc.consistency}")
    return 0


def cmd_dims(args) -> int:
    genera = args.genera or list(range(4, 13))
    reports = [dimension_report(g) for g in genera]
    print("genus\tmain\tnaive\tnaive_sum\tidentity")
    for r in reports:
        print(f"{r.genus}\t{r.main}\t{r.naive}\t{r.naive_sum}\t{'pass' if r.ok else 'fail'}")
    if args.figure:
        from .plotting import plot_dimensions

        plot_dimensions(reports, args.figure)
        print(f"# figure\t{args.figure}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_export(args) -> int:
    g, cfg = _settings(args)
    if args.rep == "lk":
        w = parse_word(args.word, Alphabet.BRAID, g)
        m = lk_eval(build_lk_table(g), w) if args.symbolic else lk_eval_specialized(w, cfg.q0, cfg.t0)
    else:
        rep = assemble(g, cfg)
        w = parse_word(args.word, Alphabet.HYPER_MCG, g)
        m = {"l": l_eval, "l1": l1_block, "l2": l2_block}[args.rep](rep, w)
    export_matrix(m, args.output, args.format)
    print(f"{args.output}\t{args.format}\tdim={m.dim}\tdomain={m.domain}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    p = argparse.ArgumentParser(prog="mcgrep", parents=[flags], description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"mcgrep {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[flags], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate L = L1 + L2 on a HyperMCG word")
    sp.add_argument("word")
    sp.add_argument("--figure", help="write the block sparsity pattern to this image file")

    sp = add("compare", cmd_compare, "decide whether two HyperMCG words have distinct images")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("certify", cmd_certify, "run the certification suite")
    sp.add_argument("--genera", type=int, nargs="+", help="genera to certify (default: --genus)")
    sp.add_argument("--jobs", "-j", type=int, default=1)
    sp.add_argument("--only", nargs="+", choices=[n for n, _ in CHECKS])
    sp.add_argument("--out", help="also write the report to this file")

    add("relators", cmd_relators, "list the relators of the presented group")

    sp = add("braid-nf", cmd_braid_nf, "Garside normal form of a braid word")
    sp.add_argument("word")
    sp.add_argument("--strands", "-n", type=int, help="number of strands (default: genus)")

    sp = add("lk-eval", cmd_lk_eval, "Lawrence-Krammer matrix of a braid word")
    sp.add_argument("word")
    sp.add_argument("--symbolic", action="store_true", help="Laurent entries instead of the specialization")

    sp = add("l1-eval", cmd_l1_eval, "L1 block of a HyperMCG word")
    sp.add_argument("word")
    sp = add("l2-eval", cmd_l2_eval, "L2 (homology) block of a HyperMCG word")
    sp.add_argument("word")
    add("l2-check", cmd_l2_check, "validate the homology model and its residue table")

    sp = add("rescale-solve", cmd_rescale_solve, "scalarity of z and the rescale unit")
    sp.add_argument("--q0")
    sp.add_argument("--t0")

    sp = add("dims", cmd_dims, "assembled vs naive dimension table")
    sp.add_argument("--genera", type=int, nargs="+")
    sp.add_argument("--figure", help="write a dimension plot to this image file")

    sp = add("export", cmd_export, "write a matrix to json or csv")
    sp.add_argument("word")
    sp.add_argument("--rep", choices=("l", "l1", "l2", "lk"), default="l")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--output", "-o", required=True)
    sp.add_argument("--symbolic", action="store_true", help="with --rep lk: Laurent entries")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"mcgrep: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
