"""Command-line interface.  Every subcommand is a thin shell over the library.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .blocks import blocks, factor_lattice
from .corpus import MAX_NMAX, Corpus, generate_corpus
from .errors import LatticeError
from .fca import concepts, dm_completion, tolerance_context
from .harness import CHECKS, run_theorem_suite
from .lattice import are_isomorphic
from .relations import alpha, beta, enumerate_tolerances, is_tolerance


class InputError(Exception):
    """Bad input attributable to one file."""

    def __init__(self, path, cause):
        super().__init__(f"{path}: {cause}")


def _load(loader, path, *args):
    try:
        return loader(path, *args)
    except (LatticeError, OSError, UnicodeDecodeError) as e:
        raise InputError(path, getattr(e, "strerror", None) or e) from None


def cmd_validate(args, out):
    L = _load(formats.load_lattice, args.lattice)
    out.write(
        f"{L.name or args.lattice}: lattice with {L.n} elements, "
        f"{len(L.covers)} covers, bottom {L.label(L.bottom)}, top {L.label(L.top)}\n"
    )
    return 0


def cmd_tolerances(args, out):
    L = _load(formats.load_lattice, args.lattice)
    tols = enumerate_tolerances(L, max_n=args.max_n)
    if args.list:
        for i, T in enumerate(tols):
            extra = [(a, b) for a, b in T.labelled_pairs() if a != b]
            out.write(f"T{i}: Δ + {{" + ", ".join(f"({a},{b})" for a, b in extra) + "}\n")
    else:
        out.write(f"{len(tols)}\n")
    return 0


def cmd_rel(args, out):
    L = _load(formats.load_lattice, args.lattice)
    R = _load(formats.load_relation, args.relation, L)
    try:
        result = beta(R) if args.map == "beta" else alpha(R)
    except LatticeError as e:
        raise InputError(args.relation, e) from None
    out.write(formats.dumps_relation(result))
    return 0


def _lattice_and_tolerance(args):
    L = _load(formats.load_lattice, args.lattice)
    T = _load(formats.load_relation, args.tolerance, L)
    if not is_tolerance(T):
        raise InputError(args.tolerance, "relation is not a tolerance")
    return L, T


def cmd_blocks(args, out):
    L, T = _lattice_and_tolerance(args)
    for b in blocks(L, T):
        out.write(f"{b.label} {{{','.join(b.members.labels())}}}\n")
    return 0


def cmd_factor(args, out):
    L, T = _lattice_and_tolerance(args)
    F = factor_lattice(L, T)
    out.write(f"{len(F)} blocks\n")
    for b in F.blocks:
        out.write(f"  {b.label} {{{','.join(b.members.labels())}}}\n")
    lat = F.as_lattice
    out.write("covers\n")
    for a, b in lat.covers:
        out.write(f"  {lat.label(a)} < {lat.label(b)}\n")
    if args.dot:
        formats.export_dot(F, args.dot)
    return 0


def _print_concepts(CL, out):
    K = CL.context
    out.write(f"{len(CL)} concepts\n")
    for c in CL.concepts:
        out.write(f"  {c.label(K)}\n")


def cmd_concepts(args, out):
    if args.context:
        if args.lattice or args.tolerance:
            raise InputError(args.context, "give either a .cxt file or --lattice/--tolerance")
        K = _load(formats.load_cxt, args.context)
    elif args.lattice and args.tolerance:
        L, T = _lattice_and_tolerance(args)
        K = tolerance_context(L, T)
    else:
        raise InputError("concepts", "need a .cxt file or both --lattice and --tolerance")
    CL = concepts(K)
    _print_concepts(CL, out)
    if args.dot:
        formats.export_dot(CL, args.dot)
    return 0


def cmd_dm(args, out):
    L = _load(formats.load_lattice, args.lattice)
    CL = dm_completion(L)
    _print_concepts(CL, out)
    iso = are_isomorphic(CL.as_lattice, L)
    out.write(f"isomorphic to input: {'yes' if iso is not None else 'no'}\n")
    return 0


def cmd_verify(args, out):
    checks = list(CHECKS) if not args.checks else [c.strip() for c in args.checks.split(",")]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise InputError("--checks", f"unknown check id(s): {', '.join(unknown)}")
    corpus = generate_corpus(args.nmax)
    for path in args.lattices or ():
        corpus.add(_load(formats.load_lattice, path), "loaded")
    report = run_theorem_suite(corpus, checks, seed=args.seed)
    out.write(report.to_text())
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return 0 if report.ok else 1


def cmd_gen(args, out):
    corpus: Corpus = generate_corpus(args.nmax, named=False)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for L in corpus:
        formats.save_lattice(L, outdir / f"{L.name}.json")
    out.write(f"wrote {len(corpus)} lattices to {outdir}\n")
    return 0


def cmd_export_dot(args, out):
    L = _load(formats.load_lattice, args.lattice)
    formats.export_dot(L, args.out)
    return 0


def _nmax(text):
    v = int(text)
    if not 1 <= v <= MAX_NMAX:
        raise argparse.ArgumentTypeError(f"must be between 1 and {MAX_NMAX}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tolfca",
        description="Tolerances, factor lattices, weak ordered relations and concept lattices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check that a lattice JSON file describes a lattice")
    s.add_argument("lattice")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("tolerances", help="count or list all tolerances")
    s.add_argument("lattice")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", help="print the number (default)")
    g.add_argument("--list", action="store_true", help="print every tolerance")
    s.add_argument("--max-n", type=int, default=9, help="size bound (default 9)")
    s.set_defaults(func=cmd_tolerances)

    s = sub.add_parser("rel", help="apply alpha or beta to a relation")
    s.add_argument("map", choices=["alpha", "beta"])
    s.add_argument("lattice")
    s.add_argument("relation")
    s.set_defaults(func=cmd_rel)

    s = sub.add_parser("blocks", help="list the blocks of a tolerance")
    s.add_argument("lattice")
    s.add_argument("--tolerance", required=True)
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("factor", help="build the factor lattice of a tolerance")
    s.add_argument("lattice")
    s.add_argument("--tolerance", required=True)
    s.add_argument("--dot", help="write the Hasse diagram here")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("concepts", help="concept lattice of a .cxt file or of (L, L, leq T leq)")
    s.add_argument("context", nargs="?")
    s.add_argument("--lattice")
    s.add_argument("--tolerance")
    s.add_argument("--dot", help="write the Hasse diagram here")
    s.set_defaults(func=cmd_concepts)

    s = sub.add_parser("dm", help="Dedekind-MacNeille completion of a lattice")
    s.add_argument("lattice")
    s.set_defaults(func=cmd_dm)

    s = sub.add_parser("verify", help="run the property suite on all small lattices")
    s.add_argument("--nmax", type=_nmax, default=6)
    s.add_argument("--checks", help="comma separated check ids (default: all)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", help="write the JSON report here")
    s.add_argument("--lattice", dest="lattices", action="append",
                   help="add a lattice JSON file to the corpus (repeatable)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="write all lattices up to a size as JSON files")
    s.add_argument("--nmax", type=_nmax, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("export-dot", help="write the Hasse diagram of a lattice")
    s.add_argument("lattice")
    s.add_argument("out")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"tolfca: error: {e}", file=sys.stderr)
        return 2
    except LatticeError as e:
        print(f"tolfca: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"tolfca: error: {e.filename}: {e.strerror}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
