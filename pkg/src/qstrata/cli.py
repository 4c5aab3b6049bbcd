"""Command-line front end.

Subcommands: info (one stratum), borel (one Borel stratum), table (full
W x W census), poset (degeneration order), quiver (Cayley graphs), verify
(the verification suites).  Data goes to stdout or --output; diagnostics go
to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import invariants, lattice, quiver, strata, verify, weyl
from .errors import QStrataError
from .invariants import StratumPair
from .rootsys import cartan_data, parse_cartan_type

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _out_stream(args):
    if getattr(args, "output", None):
        return open(args.output, "w", encoding="utf-8")
    return sys.stdout


def _emit(args, text: str) -> None:
    stream = _out_stream(args)
    try:
        stream.write(text)
    finally:
        if stream is not sys.stdout:
            stream.close()


def _render_exp(ell: int, exp) -> str:
    if exp is None:
        return "unavailable (ell shares a factor with ord(w))"
    return f"{ell}^{exp}" + (f" = {ell**exp}" if exp <= 12 else "")


def cmd_info(args) -> int:
    cd = cartan_data(parse_cartan_type(args.type))
    w1 = weyl.parse_word(cd, args.w1)
    w2 = weyl.parse_word(cd, args.w2)
    si = invariants.stratum_invariants(StratumPair(w1, w2, args.ell))
    if args.format == "json":
        _emit(args, json.dumps(si.to_json_dict(), sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    ell = si.ell
    lines = [
        f"stratum ({si.w1_word} | {si.w2_word}) of type {si.cartan_type}, ell = {ell}",
        f"  lengths              l(w1) = {si.len1}, l(w2) = {si.len2}, s(w2^-1 w1) = {si.s_twist}",
        f"  algebra dimension    {_render_exp(ell, si.algebra_dim_exp)}",
        f"  simple modules       {_render_exp(ell, si.simple_count_exp)} of dimension {_render_exp(ell, si.simple_dim_exp)}",
        f"  fully Azumaya        {'yes' if si.is_azumaya else 'no'}",
        f"  representation type  {si.rep_type}",
        f"  frak S               {{{', '.join(str(i) for i in si.frak_S)}}}",
        f"  blocks               {_render_exp(ell, si.block_count_exp)}",
        f"  simples per block    {_render_exp(ell, si.simples_per_block_exp)}",
    ]
    if si.normalizer is not None:
        gens = si.normalizer.generators()
        lines.append(
            f"  block quiver vertex group N(w1,w2): order {_render_exp(ell, si.normalizer.order_exponent)}, "
            f"generators {[list(g) for g in gens]} (alpha-basis); edge multiset undetermined by closed form"
        )
    if si.is_azumaya:
        az = invariants.azumaya_structure(StratumPair(w1, w2, args.ell))
        lines.append(
            f"  structure            {_render_exp(ell, az.summand_count_exp)} summands of "
            f"Mat_{{{ell}^{az.matrix_size_exp}}} over truncated polynomials in {az.truncated_vars} variable(s)"
        )
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_borel(args) -> int:
    cd = cartan_data(parse_cartan_type(args.type))
    w = weyl.parse_word(cd, args.w)
    bi = invariants.borel_invariants(w, args.ell)
    if args.format == "json":
        _emit(args, json.dumps(bi.to_json_dict(), sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    ell = bi.ell
    if bi.block_exact_exp is not None:
        blocks = f"{_render_exp(ell, bi.block_exact_exp)}  [{bi.block_rule}]"
    else:
        blocks = (
            f"between {_render_exp(ell, bi.block_lower_exp)} and "
            f"{_render_exp(ell, bi.block_upper_exp)}  [not determined by closed form]"
        )
    lines = [
        f"Borel stratum ({bi.w_word}) of type {bi.cartan_type}, ell = {ell}",
        f"  lengths              l(w) = {bi.length}, s(w) = {bi.s_w}, absent letters d = {bi.d_absent}",
        f"  algebra dimension    {_render_exp(ell, bi.algebra_dim_exp)}",
        f"  simple modules       {_render_exp(ell, bi.simple_count_exp)} of dimension {_render_exp(ell, bi.simple_dim_exp)}",
        f"  representation type  {bi.rep_type}",
        f"  blocks               {blocks}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_table(args) -> int:
    cd = cartan_data(parse_cartan_type(args.type))
    stream = _out_stream(args)
    try:
        if args.format == "json":
            strata.write_table_json(cd, args.ell, stream, cap=args.cap)
        else:
            strata.write_table_csv(cd, args.ell, stream, cap=args.cap)
    finally:
        if stream is not sys.stdout:
            stream.close()
    return EXIT_OK


def cmd_poset(args) -> int:
    cd = cartan_data(parse_cartan_type(args.type))
    poset = strata.build_poset(cd, cap=args.cap)
    if args.format == "json":
        _emit(args, json.dumps(strata.poset_to_json_dict(poset), sort_keys=True) + "\n")
    else:
        _emit(args, strata.poset_to_dot(poset))
    return EXIT_OK


_GROUP_RE = re.compile(r"\s*[Zz](\d+)(?:\^(\d+))?\s*")


def parse_group_spec(text: str) -> tuple[int, int]:
    """'Z5^2' -> (5, 2); 'Z3' -> (3, 1)."""
    m = _GROUP_RE.fullmatch(text)
    if not m:
        raise QStrataError(f"cannot parse group spec {text!r}; expected like 'Z5^2'")
    return int(m.group(1)), int(m.group(2) or 1)


def parse_gens_spec(text: str, k: int) -> list[tuple[tuple[int, ...], int]]:
    """'1,0:1;0,1:2' -> [((1,0),1), ((0,1),2)]."""
    gens = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            coords, mult = part.rsplit(":", 1)
            m = int(mult)
        else:
            coords, m = part, 1
        vec = tuple(int(x) for x in coords.split(","))
        if len(vec) != k:
            raise QStrataError(f"generator {part!r} has {len(vec)} coordinates, expected {k}")
        gens.append((vec, m))
    return gens


def cmd_quiver(args) -> int:
    ell, k = parse_group_spec(args.group)
    gens = parse_gens_spec(args.gens or "", k)
    graph = quiver.cayley_graph((ell, k), gens)
    if args.format == "json":
        _emit(args, json.dumps(quiver.to_json_dict(graph), sort_keys=True) + "\n")
    else:
        _emit(args, quiver.to_dot(graph))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(
        args.suite,
        type_name=args.type,
        ell=args.ell,
        trials=args.trials,
        seed=args.seed,
    )
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "passed": all(r.passed for r in results),
            "failures": [
                {"name": r.name, "detail": r.detail} for r in results if not r.passed
            ],
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        _emit(args, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _emit(args, "\n".join(r.line() for r in results) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qstrata",
        description="Weyl-group invariants of quantised function/Borel algebras at a root of unity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_ell=True):
        if with_ell:
            p.add_argument("--ell", type=int, required=True, help="root-of-unity order (good ell)")
        p.add_argument("--format", default="text", help="output format")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("info", help="invariants of one stratum X_{w1,w2}")
    p.add_argument("type", help="Cartan type, e.g. A3")
    p.add_argument("--w1", default="", help="word, e.g. '1,2,1', 'w0', 'w0*1,2'")
    p.add_argument("--w2", default="", help="word")
    common(p)
    p.set_defaults(func=cmd_info, formats=("text", "json"))

    p = sub.add_parser("borel", help="invariants of one Borel stratum X_{w,e}")
    p.add_argument("type")
    p.add_argument("--w", default="", help="word")
    common(p)
    p.set_defaults(func=cmd_borel, formats=("text", "json"))

    p = sub.add_parser("table", help="full W x W stratum table")
    p.add_argument("type")
    p.add_argument("--cap", type=int, default=None, help="|W| cap override")
    common(p)
    p.set_defaults(func=cmd_table, formats=("csv", "json"))
    p.set_defaults(format="csv")

    p = sub.add_parser("poset", help="degeneration poset of W x W")
    p.add_argument("type")
    p.add_argument("--cap", type=int, default=None)
    common(p, with_ell=False)
    p.set_defaults(func=cmd_poset, formats=("dot", "json"))
    p.set_defaults(format="dot")

    p = sub.add_parser("quiver", help="multiply-edged Cayley graph")
    p.add_argument("--group", required=True, help="group spec, e.g. 'Z5^2'")
    p.add_argument("--gens", default="", help="generators 'coords:mult;...', e.g. '1,0:1;0,1:1'")
    common(p, with_ell=False)
    p.set_defaults(func=cmd_quiver, formats=("dot", "json"))
    p.set_defaults(format="dot")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", help="cases | lattice | table | oracle | all")
    p.add_argument("--type", default=None, help="Cartan type for type-specific suites")
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--trials", type=int, default=None, help="randomized trial count (oracle suite)")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized trials")
    p.add_argument("--format", default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify, formats=("text", "json"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in args.formats:
        parser.exit(EXIT_USAGE, f"format {args.format!r} not valid for this subcommand "
                                f"(choose from {', '.join(args.formats)})\n")
    try:
        return args.func(args)
    except QStrataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
