"""Command-line interface: ``cherednik-supports <command> ...``."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import emit
from .chambers import essential_walls, plan_path, wall_position
from .charged_fock import FockParam, GenericKappa, component_classes
from .crystal import ascend_to_singular, depth, e_op, f_op
from .heisenberg import e_inf, f_inf, q_remark, q_singular
from .oracles import example_report, verify_counting, verify_crystal_axioms, verify_wilcox
from .partitions import PartitionError, parse, parse_partition, render, render_partition
from .partitions import multipartitions_of
from .supports import finite_dims, support, table
from .wallcross import transport, wc_pair, wc_typeA

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_DIFF = 0, 1, 2, 3

# flags whose values may legitimately start with "-"
_VALUE_FLAGS = {"--kappa", "--s", "--h", "--lambda", "--z", "--i", "--m"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _kappa(text: str):
    if text in ("generic-neg", "generic-pos"):
        return GenericKappa(-1 if text == "generic-neg" else 1)
    return _rational(text)


def _rational_list(text: str) -> tuple[Fraction, ...]:
    if not text.strip():
        raise argparse.ArgumentTypeError("empty list")
    return tuple(_rational(t) for t in text.split(","))


def _multipartition(text: str):
    try:
        return parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _bounds(text: str) -> dict[str, int]:
    out = {}
    for item in filter(None, text.split(",")):
        key, sep, value = item.partition("=")
        if not sep or not value.strip().lstrip("-").isdigit():
            raise argparse.ArgumentTypeError(f"bad bound {item!r}; expected key=int")
        out[key.strip()] = int(value)
    return out


def _param(args) -> FockParam:
    if args.kappa is None:
        raise UsageError("--kappa is required")
    h = getattr(args, "h", None)
    charges = args.s
    if not isinstance(args.kappa, GenericKappa) and args.kappa == 0:
        if h is None:
            raise UsageError("kappa = 0 needs --h")
        if charges is None:
            charges = (0,) * len(h)
    elif h is not None:
        raise UsageError("--h only applies at kappa = 0")
    if charges is None:
        raise UsageError("--s is required")
    try:
        return FockParam(args.kappa, charges, h)
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_ell(mp, p: FockParam):
    if len(mp) != p.ell:
        raise UsageError(f"{render(mp)} has {len(mp)} components but --s has {p.ell}")


def _out(text: str):
    sys.stdout.write(text)


def _json(payload: dict) -> str:
    return emit.dumps({"schema": emit.SCHEMA_VERSION, **payload})


# commands

def cmd_support(args):
    p = _param(args)
    _check_ell(args.lam, p)
    r = support(args.lam, p)
    if args.json:
        _out(_json({"param": emit.param_dict(p), **r.as_dict()}))
    else:
        _out(emit.results_tsv([r]))


def cmd_table(args):
    p = _param(args)
    rows = table(p, args.n)
    if args.json or args.format == "json":
        _out(emit.results_json(rows, p))
    else:
        _out(emit.results_tsv(rows))


def cmd_finite_dims(args):
    p = _param(args)
    found = finite_dims(p, args.n)
    if args.json:
        _out(_json({"param": emit.param_dict(p), "n": args.n,
                    "finite_dimensional": [render(mp) for mp in found]}))
    else:
        _out("".join(render(mp) + "\n" for mp in found))


def _single_class(p: FockParam):
    if len(component_classes(p)) != 1:
        raise UsageError("this command needs all charges in one component class")


def cmd_crystal(args):
    p = _param(args)
    if args.action == "graph":
        if args.which == "heis":
            _single_class(p)
        dot = emit.emit_crystal_dot(p, args.n, args.which)
        if args.json:
            _out(_json({"param": emit.param_dict(p), "n_max": args.n,
                        "which": args.which, "dot": dot}))
        else:
            _out(dot)
        return
    if args.lam is None:
        raise UsageError("--lambda is required")
    _check_ell(args.lam, p)
    if args.action == "depth" and not p.is_generic:
        _single_class(p)
    if args.action == "apply":
        if args.op is None or args.z is None:
            raise UsageError("crystal apply needs --op and --z")
        op = e_op if args.op == "e" else f_op
        result = op(args.lam, args.z, p)
        text = "null" if result is None else render(result)
        payload = {"lambda": render(args.lam), "op": args.op, "z": str(args.z),
                   "result": None if result is None else text}
    else:
        head, word = ascend_to_singular(args.lam, p)
        d = depth(args.lam, p)
        text = f"{d}\t{render(head)}\t{','.join(str(z) for z in word)}"
        payload = {"lambda": render(args.lam), "depth": d, "head": render(head),
                   "word": [str(z) for z in word]}
    _out(_json(payload) if args.json else text + "\n")


def cmd_heis(args):
    p = _param(args)
    _check_ell(args.lam, p)
    if args.action == "apply":
        if args.op is None or args.i is None:
            raise UsageError("heis apply needs --op and --i")
        op = e_inf if args.op == "e" else f_inf
        result = op(args.lam, args.i, p)
        payload = {"lambda": render(args.lam), "op": args.op, "i": args.i,
                   "result": None if result is None else render(result)}
        text = payload["result"] or "null"
    else:
        a, b = q_remark(args.lam, p), q_singular(args.lam, p)
        if a != b:
            raise RuntimeError(f"q routes disagree: {a} vs {b}")
        payload = {"lambda": render(args.lam), "q": a}
        text = str(a)
    _out(_json(payload) if args.json else text + "\n")


def cmd_wc(args):
    if args.action == "pair":
        if args.m is None or args.n is None:
            raise UsageError("wc pair needs --m and --n")
        rows = [(mp, wc_pair(mp, args.m, args.side)) for mp in multipartitions_of(args.n, 2)]
        if args.json:
            _out(_json({"m": args.m, "n": args.n, "side": args.side,
                        "map": [[render(a), render(b)] for a, b in rows]}))
        else:
            _out("source\timage\n" + "".join(f"{render(a)}\t{render(b)}\n" for a, b in rows))
    elif args.action == "typea":
        if args.e is None or args.part is None:
            raise UsageError("wc typea needs --e and --lambda")
        mu = wc_typeA(args.part, args.e)
        if args.json:
            _out(_json({"lambda": render_partition(args.part), "e": args.e,
                        "result": render_partition(mu)}))
        else:
            _out(render_partition(mu) + "\n")
    else:
        p = _param(args)
        if args.lam is None or args.to_asymptotic is None:
            raise UsageError("wc transport needs --lambda and --to-asymptotic")
        _check_ell(args.lam, p)
        j = args.to_asymptotic - 1
        if not 0 <= j < p.ell:
            raise UsageError(f"--to-asymptotic must lie in 1..{p.ell}")
        path = plan_path(p, j, sum(map(sum, args.lam)))
        moved = transport(args.lam, path, p)
        if args.json:
            _out(_json({"lambda": render(args.lam), "result": render(moved),
                        "walls": [str(step.wall) for step in path]}))
        else:
            _out(render(moved) + "\n")


def cmd_walls(args):
    p = _param(args)
    walls = essential_walls(p, args.n)
    rows = [(w.i + 1, w.j + 1, w.m, wall_position(w, p)) for w in walls]
    if args.json:
        _out(_json({"param": emit.param_dict(p), "n": args.n,
                    "walls": [{"i": i, "j": j, "m": m, "position": str(pos)}
                              for i, j, m, pos in rows]}))
    else:
        _out("i\tj\tm\tposition\n" + "".join(f"{i}\t{j}\t{m}\t{pos}\n" for i, j, m, pos in rows))


def cmd_verify(args):
    b = args.bounds
    if args.suite == "wilcox":
        reports = [verify_wilcox(b.get("e", 2), b.get("n", 8))]
    elif args.suite == "example":
        chambers = [b["chamber"]] if "chamber" in b else [1, 2, 3, 4]
        if any(c not in (1, 2, 3, 4) for c in chambers):
            raise UsageError("chamber must be 1..4")
        reports = [example_report(c) for c in chambers]
    else:
        if args.kappa is None:
            args.kappa, args.s = Fraction(-1, 2), args.s or (Fraction(0), Fraction(-4))
        p = _param(args)
        check = verify_crystal_axioms if args.suite == "axioms" else verify_counting
        reports = [check(p, b.get("n", 5))]
    ok = all(r.ok for r in reports)
    if args.json:
        _out(_json({"suite": args.suite, "ok": ok, "reports": [r.as_dict() for r in reports]}))
    else:
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            _out(f"{status}\t{r.suite}\t{r.bounds}\tchecked={r.checked}"
                 f"\tviolations={len(r.violations)}\tallowlisted={len(r.allowlisted)}\n")
            for v in r.violations:
                _out(f"  violation: {v}\n")
    return EXIT_OK if ok else EXIT_DIFF


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cherednik-supports",
                     description="Support invariants (p, q) of simple modules in cyclotomic category O.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, param=True):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        if param:
            sp.add_argument("--kappa", type=_kappa, help="p/q, integer, generic-neg or generic-pos")
            sp.add_argument("--s", type=_rational_list, help="charges, comma-separated")
            sp.add_argument("--h", type=_rational_list, help="h_1..h_ell, used when kappa = 0")
        return sp

    sp = add("support", cmd_support, "support of one simple module")
    sp.add_argument("--lambda", dest="lam", type=_multipartition, required=True)

    sp = add("table", cmd_table, "support table for all labels of size n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")

    sp = add("finite-dims", cmd_finite_dims, "finite-dimensional simples of size n")
    sp.add_argument("--n", type=int, required=True)

    sp = add("crystal", cmd_crystal, "Kac-Moody crystal operators")
    sp.add_argument("action", choices=("apply", "graph", "depth"))
    sp.add_argument("--op", choices=("e", "f"))
    sp.add_argument("--z", type=_rational, help="residue")
    sp.add_argument("--lambda", dest="lam", type=_multipartition)
    sp.add_argument("--n", type=int, default=3, help="size bound for graph")
    sp.add_argument("--which", choices=("km", "heis"), default="km")

    sp = add("heis", cmd_heis, "Heisenberg crystal operators")
    sp.add_argument("action", choices=("apply", "q"))
    sp.add_argument("--op", choices=("e", "f"))
    sp.add_argument("--i", type=int)
    sp.add_argument("--lambda", dest="lam", type=_multipartition, required=True)

    sp = add("wc", cmd_wc, "wall-crossing bijections")
    sp.add_argument("action", choices=("pair", "typea", "transport"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--side", type=int, choices=(1, 2), default=1)
    sp.add_argument("--e", type=int)
    sp.add_argument("--to-asymptotic", type=int)
    sp.add_argument("--lambda", dest="lam_text")

    sp = add("walls", cmd_walls, "essential walls for size n")
    sp.add_argument("--n", type=int, required=True)

    sp = add("verify", cmd_verify, "oracle suites")
    sp.add_argument("--suite", choices=("axioms", "counting", "wilcox", "example"), required=True)
    sp.add_argument("--bounds", type=_bounds, default={}, help="e.g. e=2,n=8 or chamber=1")
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    """Turn ``--kappa -1/2`` into ``--kappa=-1/2`` so negative values survive argparse."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok in _VALUE_FLAGS and k + 1 < len(argv):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_values(argv))
    try:
        if args.command == "wc":
            # typea takes a single partition, the others a multipartition
            args.part = args.lam = None
            if args.lam_text is not None:
                conv = _partition if args.action == "typea" else _multipartition
                try:
                    value = conv(args.lam_text)
                except argparse.ArgumentTypeError as exc:
                    raise UsageError(str(exc))
                if args.action == "typea":
                    args.part = value
                else:
                    args.lam = value
        code = args.func(args)
    except UsageError as exc:
        print(f"cherednik-supports: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"cherednik-supports: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
