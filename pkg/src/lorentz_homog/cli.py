"""Command-line front end.

Exit codes: 0 success, 1 a verification report is not clean, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, noncompact
from .catalog import CaseReport, MarksReport, OrbitEntry, RootsReport, SpectrumLine
from .matrixlie import build_case, central_action_spectrum
from .orbits import enumerate_compact, metric_model, minimal_orbit
from .rootsys import all_simple_types, build_root_system, parse_simple


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _group(name: str):
    return parse_simple(name)


def cmd_roots(args):
    g = _group(args.group)
    rs = build_root_system(g)
    return RootsReport(g, g.rank, g.dimension, tuple(rs.positive_roots), tuple(rs.highest_root))


def cmd_marks(args):
    g = _group(args.group)
    return MarksReport(g, tuple(build_root_system(g).marks))


def cmd_orbits(args):
    g = _group(args.group)
    if args.node is not None:
        if not 1 <= args.node <= g.rank:
            raise UsageError(f"node must be in 1..{g.rank}")
        recs = [minimal_orbit(g, args.node)]
    else:
        recs = enumerate_compact(g)
    return [OrbitEntry(r, metric_model(r)) for r in recs]


def cmd_enumerate_compact(args):
    if args.group:
        groups = [_group(args.group)]
    else:
        if not 1 <= args.max_rank <= 8:
            raise UsageError("--max-rank must be in 1..8")
        groups = all_simple_types(args.max_rank)
    return [OrbitEntry(r, metric_model(r)) for g in groups for r in enumerate_compact(g)]


def cmd_enumerate_class2(args):
    if args.max_dim < 0:
        raise UsageError("--max-dim must be non-negative")
    if args.max_dim > noncompact.PAPER_MAX_DIM:
        print(f"note: records with d > {noncompact.PAPER_MAX_DIM} are flagged 'beyond paper'", file=sys.stderr)
    return noncompact.enumerate_class_II(args.max_dim)


def _ints(text: str, n: int) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected {n} integers, got {text!r}") from exc
    if len(vals) != n:
        raise UsageError(f"expected {n} integers, got {text!r}")
    return vals


def record_from_spec(spec: str) -> noncompact.HomogeneousSpaceRecord:
    """``sl:p,q``, ``RH:n``, ``CH:n``, ``HH:n``, ``OH:2``, ``G2`` or ``sopq:p,q,r,k``."""
    kind, _, rest = spec.partition(":")
    if kind.upper() == "G2" and not rest:
        return noncompact.g2_record()
    if kind == "sl":
        return noncompact.sl_family(*_ints(rest, 2))
    if kind == "sopq":
        return noncompact.so_pq_diagonal_stabilizer(*_ints(rest, 4))
    if kind.upper() in ("RH", "CH", "HH", "OH"):
        return noncompact.rank_one_family(kind, *_ints(rest, 1))
    raise UsageError(f"unknown record spec {spec!r}")


def cmd_dual(args):
    return noncompact.duality(record_from_spec(args.record))


_SPECTRUM_TARGETS = ("p'", "n'", "Cv", "p_C")


def case_report(case_id: str) -> CaseReport:
    c = build_case(case_id)
    dims = {k: s.dim for k, s in c.subspaces.items()}
    fixed = c.fixed_dims()
    claims = {k: tuple(v) for k, v in c.check_claims().items()}
    spectra = []
    for elem in ("z", "z0"):
        if elem not in c.vectors:
            continue
        for name in _SPECTRUM_TARGETS:
            if name in c.subspaces:
                ev = central_action_spectrum(c.vectors[elem], c.subspaces[name])
                spectra.append(SpectrumLine(elem, name, tuple(ev)))
    return CaseReport(case_id, c.title, c.g.name, dims, fixed, claims, tuple(c.notes), tuple(spectra))


def cmd_case(args):
    return case_report(args.case_id)


def cmd_verify(args):
    if args.all:
        if args.table or args.group:
            raise UsageError("--all takes no table or group")
        return catalog.verify_all()
    if not args.table:
        raise UsageError("give a table id or --all")
    return [catalog.verify(args.table, args.group)]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lorentz-homog", description="Minimal admissible homogeneous Lorentzian manifolds.")
    p.add_argument("--format", choices=("json", "table"), default="table")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
        s.set_defaults(func=func)
        return s

    add("roots", cmd_roots, "positive roots of a simple type").add_argument("group")
    add("marks", cmd_marks, "Dynkin marks of the highest root").add_argument("group")
    s = add("orbits", cmd_orbits, "minimal orbit records of one group")
    s.add_argument("group")
    s.add_argument("--node", type=int)
    s = add("enumerate-compact", cmd_enumerate_compact, "minimal orbit records for all simple types")
    s.add_argument("--max-rank", type=int, default=8)
    s.add_argument("--group")
    s = add("enumerate-class2", cmd_enumerate_class2, "class II minimal admissible records")
    s.add_argument("--max-dim", type=int, default=noncompact.PAPER_MAX_DIM)
    add("dual", cmd_dual, "compact dual of a record (sl:p,q RH:n CH:n HH:n OH:2 G2 sopq:p,q,r,k)").add_argument("record")
    add("case", cmd_case, "fixed subspaces of a matrix case").add_argument("case_id")
    s = add("verify", cmd_verify, "compare against the golden tables")
    s.add_argument("table", nargs="?", choices=catalog.TABLE_IDS)
    s.add_argument("--all", action="store_true")
    s.add_argument("--group")
    return p


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Return ``(exit code, standard output text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
        text = catalog.serialize(result, args.format)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    code = 0
    if args.command == "verify":
        if args.all and args.format == "table":
            text += "\n" + "\n".join(f"note: {n}" for n in catalog.GENERAL_NOTES)
        if not all(r.clean for r in result):
            code = 1
    return code, text


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    if text:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
