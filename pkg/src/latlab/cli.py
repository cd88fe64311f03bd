"""Command-line front end.

Every operation is a subcommand over JSON documents.  Exit codes: 0 success,
1 input/validation error, 2 inconclusive verdict, 3 budget exhausted.  The
json output format is versioned ("schema": 1) and byte-stable: keys are
sorted and exact scalars are printed as strings in the scalar grammar;
floating point values only appear under keys suffixed _approx.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import arith, documents, euclid, groups, numfield, resk
from .enumeration import DEFAULT_NODE_BUDGET
from .errors import BudgetExceededError, DocumentError
from .matrices import ExactMatrix
from .scalars import print_scalar

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONCLUSIVE = 2
EXIT_BUDGET = 3


def _default_budget() -> int:
    env = os.environ.get("LATLAB_BUDGET")
    if env is None:
        return DEFAULT_NODE_BUDGET
    try:
        value = int(env)
    except ValueError:
        raise DocumentError("LATLAB_BUDGET must be an integer, got %r" % env)
    if value < 1:
        raise DocumentError("LATLAB_BUDGET must be positive")
    return value


def _emit(payload: dict, fmt: str, human_lines, out) -> None:
    if fmt == "json":
        payload = dict(payload)
        payload["schema"] = 1
        out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        out.write("\n")
    else:
        for line in human_lines:
            out.write(line + "\n")


def _approx(value) -> float:
    return float(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latlab",
        description="exact lattice invariants, quadratic fields, and "
        "uniformity verdicts over JSON documents",
    )
    parser.add_argument("--format", choices=("human", "json"), default="human",
                        help="output format (default: human)")
    parser.add_argument("--budget", type=int, default=None,
                        help="enumeration node budget (default: LATLAB_BUDGET or %d)"
                        % DEFAULT_NODE_BUDGET)
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for family computations")
    top = parser.add_subparsers(dest="command", required=True)

    lattice = top.add_parser("lattice", help="Euclidean lattice invariants")
    lsub = lattice.add_subparsers(dest="subcommand", required=True)
    p = lsub.add_parser("covol", help="squared covolume")
    p.add_argument("document")
    p = lsub.add_parser("systole", help="squared systole and witness")
    p.add_argument("document")
    p = lsub.add_parser("reduce", help="bounded basis of the same lattice")
    p.add_argument("document")
    p.add_argument("--a", required=True, help="reduction parameter, rational > 1")
    p = lsub.add_parser("hermite", help="ball-packing bound margin")
    p.add_argument("document")
    p = lsub.add_parser("mahler", help="compactness functionals of a family")
    p.add_argument("documents", nargs="+")

    field = top.add_parser("field", help="number field computations")
    fsub = field.add_subparsers(dest="subcommand", required=True)
    p = fsub.add_parser("info", help="ring of integers and signature")
    p.add_argument("document")
    p = fsub.add_parser("embed", help="trace-form lattice of the integer ring")
    p.add_argument("document")
    p = fsub.add_parser("signature", help="signature (r1, r2)")
    p.add_argument("document")

    group = top.add_parser("group", help="group classification and verdicts")
    gsub = group.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("verdict", help="uniformity verdict")
    p.add_argument("document")
    p.add_argument("--height", type=int, default=10,
                   help="isotropic search height (default 10)")
    p = gsub.add_parser("unipotent", help="unipotent/nilpotent classification")
    p.add_argument("document")
    p = gsub.add_parser("adsys", help="adjoint-orbit systole of a matrix")
    p.add_argument("document")
    p.add_argument("--height", type=int, default=3,
                   help="coefficient bound for trace-zero matrices (default 3)")

    res = top.add_parser("resk", help="restriction of scalars to Q")
    rsub = res.add_subparsers(dest="subcommand", required=True)
    p = rsub.add_parser("element", help="2x2 model of a field element")
    p.add_argument("document")
    p = rsub.add_parser("matrix", help="blockwise restriction of a matrix")
    p.add_argument("document")

    ar = top.add_parser("arith", help="Z-lattice and congruence bookkeeping")
    asub = ar.add_subparsers(dest="subcommand", required=True)
    p = asub.add_parser("index", help="index of a sublattice")
    p.add_argument("sublattice")
    p.add_argument("superlattice")
    p = asub.add_parser("commens", help="commensurability constant of two lattices")
    p.add_argument("first")
    p.add_argument("second")
    p = asub.add_parser("congruence",
                        help="congruence subgroup membership or index")
    p.add_argument("document", nargs="?", default=None,
                   help="matrix document for a membership test")
    p.add_argument("--m", type=int, required=True, help="modulus")
    p.add_argument("--n", type=int, default=2,
                   help="matrix size for the index computation (default 2)")

    return parser


def _zlattice_from(path: str) -> arith.ZLattice:
    lat = documents.lattice_from_doc(documents.load_json(path))
    if lat.rank != lat.ambient:
        raise DocumentError("expected a full-rank lattice document")
    return arith.ZLattice([[_rational(e) for e in vec] for vec in lat.basis])


def _rational(e) -> Fraction:
    from .scalars import as_fraction

    try:
        return as_fraction(e)
    except ValueError:
        raise DocumentError("this subcommand needs rational entries (field = null)")


def _cmd_lattice(args, out) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    if args.subcommand == "mahler":
        family = [documents.lattice_from_doc(documents.load_json(p))
                  for p in args.documents]
        report = euclid.mahler_report(family, node_budget=budget,
                                      workers=max(1, args.workers))
        _emit(
            {
                "sup_covol_sq": print_scalar(report.sup_covol_sq),
                "inf_syst_sq": print_scalar(report.inf_syst_sq),
                "bounded": report.bounded,
            },
            args.format,
            [
                "family size = %d" % report.size,
                "sup covol_sq = %s" % print_scalar(report.sup_covol_sq),
                "inf syst_sq = %s" % print_scalar(report.inf_syst_sq),
                "bounded (Mahler criterion): %s"
                % ("yes" if report.bounded else "no"),
            ],
            out,
        )
        return EXIT_OK

    lattice = documents.lattice_from_doc(documents.load_json(args.document))
    if args.subcommand == "covol":
        value = euclid.covol_sq(lattice)
        _emit({"covol_sq": print_scalar(value)}, args.format,
              ["covol_sq = %s" % print_scalar(value)], out)
        return EXIT_OK
    if args.subcommand == "systole":
        value, witness = euclid.systole_sq(lattice, budget)
        _emit(
            {
                "systole_sq": print_scalar(value),
                "witness": list(witness),
                "systole_approx": math.sqrt(_approx(value)),
            },
            args.format,
            [
                "systole_sq = %s" % print_scalar(value),
                "witness coefficients = %s" % (list(witness),),
            ],
            out,
        )
        return EXIT_OK
    if args.subcommand == "hermite":
        margin = euclid.hermite_check(lattice, budget)
        _emit(
            {"margin_approx": margin},
            args.format,
            ["Hermite-Minkowski margin = %.12g (contract: >= -1e-9)" % margin],
            out,
        )
        return EXIT_OK
    if args.subcommand == "reduce":
        try:
            a = Fraction(args.a)
        except (ValueError, ZeroDivisionError):
            raise DocumentError("--a must be a rational number like 2 or 5/2")
        reduced = euclid.reduce_bounded(lattice, a, budget)
        bound = euclid.reduction_constant(lattice.rank, float(a))
        norms = [math.sqrt(_approx(reduced.gram[i][i]))
                 for i in range(reduced.rank)]
        _emit(
            {
                "basis": [[print_scalar(e) for e in vec] for vec in reduced.basis],
                "norms_approx": norms,
                "bound_approx": bound,
            },
            args.format,
            ["reduced basis: %s"
             % ([[print_scalar(e) for e in vec] for vec in reduced.basis],),
             "norms = %s, bound C(n,a) = %.6g" % (norms, bound)],
            out,
        )
        return EXIT_OK
    raise DocumentError("unknown lattice subcommand")


def _cmd_field(args, out) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    field = documents.numberfield_from_doc(documents.load_json(args.document))
    if args.subcommand == "signature":
        sig = numfield.signature(field)
        _emit({"r1": sig.r1, "r2": sig.r2}, args.format,
              ["signature (r1, r2) = (%d, %d)" % (sig.r1, sig.r2)], out)
        return EXIT_OK
    if args.subcommand == "info":
        if field.is_quadratic:
            ring = numfield.ring_of_integers(field)
            sig = numfield.signature(field)
            _emit(
                {
                    "degree": 2,
                    "quad": field.m,
                    "integers": ring.label(),
                    "omega": print_scalar(ring.omega),
                    "r1": sig.r1,
                    "r2": sig.r2,
                },
                args.format,
                [
                    "field Q(sqrt(%d)), degree 2" % field.m,
                    "ring of integers %s" % ring.label(),
                    "signature (%d, %d)" % (sig.r1, sig.r2),
                ],
                out,
            )
        else:
            sig = numfield.signature(field)
            _emit(
                {
                    "degree": field.degree,
                    "minpoly": list(field.minpoly),
                    "r1": sig.r1,
                    "r2": sig.r2,
                },
                args.format,
                [
                    "field of degree %d from its minimal polynomial" % field.degree,
                    "signature (%d, %d)" % (sig.r1, sig.r2),
                ],
                out,
            )
        return EXIT_OK
    if args.subcommand == "embed":
        if not field.is_quadratic:
            raise DocumentError("embedding lattice needs a quadratic field")
        ring = numfield.ring_of_integers(field)
        lattice = numfield.minkowski_lattice(ring)
        syst = numfield.o_discreteness_check(ring, budget)
        _emit(
            {
                "gram": [[print_scalar(e) for e in row] for row in lattice.gram],
                "covol_sq": print_scalar(euclid.covol_sq(lattice)),
                "min_norm_sq": print_scalar(syst),
            },
            args.format,
            [
                "trace-form Gram matrix: %s"
                % ([[print_scalar(e) for e in row] for row in lattice.gram],),
                "covol_sq = %s (field discriminant)"
                % print_scalar(euclid.covol_sq(lattice)),
                "shortest image norm^2 = %s > 0: the integer ring is discrete"
                % print_scalar(syst),
            ],
            out,
        )
        return EXIT_OK
    raise DocumentError("unknown field subcommand")


def _verdict_payload(verdict: groups.Verdict) -> dict:
    payload = {
        "status": verdict.status,
        "reason": verdict.reason,
        "criterion": verdict.criterion,
    }
    if verdict.witness is not None:
        payload["witness"] = [
            [print_scalar(e) for e in verdict.witness.row(i)]
            for i in range(verdict.witness.rows)
        ]
    if verdict.isotropic_vector is not None:
        payload["isotropic_vector"] = [print_scalar(v)
                                       for v in verdict.isotropic_vector]
    if verdict.conjugate_name is not None:
        payload["conjugate"] = verdict.conjugate_name
    if verdict.search_bound is not None:
        payload["search_height"] = verdict.search_bound
    return payload


def _cmd_group(args, out) -> int:
    doc = documents.load_json(args.document)
    if args.subcommand == "verdict":
        spec = documents.group_from_doc(doc)
        if args.height < 1:
            raise DocumentError("--height must be positive")
        verdict = groups.uniformity_verdict(spec, height=args.height)
        lines = ["%s (%s)" % (verdict.status, verdict.reason),
                 "criterion: %s" % verdict.criterion]
        if verdict.witness is not None:
            lines.append("witness: %s"
                         % ([[print_scalar(e) for e in verdict.witness.row(i)]
                             for i in range(verdict.witness.rows)],))
        if verdict.isotropic_vector is not None:
            lines.append("isotropic vector: %s"
                         % ([print_scalar(v) for v in verdict.isotropic_vector],))
        _emit(_verdict_payload(verdict), args.format, lines, out)
        return EXIT_INCONCLUSIVE if verdict.status == groups.Verdict.INCONCLUSIVE \
            else EXIT_OK
    if args.subcommand == "unipotent":
        matrix, _ = documents.matrix_from_doc(doc)
        if not matrix.is_square:
            raise DocumentError("classification needs a square matrix")
        unip = groups.is_unipotent(matrix)
        nilp = groups.is_nilpotent(matrix)
        _emit(
            {"unipotent": unip, "nilpotent": nilp},
            args.format,
            ["unipotent: %s" % ("yes" if unip else "no"),
             "nilpotent: %s" % ("yes" if nilp else "no")],
            out,
        )
        return EXIT_OK
    if args.subcommand == "adsys":
        matrix, m = documents.matrix_from_doc(doc)
        if m is not None:
            raise DocumentError("adjoint systole expects a rational matrix")
        result = groups.adjoint_systole(matrix, args.height)
        _emit(
            {
                "min_norm_sq": print_scalar(result.min_norm_sq),
                "witness": [[print_scalar(e) for e in result.witness.row(i)]
                            for i in range(result.witness.rows)],
                "witness_nilpotent": result.witness_nilpotent,
            },
            args.format,
            [
                "min ||Ad(g)X||_F^2 = %s over trace-zero integer X with "
                "entries bounded by %d" % (print_scalar(result.min_norm_sq),
                                           args.height),
                "witness: %s" % (result.witness.to_rows(),),
                "witness nilpotent (trace test): %s"
                % ("yes" if result.witness_nilpotent else "no"),
            ],
            out,
        )
        return EXIT_OK
    raise DocumentError("unknown group subcommand")


def _cmd_resk(args, out) -> int:
    doc = documents.load_json(args.document)
    if args.subcommand == "element":
        scalar, m = documents.scalar_from_doc(doc)
        if m is None:
            raise DocumentError("resk element needs a declared quadratic field")
        restricted = resk.res_matrix(ExactMatrix(1, 1, [scalar]), m)
        payload = documents.matrix_to_doc(restricted.matrix)
        payload["charpoly"] = [print_scalar(c)
                               for c in resk.recover_embeddings(restricted)]
        _emit(
            payload,
            args.format,
            [
                "restricted 2x2 model: %s"
                % ([[print_scalar(e) for e in restricted.matrix.row(i)]
                    for i in range(2)],),
                "characteristic polynomial (ascending): %s"
                % (payload["charpoly"],),
            ],
            out,
        )
        return EXIT_OK
    if args.subcommand == "matrix":
        matrix, m = documents.matrix_from_doc(doc)
        if m is None:
            raise DocumentError("resk matrix needs a declared quadratic field")
        restricted = resk.res_matrix(matrix, m)
        payload = documents.matrix_to_doc(restricted.matrix)
        _emit(
            payload,
            args.format,
            ["restricted %dx%d rational matrix: %s"
             % (restricted.matrix.rows, restricted.matrix.cols,
                [[print_scalar(e) for e in restricted.matrix.row(i)]
                 for i in range(restricted.matrix.rows)])],
            out,
        )
        return EXIT_OK
    raise DocumentError("unknown resk subcommand")


def _cmd_arith(args, out) -> int:
    if args.subcommand == "index":
        sub = _zlattice_from(args.sublattice)
        sup = _zlattice_from(args.superlattice)
        index = arith.sublattice_index(sub, sup)
        _emit({"index": index}, args.format,
              ["sublattice index = %d" % index], out)
        return EXIT_OK
    if args.subcommand == "commens":
        first = _zlattice_from(args.first)
        second = _zlattice_from(args.second)
        value = arith.commensurability_m(first, second)
        _emit({"m": value}, args.format,
              ["smallest m with m*L <= L' <= (1/m)*L: %d" % value], out)
        return EXIT_OK
    if args.subcommand == "congruence":
        if args.document is not None:
            matrix, m = documents.matrix_from_doc(documents.load_json(args.document))
            if m is not None:
                raise DocumentError("congruence membership needs a rational matrix")
            member = arith.congruence_member(matrix, args.m)
            _emit({"member": member, "modulus": args.m}, args.format,
                  ["congruent to the identity mod %d: %s"
                   % (args.m, "yes" if member else "no")], out)
            return EXIT_OK
        index = arith.congruence_index(args.n, args.m)
        _emit({"index": index, "modulus": args.m, "n": args.n}, args.format,
              ["[SL_%d(Z) : principal congruence subgroup mod %d] = %d"
               % (args.n, args.m, index)], out)
        return EXIT_OK
    raise DocumentError("unknown arith subcommand")


_COMMANDS = {
    "lattice": _cmd_lattice,
    "field": _cmd_field,
    "group": _cmd_group,
    "resk": _cmd_resk,
    "arith": _cmd_arith,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except BudgetExceededError as exc:
        err.write("error: %s\n" % exc)
        return EXIT_BUDGET
    except (DocumentError, ValueError) as exc:
        err.write("error: %s\n" % exc)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
