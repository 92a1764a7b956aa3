"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 internal assertion (two independent computations disagree).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter

from . import __version__
from .errors import ParseError, PreconditionError, TheoremViolation
from .horncone import horn_member
from .kronecker import character_table, kronecker_coefficient, murnaghan_littlewood_check
from .lrcalc import lr_coefficient, oracle_triple_coefficient, triple_coefficient
from .reduction import factorize, sweep_faces
from .schubert import enumerate_pt_triples, product_expansion, triple_degree
from .weights import index_to_partition, parse_index, parse_partition, parse_weight

EXIT_PARSE, EXIT_PRECONDITION, EXIT_ASSERTION = 2, 3, 4

_NEGATIVE_LIST = re.compile(r"^-\d+(,-?\d+)*$")


def envelope(command: str, inputs: dict, result) -> dict:
    return {"command": command, "inputs": inputs, "result": result, "version": __version__}


def _report_dict(report) -> dict:
    lam, mu, nu = report.weights
    I, J, K = report.indices
    return {
        "n": report.n,
        "r": report.r,
        "lambda": str(lam),
        "mu": str(mu),
        "nu": str(nu),
        "I": str(I),
        "J": str(J),
        "K": str(K),
        "degree": report.degree,
        "on_face": report.on_face,
        "lhs": report.lhs,
        "factor_small": report.factor_small,
        "factor_large": report.factor_large,
        "product": report.product,
        "verdict": report.verdict,
    }


def _index(text, n, r=None):
    I = parse_index(text, n)
    if r is not None and I.r != r:
        raise PreconditionError(f"subset {text!r} does not have r={r} elements")
    return I


# -- commands -------------------------------------------------------------------


def cmd_lr(args):
    lam, mu, nu = parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu)
    inputs = {"lambda": str(lam), "mu": str(mu), "nu": str(nu)}
    return envelope("lr", inputs, {"coefficient": lr_coefficient(lam, mu, nu)})


def cmd_triple(args):
    lam, mu, nu = (parse_weight(t, args.n) for t in (args.lam, args.mu, args.nu))
    inputs = {"n": args.n, "lambda": str(lam), "mu": str(mu), "nu": str(nu)}
    if args.oracle:
        value, method = oracle_triple_coefficient(lam, mu, nu, args.n), "oracle"
    else:
        value, method = triple_coefficient(lam, mu, nu, args.n).value, "lr"
    return envelope("triple", inputs, {"value": value, "method": method})


def cmd_schubert_degree(args):
    I, J, K = (_index(t, args.n, args.r) for t in (args.I, args.J, args.K))
    inputs = {"r": args.r, "n": args.n, "I": str(I), "J": str(J), "K": str(K)}
    return envelope("schubert degree", inputs, {"degree": triple_degree(I, J, K).d})


def cmd_schubert_expand(args):
    I, J = _index(args.I, args.n, args.r), _index(args.J, args.n, args.r)
    inputs = {"r": args.r, "n": args.n, "I": str(I), "J": str(J)}
    terms = [
        {"index": str(K), "partition": str(index_to_partition(K)), "coefficient": c}
        for K, c in product_expansion(I, J).items()
    ]
    return envelope("schubert expand", inputs, {"expansion": terms})


def cmd_schubert_faces(args):
    d = None if args.all_degrees else args.d
    inputs = {"r": args.r, "n": args.n, "d": d}
    triples = enumerate_pt_triples(args.r, args.n, d)
    result = {"count": len(triples), "triples": [[str(x) for x in t] for t in triples]}
    return envelope("schubert faces", inputs, result)


def cmd_horn(args):
    lam, mu, nu = (parse_weight(t, args.n) for t in (args.lam, args.mu, args.nu))
    inputs = {"n": args.n, "lambda": str(lam), "mu": str(mu), "nu": str(nu), "d_variant": args.d_variant}
    cert = horn_member(lam, mu, nu, args.n, use_d_variant=args.d_variant)
    violated = None
    if cert.violated is not None:
        v = cert.violated
        violated = {"r": v.r, "I": str(v.I), "J": str(v.J), "K": str(v.K), "lhs": v.lhs}
    return envelope("horn", inputs, {"member": cert.member, "trace": cert.trace, "violated": violated})


def cmd_reduce(args):
    if args.sweep:
        if args.n is None or args.bound is None:
            raise ParseError("--sweep needs --n and --bound")
        d = None if args.all_degrees else args.d
        inputs = {"sweep": True, "n": args.n, "bound": args.bound, "r": args.r, "d": d}
        reports = sweep_faces(args.n, args.bound, r=args.r, d_filter=d)
        verdicts = Counter(rep.verdict for rep in reports)
        result = {
            "count": len(reports),
            "verdicts": {k: verdicts[k] for k in sorted(verdicts)},
            "reports": [_report_dict(rep) for rep in reports],
        }
        return envelope("reduce", inputs, result)
    missing = [f for f in ("n", "lam", "mu", "nu", "I", "J", "K") if getattr(args, f) is None]
    if missing:
        raise ParseError(f"reduce needs --{', --'.join(m.replace('lam', 'lambda') for m in missing)}")
    lam, mu, nu = (parse_weight(t, args.n) for t in (args.lam, args.mu, args.nu))
    I, J, K = (_index(t, args.n, args.r) for t in (args.I, args.J, args.K))
    inputs = {
        "n": args.n, "lambda": str(lam), "mu": str(mu), "nu": str(nu),
        "I": str(I), "J": str(J), "K": str(K),
    }
    return envelope("reduce", inputs, _report_dict(factorize(lam, mu, nu, I, J, K)))


def cmd_kron_coeff(args):
    a, b, c = parse_partition(args.alpha), parse_partition(args.beta), parse_partition(args.gamma)
    inputs = {"alpha": str(a), "beta": str(b), "gamma": str(c)}
    return envelope("kron coeff", inputs, {"value": kronecker_coefficient(a, b, c).value})


def cmd_kron_table(args):
    t = character_table(args.n)
    result = {
        "n": t.n,
        "rows": [str(p) for p in t.rows],
        "columns": [str(p) for p in t.columns],
        "class_sizes": list(t.class_sizes),
        "values": [list(row) for row in t.values],
    }
    return envelope("kron table", {"n": args.n}, result)


def cmd_kron_ml(args):
    a, b, c = parse_partition(args.alpha), parse_partition(args.beta), parse_partition(args.gamma)
    inputs = {"alpha": str(a), "beta": str(b), "gamma": str(c)}
    rep = murnaghan_littlewood_check(a, b, c)
    result = {
        "k": rep.k,
        "depth_lhs": rep.depth_lhs,
        "depth_rhs": rep.depth_rhs,
        "equality_case": rep.equality_case,
        "lr": rep.lr,
    }
    return envelope("kron ml-check", inputs, result)


# -- text rendering ---------------------------------------------------------------


def render_text(env: dict) -> str:
    lines = [f"{env['command']}  " + "  ".join(f"{k}={_plain(v)}" for k, v in env["inputs"].items())]
    result = env["result"]
    for key, value in result.items():
        if key == "reports":
            for rep in value:
                lines.append(
                    "  r={r} I={I} J={J} K={K} lambda={lambda} mu={mu} nu={nu}: "
                    "{lhs} vs {factor_small}*{factor_large} d={degree} {verdict}".format(**rep)
                )
        elif key == "triples":
            lines.extend(f"  ({t[0]}) ({t[1]}) ({t[2]})" for t in value)
        elif key == "expansion":
            lines.extend(f"  {t['coefficient']} * sigma[{t['index']}]  (partition {t['partition'] or '()'})" for t in value)
        elif key == "values":
            width = max(len(str(v)) for row in value for v in row)
            for name, row in zip(result["rows"], value):
                lines.append(f"  [{name}] " + " ".join(str(v).rjust(width) for v in row))
        else:
            lines.append(f"{key}: {_plain(value)}")
    return "\n".join(lines)


def _plain(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return " ".join(f"{k}={_plain(v)}" for k, v in value.items())
    if isinstance(value, list):
        return " ".join(_plain(v) for v in value)
    if value == "":
        return '""'
    return str(value)


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")

    parser = argparse.ArgumentParser(prog="lrfaces", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def weights_args(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--lambda", dest="lam", required=required)
        p.add_argument("--mu", required=required)
        p.add_argument("--nu", required=required)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^nu_{lambda mu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("triple", parents=[common], help="GL_n invariant dimension of V_lambda (x) V_mu (x) V_nu")
    weights_args(p)
    p.add_argument("--oracle", action="store_true", help="use the slow weight-multiplicity route")
    p.set_defaults(func=cmd_triple)

    schubert = sub.add_parser("schubert", help="Grassmannian cohomology").add_subparsers(dest="sub", required=True)
    p = schubert.add_parser("degree", parents=[common])
    for flag in ("--r", "--n"):
        p.add_argument(flag, type=int, required=True)
    for flag in ("--I", "--J", "--K"):
        p.add_argument(flag, required=True)
    p.set_defaults(func=cmd_schubert_degree)
    p = schubert.add_parser("expand", parents=[common])
    for flag in ("--r", "--n"):
        p.add_argument(flag, type=int, required=True)
    for flag in ("--I", "--J"):
        p.add_argument(flag, required=True)
    p.set_defaults(func=cmd_schubert_expand)
    p = schubert.add_parser("faces", parents=[common])
    for flag in ("--r", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--all-degrees", action="store_true")
    p.set_defaults(func=cmd_schubert_faces)

    p = sub.add_parser("horn", parents=[common], help="Horn/Belkale membership certificate")
    weights_args(p)
    p.add_argument("--d-variant", action="store_true")
    p.set_defaults(func=cmd_horn)

    p = sub.add_parser("reduce", parents=[common], help="face factorization report(s)")
    weights_args(p, required=False)
    p.add_argument("--r", type=int)
    for flag in ("--I", "--J", "--K"):
        p.add_argument(flag)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--bound", type=int)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--all-degrees", action="store_true")
    p.set_defaults(func=cmd_reduce)

    kron = sub.add_parser("kron", help="symmetric-group characters").add_subparsers(dest="sub", required=True)
    for name, func in (("coeff", cmd_kron_coeff), ("ml-check", cmd_kron_ml)):
        p = kron.add_parser(name, parents=[common])
        for flag in ("--alpha", "--beta", "--gamma"):
            p.add_argument(flag, required=True)
        p.set_defaults(func=func)
    p = kron.add_parser("table", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_kron_table)
    return parser


def _join_negative_values(argv):
    """``--nu -1,0`` becomes ``--nu=-1,0`` so argparse does not read a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
            and _NEGATIVE_LIST.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def serialize(env: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env, indent=2) + "\n"
    return render_text(env) + "\n"


def main(argv=None) -> int:
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    try:
        env = args.func(args)
    except ParseError as exc:
        print(f"lrfaces: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"lrfaces: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TheoremViolation as exc:
        print(f"lrfaces: internal assertion failed: {exc}", file=sys.stderr)
        print(f"counterexample: {exc.data!r}", file=sys.stderr)
        return EXIT_ASSERTION
    text = serialize(env, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
