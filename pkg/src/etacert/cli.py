"""Command-line surface: expansion, dissection, certification, theorem runs.

Exit codes are a stable contract:
  0   success / verified
  1   a theorem pipeline step failed
  2   cusp-sum hypothesis violated (certificate cannot apply)
  3   a checked coefficient was nonzero (counterexample witness emitted)
  4   strict mode: admissibility of the instance tuple was not verifiable
  64  usage or parse error
  65  required expansion order exceeds the cap
"""

import argparse
import json
import os
import sys
import tempfile

from .finite_check import (
    DEFAULT_ORDER_CAP,
    OrderCapExceeded,
    RSInstance,
    verify_instance,
)
from .series import EtaQuotientSpec, ParseError, expand_eta_quotient, reduce_mod
from .theta import dissect
from .pipelines import run_theorem

__all__ = ["main"]

EXIT_OK = 0
EXIT_STEP_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_DELTA_STAR = 4
EXIT_USAGE = 64
EXIT_ORDER_CAP = 65

_STATUS_EXIT = {
    "verified": EXIT_OK,
    "hypothesis_violation": EXIT_HYPOTHESIS,
    "counterexample": EXIT_COUNTEREXAMPLE,
    "delta_star_unverified": EXIT_DELTA_STAR,
}

_THEOREM_BY_ID = {
    "1": "T1_mod5",
    "2": "T2_mod25",
    "3": "T3_mod7",
    "4": "T4_mod49",
    "regressions": "regression",
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which collides with the hypothesis-
    # violation code; usage problems must exit 64.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _order_cap_default() -> int:
    raw = os.environ.get("ETA_CERT_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"ETA_CERT_ORDER_CAP must be an integer, got {raw!r}", 0) from None


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".etacert-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_text(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _build_parser() -> _Parser:
    parser = _Parser(prog="etacert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand an eta quotient")
    p_expand.add_argument("--spec", required=True, help="exponents as delta:exp,delta:exp,...")
    p_expand.add_argument("--order", required=True, type=int)
    p_expand.add_argument("--mod", type=int, default=None, help="reduce coefficients mod u")
    p_expand.add_argument("--format", choices=("text", "json"), default="text")
    p_expand.add_argument("--output", default=None)

    p_dissect = sub.add_parser("dissect", help="split an eta quotient by exponent class")
    p_dissect.add_argument("--spec", required=True)
    p_dissect.add_argument("--m", required=True, type=int, help="dissection modulus")
    p_dissect.add_argument("--order", required=True, type=int)
    p_dissect.add_argument("--mod", type=int, default=None)
    p_dissect.add_argument("--format", choices=("text", "json"), default="text")
    p_dissect.add_argument("--output", default=None)

    p_cert = sub.add_parser("certify", help="run one finite check and emit a certificate")
    p_cert.add_argument("--m", required=True, type=int)
    p_cert.add_argument("--M", required=True, type=int)
    p_cert.add_argument("--N", required=True, type=int)
    p_cert.add_argument("--t", required=True, type=int)
    p_cert.add_argument("--r", required=True, help="eta exponents over divisors of M")
    p_cert.add_argument("--rprime", required=True, help="eta exponents over divisors of N")
    p_cert.add_argument("--mod", required=True, type=int, help="congruence modulus u")
    p_cert.add_argument("--check-upto", type=int, default=None,
                        help="scan n beyond floor(v) (over-checking)")
    p_cert.add_argument("--strict", action="store_true",
                        help="do not assume admissibility of the instance tuple")
    p_cert.add_argument("--order-cap", type=int, default=None)
    p_cert.add_argument("--output", default=None)

    p_thm = sub.add_parser("verify-theorem", help="run a theorem pipeline")
    p_thm.add_argument("id", choices=sorted(_THEOREM_BY_ID))
    p_thm.add_argument("--order", type=int, default=None)
    p_thm.add_argument("--output", default=None)

    return parser


def _check_order(order: int, cap: int) -> None:
    if order < 0:
        raise ParseError(f"order must be nonnegative, got {order}", 0)
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")


def _cmd_expand(args) -> int:
    cap = _order_cap_default()
    _check_order(args.order, cap)
    spec = EtaQuotientSpec.from_string(args.spec)
    series = expand_eta_quotient(spec, args.order)
    if args.mod is not None:
        series = reduce_mod(series, args.mod)
    if args.format == "json":
        payload = {"spec": spec.to_spec_string(), "modulus": args.mod}
        payload.update(series.to_json_dict())
        text = _json_text(payload)
    else:
        text = ",".join(str(c) for c in series.coeffs) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


def _cmd_dissect(args) -> int:
    cap = _order_cap_default()
    _check_order(args.order, cap)
    if args.m < 1:
        raise ParseError(f"dissection modulus must be >= 1, got {args.m}", 0)
    spec = EtaQuotientSpec.from_string(args.spec)
    series = expand_eta_quotient(spec, args.order)
    split = dissect(series, args.m)
    classes = []
    for i, cls in enumerate(split.classes):
        support = cls.support()
        entry = {
            "residue": i,
            "nonzero_terms": len(support),
            "first_exponent": support[0] if support else None,
        }
        if args.mod is not None:
            entry["zero_mod"] = reduce_mod(cls, args.mod).is_zero() if support else True
        classes.append(entry)
    if args.format == "json":
        payload = {
            "spec": spec.to_spec_string(),
            "m": args.m,
            "order": args.order,
            "modulus": args.mod,
            "classes": classes,
        }
        text = _json_text(payload)
    else:
        lines = []
        for entry in classes:
            line = f"class {entry['residue']}: nonzero={entry['nonzero_terms']}"
            if entry["first_exponent"] is not None:
                line += f" first=q^{entry['first_exponent']}"
            if args.mod is not None:
                line += f" zero_mod_{args.mod}={'yes' if entry['zero_mod'] else 'no'}"
            lines.append(line)
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


def _cmd_certify(args) -> int:
    cap = args.order_cap if args.order_cap is not None else _order_cap_default()
    instance = RSInstance(
        m=args.m,
        M=args.M,
        N=args.N,
        t=args.t,
        r=EtaQuotientSpec.from_string(args.r, level=args.M),
        r_prime=EtaQuotientSpec.from_string(args.rprime, level=args.N),
        u=args.mod,
    )
    cert = verify_instance(
        instance,
        assume_delta_star=not args.strict,
        check_upto=args.check_upto,
        order_cap=cap,
    )
    _write_output(cert.to_json(), args.output)
    return _STATUS_EXIT[cert.status]


def _cmd_verify_theorem(args) -> int:
    report = run_theorem(_THEOREM_BY_ID[args.id], args.order)
    _write_output(_json_text(report.to_json_dict()), args.output)
    if not report.overall:
        failed = [s.name for s in report.steps if not s.passed]
        sys.stderr.write(f"failed steps: {', '.join(failed)}\n")
        return EXIT_STEP_FAILED
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "expand": _cmd_expand,
        "dissect": _cmd_dissect,
        "certify": _cmd_certify,
        "verify-theorem": _cmd_verify_theorem,
    }
    try:
        return handlers[args.command](args)
    except OrderCapExceeded as exc:
        sys.stderr.write(f"etacert: {exc}\n")
        return EXIT_ORDER_CAP
    except (ParseError, ValueError) as exc:
        sys.stderr.write(f"etacert: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
