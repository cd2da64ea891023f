"""Command-line front end: ``dynzeta <command> [options]``.

Every command writes one JSON document to stdout (or ``--output``).
Exit status: 0 success, 1 a mathematical check failed, 2 bad input.
Inputs given to ``--input`` and friends may be inline JSON, a file path,
or ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio, spectral, transforms, zeta
from .errors import DomainError, NonAdmissibleError, PrecisionError, SizeLimitError, ZetaError
from .jsonio import MalformedInput
from .series import DEFAULT_ORDER

MAX_ORDER = 4096

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, code: str, detail: str):
        super().__init__(detail)
        self.code = code
        self.detail = detail


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("bad-arguments", message)

    def print_help(self, file=None):
        # stdout is reserved for JSON
        super().print_help(file or sys.stderr)


# -- input helpers -----------------------------------------------------------

def _load(text: str | None, what: str):
    if text is None:
        raise InputError("missing-input", f"{what} is required")
    if text == "-":
        raw = sys.stdin.read()
    elif Path(text).is_file():
        raw = Path(text).read_text()
    else:
        raw = text
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError("malformed-json", f"{what}: {exc}") from None


def _order(args) -> int:
    order = args.order
    if order < 0:
        raise InputError("bad-order", "order must be non-negative")
    if order > MAX_ORDER:
        raise InputError("order-overflow", f"order {order} exceeds the cap {MAX_ORDER}")
    return order


def _fit(values: list, order: int) -> list:
    """Cut or check a sequence against the working order."""
    if len(values) < order:
        raise InputError("malformed-input", f"sequence has {len(values)} terms, order {order} needs {order}")
    return values[:order]


def _seq_order(args, values: list) -> int:
    return _order(args) if args.order_given else min(len(values), MAX_ORDER)


# -- commands ----------------------------------------------------------------

def cmd_zeta_from_indices(args):
    i = jsonio.sequence_from_json(_load(args.input, "--input"))
    order = _seq_order(args, i)
    return jsonio.series_to_json(zeta.zeta_from_indices(_fit(i, order))), EXIT_OK


def cmd_indices_from_zeta(args):
    z = _series_arg(args)
    i = zeta.indices_from_zeta(z)
    return {"values": jsonio.sequence_to_json(i), "integral": zeta.all_integers(i)}, EXIT_OK


def cmd_sp_from_indices(args):
    i = jsonio.sequence_from_json(_load(args.input, "--input"))
    order = _seq_order(args, i)
    return jsonio.sequence_to_json(transforms.sp_from_indices_recurrence(_fit(i, order))), EXIT_OK


def cmd_indices_from_sp(args):
    s = jsonio.sequence_from_json(_load(args.input, "--input"))
    order = _seq_order(args, s)
    return jsonio.sequence_to_json(transforms.indices_from_sp_recurrence(_fit(s, order))), EXIT_OK


def cmd_dold_coefficients(args):
    i = jsonio.sequence_from_json(_load(args.input, "--input"))
    a = transforms.dold_coefficients(_fit(i, _seq_order(args, i)))
    return {"values": jsonio.sequence_to_json(a.values), "integral": list(a.integral)}, EXIT_OK


def cmd_dold_check(args):
    i = jsonio.sequence_from_json(_load(args.input, "--input"))
    verdict = transforms.dold_check(_fit(i, _seq_order(args, i)))
    return verdict.to_json(), EXIT_OK if verdict.passed else EXIT_CHECK_FAILED


def cmd_factorize(args):
    return jsonio.factors_to_json(zeta.factorize(_series_arg(args))), EXIT_OK


def cmd_expand(args):
    f = jsonio.factors_from_json(_load(args.input, "--input"))
    order = _order(args) if args.order_given else f.max_index
    return jsonio.series_to_json(zeta.expand_factors(f, order)), EXIT_OK


def cmd_linear_zeta(args):
    cls = (args.sigma_minus, args.sigma_plus)
    return jsonio.series_to_json(spectral.linear_zeta(cls, _order(args))), EXIT_OK


def cmd_matrix_zeta(args):
    A = _matrix_arg(args.input, "--input")
    order = _order(args)
    i = spectral.index_sequence_of_matrix(A, order)
    cls = spectral.spectral_class(A)
    return {
        "class": list(cls),
        "indices": jsonio.sequence_to_json(i),
        "zeta": jsonio.series_to_json(zeta.zeta_from_indices(i)),
    }, EXIT_OK


def cmd_orbit_zeta(args):
    table = jsonio.orbits_from_json(_load(args.input, "--input"))
    order = _order(args)
    return {
        "orbits": jsonio.orbits_to_json(table)["orbits"],
        "zeta": jsonio.series_to_json(spectral.orbit_zeta(table, order)),
        "factors": jsonio.factors_to_json(transforms.exponents_from_orbit_counts(table, order)),
    }, EXIT_OK


def cmd_iterate(args):
    z = _series_arg(args)
    target = _order(args) if args.order_given else args.k * z.order
    if target > MAX_ORDER:
        raise InputError("order-overflow", f"order {target} exceeds the cap {MAX_ORDER}")
    return jsonio.series_to_json(spectral.iterate_zeta_axiom(z, args.k, target)), EXIT_OK


def cmd_macdonald(args):
    return jsonio.series_to_json(spectral.macdonald_series(args.chi, _order(args))), EXIT_OK


def cmd_lecalvez(args):
    return jsonio.series_to_json(spectral.lecalvez_zeta(args.q, args.r, _order(args))), EXIT_OK


def cmd_admissibility(args):
    A = _matrix_arg(args.input, "--input")
    n = spectral.admissibility_order(A, args.n_max)
    return {"admissibility_order": n, "n_max": args.n_max}, EXIT_OK


def cmd_commutativity(args):
    A = _matrix_arg(args.a, "--a")
    B = _matrix_arg(args.b, "--b")
    verdict = spectral.commutativity_witness(A, B, _order(args))
    return verdict.to_json(), EXIT_OK if verdict.passed else EXIT_CHECK_FAILED


def cmd_verify(args):
    from .verify import run_verify

    order = _order(args) if args.order_given else 16
    if order < 1:
        raise InputError("bad-order", "verify needs order >= 1")
    if args.count < 1:
        raise InputError("bad-arguments", "count must be positive")
    report = run_verify(order, args.seed, args.count)
    return report, EXIT_OK if report["pass"] else EXIT_CHECK_FAILED


def _series_arg(args):
    z = jsonio.series_from_json(_load(args.input, "--input-series"))
    if z.order > MAX_ORDER:
        raise InputError("order-overflow", f"order {z.order} exceeds the cap {MAX_ORDER}")
    if args.order_given and args.command != "iterate":
        z = z.truncate(_order(args))
    return z


def _matrix_arg(text, what):
    return jsonio.matrix_from_json(_load(text, what))


COMMANDS = {
    "zeta-from-indices": (cmd_zeta_from_indices, "Lefschetz zeta from an index sequence i_1..i_N"),
    "indices-from-zeta": (cmd_indices_from_zeta, "index sequence i_n = n [t^n] log z"),
    "sp-from-indices": (cmd_sp_from_indices, "symmetric-product indices s_n from i_n"),
    "indices-from-sp": (cmd_indices_from_sp, "indices i_n from symmetric-product indices s_n"),
    "dold-check": (cmd_dold_check, "check the Dold congruences (exit 1 on violation)"),
    "dold-coefficients": (cmd_dold_coefficients, "Dold coefficients a_k by Moebius inversion"),
    "factorize": (cmd_factorize, "exponents e_n with z = prod (1 - t^n)^e_n"),
    "expand": (cmd_expand, "expand a factor-exponent map into a series"),
    "linear-zeta": (cmd_linear_zeta, "zeta of a hyperbolic linear map from (sigma-, sigma+)"),
    "matrix-zeta": (cmd_matrix_zeta, "zeta, local indices and class of a rational matrix"),
    "orbit-zeta": (cmd_orbit_zeta, "zeta of a hyperbolic periodic-orbit table"),
    "iterate": (cmd_iterate, "z(t) -> z(t^k), the iteration axiom"),
    "macdonald": (cmd_macdonald, "(1 - t)^(-chi)"),
    "lecalvez": (cmd_lecalvez, "(1 - t)^-1 (1 - t^q)^r"),
    "admissibility": (cmd_admissibility, "largest n with no root-of-unity eigenvalue of order <= n"),
    "commutativity": (cmd_commutativity, "compare zeta(AB) with zeta(BA) (exit 1 on mismatch)"),
    "verify": (cmd_verify, "run the seeded property suites"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dynzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--order", type=int, default=None,
                       help=f"working order N (default {DEFAULT_ORDER}, or the input's length)")
        p.add_argument("--output", default="-", help="output path, '-' for stdout")
        if name in ("zeta-from-indices", "sp-from-indices", "indices-from-sp", "dold-check",
                    "dold-coefficients", "expand", "orbit-zeta"):
            p.add_argument("--input", help="JSON, file path or '-'")
        if name in ("indices-from-zeta", "factorize", "iterate"):
            p.add_argument("--input-series", "--input", dest="input", help="series JSON, file path or '-'")
        if name in ("matrix-zeta", "admissibility"):
            p.add_argument("--matrix", "--input", dest="input", help="matrix JSON, file path or '-'")
        if name == "linear-zeta":
            p.add_argument("--sigma-minus", type=int, choices=(0, 1), required=True)
            p.add_argument("--sigma-plus", type=int, choices=(0, 1), required=True)
        if name == "iterate":
            p.add_argument("--k", type=int, required=True)
        if name == "macdonald":
            p.add_argument("--chi", type=int, required=True)
        if name == "lecalvez":
            p.add_argument("--q", type=int, required=True)
            p.add_argument("--r", type=int, required=True)
        if name == "admissibility":
            p.add_argument("--n-max", type=int, default=DEFAULT_ORDER)
        if name == "commutativity":
            p.add_argument("--a", required=True, help="d x d' matrix JSON")
            p.add_argument("--b", required=True, help="d' x d matrix JSON")
        if name == "verify":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--count", type=int, default=100)
    return parser


_ERROR_CODES = (
    (PrecisionError, "insufficient-precision"),
    (NonAdmissibleError, "non-admissible"),
    (SizeLimitError, "size-limit"),
    (DomainError, "domain-error"),
    (ZetaError, "input-error"),
)


def run(argv: list | None = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    output_path = "-"
    try:
        if argv is None:
            argv = sys.argv[1:]
        if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
            raise InputError("unknown-command", f"unknown command {argv[0]!r}")
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit:
            # --help; the text went to stderr
            print(json.dumps({"help": argv[0] if argv else "dynzeta"}), file=stdout)
            return EXIT_OK
        if args.command is None:
            raise InputError("missing-command", "a command is required")
        args.order_given = args.order is not None
        if args.order is None:
            args.order = DEFAULT_ORDER
        output_path = args.output
        handler = COMMANDS[args.command][0]
        payload, status = handler(args)
    except InputError as exc:
        payload, status = {"error": exc.code, "detail": exc.detail}, EXIT_INPUT
    except ZetaError as exc:
        code = next(c for cls, c in _ERROR_CODES if isinstance(exc, cls))
        payload = {"error": code, "detail": str(exc)}
        if isinstance(exc, NonAdmissibleError) and exc.order is not None:
            payload["failing_order"] = exc.order
        status = EXIT_INPUT
    except (MalformedInput, ValueError, TypeError) as exc:
        payload, status = {"error": "malformed-input", "detail": str(exc)}, EXIT_INPUT
    if status == EXIT_INPUT:
        print(f"dynzeta: {payload['error']}: {payload['detail']}", file=sys.stderr)
    text = json.dumps(payload, sort_keys=False)
    if output_path == "-" or status == EXIT_INPUT:
        print(text, file=stdout)
    else:
        Path(output_path).write_text(text + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
