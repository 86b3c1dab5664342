"""Command-line front end: ``dvcomplex <subcommand> ...``.

JSON goes to stdout, diagnostics to stderr.  Exit codes:

    0  ok
    1  parse error (bad JSON, bad polynomial, unreadable file)
    2  invariant violation (asymmetric strain, non-member field, bad rigid motion)
    3  mathematical verdict (incompatible strain, stress not divergence-free,
       property-suite failure)
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .complex import ComplexPosition, dv_differential
from .elasticity import inc_from_W, saint_venant, scal, sym_gradient
from .hodge import NotDivergenceFree, airy_stress, beltrami_stress, hodge_star, hodge_star_inverse, recover_potential
from .homotopy import cesaro_volterra, obstruction_K2
from .io import field_to_document, load_field
from .polynomial import ParseError, format_polynomial
from .tensor import TensorError, TensorField, require_symmetric
from .verify import run_suite

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVARIANT = 2
EXIT_VERDICT = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _warn(msg: str) -> None:
    print(f"dvcomplex: {msg}", file=sys.stderr)


def _read(path: str) -> TensorField:
    try:
        return load_field(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None


def _strain(path: str) -> TensorField:
    eps = _read(path)
    if eps.order != 2:
        raise CliError("strain must have order 2", EXIT_INVARIANT)
    eps = eps.with_variance("cc")
    require_symmetric(eps, "strain")
    return eps


def _json_arg(text: str | None, what: str):
    if text is None:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{what} is not valid JSON: {exc}", EXIT_PARSE) from None


def cmd_check(args) -> int:
    eps = _strain(args.strain)
    W = saint_venant(eps)
    out = {"W": field_to_document(W)}
    if eps.dim == 3:
        inc, s = inc_from_W(W, check=False)
        out["Inc"] = field_to_document(inc)
    else:
        s = scal(W)
    out["Scal"] = format_polynomial(s)
    compatible = W.is_zero()
    out["verdict"] = "COMPATIBLE" if compatible else "INCOMPATIBLE"
    _emit(out)
    return EXIT_OK if compatible else EXIT_VERDICT


def cmd_integrate(args) -> int:
    eps = _strain(args.strain)
    xi0 = _json_arg(args.xi0, "--xi0")
    omega0 = _json_arg(args.omega0, "--omega0")
    try:
        xi = cesaro_volterra(eps, xi0, omega0)
    except TensorError:
        raise
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad rigid motion data: {exc}", EXIT_INVARIANT) from None
    W = saint_venant(eps)
    recovered = sym_gradient(xi) == eps
    out = {"xi": field_to_document(xi), "self_check": recovered}
    if W.is_zero():
        _emit(out)
        return EXIT_OK
    _warn("strain is incompatible; the displacement below does not reproduce it")
    out["obstruction"] = field_to_document(obstruction_K2(W, check=False))
    _emit(out)
    return EXIT_VERDICT


def cmd_potential(args) -> int:
    sigma = _read(args.stress)
    if sigma.order != 2:
        raise CliError("stress must have order 2", EXIT_INVARIANT)
    sigma = sigma.with_variance("vv")
    try:
        phi = recover_potential(sigma)
    except NotDivergenceFree as exc:
        _warn("stress is not divergence-free")
        _emit({"divergence": field_to_document(exc.divergence)})
        return EXIT_VERDICT
    forward = airy_stress(phi) if sigma.dim == 2 else beltrami_stress(phi)
    _emit({"potential": field_to_document(phi), "self_check": forward == sigma})
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = True
    reports = []
    for seed in args.seed:
        r = run_suite(args.N, args.k, dim=args.dim, degree=args.degree, trials=args.trials, seed=seed)
        reports.append(r.to_json())
        for res in r.results:
            if not res.ok:
                _warn(f"seed {seed}: {res.name} failed {res.failures}/{res.trials}")
        ok = ok and r.ok
    _emit({"ok": ok, "runs": reports})
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_star(args) -> int:
    T = _read(args.field)
    if T.is_contravariant() and T.order > 0:
        out = hodge_star_inverse(T)
    else:
        out = hodge_star(T.with_variance("c" * T.order))
    _emit(field_to_document(out))
    return EXIT_OK


def cmd_d(args) -> int:
    T = _read(args.field)
    T = T.with_variance("c" * T.order)
    out = dv_differential(ComplexPosition(args.N, T.order, T.dim), T)
    _emit(field_to_document(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dvcomplex", description="Exact generalized complexes and linear elasticity.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="Saint-Venant compatibility of a strain")
    c.add_argument("strain")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("integrate", help="recover a displacement from a strain")
    c.add_argument("strain")
    c.add_argument("--xi0", help="translation as a JSON list, e.g. '[0, 1, 0]'")
    c.add_argument("--omega0", help="antisymmetric rotation matrix as JSON")
    c.set_defaults(func=cmd_integrate)

    c = sub.add_parser("potential", help="Airy (2D) or Beltrami (3D) potential of a stress")
    c.add_argument("stress")
    c.set_defaults(func=cmd_potential)

    c = sub.add_parser("verify", help="run the randomized property suite")
    c.add_argument("--N", type=int, default=2)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--dim", type=int, default=3)
    c.add_argument("--degree", type=int, default=3)
    c.add_argument("--trials", type=int, default=20)
    c.add_argument("--seed", type=int, nargs="+", default=[0])
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("star", help="generalized Hodge star (inverse for contravariant input)")
    c.add_argument("field")
    c.set_defaults(func=cmd_star)

    c = sub.add_parser("d", help="apply the generalized differential")
    c.add_argument("field")
    c.add_argument("--N", type=int, default=2)
    c.set_defaults(func=cmd_d)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _warn(str(exc))
        return exc.code
    except ParseError as exc:
        _warn(f"parse error: {exc}")
        return EXIT_PARSE
    except (TensorError, ValueError) as exc:
        _warn(f"invariant violation: {exc}")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
