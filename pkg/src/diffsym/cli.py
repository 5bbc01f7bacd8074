"""Command-line interface.

Exit codes: 0 for a passing check, 1 for a refuted or failed check, 2 for
usage and input errors.  Every subcommand accepts --json for a structured
report on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .deriv import (
    constants_inner,
    constants_standard,
    decompose,
    inner_derivation,
    standard_derivation,
    validate,
)
from .matdiff import prop44_constants, prop44_matrix
from .parser import ParseError, parse_scalar, parse_symbol, scalar_to_str
from .scalars import (
    CycloField,
    KummerField,
    RatFuncField,
    ReducibleRadicandError,
    mth_power_up_to_constant,
    rational_ode_solve,
)
from .split import (
    PhiMap,
    compute_P,
    maximal_subfield_necessary,
    split_generic,
    split_inner_cyclic,
    split_inner_even_half,
    split_standard,
    t_r_value,
    verify_diff_isomorphism,
)
from .symalg import SymbolAlgebra


def _field(m: int, zero: bool = False) -> RatFuncField:
    return RatFuncField(CycloField(m), "t", "zero" if zero else "dt")


def _algebra(args, zero: bool = False) -> SymbolAlgebra:
    field = _field(args.m, zero)
    alpha = parse_scalar(args.alpha, field)
    beta = parse_scalar(args.beta, field)
    return SymbolAlgebra(field, alpha, beta, args.m)


def _emit(args, report: dict, text_lines) -> None:
    if args.json:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


# -- subcommand handlers ----------------------------------------------------


def cmd_algebra_check(args) -> int:
    alg = _algebra(args)
    checks = {
        "u^m = alpha": alg.u() ** alg.m == alg.scalar(alg.alpha),
        "v^m = beta": alg.v() ** alg.m == alg.scalar(alg.beta),
        "vu = w uv": alg.v() * alg.u() == (alg.u() * alg.v()).scale(alg.field.coerce(alg.omega)),
        "t_r identity": all(t_r_value(alg.m, r) is not None for r in range(alg.m)),
    }
    ok = all(checks.values())
    _emit(args, {"ok": ok, "checks": {k: bool(v) for k, v in checks.items()}},
          [f"{'ok' if v else 'FAIL'}  {k}" for k, v in checks.items()])
    return 0 if ok else 1


def cmd_deriv_validate(args) -> int:
    alg = _algebra(args)
    du = parse_symbol(args.du, alg)
    dv = parse_symbol(args.dv, alg)
    verdict = validate(alg, du, dv)
    _emit(args, verdict.to_json(),
          ["valid derivation" if verdict.ok else f"not a derivation: {' '.join(verdict.failing)}"]
          + [f"diagnostic: {d}" for d in verdict.diagnostics])
    return 0 if verdict.ok else 1


def cmd_deriv_decompose(args) -> int:
    from .deriv import Derivation

    alg = _algebra(args)
    du = parse_symbol(args.du, alg)
    dv = parse_symbol(args.dv, alg)
    theta = decompose(Derivation(alg, du, dv))
    _emit(args, {"ok": True, "theta": theta.to_json()}, [f"theta = {theta!r}"])
    return 0


def cmd_deriv_constants(args) -> int:
    if args.standard:
        alg = _algebra(args)
        witnesses = constants_standard(alg)
        _emit(args, {"ok": True, "witnesses": [w.to_json() for w in witnesses]},
              [f"witness u^{w.i} v^{w.j} with h = {scalar_to_str(w.h)}" for w in witnesses]
              or ["no monomial constants beyond the base field"])
        return 0
    alg = _algebra(args, zero=True)
    theta = parse_symbol(args.theta, alg)
    basis = constants_inner(theta)
    _emit(args, {"ok": True, "dimension": len(basis), "basis": [b.to_json() for b in basis]},
          [f"constants dimension {len(basis)}"] + [f"  {b!r}" for b in basis])
    return 0


def cmd_matdiff_constants(args) -> int:
    field = _field(args.m)
    if args.lambdas:
        lambdas = [parse_scalar(s, field.cyclo) for s in args.lambdas.split(",")]
    else:
        lambdas = [field.cyclo.from_rational(i) for i in range(args.m)]
    f = parse_scalar(args.f, field)
    p = prop44_matrix(field, lambdas, f)
    basis = prop44_constants(p)
    _emit(args, {"ok": True, "dimension": len(basis), "basis": [b.to_json() for b in basis]},
          [f"constants dimension {len(basis)}"] + [f"  {b!r}" for b in basis])
    return 0


def cmd_ode_solve(args) -> int:
    field = _field(args.m)
    mu = parse_scalar(args.mu, field.cyclo)
    g = parse_scalar(args.g, field)
    sol = rational_ode_solve(mu, g)
    report = {
        "ok": sol.has_solution,
        "particular": scalar_to_str(sol.particular) if sol.has_solution else None,
        "homogeneous": [scalar_to_str(h) for h in sol.homogeneous],
    }
    lines = (
        [f"x = {report['particular']}"] + [f"  + c * {h}" for h in report["homogeneous"]]
        if sol.has_solution
        else ["no rational solution"]
    )
    _emit(args, report, lines)
    return 0 if sol.has_solution else 1


def cmd_power_detect(args) -> int:
    field = _field(args.m)
    f = parse_scalar(args.f, field)
    res = mth_power_up_to_constant(f, args.m)
    if res is None:
        _emit(args, {"ok": False, "c": None, "h": None}, [f"not a {args.m}-th power up to constant"])
        return 1
    c, h = res
    _emit(args, {"ok": True, "c": scalar_to_str(c), "h": scalar_to_str(h)},
          [f"f = ({scalar_to_str(c)}) * ({scalar_to_str(h)})^{args.m}"])
    return 0


def _emit_split(args, report) -> int:
    lines = [
        f"P = {report.p!r}",
        f"F = {report.f!r}",
        f"gauge: {'ok' if report.gauge.ok else 'FAIL'}",
    ]
    if report.isomorphism is not None:
        lines.append(f"isomorphism: {'ok' if report.isomorphism.ok else 'FAIL'}")
    if report.degree is not None:
        lines.append(f"extension degree {report.degree}")
    lines.append(f"transcendence degree {report.transcendence_degree}")
    lines.extend(f"diagnostic: {d}" for d in report.diagnostics)
    _emit(args, report.to_json(), lines)
    return 0 if report.passed else 1


def cmd_split_standard(args) -> int:
    return _emit_split(args, split_standard(_algebra(args)))


def cmd_split_inner(args) -> int:
    alg = _algebra(args, zero=True)
    rho = parse_symbol(args.rho, alg)
    report = split_inner_even_half(alg, rho) if args.half else split_inner_cyclic(alg, rho)
    return _emit_split(args, report)


def _derivation_from_args(args, alg):
    d = standard_derivation(alg)
    if args.theta:
        d = d + inner_derivation(parse_symbol(args.theta, alg))
    return d


def cmd_split_generic(args) -> int:
    alg = _algebra(args)
    phi = PhiMap(alg, KummerField(alg.field, alg.alpha, alg.m, "xi"))
    p = compute_P(_derivation_from_args(args, alg), phi)
    return _emit_split(args, split_generic(p))


def cmd_split_verify(args) -> int:
    alg = _algebra(args)
    phi = PhiMap(alg, KummerField(alg.field, alg.alpha, alg.m, "xi"))
    d = _derivation_from_args(args, alg)
    p = compute_P(d, phi)
    iso = verify_diff_isomorphism(phi, d, p)
    _emit(args, {"ok": iso.ok, "P": p.to_json(), "isomorphism": iso.to_json()},
          [f"P = {p!r}", f"isomorphism: {'ok' if iso.ok else 'FAIL'}"])
    return 0 if iso.ok else 1


def cmd_split_maximal(args) -> int:
    alg = _algebra(args)
    nu = parse_scalar(args.nu, alg.field)
    report = maximal_subfield_necessary(alg, nu)
    lines = []
    for name, wit in (("alpha", report.alpha_witness), ("beta", report.beta_witness)):
        if wit is None:
            lines.append(f"{name}: no witness for any power of nu")
        else:
            r, c, h = wit
            lines.append(f"{name} = ({scalar_to_str(c)}) * nu^{r} * ({scalar_to_str(h)})^{alg.m}")
    lines.append("refuted: k(nu^(1/m)) cannot split the algebra" if report.refuted else "necessary condition holds")
    _emit(args, report.to_json(), lines)
    return 1 if report.refuted else 0


# -- replay corpus ----------------------------------------------------------


def _case_tr_identity():
    for m in (2, 3, 4, 5, 7):
        for r in range(m):
            t_r_value(m, r)
    return True, "closed form matches the cyclotomic sum for m in {2,3,4,5,7}"


def _case_constants_none():
    field = _field(3)
    alg = SymbolAlgebra(field, field.gen(), field.gen() + field.one(), 3)
    witnesses = constants_standard(alg)
    return not witnesses, f"{len(witnesses)} monomial constants for (t, t+1), m=3"


def _case_constants_witness():
    field = _field(3)
    alg = SymbolAlgebra(field, field.gen() * 2, field.gen(), 3)
    pairs = [(w.i, w.j) for w in constants_standard(alg)]
    return (1, 2) in pairs, f"witness pairs {pairs} for (2t, t), m=3"


def _case_corner_pole():
    field = _field(2)
    f = field.one() / field.gen()
    p = prop44_matrix(field, [0, 1], f)
    basis = prop44_constants(p)
    return len(basis) == 1, f"constants dimension {len(basis)} for f = 1/t, m=2"


def _case_split_standard(m):
    field = _field(m)
    alg = SymbolAlgebra(field, field.gen(), field.gen() + field.one(), m)
    report = split_standard(alg)
    expected = m * m if m % 2 == 1 else 2 * m * m
    ok = report.passed and report.degree == expected
    return ok, f"m={m}: degree {report.degree}, gauge {'ok' if report.gauge.ok else 'FAIL'}"


def _case_split_inner(m):
    field = _field(m, zero=True)
    alg = SymbolAlgebra(field, field.gen(), field.gen() + field.one(), m)
    report = split_inner_cyclic(alg, alg.u())
    return report.passed, f"m={m}: trdeg {report.transcendence_degree}, gauge {'ok' if report.gauge.ok else 'FAIL'}"


def _case_split_inner_half(m):
    field = _field(m, zero=True)
    alg = SymbolAlgebra(field, field.gen(), field.gen() + field.one(), m)
    report = split_inner_even_half(alg, alg.u())
    ok = report.passed and report.transcendence_degree == m // 2
    return ok, f"m={m}: trdeg {report.transcendence_degree}, gauge {'ok' if report.gauge.ok else 'FAIL'}"


def _case_maximal():
    field = _field(3)
    t = field.gen()
    alg = SymbolAlgebra(field, t, t + field.one(), 3)
    report = maximal_subfield_necessary(alg, t * (t + field.one()))
    return report.refuted, "nu = t(t+1) refuted" if report.refuted else "nu = t(t+1) NOT refuted"


_REPLAY_CASES = {
    "tr-identity": _case_tr_identity,
    "constants-standard-none": _case_constants_none,
    "constants-standard-witness": _case_constants_witness,
    "corner-pole": _case_corner_pole,
    "split-standard-m2": lambda: _case_split_standard(2),
    "split-standard-m3": lambda: _case_split_standard(3),
    "split-inner-m2": lambda: _case_split_inner(2),
    "split-inner-m3": lambda: _case_split_inner(3),
    "split-inner-half-m2": lambda: _case_split_inner_half(2),
    "maximal-subfield": _case_maximal,
}


def cmd_replay(args) -> int:
    names = [args.case] if args.case else list(_REPLAY_CASES)
    for name in names:
        if name not in _REPLAY_CASES:
            print(f"unknown case {name!r}", file=sys.stderr)
            return 2
    results = []
    for name in names:
        ok, detail = _REPLAY_CASES[name]()
        results.append({"case": name, "ok": bool(ok), "detail": detail})
    all_ok = all(r["ok"] for r in results)
    _emit(args, {"ok": all_ok, "cases": results},
          [f"{'ok' if r['ok'] else 'FAIL'}  {r['case']}: {r['detail']}" for r in results])
    return 0 if all_ok else 1


# -- argument wiring --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    alg_common = argparse.ArgumentParser(add_help=False, parents=[common])
    alg_common.add_argument("--m", type=int, required=True, help="degree of the symbol algebra")
    alg_common.add_argument("--alpha", required=True, help="u^m, a scalar expression")
    alg_common.add_argument("--beta", required=True, help="v^m, a scalar expression")

    parser = argparse.ArgumentParser(prog="diffsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_algebra = sub.add_parser("algebra", help="symbol algebra checks").add_subparsers(
        dest="subcommand", required=True
    )
    p = p_algebra.add_parser("check", parents=[alg_common], help="verify the defining relations")
    p.set_defaults(func=cmd_algebra_check)

    p_deriv = sub.add_parser("deriv", help="derivations on the algebra").add_subparsers(
        dest="subcommand", required=True
    )
    p = p_deriv.add_parser("validate", parents=[alg_common], help="check candidate images d(u), d(v)")
    p.add_argument("--du", required=True)
    p.add_argument("--dv", required=True)
    p.set_defaults(func=cmd_deriv_validate)
    p = p_deriv.add_parser("decompose", parents=[alg_common], help="split d as d_s + inner(theta)")
    p.add_argument("--du", required=True)
    p.add_argument("--dv", required=True)
    p.set_defaults(func=cmd_deriv_decompose)
    p = p_deriv.add_parser("constants", parents=[alg_common], help="constants of d_s or of inner(theta)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--standard", action="store_true", help="monomial constants of d_s")
    group.add_argument("--theta", help="inner derivation over the zero base derivation")
    p.set_defaults(func=cmd_deriv_constants)

    p_mat = sub.add_parser("matdiff", help="matrix differential algebras").add_subparsers(
        dest="subcommand", required=True
    )
    p = p_mat.add_parser("constants", parents=[common], help="constants of the diagonal-plus-corner d_P")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--f", required=True, help="corner entry")
    p.add_argument("--lambdas", help="comma-separated diagonal constants (default 0..m-1)")
    p.set_defaults(func=cmd_matdiff_constants)

    p_ode = sub.add_parser("ode", help="scalar differential equations").add_subparsers(
        dest="subcommand", required=True
    )
    p = p_ode.add_parser("solve", parents=[common], help="rational solutions of delta(x) + mu x = g")
    p.add_argument("--m", type=int, default=2, help="cyclotomic level for the constant mu")
    p.add_argument("--mu", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_ode_solve)

    p = sub.add_parser("power-detect", parents=[common], help="decide f = c * h^m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_power_detect)

    p_split = sub.add_parser("split", help="splitting field constructions").add_subparsers(
        dest="subcommand", required=True
    )
    p = p_split.add_parser("standard", parents=[alg_common], help="finite splitting field for d_s")
    p.set_defaults(func=cmd_split_standard)
    p = p_split.add_parser("inner", parents=[alg_common], help="splitting field for inner(rho)")
    p.add_argument("--rho", required=True, help="a polynomial in u")
    p.add_argument("--half", action="store_true", help="transcendence degree m/2 variant (even m, rho = c*u)")
    p.set_defaults(func=cmd_split_inner)
    p = p_split.add_parser("generic", parents=[alg_common], help="generic splitting field from P")
    p.add_argument("--theta", help="inner part of the derivation (default: d_s alone)")
    p.set_defaults(func=cmd_split_generic)
    p = p_split.add_parser("verify", parents=[alg_common], help="verify Phi intertwines d and d_P")
    p.add_argument("--theta", help="inner part of the derivation (default: d_s alone)")
    p.set_defaults(func=cmd_split_verify)
    p = p_split.add_parser("maximal", parents=[alg_common], help="necessary condition for k(nu^(1/m))")
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_split_maximal)

    p = sub.add_parser("replay", parents=[common], help="re-run the bundled worked examples")
    p.add_argument("--case", help="run a single named case")
    p.set_defaults(func=cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ReducibleRadicandError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
