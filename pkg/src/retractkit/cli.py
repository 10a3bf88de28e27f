"""Command line front end.

Every subcommand prints a single JSON object to stdout with a ``status``
field, and the exit code is a function of the status alone:

    ok -> 0
    not_found_within_bound, term_budget_exceeded -> 1
    parse_error, precondition_violated -> 2
    theorem_inconsistency -> 3

Rationals appear as strings like "3" or "-5/2"; polynomials use the same
surface syntax the parser accepts; endomorphisms travel as JSON objects
{"ring": ..., "x": ..., "y": ...}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from . import estimates
from .algebra import (
    COMM,
    NONCOMM,
    Poly,
    UniPoly,
    abelianize,
    commutator,
    divides,
    eval_uni,
    jacobian,
    substitute,
    wdeg,
)
from .autorec import (
    LINEAR,
    ElementaryAuto,
    is_automorphism,
    random_automorphism,
    tame_decompose,
)
from .endo import Endo, apply, compose, is_idempotent, is_injective, power
from .errors import (
    GeneratorNotFound,
    NotFoundWithinBound,
    ParseError,
    RetractKitError,
    TermBudgetExceeded,
)
from .estimates import (
    check_commutator_bound,
    check_jacobian_bound,
    fuzz_estimates,
    growth_comm,
    growth_noncomm,
)
from .exprio import (
    endo_from_json,
    endo_to_dict,
    parse_poly,
    parse_uni,
    print_poly,
    print_uni,
)
from .retracts import (
    canonical_form_check,
    decompose_inner,
    find_retraction_power,
    search_retraction_detailed,
    membership,
)
from .testelem import (
    SearchConfig,
    certify_test_element,
    orbit_falsifier,
    verify_theorem_injection,
)

_EXIT_CODES = {
    "ok": 0,
    "not_found_within_bound": 1,
    "term_budget_exceeded": 1,
    "parse_error": 2,
    "precondition_violated": 2,
    "theorem_inconsistency": 3,
}


@dataclass
class CommandResult:
    status: str
    payload: Dict[str, object]

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]


def _ok(**payload) -> CommandResult:
    return CommandResult("ok", payload)


def _maybe_str(value) -> Optional[str]:
    return None if value is None else str(value)


def _cert_dict(cert) -> Dict[str, object]:
    return {
        "trivial": cert.trivial,
        "generator": None if cert.generator is None else print_poly(cert.generator),
        "image_x": None if cert.image_x is None else print_uni(cert.image_x),
        "image_y": None if cert.image_y is None else print_uni(cert.image_y),
    }


def _factor_dict(factor: ElementaryAuto) -> Dict[str, object]:
    if factor.kind == LINEAR:
        return {
            "kind": factor.kind,
            "matrix": [[str(v) for v in row] for row in factor.matrix],
            "translation": [str(v) for v in factor.translation],
        }
    return {"kind": factor.kind, "shift": print_uni(factor.shift)}


def _estimate_payload(report) -> Dict[str, object]:
    return {
        "ring": report.ring,
        "actual_degree": report.actual_degree,
        "lower_bound": str(report.lower_bound),
        "case": report.precondition_case,
        "satisfied": report.satisfied,
        "strict": report.strict,
    }


def _cmd_parse(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    return _ok(
        ring=args.ring,
        poly=print_poly(p),
        terms=len(p.support()),
        degree=None if p.is_zero() else p.degree(),
    )


def _cmd_deg(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    return _ok(degree=p.degree())


def _cmd_wdeg(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    return _ok(weighted_degree=wdeg(p, args.weight_x, args.weight_y))


def _cmd_leading(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    return _ok(
        leading_form=print_poly(p.leading_form()),
        leading_coeff=str(p.leading_coeff()),
        degree=p.degree(),
    )


def _cmd_commutator(args) -> CommandResult:
    f = parse_poly(args.f, NONCOMM)
    g = parse_poly(args.g, NONCOMM)
    return _ok(result=print_poly(commutator(f, g)))


def _cmd_jacobian(args) -> CommandResult:
    f = parse_poly(args.f, COMM)
    g = parse_poly(args.g, COMM)
    return _ok(result=print_poly(jacobian(f, g)))


def _cmd_subst(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    f = parse_poly(args.f, args.ring)
    g = parse_poly(args.g, args.ring)
    return _ok(result=print_poly(substitute(p, f, g)))


def _cmd_abelianize(args) -> CommandResult:
    p = parse_poly(args.poly, NONCOMM)
    return _ok(result=print_poly(abelianize(p)))


def _cmd_divides(args) -> CommandResult:
    d = parse_poly(args.divisor, COMM)
    p = parse_poly(args.poly, COMM)
    flag, quotient = divides(d, p)
    return _ok(divides=flag, quotient=None if quotient is None else print_poly(quotient))


def _cmd_apply(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    p = parse_poly(args.poly, phi.ring)
    return _ok(result=print_poly(apply(phi, p)))


def _cmd_compose(args) -> CommandResult:
    outer = endo_from_json(args.outer)
    inner = endo_from_json(args.inner)
    return _ok(endo=endo_to_dict(compose(outer, inner)))


def _cmd_power(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    return _ok(endo=endo_to_dict(power(phi, args.exponent)))


def _cmd_idempotent(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    return _ok(idempotent=is_idempotent(phi))


def _cmd_injective(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    return _ok(injective=is_injective(phi))


def _cmd_is_auto(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    method = "commutator" if phi.ring == NONCOMM else "factorization"
    return _ok(automorphism=is_automorphism(phi), method=method)


def _cmd_decompose(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    decomposition = tame_decompose(phi)
    if decomposition is None:
        return _ok(automorphism=False, factors=None)
    recomposed = decomposition.compose()
    return _ok(
        automorphism=True,
        factors=[_factor_dict(f) for f in decomposition.factors],
        verified=recomposed.fx == phi.fx and recomposed.fy == phi.fy,
    )


def _cmd_random_auto(args) -> CommandResult:
    phi = random_automorphism(
        args.seed, args.length, args.ring, args.coeff_bound, args.deg_bound
    )
    return _ok(endo=endo_to_dict(phi))


def _cmd_check_estimate(args) -> CommandResult:
    f = parse_poly(args.f, args.ring)
    g = parse_poly(args.g, args.ring)
    p = parse_poly(args.poly, args.ring)
    if args.ring == COMM:
        report = check_jacobian_bound(f, g, p)
    else:
        report = check_commutator_bound(f, g, p)
    status = "ok" if report.satisfied else "theorem_inconsistency"
    return CommandResult(status, _estimate_payload(report))


def _cmd_fuzz_estimates(args) -> CommandResult:
    summary = fuzz_estimates(
        args.ring,
        args.trials,
        seed=args.seed,
        max_deg=args.max_deg,
        coeff_bound=args.coeff_bound,
        max_support=args.max_support,
    )
    payload = {
        "ring": summary.ring,
        "completed": summary.completed,
        "rejected": summary.rejected,
        "failures": len(summary.failures),
        "min_excess": _maybe_str(summary.min_excess),
        "strict_count": summary.strict_count,
    }
    if args.out_dir:
        from .report import write_fuzz_report

        payload.update(write_fuzz_report(summary, args.out_dir))
    status = "ok" if summary.all_satisfied else "theorem_inconsistency"
    return CommandResult(status, payload)


def _cmd_growth(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    if phi.ring == COMM:
        series = growth_comm(phi, args.k_max)
        floors = [k for k, _ in series]
    else:
        series = growth_noncomm(phi, args.k_max)
        floors = [k + 2 for k, _ in series]
    payload: Dict[str, object] = {
        "ring": phi.ring,
        "series": [[k, d] for k, d in series],
        "floors": floors,
    }
    if args.out_dir:
        from .report import write_growth_report

        payload.update(write_growth_report(series, floors, phi.ring, args.out_dir))
    if is_automorphism(phi):
        payload["automorphism"] = True
        return CommandResult("ok", payload)
    payload["automorphism"] = False
    satisfied = all(d >= floor for (_, d), floor in zip(series, floors))
    payload["satisfied"] = satisfied
    return CommandResult("ok" if satisfied else "theorem_inconsistency", payload)


def _cmd_membership(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    r = parse_poly(args.generator, args.ring)
    expression = membership(p, r)
    return _ok(
        member=expression is not None,
        expression=None if expression is None else print_uni(expression),
    )


def _cmd_decompose_inner(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    found = decompose_inner(p, args.inner_degree)
    if found is None:
        return _ok(found=False, outer=None, inner=None)
    return _ok(found=True, outer=print_uni(found.outer), inner=print_poly(found.inner))


def _cmd_retraction_power(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    p = parse_poly(args.poly, phi.ring)
    result = find_retraction_power(phi, p, args.m_max)
    return _ok(
        exponent=result.exponent,
        retraction=endo_to_dict(result.retraction),
        certificate=_cert_dict(result.certificate),
    )


def _cmd_find_retraction(args) -> CommandResult:
    w = parse_poly(args.generator, args.ring)
    search = search_retraction_detailed(w, args.deg_bound)
    if not search.found:
        return CommandResult("not_found_within_bound", {"complete": search.complete})
    return _ok(
        retraction=endo_to_dict(search.retraction),
        image_x=print_uni(search.image_x),
        image_y=print_uni(search.image_y),
        complete=search.complete,
    )


def _cmd_check_canonical(args) -> CommandResult:
    r = parse_poly(args.generator, args.ring)
    return _ok(canonical=canonical_form_check(r))


def _cmd_certify(args) -> CommandResult:
    p = parse_poly(args.poly, args.ring)
    cfg = SearchConfig(
        retraction_deg_bound=args.deg_bound,
        orbit_samples=args.orbit_samples,
        sample_length=args.sample_length,
        coeff_bound=args.coeff_bound,
        sample_deg_bound=args.sample_deg_bound,
        seed=args.seed,
    )
    cert = certify_test_element(p, cfg)
    return _ok(
        verdict=cert.verdict,
        retraction=None if cert.retraction is None else endo_to_dict(cert.retraction),
        generator=None if cert.generator is None else print_poly(cert.generator),
        outer=None if cert.outer is None else print_uni(cert.outer),
        divisors_checked=list(cert.report.divisors_checked),
        searches_complete=cert.report.searches_complete,
        orbit_samples=cert.report.orbit_samples,
    )


def _cmd_orbit_falsify(args) -> CommandResult:
    r = parse_poly(args.generator, args.ring)
    f = parse_uni(args.sample)
    report = orbit_falsifier(r, f)
    consistent = report.two_route_match and not report.affine_match
    payload = {
        "ring": report.ring,
        "generator": print_poly(report.generator),
        "sample": print_uni(report.sample),
        "retraction": endo_to_dict(report.retraction),
        "twist": endo_to_dict(report.twist),
        "exponent": report.exponent,
        "image": print_poly(report.image),
        "two_route_match": report.two_route_match,
        "affine_match": report.affine_match,
    }
    return CommandResult("ok" if consistent else "theorem_inconsistency", payload)


def _cmd_injection_check(args) -> CommandResult:
    phi = endo_from_json(args.endo)
    p = parse_poly(args.poly, phi.ring)
    report = verify_theorem_injection(phi, p)
    payload = {
        "ring": report.ring,
        "witness": {"kind": report.witness.kind, "monomials": list(report.witness.monomials)},
        "injective": report.injective,
        "consistent": report.consistent,
    }
    return CommandResult("ok" if report.consistent else "theorem_inconsistency", payload)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")

    ringed = argparse.ArgumentParser(add_help=False)
    ringed.add_argument(
        "--ring", choices=(COMM, NONCOMM), default=COMM, help="which ring to work in"
    )

    parser = argparse.ArgumentParser(
        prog="retractkit",
        description="Exact tools for automorphisms, retracts and test elements in rank two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, parents=(common,), **extra):
        p = sub.add_parser(name, parents=list(parents), help=help_text, **extra)
        p.set_defaults(handler=handler)
        return p

    p = add("parse", _cmd_parse, "parse and reprint in canonical order", (common, ringed))
    p.add_argument("poly")

    p = add("deg", _cmd_deg, "total degree", (common, ringed))
    p.add_argument("poly")

    p = add("wdeg", _cmd_wdeg, "weighted degree", (common, ringed))
    p.add_argument("poly")
    p.add_argument("weight_x", type=int)
    p.add_argument("weight_y", type=int)

    p = add("leading", _cmd_leading, "leading form under the canonical order", (common, ringed))
    p.add_argument("poly")

    p = add("commutator", _cmd_commutator, "f*g - g*f in the free algebra")
    p.add_argument("f")
    p.add_argument("g")

    p = add("jacobian", _cmd_jacobian, "Jacobian determinant in the polynomial ring")
    p.add_argument("f")
    p.add_argument("g")

    p = add("subst", _cmd_subst, "substitute (f, g) for (x, y) in p", (common, ringed))
    p.add_argument("poly")
    p.add_argument("f")
    p.add_argument("g")

    p = add("abelianize", _cmd_abelianize, "commutative image of a free-algebra element")
    p.add_argument("poly")

    p = add("divides", _cmd_divides, "exact divisibility in the polynomial ring")
    p.add_argument("divisor")
    p.add_argument("poly")

    p = add("apply", _cmd_apply, "apply an endomorphism to a polynomial")
    p.add_argument("endo")
    p.add_argument("poly")

    p = add("compose", _cmd_compose, "compose two endomorphisms (outer then inner)")
    p.add_argument("outer")
    p.add_argument("inner")

    p = add("power", _cmd_power, "iterate an endomorphism")
    p.add_argument("endo")
    p.add_argument("exponent", type=int)

    p = add("idempotent", _cmd_idempotent, "is the map equal to its square")
    p.add_argument("endo")

    p = add("injective", _cmd_injective, "injectivity through the ring-specific criterion")
    p.add_argument("endo")

    p = add("is-auto", _cmd_is_auto, "automorphism test")
    p.add_argument("endo")

    p = add("decompose", _cmd_decompose, "factor an automorphism into elementary maps")
    p.add_argument("endo")

    p = add("random-auto", _cmd_random_auto, "seeded random tame automorphism", (common, ringed))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=int, default=4)
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--deg-bound", type=int, default=3)

    p = add("check-estimate", _cmd_check_estimate, "degree lower bound on one instance", (common, ringed))
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("poly")

    p = add("fuzz-estimates", _cmd_fuzz_estimates, "randomized degree-bound checks", (common, ringed))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--max-support", type=int, default=5)
    p.add_argument("--out-dir", default=None, help="write CSV and a plot here")

    p = add("growth", _cmd_growth, "degree growth along iterates")
    p.add_argument("endo")
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--out-dir", default=None, help="write CSV and a plot here")

    p = add("membership", _cmd_membership, "is p inside K[r]", (common, ringed))
    p.add_argument("poly")
    p.add_argument("generator")

    p = add("decompose-inner", _cmd_decompose_inner, "inner element at a given degree", (common, ringed))
    p.add_argument("poly")
    p.add_argument("inner_degree", type=int)

    p = add("retraction-power", _cmd_retraction_power, "idempotent power of a map fixing p")
    p.add_argument("endo")
    p.add_argument("poly")
    p.add_argument("--m-max", type=int, default=64)

    p = add("find-retraction", _cmd_find_retraction, "retraction fixing a given element", (common, ringed))
    p.add_argument("generator")
    p.add_argument("--deg-bound", type=int, default=6)

    p = add("check-canonical", _cmd_check_canonical, "is r of the form x + (terms with y)", (common, ringed))
    p.add_argument("generator")

    p = add("certify", _cmd_certify, "test-element certification", (common, ringed))
    p.add_argument("poly")
    p.add_argument("--deg-bound", type=int, default=6)
    p.add_argument("--orbit-samples", type=int, default=200)
    p.add_argument("--sample-length", type=int, default=4)
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--sample-deg-bound", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = add("orbit-falsify", _cmd_orbit_falsify, "twisted image off the affine orbit", (common, ringed))
    p.add_argument("generator")
    p.add_argument("sample", help="univariate polynomial in t")

    p = add("injection-check", _cmd_injection_check, "fixing a two-variable element forces injectivity")
    p.add_argument("endo")
    p.add_argument("poly")

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    corrupt = os.environ.get("RETRACTKIT_CORRUPT_BOUND", "").strip()
    try:
        estimates._set_bound_excess(Fraction(corrupt) if corrupt else 0)
    except (ValueError, ZeroDivisionError):
        estimates._set_bound_excess(0)
    try:
        result = args.handler(args)
    except ParseError as exc:
        result = CommandResult("parse_error", {"error": str(exc)})
    except TermBudgetExceeded as exc:
        result = CommandResult("term_budget_exceeded", {"error": str(exc)})
    except (NotFoundWithinBound, GeneratorNotFound) as exc:
        result = CommandResult("not_found_within_bound", {"error": str(exc)})
    except RetractKitError as exc:
        result = CommandResult("precondition_violated", {"error": str(exc)})
    except ValueError as exc:
        result = CommandResult("precondition_violated", {"error": str(exc)})
    payload = {"status": result.status}
    payload.update(result.payload)
    print(json.dumps(payload, indent=2 if args.pretty else None))
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
