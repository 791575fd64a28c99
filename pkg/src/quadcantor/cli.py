"""Command-line front end: factor, order, member, intersect, bound, dim,
render, cns.

Every subcommand emits one JSON record with sorted keys and a ``schema``
version; all numbers are decimal strings so arbitrary precision survives
serialization.  Exit codes: 0 success, 1 element-syntax error, 2 failed
precondition, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import cns as cnsmod
from .errors import CapExceededError, FieldError, ParseError, PreconditionError
from .fractal import (
    bounding_radius_sq,
    covering_constants,
    ifs_new,
    period_bound,
    sample_points,
    similarity_dimension,
)
from .ideals import IdealHNF, factor_element, factor_rational_prime
from .intersection import (
    certified_bound,
    full_intersection,
    preconditions,
    tuple_is_excluded,
)
from .membership import build_state_graph, coding_of
from .orders import c2_constant, ord_prime_power_detail
from .quadring import element_text, make_field, parse_element, parse_point

SCHEMA = 1


def _emit(record: dict) -> None:
    record["schema"] = SCHEMA
    print(json.dumps(record, sort_keys=True, indent=2))


def _fmt_float(x: float) -> str:
    return f"{x:.15g}"


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise PreconditionError(f"missing required option --{name.replace('_', '-')}")


def _field_of(args):
    _require(args, "d")
    return make_field(int(args.d))


def _spec_of(args, field):
    _require(args, "beta", "digits")
    beta = parse_element(args.beta, field)
    digits = [parse_element(t, field) for t in args.digits.split(",")]
    return ifs_new(beta, digits)


def _cmd_factor(args) -> None:
    field = _field_of(args)
    element = parse_element(args.element, field)
    fact = factor_element(element)
    _emit(
        {
            "command": "factor",
            "d": str(field.d),
            "element": element_text(element),
            "norm": str(element.norm()),
            "factors": [
                {
                    "p": str(p.p),
                    "e": str(p.e),
                    "f": str(p.f),
                    "hnf": [str(p.hnf.a), str(p.hnf.b), str(p.hnf.c)],
                    "exponent": str(b),
                }
                for p, b in fact.factors
            ],
        }
    )


def _pick_prime(field, args):
    _require(args, "p")
    p = int(args.p)
    splitting = factor_rational_prime(field, p)
    if args.hnf is not None:
        a, b, c = (int(t) for t in args.hnf.split(","))
        want = IdealHNF(field, a, b, c)
        for prime in splitting.primes:
            if prime.hnf == want:
                return prime
        raise PreconditionError(f"hnf {args.hnf} is not a prime above {p}")
    if args.root is not None:
        r = int(args.root) % p
        for prime in splitting.primes:
            if prime.root == r:
                return prime
        raise PreconditionError(f"w-{r} does not cut out a prime above {p}")
    if len(splitting.primes) == 1:
        return splitting.primes[0]
    raise PreconditionError(f"{p} splits; disambiguate with --root or --hnf")


def _cmd_order(args) -> None:
    field = _field_of(args)
    _require(args, "beta")
    beta = parse_element(args.beta, field)
    prime = _pick_prime(field, args)
    n = int(args.n) if args.n is not None else 1
    order, stab = ord_prime_power_detail(beta, prime, n)
    _emit(
        {
            "command": "order",
            "d": str(field.d),
            "beta": element_text(beta),
            "p": str(prime.p),
            "e": str(prime.e),
            "f": str(prime.f),
            "n": str(n),
            "order": str(order),
            "n0": str(stab.n0),
            "m": str(stab.m),
            "used_closed_form": n > stab.n0,
        }
    )


def _cmd_member(args) -> None:
    field = _field_of(args)
    spec = _spec_of(args, field)
    _require(args, "point")
    point = parse_point(args.point, field)
    graph = build_state_graph(point.num, point.den, spec)
    coding = coding_of(point.num, point.den, spec)
    _emit(
        {
            "command": "member",
            "d": str(field.d),
            "point": str(point),
            "member": graph.has_reachable_cycle,
            "preperiod": [element_text(a) for a in coding.preperiod] if coding else [],
            "period": [element_text(a) for a in coding.period] if coding else [],
            "states": str(graph.state_count),
            "bound": str(period_bound(spec, point.den * point.den)),
        }
    )


def _precondition_record(report) -> dict:
    return {
        "alpha_beta_coprime": report.alpha_beta_coprime,
        "case_ii_eligible": report.case_ii_eligible,
        "case_i_applicable": report.case_i_applicable,
        "case_ii_applicable": report.case_ii_applicable,
        "applicable_case": report.applicable_case,
        "alpha_factors": [
            {"p": str(p.p), "e": str(p.e), "f": str(p.f), "exponent": str(b)}
            for p, b in report.alpha_factorization.factors
        ],
    }


def _cmd_intersect(args) -> None:
    field = _field_of(args)
    spec = _spec_of(args, field)
    _require(args, "alpha", "mode")
    alpha = parse_element(args.alpha, field)
    mode = args.mode
    n_max = int(args.nmax) if args.nmax is not None else None
    cap = int(args.cap) if args.cap is not None else 10**8
    word_cap = int(args.word_cap) if args.word_cap is not None else 1 << 16
    report = full_intersection(
        alpha, spec, mode=mode, n_max=n_max, cap=cap, word_cap=word_cap
    )
    points = []
    for pt in report.points:
        scaled = pt.value * alpha**pt.den_pow
        assert scaled.is_integral()
        points.append(
            {
                "num": element_text(scaled.num),
                "den_pow": str(pt.den_pow),
                "value": str(pt.value),
                "tuple": [str(n) for n in pt.exponents],
                "preperiod": [element_text(a) for a in pt.coding.preperiod],
                "period": [element_text(a) for a in pt.coding.period],
            }
        )
    _emit(
        {
            "command": "intersect",
            "d": str(field.d),
            "alpha": element_text(alpha),
            "beta": element_text(spec.beta),
            "preconditions": _precondition_record(report.preconditions),
            "sigma": _fmt_float(report.preconditions.sigma),
            "c1_params": {
                "r_prime_sq": str(bounding_radius_sq(spec)),
                "beta_norm": str(spec.beta.norm()),
                "digit_count": str(len(spec.digits)),
            },
            "c2": str(report.lower_bound.c2) if report.lower_bound else None,
            "n0": str(report.certified_n0) if report.certified_n0 is not None else None,
            "level": str(report.level),
            "exhausted": report.exhausted,
            "points": points,
        }
    )


def _cmd_bound(args) -> None:
    field = _field_of(args)
    spec = _spec_of(args, field)
    _require(args, "alpha")
    alpha = parse_element(args.alpha, field)
    report = preconditions(alpha, spec)
    record = {
        "command": "bound",
        "d": str(field.d),
        "alpha": element_text(alpha),
        "beta": element_text(spec.beta),
        "preconditions": _precondition_record(report),
        "sigma": _fmt_float(report.sigma),
        "r_prime_sq": str(bounding_radius_sq(spec)),
        "case": report.applicable_case,
        "ell": str(report.alpha_factorization.ell),
    }
    if report.applicable_case is None:
        record.update({"c2": None, "m_exponents": None, "n0": None, "samples": []})
        _emit(record)
        return
    covering = covering_constants(spec)
    lb = c2_constant(spec.beta, report.alpha_factorization.primes)
    n0 = certified_bound(report, covering, lb)
    samples = []
    ell = report.alpha_factorization.ell
    for j in range(ell):
        tup = tuple(n0 if i == j else 0 for i in range(ell))
        samples.append(
            {
                "tuple": [str(n) for n in tup],
                "excluded": tuple_is_excluded(spec, lb, report.applicable_case, tup),
            }
        )
    record.update(
        {
            "c2": str(lb.c2),
            "m_exponents": [str(m) for m in lb.m_exponents],
            "n0": str(n0),
            "samples": samples,
        }
    )
    _emit(record)


def _cmd_dim(args) -> None:
    field = _field_of(args)
    spec = _spec_of(args, field)
    rows = int(args.rows) if args.rows is not None else 8
    r2 = bounding_radius_sq(spec)
    r_prime = math.sqrt(float(r2))
    abs_beta = math.sqrt(spec.beta.norm())
    table = []
    for k in range(rows):
        delta = r_prime / abs_beta**k
        table.append(
            {
                "k": str(k),
                "delta": _fmt_float(delta),
                "bound": str(len(spec.digits) ** k),
            }
        )
    _emit(
        {
            "command": "dim",
            "d": str(field.d),
            "beta": element_text(spec.beta),
            "sigma": _fmt_float(similarity_dimension(spec)),
            "r_prime_sq": str(r2),
            "covering": table,
        }
    )


def _render_svg(path: str, pts) -> None:
    size = 800
    margin = 20
    re = pts.real
    im = pts.imag
    lo_x, hi_x = float(re.min()), float(re.max())
    lo_y, hi_y = float(im.min()), float(im.max())
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    scale = (size - 2 * margin) / span
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for x, y in zip(re, im):
        px = margin + (float(x) - lo_x) * scale
        py = size - margin - (float(y) - lo_y) * scale
        lines.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="1" fill="black"/>')
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines))


def _cmd_render(args) -> None:
    field = _field_of(args)
    spec = _spec_of(args, field)
    _require(args, "depth", "out")
    depth = int(args.depth)
    cap = int(args.cap) if args.cap is not None else 1 << 20
    pts = sample_points(spec, depth, cap=cap)
    with open(args.out, "w") as fh:
        for z in pts:
            fh.write(f"{z.real:.12f},{z.imag:.12f}\n")
    if args.svg is not None:
        _render_svg(args.svg, pts)
    _emit(
        {
            "command": "render",
            "written": args.out,
            "svg": args.svg,
            "points": str(len(pts)),
        }
    )


def _cmd_cns(args) -> None:
    _require(args, "n")
    basis = cnsmod.cns_basis(int(args.n))
    if (args.expand is None) == (args.evaluate is None):
        raise PreconditionError("cns needs exactly one of --expand or --evaluate")
    gauss = make_field(-1)
    if args.expand is not None:
        gamma = parse_element(args.expand, gauss)
        digits = cnsmod.expand(gamma, basis)
        _emit(
            {
                "command": "cns",
                "n": str(basis.n),
                "gamma": element_text(gamma),
                "digits": [str(d) for d in digits],
            }
        )
        return
    digits = [int(t) for t in args.evaluate.split(",")] if args.evaluate else []
    value = cnsmod.evaluate(digits, basis)
    _emit(
        {
            "command": "cns",
            "n": str(basis.n),
            "digits": [str(d) for d in digits],
            "value": element_text(value),
        }
    )


def _read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise PreconditionError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _apply_config(args) -> None:
    if getattr(args, "config", None) is None:
        return
    for key, value in _read_config(args.config).items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcantor",
        description="Exact arithmetic in imaginary quadratic rings and "
        "certified enumeration of radix points on self-similar sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha=False, spec=False, point=False):
        p.add_argument("-d", dest="d", default=None, help="field parameter d < 0")
        p.add_argument("--config", default=None, help="key=value defaults file")
        if alpha:
            p.add_argument("--alpha", default=None, help="alpha as element text")
        if spec:
            p.add_argument("--beta", default=None, help="beta as element text")
            p.add_argument(
                "--digits", default=None, help="comma-separated digit elements"
            )
        if point:
            p.add_argument("--point", default=None, help="query point v or v/u")

    p = sub.add_parser("factor", help="prime-ideal factorization of an element")
    common(p)
    p.add_argument("element", help="element text, e.g. '10' or '-4+w'")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("order", help="multiplicative order modulo a prime power")
    common(p)
    p.add_argument("--beta", default=None, help="beta as element text")
    p.add_argument("--p", default=None, help="rational prime below the ideal")
    p.add_argument("--root", default=None, help="root r for the prime (p, w-r)")
    p.add_argument("--hnf", default=None, help="prime ideal as a,b,c")
    p.add_argument("--n", default=None, help="power of the prime (default 1)")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("member", help="exact membership of v/u in S(beta, A)")
    common(p, spec=True, point=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("intersect", help="enumerate D_alpha intersected with S")
    common(p, alpha=True, spec=True)
    p.add_argument("--mode", default=None, choices=["certified", "bounded"])
    p.add_argument("--nmax", default=None, help="level for bounded mode")
    p.add_argument("--cap", default=None, help="candidate cap (default 10^8)")
    p.add_argument("--word-cap", dest="word_cap", default=None)
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("bound", help="certificate computation trace only")
    common(p, alpha=True, spec=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("dim", help="similarity dimension and covering table")
    common(p, spec=True)
    p.add_argument("--rows", default=None, help="covering table rows (default 8)")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("render", help="sample attractor points to CSV/SVG")
    common(p, spec=True)
    p.add_argument("--depth", default=None, help="digit depth of the sample")
    p.add_argument("--out", default=None, help="CSV output path (re,im lines)")
    p.add_argument("--svg", default=None, help="optional SVG scatter path")
    p.add_argument("--cap", default=None, help="sample-size cap")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("cns", help="canonical number system in base -n+i")
    p.add_argument("--config", default=None)
    p.add_argument("--n", default=None, help="base parameter: theta = -n+i")
    p.add_argument("--expand", default=None, help="Gaussian integer to expand")
    p.add_argument("--evaluate", default=None, help="digits d0,d1,... to evaluate")
    p.set_defaults(func=_cmd_cns)

    return parser


_VALUE_OPTS = {
    "--alpha",
    "--beta",
    "--point",
    "--expand",
    "--evaluate",
    "--digits",
}


def _merge_leading_dash_values(argv: list[str]) -> list[str]:
    """Let element texts beginning with '-' follow their option normally."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if nxt is not None and nxt.startswith("-"):
            if tok in _VALUE_OPTS:
                out.append(f"{tok}={nxt}")
                i += 2
                continue
            if tok == "-d":
                out.append(f"-d{nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_merge_leading_dash_values(argv))
    try:
        _apply_config(args)
        args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc} (token: {exc.token!r})", file=sys.stderr)
        return 1
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (PreconditionError, FieldError, ValueError, ZeroDivisionError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
