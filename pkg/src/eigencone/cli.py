"""Command line interface: ``eigencone member|facets|rays|induct|verify``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .cone import (
    DomainError,
    FacetDescriptor,
    check_point,
    enumerate_facets,
    is_member,
    type1_pairs,
    violated_facets,
)
from .rays import (
    ProductPoint,
    Ray,
    extremal_ray_search,
    facet_ray_candidates,
    induct,
    induction_terms,
    is_extremal,
    primitive_weights,
)
from .schubert import BudgetExceededError, InvalidMoveError
from .weights import kappa, normalize_weight

SCHEMA_VERSION = "1"


class UsageError(ValueError):
    pass


def q(v: Fraction) -> str:
    return str(Fraction(v))


def kappa_json(x) -> list[list[str]]:
    return [[q(v) for v in xi] for xi in x]


def parse_vectors(text: str, rational: bool = False) -> list[tuple]:
    """``"2,1,1,0;1,1,0,0"`` -> list of vectors."""
    vectors = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise UsageError(f"empty vector in {text!r}")
        try:
            if rational:
                vectors.append(tuple(Fraction(t.strip()) for t in chunk.split(",")))
            else:
                vectors.append(tuple(int(t) for t in chunk.split(",")))
        except ValueError as exc:
            raise UsageError(f"malformed vector {chunk!r}") from exc
    return vectors


def parse_weights(text: str) -> list[tuple[int, ...]]:
    ws = parse_vectors(text)
    try:
        return [normalize_weight(w) for w in ws]
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


_FACET_KEY = re.compile(r"^I(\d+)$")


def parse_facet(text: str, n: int) -> FacetDescriptor:
    """``"r=2;I1=2,3;I2=2,4;I3=2,4"``."""
    r = None
    sets: dict[int, list[int]] = {}
    for part in text.split(";"):
        if "=" not in part:
            raise UsageError(f"malformed facet field {part!r}")
        key, _, value = part.partition("=")
        key = key.strip()
        try:
            if key == "r":
                r = int(value)
            elif _FACET_KEY.match(key):
                sets[int(key[1:])] = [int(t) for t in value.split(",")]
            else:
                raise UsageError(f"unknown facet field {key!r}")
        except ValueError as exc:
            raise UsageError(f"malformed facet field {part!r}") from exc
    if not sets or sorted(sets) != list(range(1, len(sets) + 1)):
        raise UsageError("facet needs I1..Is")
    try:
        f = FacetDescriptor.from_sets(n, *(sets[j] for j in sorted(sets)))
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    if r is not None and r != f.r:
        raise DomainError(f"r={r} does not match |I1|={f.r}")
    return f.validate()


def facet_json(f: FacetDescriptor) -> dict:
    return {
        "r": f.r,
        "indices": [list(I) for I in f.indices],
        "q": len(type1_pairs(f)),
        "id": str(f),
    }


def ray_json(ray: Ray) -> dict:
    return {
        "weight_tuple": [list(w) for w in ray.weights],
        "kappa_tuple": kappa_json(ray.direction),
        "provenance": ray.provenance.as_dict(),
    }


def _record(command: str, parameters: dict, result) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "parameters": parameters, "result": result}


def _emit(args, record: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print("\n".join(human))


def _check_ns(args) -> None:
    if args.n is None or args.s is None:
        raise UsageError("--n and --s are required")
    if args.n < 2 or args.s < 3:
        raise UsageError("need n >= 2 and s >= 3")


def cmd_member(args) -> int:
    _check_ns(args)
    if (args.weights is None) == (args.kappa is None):
        raise UsageError("give exactly one of --weights and --kappa")
    if args.weights is not None:
        ws = parse_weights(args.weights)
        x = [kappa(w) for w in ws]
    else:
        x = parse_vectors(args.kappa, rational=True)
    x = check_point(x, args.n, args.s)
    bad = violated_facets(x, args.budget)
    member = not bad
    record = _record(
        "member",
        {"n": args.n, "s": args.s, "kappa_tuple": kappa_json(x)},
        {
            "member": member,
            "violated": [{"facet": facet_json(f), "value": q(v)} for f, v in bad],
        },
    )
    human = [f"member: {'yes' if member else 'no'}"]
    human += [f"  violated {f}  value {q(v)}" for f, v in bad]
    _emit(args, record, human)
    return 0 if member else 1


def cmd_facets(args) -> int:
    _check_ns(args)
    facets = enumerate_facets(args.n, args.s, args.budget)
    if args.r is not None:
        facets = [f for f in facets if f.r == args.r]
    record = _record(
        "facets",
        {"n": args.n, "s": args.s, "r": args.r},
        {"count": len(facets), "facets": [facet_json(f) for f in facets]},
    )
    human = [f"{len(facets)} facets of Gamma_{args.n}({args.s})"]
    human += [f"  {f}  q={len(type1_pairs(f))}" for f in facets]
    _emit(args, record, human)
    return 0


def cmd_rays(args) -> int:
    _check_ns(args)
    if args.facet:
        f = parse_facet(args.facet, args.n)
        if f.s != args.s:
            raise UsageError("facet has the wrong number of indices")
        seen: dict = {}
        for ray in facet_ray_candidates(f, args.budget):
            seen.setdefault(ray.weights, ray)
        cands = [seen[k] for k in sorted(seen)]
        rays = [r for r in cands if is_extremal(r.direction, args.budget)]
        rejected = [r for r in cands if r not in rays]
    else:
        search = extremal_ray_search(args.n, args.s, args.budget)
        rays, rejected = list(search.rays), list(search.rejected)
    result = {"count": len(rays), "rays": [ray_json(r) for r in rays]}
    if args.diagnostics:
        result["rejected"] = [ray_json(r) for r in rejected]
    params = {"n": args.n, "s": args.s, "facet": args.facet, "diagnostics": bool(args.diagnostics)}
    human = [f"{len(rays)} extremal rays"]
    human += [f"  {_fmt_weights(r.weights)}  [{r.provenance.kind}]" for r in rays]
    if args.diagnostics:
        human.append(f"{len(rejected)} rejected candidates")
        human += [f"  {_fmt_weights(r.weights)}  [{r.provenance.kind}]" for r in rejected]
    _emit(args, _record("rays", params, result), human)
    return 0


def _fmt_weights(ws) -> str:
    return "(" + "; ".join(",".join(map(str, w)) for w in ws) + ")"


def cmd_induct(args) -> int:
    if not (args.facet and args.left and args.right):
        raise UsageError("--facet, --left and --right are required")
    left = parse_weights(args.left)
    right = parse_weights(args.right)
    if not left or not right or len(left) != len(right):
        raise UsageError("--left and --right need the same number of weights")
    n = len(left[0]) + len(right[0])
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match weight lengths ({n})")
    f = parse_facet(args.facet, n)
    if f.s != len(left):
        raise UsageError("facet and weights disagree on s")
    p = ProductPoint(tuple(kappa(w) for w in left), tuple(kappa(w) for w in right))
    _check_product_members(p)
    y, terms = induction_terms(f, p)
    z = induct(f, p)
    zero = all(v == 0 for zi in z for v in zi)
    result = {
        "naive": kappa_json(y),
        "corrections": [
            {"component": t.component, "b": t.b, "gap": q(t.gap), "divisor_kappa": kappa_json(t.divisor)}
            for t in terms
        ],
        "kappa_tuple": kappa_json(z),
        "weight_tuple": None if zero else [list(w) for w in induced_weights(z)],
    }
    params = {"n": n, "facet": str(f), "left": [list(w) for w in left], "right": [list(w) for w in right]}
    human = [f"facet {f}", "naive: " + _fmt_kappa(y)]
    human += [f"  + ({q(t.gap)}) * D[{t.component},{t.b}] = {_fmt_kappa(t.divisor)}" for t in terms]
    human.append("result: " + _fmt_kappa(z))
    if not zero:
        human.append("weights: " + _fmt_weights(result["weight_tuple"]))
    _emit(args, _record("induct", params, result), human)
    return 0


def induced_weights(z) -> tuple:
    """``z_i - z_i^(n)`` when integral (so its kappa is ``z``), else the
    primitive weight tuple along ``z``."""
    shifted = [[v - zi[-1] for v in zi] for zi in z]
    if all(v.denominator == 1 for row in shifted for v in row):
        return tuple(tuple(int(v) for v in row) for row in shifted)
    return primitive_weights(z)


def _check_product_members(p: ProductPoint) -> None:
    for name, part in (("left", p.left), ("right", p.right)):
        if len(part[0]) > 1 and not is_member(part):
            raise DomainError(f"--{name} weights are not in their eigencone")


def _fmt_kappa(x) -> str:
    return "(" + "; ".join(",".join(q(v) for v in xi) for xi in x) + ")"


def cmd_verify(args) -> int:
    from .verify import run_checks

    only = args.only.split(",") if args.only else None
    try:
        results = run_checks(only)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    ok = all(r.passed for r in results)
    if args.json:
        print(
            json.dumps(
                _record(
                    "verify",
                    {"only": only},
                    {
                        "passed": ok,
                        "checks": [
                            {"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3), "detail": r.detail}
                            for r in results
                        ],
                    },
                ),
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for r in results:
            print(r.line())
        print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eigencone", description="Exact computations on the Hermitian eigencone.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ns=True):
        if ns:
            p.add_argument("--n", type=int)
            p.add_argument("--s", type=int)
        p.add_argument("--json", action="store_true", help="emit a JSON record")
        p.add_argument("--budget", type=int, default=None, help="enumeration budget (default $EIGENCONE_BUDGET or 1e8)")

    p = sub.add_parser("member", help="test membership of a weight or kappa tuple")
    common(p)
    p.add_argument("--weights", help='e.g. "1,0;1,0;0,0"')
    p.add_argument("--kappa", help='e.g. "1/2,-1/2;1/2,-1/2;0,0"')
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("facets", help="list regular facets")
    common(p)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("rays", help="list extremal rays")
    common(p)
    p.add_argument("--facet", help='restrict to one facet, e.g. "r=1;I1=1;I2=2;I3=2"')
    p.add_argument("--diagnostics", action="store_true", help="include rejected candidates")
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("induct", help="induce a point of the product of smaller cones")
    common(p)
    p.add_argument("--facet", required=False)
    p.add_argument("--left", help="s weights of SL(r)")
    p.add_argument("--right", help="s weights of SL(n-r)")
    p.set_defaults(func=cmd_induct)

    p = sub.add_parser("verify", help="run the reproduction checks")
    p.add_argument("--only", help="comma separated check names")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, InvalidMoveError, BudgetExceededError) as exc:
        print(f"eigencone {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
