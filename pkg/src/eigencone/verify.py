"""Reproduction checks for the worked examples and structural properties.

Each check returns a :class:`CheckResult`; ``run_checks`` drives them for the
``verify`` subcommand and the acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Callable

from .cone import (
    FacetDescriptor,
    enumerate_facets,
    in_F2,
    is_member,
    on_facet,
    type1_pairs,
)
from .ratlinalg import rank
from .rays import (
    ProductPoint,
    all_extremal_rays,
    basic_ray,
    basic_rays,
    extremal_ray_search,
    induct,
    is_extremal,
    is_F_ray,
    primitive_weights,
    product_cone_rays,
    restrict_section,
)
from .schubert import (
    all_indices,
    dual_index,
    intersection_number,
    lr_product,
    pieri_product,
)
from .weights import invariant_dimension, kappa


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float = 0.0
    limit: float | None = None
    detail: str = ""
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] {self.name}: {self.seconds:.2f}s{limit} {self.detail}".rstrip()


class CheckFailed(AssertionError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailed(msg)


F = FacetDescriptor.from_sets
GR24_FACET = F(4, (2, 3), (2, 4), (2, 4))
GR58_FACET = F(8, (3, 4, 5, 7, 8), (2, 3, 5, 6, 8), (2, 3, 5, 6, 8))
SL9 = F(9, (3, 7, 8), (3, 6, 9), (3, 6, 9))
SL9_WEIGHTS = ((3, 3, 3, 2, 2, 2, 2, 1, 0), (2, 2, 2, 1, 1, 1, 0, 0, 0), (2, 2, 2, 1, 1, 1, 0, 0, 0))


def _fw(b: int, n: int) -> tuple[int, ...]:
    return tuple(1 if a < b else 0 for a in range(n))


def check_gr24_basic_ray() -> dict:
    ray = basic_ray(GR24_FACET, 1, 2)
    want = ((2, 1, 1, 0), (1, 1, 0, 0), (1, 1, 0, 0))
    _require(ray.weights == want, f"weights {ray.weights}")
    h = Fraction(1, 2)
    want_k = ((1, 0, 0, -1), (h, h, -h, -h), (h, h, -h, -h))
    _require(ray.direction == tuple(tuple(map(Fraction, w)) for w in want_k), "kappa tuple")
    return {"weights": ray.weights}


def check_gr58_basic_ray() -> dict:
    _require(intersection_number(*GR58_FACET.indices) == 1, "intersection number")
    ray = basic_ray(GR58_FACET, 1, 3)
    want = ((3, 3, 2, 2, 2, 0, 0, 0), (4, 4, 4, 2, 2, 2, 0, 0), (4, 4, 4, 2, 2, 2, 0, 0))
    _require(ray.weights == want, f"weights {ray.weights}")
    return {"weights": ray.weights}


def check_sl9() -> dict:
    _require(intersection_number(*SL9.indices) == 1, "intersection number")
    zero = ((Fraction(0),) * 6,) * 3
    z = induct(SL9, ProductPoint((kappa((1, 1, 0)),) * 3, zero))
    _require(z == tuple(kappa(w) for w in SL9_WEIGHTS), f"induced {primitive_weights(z)}")
    _require(is_extremal(z), "not extremal")
    dim = invariant_dimension(SL9_WEIGHTS)
    _require(dim == 2, f"invariant dimension {dim}")
    from .rays import ray_from_weights

    _require(not is_F_ray(ray_from_weights(SL9_WEIGHTS), N_max=1), "F-ray at N=1")
    return {"invariant_dimension": dim}


def check_n2() -> dict:
    rays = {r.weights for r in all_extremal_rays(2, 3)}
    w, o = (1, 0), (0, 0)
    _require(rays == {(w, w, o), (w, o, w), (o, w, w)}, f"rays {sorted(rays)}")
    facets = enumerate_facets(2, 3)
    _require(len(facets) == 3, f"{len(facets)} facets")
    _require(all(len(type1_pairs(f)) == 2 for f in facets), "q != 2")
    return {"rays": sorted(rays)}


def check_n3() -> dict:
    rays = all_extremal_rays(3, 3)
    found = {r.weights for r in rays}
    w1, w2, z = _fw(1, 3), _fw(2, 3), (0, 0, 0)
    required = {(w2, w2, w2)} | set(permutations((w1, z, w2)))
    _require(len(required) == 7, "bad fixture")
    missing = required - found
    _require(not missing, f"missing {sorted(missing)}")
    for r in rays:
        _require(is_member(r.direction) and is_extremal(r.direction), f"{r.weights} fails")
    return {"rays": sorted(found)}


def check_n4() -> dict:
    found = {r.weights for r in all_extremal_rays(4, 3)}
    want = ((2, 1, 1, 0), (1, 1, 0, 0), (1, 1, 0, 0))
    _require(want in found, "ray ((2,1,1,0),omega_2,omega_2) missing")
    return {"count": len(found)}


def check_rigidity() -> dict:
    rays = [basic_ray(GR24_FACET, 1, 2), basic_ray(GR58_FACET, 1, 3)]
    for f in enumerate_facets(2, 3):
        rays.extend(basic_rays(f))
    for ray in rays:
        _require(is_F_ray(ray, N_max=3), f"{ray.weights} is not rigid")
    return {"rays": len(rays)}


def _jump(x, j: int, a: int) -> Fraction:
    return x[j - 1][a - 2] - x[j - 1][a - 1]


def _random_combo(rng: random.Random, vectors, zero):
    out = [list(v) for v in zero]
    for v in vectors:
        c = Fraction(rng.randint(0, 5), rng.randint(1, 3))
        for i, vi in enumerate(v):
            for a, t in enumerate(vi):
                out[i][a] += c * t
    return tuple(tuple(r) for r in out)


def check_facet_structure(n_max: int = 3, samples: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    checked = 0
    for n in range(2, n_max + 1):
        rays = all_extremal_rays(n, 3)
        zero = ((Fraction(0),) * n,) * 3
        for f in enumerate_facets(n, 3):
            pairs = type1_pairs(f)
            basics = basic_rays(f)
            flat = [[v for xi in b.direction for v in xi] for b in basics]
            _require(rank(flat) == len(pairs), f"basic rays of {f} dependent")
            for b, (j0, a0) in zip(basics, pairs):
                for j, a in pairs:
                    want = 1 if (j, a) == (j0, a0) else 0
                    got = b.weights[j - 1][a - 2] - b.weights[j - 1][a - 1]
                    _require(got == want, f"jump {got} at {(j, a)} for {b.weights}")
            on = [r.direction for r in rays if on_facet(f, r.direction)]
            for _ in range(samples):
                z = _random_combo(rng, rng.sample(on, rng.randint(1, len(on))), zero)
                coeffs = [_jump(z, j, a) / _jump(b.direction, j, a) for b, (j, a) in zip(basics, pairs)]
                _require(all(c >= 0 for c in coeffs), "negative basic coefficient")
                rest = [list(zi) for zi in z]
                for c, b in zip(coeffs, basics):
                    for i, bi in enumerate(b.direction):
                        for a, t in enumerate(bi):
                            rest[i][a] -= c * t
                rest = tuple(tuple(r) for r in rest)
                _require(in_F2(f, rest) and on_facet(f, rest), "residual not in F_2")
                _require(is_member(rest), "residual not in the cone")
                checked += 1
    return {"points": checked}


def check_induction(n_max: int = 4, samples: int = 50, seed: int = 1) -> dict:
    rng = random.Random(seed)
    checked = 0
    for n in range(2, n_max + 1):
        for f in enumerate_facets(n, 3):
            gens = [p for _, _, p in product_cone_rays(f.r, n, 3)]
            zero = ProductPoint.zero(f.r, n, 3)
            if not gens:
                _require(induct(f, zero) == ((Fraction(0),) * n,) * 3, "zero does not induct to zero")
                continue

            def sample():
                chosen = rng.sample(gens, rng.randint(1, len(gens)))
                left = _random_combo(rng, [g.left for g in chosen], zero.left)
                # same coefficients are not needed: left and right are independent
                right = _random_combo(rng, [g.right for g in chosen], zero.right)
                return ProductPoint(left, right)

            for _ in range(samples):
                p, q = sample(), sample()
                z = induct(f, p)
                _require(on_facet(f, z) and in_F2(f, z), f"induct leaves F_2 of {f}")
                _require(is_member(z), f"induct leaves the cone on {f}")
                al, be = Fraction(rng.randint(0, 4), rng.randint(1, 3)), Fraction(rng.randint(0, 4), rng.randint(1, 3))
                comb = ProductPoint(
                    tuple(tuple(al * u + be * v for u, v in zip(a, b)) for a, b in zip(p.left, q.left)),
                    tuple(tuple(al * u + be * v for u, v in zip(a, b)) for a, b in zip(p.right, q.right)),
                )
                zq = induct(f, q)
                lin = tuple(tuple(al * u + be * v for u, v in zip(a, b)) for a, b in zip(z, zq))
                _require(induct(f, comb) == lin, f"induct not linear on {f}")
                _require(induct(f, restrict_section(f, z)) == z, f"section fails on {f}")
                checked += 1
    return {"points": checked}


def _dominant_weights(n: int, top: int):
    for parts in combinations_with_replacement(range(top, -1, -1), n - 1):
        yield tuple(parts) + (0,)


def check_oracle_equivalence(n_max: int = 4, top: int = 2) -> dict:
    """Cone membership against nonvanishing of invariants.

    Invariants can only exist when the total size is divisible by ``n``; the
    weights are scaled by the least ``N`` making that so, after which
    saturation makes the first scale decisive.
    """
    checked = 0
    for n in range(2, n_max + 1):
        ws = list(_dominant_weights(n, top))
        for triple in product(ws, repeat=3):
            size = sum(map(sum, triple))
            N = next(m for m in range(1, n + 1) if (m * size) % n == 0)
            scaled = [tuple(N * v for v in w) for w in triple]
            member = is_member([kappa(w) for w in triple])
            dim = invariant_dimension(scaled)
            _require(member == (dim > 0), f"{triple}: member={member}, dim(N={N})={dim}")
            checked += 1
    return {"tuples": checked}


def _partitions_in_box(rows: int, cols: int):
    for parts in combinations_with_replacement(range(cols, -1, -1), rows):
        yield tuple(parts)


def check_schubert_backends(max_rows: int = 4, max_cols: int = 5, n_max: int = 5) -> dict:
    products = 0
    for rows in range(1, max_rows + 1):
        for cols in range(1, max_cols + 1):
            parts = list(_partitions_in_box(rows, cols))
            for p in parts:
                for q in parts:
                    a = lr_product(p, q, rows, cols)
                    b = pieri_product(p, q, rows, cols)
                    _require(a == b, f"backends disagree on {p}*{q} in {rows}x{cols}")
                    products += 1
    triples = 0
    for n in range(2, n_max + 1):
        for r in range(1, n):
            idx = all_indices(n, r)
            for t in product(idx, repeat=3):
                c = intersection_number(*t)
                for perm in set(permutations(t)):
                    _require(intersection_number(*perm) == c, f"not symmetric at {t}")
                dual = tuple(dual_index(I) for I in t)
                _require(intersection_number(*dual) == c, f"duality fails at {t}")
                triples += 1
    return {"products": products, "triples": triples}


CHECKS: dict[str, tuple[str, float, Callable[[], dict]]] = {
    "example-1.12": ("basic ray on a Gr(2,4) facet", 1, check_gr24_basic_ray),
    "example-3.3": ("basic ray on a Gr(5,8) facet", 10, check_gr58_basic_ray),
    "sl9": ("SL(9) induced ray", 60, check_sl9),
    "n2": ("n=2, s=3 rays and facets", 1, check_n2),
    "n3": ("n=3, s=3 rays", 10, check_n3),
    "n4": ("n=4, s=3 contains ((2,1,1,0),omega_2,omega_2)", 300, check_n4),
    "rigidity": ("rigidity of basic rays for N=1,2,3", 60, check_rigidity),
    "facet-structure": ("facet = basic rays x F_2 for n<=3", None, check_facet_structure),
    "induction": ("induction properties for n<=4", 120, check_induction),
    "oracle": ("membership vs invariants for n<=4", 300, check_oracle_equivalence),
    "schubert": ("LR vs Pieri, intersection symmetries", None, check_schubert_backends),
}


def run_check(key: str) -> CheckResult:
    title, limit, fn = CHECKS[key]
    t0 = time.perf_counter()
    try:
        data = fn()
        ok, detail = True, ""
    except CheckFailed as exc:
        data, ok, detail = {}, False, str(exc)
    elapsed = time.perf_counter() - t0
    if ok and limit is not None and elapsed > limit:
        ok, detail = False, f"took {elapsed:.1f}s"
    return CheckResult(key, ok, elapsed, limit, detail or title, data)


def run_checks(only: list[str] | None = None) -> list[CheckResult]:
    keys = list(CHECKS) if not only else only
    unknown = [k for k in keys if k not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    return [run_check(k) for k in keys]


def ray_listing(n: int, s: int = 3) -> list[tuple]:
    return [r.weights for r in extremal_ray_search(n, s).rays]
