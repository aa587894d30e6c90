"""Extremal rays: basic divisor rays, induction from smaller cones, recursion."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cone import (
    DomainError,
    FacetDescriptor,
    as_kappa_tuple,
    check_point,
    enumerate_facets,
    in_F2,
    is_member,
    klyachko_value,
    on_facet,
    type1_pairs,
    wall_tight_set,
)
from .ratlinalg import nullspace_dimension, primitive
from .schubert import (
    InvalidMoveError,
    SchubertIndex,
    codim,
    intersection_number,
    lower_index,
    permutation_w,
    raise_index,
)
from .weights import KappaTuple, Weight, fundamental_weight, invariant_dimension, kappa


@dataclass(frozen=True)
class Provenance:
    """Where a ray came from.

    ``kind`` is ``"basic"`` (``facet`` and ``pair`` set), ``"induced"``
    (``facet`` and ``source`` set; ``source`` is ``("left"|"right", weights)``)
    or ``"imported"``.
    """

    kind: str
    facet: FacetDescriptor | None = None
    pair: tuple[int, int] | None = None
    source: tuple | None = None

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.facet is not None:
            out["facet"] = str(self.facet)
        if self.pair is not None:
            out["j0"], out["a0"] = self.pair
        if self.source is not None:
            side, weights = self.source
            out["source"] = {"factor": side, "weights": [list(w) for w in weights]}
        return out


@dataclass(frozen=True)
class Ray:
    direction: KappaTuple
    weights: tuple[Weight, ...]
    provenance: Provenance = field(default=Provenance("imported"), compare=False)

    @property
    def n(self) -> int:
        return len(self.weights[0])

    @property
    def s(self) -> int:
        return len(self.weights)


def primitive_weights(x) -> tuple[Weight, ...]:
    """Integral dominant weight tuple along ``x`` with joint gcd one."""
    x = as_kappa_tuple(x)
    shifted = [[v - xi[-1] for v in xi] for xi in x]
    flat = primitive([v for row in shifted for v in row])
    n = len(x[0])
    return tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(len(x)))


def make_ray(x, provenance: Provenance | None = None) -> Ray:
    x = as_kappa_tuple(x)
    if all(v == 0 for xi in x for v in xi):
        raise DomainError("the zero tuple does not span a ray")
    weights = primitive_weights(x)
    return Ray(tuple(kappa(w) for w in weights), weights, provenance or Provenance("imported"))


def ray_from_weights(weights: Sequence[Sequence[int]], provenance: Provenance | None = None) -> Ray:
    return make_ray([kappa(w) for w in weights], provenance)


# --------------------------------------------------------------------------
# basic divisors


def divisor_weights(A: Sequence[SchubertIndex]) -> tuple[Weight, ...]:
    """Integral weights of the divisor class attached to ``A_1, ..., A_s``.

    The coefficient of ``omega_b`` in the ``i``-th weight is the intersection
    number obtained by replacing ``A_i`` with ``A_i^{-,b}``, for each ``b`` in
    ``A_i`` with ``b + 1`` outside ``A_i``.
    """
    A = tuple(A)
    n, r = A[0].n, A[0].r
    if sum(map(codim, A)) != r * (n - r) + 1:
        raise DomainError("divisor data needs total codimension r(n-r)+1")
    out = []
    for i, Ai in enumerate(A):
        lam = [0] * n
        for b in Ai:
            if b < n and (b + 1) not in Ai:
                lowered = A[:i] + (lower_index(Ai, b),) + A[i + 1 :]
                c = intersection_number(*lowered)
                if c:
                    omega = fundamental_weight(b, n)
                    lam = [u + c * v for u, v in zip(lam, omega)]
        out.append(tuple(lam))
    return tuple(out)


def divisor_class(A: Sequence[SchubertIndex]) -> KappaTuple:
    return tuple(kappa(w) for w in divisor_weights(A))


def basic_divisor_data(f: FacetDescriptor, j0: int, a0: int) -> tuple[SchubertIndex, ...]:
    if (j0, a0) not in type1_pairs(f):
        raise InvalidMoveError(f"({j0}, {a0}) is not a type-I pair of {f}")
    I = f.indices
    return I[: j0 - 1] + (raise_index(I[j0 - 1], a0),) + I[j0:]


def basic_ray(f: FacetDescriptor, j0: int, a0: int) -> Ray:
    A = basic_divisor_data(f, j0, a0)
    weights = divisor_weights(A)
    return make_ray([kappa(w) for w in weights], Provenance("basic", f, (j0, a0)))


def basic_rays(f: FacetDescriptor) -> list[Ray]:
    return [basic_ray(f, j, a) for j, a in type1_pairs(f)]


# --------------------------------------------------------------------------
# induction


@dataclass(frozen=True)
class ProductPoint:
    """A point of ``Gamma_r(s) x Gamma_{n-r}(s)``: two tuples of trace-zero
    vectors of lengths ``r`` and ``n - r``."""

    left: KappaTuple
    right: KappaTuple

    def __post_init__(self):
        object.__setattr__(self, "left", as_kappa_tuple(self.left))
        object.__setattr__(self, "right", as_kappa_tuple(self.right))
        if len(self.left) != len(self.right):
            raise DomainError("left and right factors need the same number of components")
        for part in (self.left, self.right):
            for xi in part:
                if sum(xi) != 0:
                    raise DomainError("product point components must be trace zero")

    @classmethod
    def zero(cls, r: int, n: int, s: int) -> "ProductPoint":
        z = Fraction(0)
        return cls(((z,) * r,) * s, ((z,) * (n - r),) * s)

    def check_members(self) -> None:
        for name, part in (("left", self.left), ("right", self.right)):
            if len(part[0]) > 1 and not is_member(part):
                raise DomainError(f"{name} factor is not in its eigencone")


def _check_product(f: FacetDescriptor, p: ProductPoint) -> None:
    if len(p.left) != f.s or any(len(x) != f.r for x in p.left):
        raise DomainError(f"left factor must be {f.s} vectors of length {f.r}")
    if any(len(x) != f.n - f.r for x in p.right):
        raise DomainError(f"right factor must be {f.s} vectors of length {f.n - f.r}")


def naive_induct(f: FacetDescriptor, p: ProductPoint) -> KappaTuple:
    """Place ``(left_i, right_i)`` along ``w_{I_i}``: ``y_i^(w(a)) = x_i^(a)``."""
    _check_product(f, p)
    out = []
    for I, lft, rgt in zip(f.indices, p.left, p.right):
        x = tuple(lft) + tuple(rgt)
        w = permutation_w(I)
        y = [Fraction(0)] * f.n
        for a, wa in enumerate(w):
            y[wa - 1] = x[a]
        out.append(tuple(y))
    return tuple(out)


@dataclass(frozen=True)
class InductionTerm:
    component: int
    b: int
    gap: Fraction
    divisor: KappaTuple


def induction_terms(f: FacetDescriptor, p: ProductPoint) -> tuple[KappaTuple, list[InductionTerm]]:
    """Naive induction and the divisor corrections that move it into the cone.

    For each component ``i`` and each ``b`` in ``I_i`` with ``b - 1`` outside
    ``I_i`` the correction is ``(y_i^(b) - y_i^(b-1))`` times the class of the
    basic divisor for ``(i, b)``.
    """
    y = naive_induct(f, p)
    terms = []
    for i, b in type1_pairs(f):
        gap = y[i - 1][b - 1] - y[i - 1][b - 2]
        if gap:
            D = divisor_class(basic_divisor_data(f, i, b))
            terms.append(InductionTerm(i, b, gap, D))
    return y, terms


def induct(f: FacetDescriptor, p: ProductPoint) -> KappaTuple:
    y, terms = induction_terms(f, p)
    out = [list(yi) for yi in y]
    for t in terms:
        for i, Di in enumerate(t.divisor):
            for a, v in enumerate(Di):
                out[i][a] += t.gap * v
    return tuple(tuple(row) for row in out)


def restrict_section(f: FacetDescriptor, z) -> ProductPoint:
    """Right inverse of :func:`induct` on the face ``F_2`` of ``f``.

    Reads ``z_i`` at positions ``w_{I_i}(1..r)`` and ``w_{I_i}(r+1..n)`` and
    recentres each block to trace zero.
    """
    z = as_kappa_tuple(z)
    if not on_facet(f, z) or not in_F2(f, z):
        raise DomainError(f"point is not on the face F_2 of {f}")
    left, right = [], []
    for I, zi in zip(f.indices, z):
        w = permutation_w(I)
        block = [zi[wa - 1] for wa in w]
        for part, out in ((block[: f.r], left), (block[f.r :], right)):
            mean = sum(part, Fraction(0)) / len(part)
            out.append(tuple(v - mean for v in part))
    return ProductPoint(tuple(left), tuple(right))


# --------------------------------------------------------------------------
# extremality


def tight_rows(x, budget: int | None = None) -> list[list[Fraction]]:
    """Equations active at ``x``: traces, tight facets, tight chamber walls."""
    x = check_point(x)
    s, n = len(x), len(x[0])
    width = s * n
    rows = []
    for i in range(s):
        row = [Fraction(0)] * width
        for a in range(n):
            row[i * n + a] = Fraction(1)
        rows.append(row)
    for f in enumerate_facets(n, s, budget):
        if klyachko_value(f, x) == 0:
            row = [Fraction(0)] * width
            for j, I in enumerate(f.indices):
                for a in I:
                    row[j * n + a - 1] = Fraction(1)
            rows.append(row)
    for i, a in wall_tight_set(x):
        row = [Fraction(0)] * width
        row[(i - 1) * n + a - 1] = Fraction(1)
        row[(i - 1) * n + a] = Fraction(-1)
        rows.append(row)
    return rows


def face_dimension(x, budget: int | None = None) -> int:
    """Dimension of the smallest face of the cone containing ``x``."""
    x = check_point(x)
    return nullspace_dimension(tight_rows(x, budget), len(x) * len(x[0]))


def is_extremal(x, budget: int | None = None) -> bool:
    x = check_point(as_kappa_tuple(x.direction if isinstance(x, Ray) else x))
    if all(v == 0 for xi in x for v in xi):
        raise DomainError("zero is not a ray")
    if not is_member(x, budget):
        raise DomainError("point is not in the eigencone")
    return face_dimension(x, budget) == 1


def is_F_ray(ray: Ray, N_max: int = 3) -> bool:
    """Finite certificate: the invariant space of ``N * weights`` is
    one-dimensional for ``N = 1..N_max``."""
    for N in range(1, N_max + 1):
        scaled = [tuple(N * v for v in w) for w in ray.weights]
        if invariant_dimension(scaled) != 1:
            return False
    return True


# --------------------------------------------------------------------------
# recursion


def _is_zero(x) -> bool:
    return all(v == 0 for xi in x for v in xi)


def product_cone_rays(r: int, n: int, s: int, budget: int | None = None) -> list[tuple[str, Ray, ProductPoint]]:
    """Extremal rays of ``Gamma_r(s) x Gamma_{n-r}(s)``: a ray of one factor
    paired with zero in the other."""
    out = []
    z_left = ((Fraction(0),) * r,) * s
    z_right = ((Fraction(0),) * (n - r),) * s
    for e in all_extremal_rays(r, s, budget):
        out.append(("left", e, ProductPoint(e.direction, z_right)))
    for e in all_extremal_rays(n - r, s, budget):
        out.append(("right", e, ProductPoint(z_left, e.direction)))
    return out


def facet_ray_candidates(f: FacetDescriptor, budget: int | None = None) -> list[Ray]:
    """The basic rays of ``f`` and the nonzero inductions of product-cone rays."""
    out = basic_rays(f)
    for side, e, p in product_cone_rays(f.r, f.n, f.s, budget):
        y = induct(f, p)
        if _is_zero(y):
            continue
        out.append(make_ray(y, Provenance("induced", f, source=(side, e.weights))))
    return out


@dataclass(frozen=True)
class RaySearch:
    n: int
    s: int
    rays: tuple[Ray, ...]
    rejected: tuple[Ray, ...]


_search_cache: dict[tuple[int, int], RaySearch] = {}
_search_lock = threading.Lock()


def extremal_ray_search(n: int, s: int, budget: int | None = None) -> RaySearch:
    """All extremal rays of ``Gamma_n(s)`` plus the candidates that were
    generated but turned out not to be extremal."""
    key = (n, s)
    if key in _search_cache:
        return _search_cache[key]
    if n == 1:
        result = RaySearch(n, s, (), ())
    else:
        seen: dict[tuple, Ray] = {}
        for f in enumerate_facets(n, s, budget):
            for ray in facet_ray_candidates(f, budget):
                seen.setdefault(ray.weights, ray)
        rays, rejected = [], []
        for key_w in sorted(seen):
            ray = seen[key_w]
            (rays if is_extremal(ray.direction, budget) else rejected).append(ray)
        result = RaySearch(n, s, tuple(rays), tuple(rejected))
    with _search_lock:
        return _search_cache.setdefault(key, result)


def all_extremal_rays(n: int, s: int, budget: int | None = None) -> list[Ray]:
    return list(extremal_ray_search(n, s, budget).rays)
