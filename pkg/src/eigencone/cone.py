"""The eigencone as an inequality system.

Points are ``s``-tuples of trace-zero rational ``n``-vectors.  The cone is
cut out inside the product of Weyl chambers by one inequality per tuple of
Schubert indices whose classes multiply to the point class.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratlinalg import as_rational
from .schubert import (
    BudgetExceededError,
    SchubertIndex,
    candidate_estimate,
    codim,
    enumerate_point_tuples,
    intersection_number,
)
from .weights import KappaTuple, is_dominant

DEFAULT_BUDGET = 10**8


class DomainError(ValueError):
    """Input outside the domain of a cone operation."""


def default_budget() -> int:
    env = os.environ.get("EIGENCONE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(n: int, s: int, budget: int | None = None) -> None:
    budget = default_budget() if budget is None else budget
    estimate = candidate_estimate(n, s)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget, f"Gamma_{n}({s})")


@dataclass(frozen=True, order=True)
class FacetDescriptor:
    """``(r, I_1, ..., I_s)`` with ``sigma_{I_1} ... sigma_{I_s} = [pt]``."""

    r: int
    indices: tuple[SchubertIndex, ...]

    @property
    def n(self) -> int:
        return self.indices[0].n

    @property
    def s(self) -> int:
        return len(self.indices)

    @classmethod
    def from_sets(cls, n: int, *sets: Sequence[int]) -> "FacetDescriptor":
        indices = tuple(SchubertIndex.of(n, I) for I in sets)
        return cls(indices[0].r, indices)

    def validate(self) -> "FacetDescriptor":
        if any(I.r != self.r or I.n != self.n for I in self.indices):
            raise DomainError(f"facet {self} mixes Grassmannians")
        if sum(map(codim, self.indices)) != self.r * (self.n - self.r):
            raise DomainError(f"facet {self} has the wrong total codimension")
        if intersection_number(*self.indices) != 1:
            raise DomainError(f"facet {self} does not have intersection number one")
        return self

    def __str__(self):
        return f"r={self.r};" + ";".join(
            f"I{j}={','.join(map(str, I))}" for j, I in enumerate(self.indices, start=1)
        )


@dataclass(frozen=True)
class InequalitySystem:
    n: int
    s: int
    facets: tuple[FacetDescriptor, ...]

    @property
    def walls(self) -> list[tuple[int, int]]:
        return [(i, a) for i in range(1, self.s + 1) for a in range(1, self.n)]


_facet_cache: dict[tuple[int, int], tuple[FacetDescriptor, ...]] = {}
_facet_lock = threading.Lock()


def enumerate_facets(n: int, s: int, budget: int | None = None) -> tuple[FacetDescriptor, ...]:
    """Regular facets of ``Gamma_n(s)`` in canonical order (cached)."""
    if n < 2 or s < 3:
        raise DomainError(f"need n >= 2 and s >= 3, got n={n}, s={s}")
    check_budget(n, s, budget)
    key = (n, s)
    cached = _facet_cache.get(key)
    if cached is not None:
        return cached
    facets = []
    for r in range(1, n):
        facets.extend(FacetDescriptor(r, t) for t in enumerate_point_tuples(n, s, r))
    facets = tuple(facets)
    with _facet_lock:
        return _facet_cache.setdefault(key, facets)


def inequality_system(n: int, s: int, budget: int | None = None) -> InequalitySystem:
    return InequalitySystem(n, s, enumerate_facets(n, s, budget))


def as_kappa_tuple(x) -> KappaTuple:
    return tuple(tuple(as_rational(v) for v in xi) for xi in x)


def _check_shape(f: FacetDescriptor, x: KappaTuple) -> None:
    if len(x) != f.s or any(len(xi) != f.n for xi in x):
        raise DomainError(f"point shape does not match facet {f}")


def klyachko_value(f: FacetDescriptor, x) -> Fraction:
    """``sum_j sum_{a in I_j} x_j^(a)``; the cone requires this to be <= 0."""
    x = as_kappa_tuple(x)
    _check_shape(f, x)
    return sum((x[j][a - 1] for j, I in enumerate(f.indices) for a in I), Fraction(0))


def check_point(x, n: int | None = None, s: int | None = None) -> KappaTuple:
    """Validate a point of the ambient space and the Weyl chambers."""
    x = as_kappa_tuple(x)
    if s is not None and len(x) != s:
        raise DomainError(f"expected {s} components, got {len(x)}")
    n = len(x[0]) if n is None else n
    for i, xi in enumerate(x, start=1):
        if len(xi) != n:
            raise DomainError(f"component {i} has {len(xi)} entries, expected {n}")
        if sum(xi) != 0:
            raise DomainError(f"component {i} is not trace zero")
        if not is_dominant(xi):
            raise DomainError(f"component {i} is not dominant: {[str(v) for v in xi]}")
    return x


def violated_facets(x, budget: int | None = None) -> list[tuple[FacetDescriptor, Fraction]]:
    x = check_point(x)
    out = []
    for f in enumerate_facets(len(x[0]), len(x), budget):
        v = klyachko_value(f, x)
        if v > 0:
            out.append((f, v))
    return out


def is_member(x, budget: int | None = None) -> bool:
    x = check_point(x)
    return all(klyachko_value(f, x) <= 0 for f in enumerate_facets(len(x[0]), len(x), budget))


def on_facet(f: FacetDescriptor, x) -> bool:
    return klyachko_value(f, x) == 0


def type1_pairs(f: FacetDescriptor) -> list[tuple[int, int]]:
    """Pairs ``(j0, a0)``, ``a0 in I_j0``, ``a0 > 1``, ``a0 - 1`` not in ``I_j0``."""
    return [
        (j, a)
        for j, I in enumerate(f.indices, start=1)
        for a in I
        if a > 1 and (a - 1) not in I
    ]


def in_F2(f: FacetDescriptor, x) -> bool:
    """All gaps ``x_j^(a-1) - x_j^(a)`` at type-I pairs vanish."""
    x = as_kappa_tuple(x)
    _check_shape(f, x)
    return all(x[j - 1][a - 1] == x[j - 1][a - 2] for j, a in type1_pairs(f))


def wall_tight_set(x) -> list[tuple[int, int]]:
    x = as_kappa_tuple(x)
    return [
        (i, a)
        for i, xi in enumerate(x, start=1)
        for a in range(1, len(xi))
        if xi[a - 1] == xi[a]
    ]


def tight_facets(x, budget: int | None = None) -> list[FacetDescriptor]:
    x = check_point(x)
    return [f for f in enumerate_facets(len(x[0]), len(x), budget) if klyachko_value(f, x) == 0]
