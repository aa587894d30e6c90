"""Dominant weights of SL(n), their trace-zero images, and invariant counts."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from .ratlinalg import as_rational, primitive
from .schubert import lr_coefficient, lr_product

Weight = tuple[int, ...]
KappaPoint = tuple[Fraction, ...]
KappaTuple = tuple[KappaPoint, ...]


def normalize_weight(lam: Sequence[int]) -> Weight:
    """Shift an integer weakly decreasing vector so that its last entry is 0."""
    lam = [int(v) for v in lam]
    if not lam:
        raise ValueError("empty weight")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"weight {tuple(lam)} is not weakly decreasing")
    return tuple(v - lam[-1] for v in lam)


def kappa(lam: Sequence[int]) -> KappaPoint:
    n = len(lam)
    shift = Fraction(sum(lam), n)
    return tuple(Fraction(v) - shift for v in lam)


def is_dominant(x: Sequence) -> bool:
    return all(a >= b for a, b in zip(x, x[1:]))


def weight_of_kappa(x: Sequence) -> tuple[Weight, Fraction]:
    """Primitive dominant weight along ``x`` and the scale with
    ``kappa(weight) == scale * x``."""
    x = [as_rational(v) for v in x]
    if sum(x) != 0:
        raise ValueError("kappa point must have trace zero")
    if not is_dominant(x):
        raise ValueError(f"{tuple(map(str, x))} is not dominant")
    diff = [v - x[-1] for v in x]
    if all(v == 0 for v in diff):
        return tuple(0 for _ in x), Fraction(1)
    lam = tuple(primitive(diff))
    scale = Fraction(lam[0]) / diff[0] if diff[0] else Fraction(1)
    return lam, scale


def fundamental_decomposition(lam: Sequence[int]) -> dict[int, int]:
    """Coefficients of ``omega_b``: ``lam^(b) - lam^(b+1)``, zeros omitted."""
    lam = normalize_weight(lam)
    return {b: lam[b - 1] - lam[b] for b in range(1, len(lam)) if lam[b - 1] != lam[b]}


def fundamental_weight(b: int, n: int) -> Weight:
    return tuple(1 if a < b else 0 for a in range(n))


def dual_weight(lam: Sequence[int]) -> Weight:
    """Highest weight of the dual representation."""
    lam = normalize_weight(lam)
    n = len(lam)
    return tuple(lam[0] - lam[n - 1 - a] for a in range(n))


def dual_kappa(x: Sequence) -> KappaPoint:
    return tuple(-v for v in reversed(tuple(x)))


def invariant_dimension(weights: Sequence[Sequence[int]], n: int | None = None) -> int:
    """``dim (V_{l_1} x ... x V_{l_s})^{SL(n)}``.

    GL(n) Littlewood-Richardson expansion of the first ``s - 1`` factors,
    then the multiplicity of the dual of the last factor twisted by a power of
    the determinant.
    """
    ws = [normalize_weight(w) for w in weights]
    if n is None:
        n = len(ws[0])
    if any(len(w) != n for w in ws):
        raise ValueError("all weights must have n entries")
    if len(ws) == 1:
        return 1 if all(v == 0 for v in ws[0]) else 0
    total = sum(map(sum, ws[:-1]))
    last = dual_weight(ws[-1])
    excess = total - sum(last)
    if excess < 0 or excess % n:
        return 0
    target = tuple(v + excess // n for v in last)
    if len(ws) == 2:
        return 1 if normalize_weight(ws[0]) == last else 0
    vec: dict = {_strip(ws[0]): 1}
    for w in ws[1:-2]:
        nxt: dict = defaultdict(int)
        for mu, c in vec.items():
            for lam, d in lr_product(mu, w, rows=n).items():
                nxt[lam] += c * d
        vec = nxt
    second_last = ws[-2]
    return sum(c * lr_coefficient(target, mu, second_last, rows=n) for mu, c in vec.items())


def _strip(w):
    w = tuple(w)
    k = len(w)
    while k and w[k - 1] == 0:
        k -= 1
    return w[:k]
