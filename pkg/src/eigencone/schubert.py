"""Schubert indices and Littlewood-Richardson calculus on Grassmannians.

A Schubert index ``I = {i_1 < ... < i_r}`` in ``[n]`` names the class
``sigma_I`` in ``H*(Gr(r, n))``.  Classes are identified with partitions in
the ``r x (n - r)`` box through ``mu_a = n - r + a - i_a``.

Two independent multiplication routines are provided: :func:`lr_multiply`
counts Littlewood-Richardson tableaux, :func:`pieri_multiply` expands the
second factor by Jacobi-Trudi and applies the Pieri rule.  They are used to
check each other.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class InvalidMoveError(ValueError):
    """Raised when ``raise_index``/``lower_index`` is applied illegally."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed the desk-scale budget."""

    def __init__(self, estimate: int, budget: int, what: str = "enumeration"):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"{what} needs about {estimate} candidate tuples, budget is {budget}"
        )


@dataclass(frozen=True, order=True)
class SchubertIndex:
    """A cardinality-``r`` subset of ``{1, ..., n}``."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", els)
        r = len(els)
        if not 1 <= r <= self.n - 1:
            raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={self.n}")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")
        if els[0] < 1 or els[-1] > self.n:
            raise ValueError(f"elements must lie in [1, {self.n}]: {els}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "SchubertIndex":
        return cls(n, tuple(sorted(elements)))

    @property
    def r(self) -> int:
        return len(self.elements)

    def __contains__(self, b: int) -> bool:
        return b in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def codim(I: SchubertIndex) -> int:
    n, r = I.n, I.r
    return sum(n - r + a - i for a, i in enumerate(I.elements, start=1))


def partition_of(I: SchubertIndex) -> Partition:
    n, r = I.n, I.r
    return tuple(n - r + a - i for a, i in enumerate(I.elements, start=1))


def index_of(mu: Sequence[int], n: int) -> SchubertIndex:
    """Inverse of :func:`partition_of` for a partition with ``r`` parts."""
    r = len(mu)
    return SchubertIndex(n, tuple(n - r + a - m for a, m in enumerate(mu, start=1)))


def transpose(mu: Sequence[int], rows: int | None = None) -> Partition:
    """Conjugate partition, padded with zeros to ``rows`` parts if given."""
    mu = [m for m in mu if m > 0]
    width = mu[0] if mu else 0
    t = [sum(1 for m in mu if m > c) for c in range(width)]
    if rows is not None:
        if len(t) > rows:
            raise ValueError(f"{tuple(mu)} has more than {rows} columns")
        t += [0] * (rows - len(t))
    return tuple(t)


def complement(mu: Sequence[int], rows: int, cols: int) -> Partition:
    """Complement of ``mu`` in the ``rows x cols`` box, rotated."""
    mu = pad(mu, rows)
    return tuple(cols - mu[rows - 1 - a] for a in range(rows))


def pad(mu: Sequence[int], rows: int) -> Partition:
    mu = tuple(mu)
    if len(mu) > rows and any(mu[rows:]):
        raise ValueError(f"{mu} has more than {rows} nonzero parts")
    return (mu + (0,) * rows)[:rows]


def dual_partition_of(I: SchubertIndex) -> Partition:
    """Transpose of the box complement of ``mu(I)``: an ``(n-r) x r`` shape."""
    n, r = I.n, I.r
    return transpose(complement(partition_of(I), r, n - r), rows=n - r)


def permutation_w(I: SchubertIndex) -> tuple[int, ...]:
    """Images ``(w(1), ..., w(n))``: elements of ``I`` then its complement."""
    rest = [j for j in range(1, I.n + 1) if j not in I.elements]
    return I.elements + tuple(rest)


def raise_index(I: SchubertIndex, b: int) -> SchubertIndex:
    """``I^{+,b} = (I - {b}) u {b-1}``; codimension goes up by one."""
    if b not in I.elements or b <= 1 or (b - 1) in I.elements:
        raise InvalidMoveError(f"cannot raise {I} at b={b}")
    return SchubertIndex.of(I.n, [e for e in I.elements if e != b] + [b - 1])


def lower_index(I: SchubertIndex, b: int) -> SchubertIndex:
    """``I^{-,b} = (I - {b}) u {b+1}``; codimension goes down by one."""
    if b not in I.elements or b >= I.n or (b + 1) in I.elements:
        raise InvalidMoveError(f"cannot lower {I} at b={b}")
    return SchubertIndex.of(I.n, [e for e in I.elements if e != b] + [b + 1])


def dual_index(I: SchubertIndex) -> SchubertIndex:
    """Grassmann dual ``{n+1-j : j not in I}`` in ``Gr(n-r, n)``."""
    n = I.n
    return SchubertIndex.of(n, [n + 1 - j for j in range(1, n + 1) if j not in I.elements])


def all_indices(n: int, r: int) -> list[SchubertIndex]:
    return [SchubertIndex(n, c) for c in combinations(range(1, n + 1), r)]


# --------------------------------------------------------------------------
# Littlewood-Richardson tableaux


def _strip(mu: Sequence[int]) -> Partition:
    mu = tuple(mu)
    k = len(mu)
    while k and mu[k - 1] == 0:
        k -= 1
    return mu[:k]


def _lr_fillings(mu, nu, max_rows, max_cols, target) -> Iterator[Partition]:
    """Yield the outer shape of every LR tableau of content ``nu`` on ``mu``.

    Rows of the result are filled top to bottom; ``counts[i][k]`` is the
    number of letters ``k+1`` in row ``i``.  With ``target`` set, only
    tableaux of that outer shape are produced.
    """
    mu = _strip(mu)
    nu = _strip(nu)
    K = len(nu)
    depth = len(mu) + K
    if max_rows is not None:
        depth = min(depth, max_rows)
    mu_rows = list(mu) + [0] * (depth - len(mu))
    if target is not None:
        if len(target) > depth or any(t < m for t, m in zip(list(target) + [0] * depth, mu_rows)):
            return
        tgt = list(target) + [0] * (depth - len(target))
    total_nu = sum(nu)

    cum = [0] * K  # letters k+1 placed in rows so far
    prev_row = [0] * K  # counts in the previous row
    shape: list[int] = []

    def rec(i: int, placed: int):
        if placed == total_nu:
            rest = mu_rows[i:]
            if target is not None and tgt[i:] != rest:
                return
            if shape and rest and rest[0] > shape[-1]:
                return
            yield tuple(shape) + tuple(rest)
            return
        if i == depth:
            return
        m_i = mu_rows[i]
        upper = shape[-1] if i > 0 else (max_cols if max_cols is not None else None)
        above_mu = mu_rows[i - 1] if i > 0 else None
        want = tgt[i] - m_i if target is not None else None
        row = [0] * K
        kmax = min(i + 1, K)

        def fill(k: int, width: int):
            # width: boxes of this row filled with letters <= k
            if k == kmax:
                length = m_i + width
                if upper is not None and length > upper:
                    return
                if want is not None and width != want:
                    return
                saved = prev_row[:]
                for kk in range(K):
                    cum[kk] += row[kk]
                    prev_row[kk] = row[kk]
                shape.append(length)
                yield from rec(i + 1, placed + width)
                shape.pop()
                for kk in range(K):
                    cum[kk] -= row[kk]
                prev_row[:] = saved
                return
            hi = nu[k] - cum[k]
            if k > 0:
                hi = min(hi, cum[k - 1] - cum[k])
            if want is not None:
                hi = min(hi, want - width)
            if upper is not None:
                hi = min(hi, upper - m_i - width)
            if i > 0:
                # letters <= k+1 in row i must sit under mu or letters <= k in row i-1
                hi = min(hi, above_mu + sum(prev_row[:k]) - m_i - width)
            for c in range(hi, -1, -1):
                row[k] = c
                yield from fill(k + 1, width + c)
            row[k] = 0

        yield from fill(0, 0)

    yield from rec(0, 0)


def _box_ok(mu: Sequence[int], rows, cols) -> bool:
    mu = _strip(mu)
    if rows is not None and len(mu) > rows:
        return False
    if cols is not None and mu and mu[0] > cols:
        return False
    return True


@lru_cache(maxsize=None)
def _lr_product_cached(mu: Partition, nu: Partition, rows, cols) -> tuple:
    out: dict[Partition, int] = defaultdict(int)
    for lam in _lr_fillings(mu, nu, rows, cols, None):
        out[_strip(lam)] += 1
    return tuple(sorted(out.items()))


def lr_product(mu, nu, rows: int | None = None, cols: int | None = None) -> dict[Partition, int]:
    """``s_mu * s_nu`` keeping only shapes with at most ``rows`` rows and
    ``cols`` columns.  Keys are stripped of trailing zeros."""
    mu, nu = _strip(mu), _strip(nu)
    if not (_box_ok(mu, rows, cols) and _box_ok(nu, rows, cols)):
        return {}
    if sum(nu) > sum(mu) or (sum(nu) == sum(mu) and nu > mu):
        mu, nu = nu, mu
    return dict(_lr_product_cached(mu, nu, rows, cols))


def lr_coefficient(lam, mu, nu, rows: int | None = None) -> int:
    """The single Littlewood-Richardson number ``c^lam_{mu, nu}``."""
    lam, mu, nu = _strip(lam), _strip(mu), _strip(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if rows is not None and len(lam) > rows:
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    if len(nu) > len(lam) or any(m > l for m, l in zip(nu, lam)):
        return 0
    # fewer letters to place when the larger partition sits inside
    if sum(nu) > sum(mu):
        mu, nu = nu, mu
    return sum(1 for _ in _lr_fillings(mu, nu, len(lam), None, lam))


class SchubertClassVector(dict):
    """Map ``partition -> coefficient`` for one ``rows x cols`` box."""

    def __init__(self, rows: int, cols: int, terms=()):
        super().__init__()
        self.rows = rows
        self.cols = cols
        for p, c in dict(terms).items():
            if c:
                self[pad(p, rows)] = c

    def coefficient(self, mu) -> int:
        return self.get(pad(mu, self.rows), 0)

    def __repr__(self):
        return f"SchubertClassVector({self.rows}x{self.cols}, {dict(self)})"


def _check_box(p, q, rows, cols):
    for x in (p, q):
        if len(_strip(x)) > rows or (_strip(x) and x[0] > cols):
            raise ValueError(f"partition {tuple(x)} does not fit the {rows}x{cols} box")
        if any(a < b for a, b in zip(x, x[1:])) or any(v < 0 for v in x):
            raise ValueError(f"{tuple(x)} is not a partition")


def lr_multiply(p, q, rows: int, cols: int) -> SchubertClassVector:
    """Box-truncated product ``sigma_p * sigma_q`` via LR tableau counting."""
    _check_box(p, q, rows, cols)
    return SchubertClassVector(rows, cols, lr_product(p, q, rows, cols))


# --------------------------------------------------------------------------
# Pieri backend


def _horizontal_strips(mu: Partition, k: int, rows, cols) -> Iterator[Partition]:
    """All ``lam`` with ``lam / mu`` a horizontal strip of size ``k``."""
    mu = list(_strip(mu))
    depth = len(mu) + 1
    if rows is not None:
        depth = min(depth, rows)
    mu += [0] * (depth - len(mu))

    def rec(i, left, acc):
        if i == depth:
            if left == 0:
                yield _strip(tuple(acc))
            return
        cap = (mu[i - 1] if i > 0 else (cols if cols is not None else mu[0] + left)) - mu[i]
        for a in range(min(cap, left), -1, -1):
            acc.append(mu[i] + a)
            yield from rec(i + 1, left - a, acc)
            acc.pop()

    if depth == 0:
        if k == 0:
            yield ()
        return
    yield from rec(0, k, [])


def pieri_h(vec: dict, k: int, rows, cols) -> dict:
    """Multiply a Schur expansion by the complete symmetric function ``h_k``."""
    out: dict[Partition, int] = defaultdict(int)
    if k < 0:
        return {}
    for mu, c in vec.items():
        for lam in _horizontal_strips(mu, k, rows, cols):
            out[lam] += c
    return {p: c for p, c in out.items() if c}


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def pieri_product(p, q, rows=None, cols=None) -> dict[Partition, int]:
    """``s_p * s_q`` with ``s_q = det(h_{q_i - i + j})`` expanded by Pieri."""
    q = _strip(q)
    total: dict[Partition, int] = defaultdict(int)
    start = {_strip(p): 1}
    m = len(q)
    for perm in permutations(range(m)):
        degrees = [q[i] - i + perm[i] for i in range(m)]
        if any(d < 0 for d in degrees):
            continue
        vec = start
        for d in degrees:
            vec = pieri_h(vec, d, rows, cols)
            if not vec:
                break
        sign = _perm_sign(perm)
        for lam, c in vec.items():
            total[lam] += sign * c
    return {lam: c for lam, c in total.items() if c}


def pieri_multiply(p, q, rows: int, cols: int) -> SchubertClassVector:
    _check_box(p, q, rows, cols)
    return SchubertClassVector(rows, cols, pieri_product(p, q, rows, cols))


# --------------------------------------------------------------------------
# Intersection numbers


def _shared_box(indices: Sequence[SchubertIndex]) -> tuple[int, int]:
    if not indices:
        raise ValueError("need at least one Schubert index")
    n, r = indices[0].n, indices[0].r
    for I in indices:
        if (I.n, I.r) != (n, r):
            raise ValueError(f"mixed Grassmannians: Gr({r},{n}) and Gr({I.r},{I.n})")
    return r, n


def intersection_number(*indices: SchubertIndex) -> int:
    """Coefficient of the point class in ``sigma_{I_1} ... sigma_{I_s}``."""
    if len(indices) == 1 and not isinstance(indices[0], SchubertIndex):
        indices = tuple(indices[0])
    r, n = _shared_box(indices)
    k = n - r
    parts = [partition_of(I) for I in indices]
    if sum(map(sum, parts)) != r * k:
        return 0
    if len(parts) == 1:
        return 1 if parts[0] == (k,) * r else 0
    # fold all but the last factor, then pair against its complement
    vec = {_strip(parts[0]): 1}
    for p in parts[1:-1]:
        nxt: dict[Partition, int] = defaultdict(int)
        for mu, c in vec.items():
            for lam, d in lr_product(mu, p, r, k).items():
                nxt[lam] += c * d
        vec = nxt
    want = _strip(complement(parts[-1], r, k))
    return vec.get(want, 0)


def candidate_estimate(n: int, s: int) -> int:
    return comb(n, n // 2) ** s


def enumerate_point_tuples(n: int, s: int, r: int) -> list[tuple[SchubertIndex, ...]]:
    """All ``s``-tuples in ``Gr(r, n)`` with intersection number exactly one,
    in lexicographic order."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    k = n - r
    top = r * k
    idx = all_indices(n, r)
    by_part = {partition_of(I): I for I in idx}
    parts = {I: partition_of(I) for I in idx}
    out = []

    def rec(prefix, vec, deg):
        if len(prefix) == s - 1:
            for lam, c in vec.items():
                if c != 1:
                    continue
                last = complement(lam, r, k)
                out.append(tuple(prefix) + (by_part[last],))
            return
        for I in idx:
            p = parts[I]
            d = deg + sum(p)
            if d > top:
                continue
            if not prefix:
                nvec = {_strip(p): 1}
            else:
                nvec = defaultdict(int)
                for mu, c in vec.items():
                    for lam, e in lr_product(mu, p, r, k).items():
                        nvec[lam] += c * e
                nvec = {a: b for a, b in nvec.items() if b}
            if nvec:
                prefix.append(I)
                rec(prefix, nvec, d)
                prefix.pop()

    if s == 1:
        return [(index_of((k,) * r, n),)]
    rec([], {}, 0)
    out.sort()
    return out
