"""Exact linear algebra over prime fields GF(p).

Vectors are tuples of ints reduced mod p, matrices are tuples of such
rows, and a subspace is always stored as the unique reduced row echelon
basis of its row space, so equal subspaces compare equal structurally.

For p == 2 every row operation runs bit-packed (one Python int per row,
bit j = column j, pivot = least significant set bit).  The packed and
generic paths compute the same canonical objects and are differential
tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Vec = tuple[int, ...]


def _inv(a: int, p: int) -> int:
    return pow(a, -1, p)


def normalize_vec(v: Sequence[int], p: int) -> Vec:
    return tuple(c % p for c in v)


# ---------------------------------------------------------------------------
# packed GF(2) kernel of the module


def pack_vec(v: Sequence[int]) -> int:
    m = 0
    for j, c in enumerate(v):
        if c & 1:
            m |= 1 << j
    return m


def unpack_vec(m: int, n: int) -> Vec:
    return tuple((m >> j) & 1 for j in range(n))


def gf2_reduce(v: int, rows: Sequence[int]) -> int:
    """Reduce v against rows in reduced echelon form (pivot = lowest bit)."""
    for r in rows:
        if v & (r & -r):
            v ^= r
    return v


def gf2_insert(rows: list[int], v: int) -> bool:
    """Insert v into a reduced echelon basis in place; False if dependent."""
    v = gf2_reduce(v, rows)
    if v == 0:
        return False
    piv = v & -v
    for i, r in enumerate(rows):
        if r & piv:
            rows[i] = r ^ v
    rows.append(v)
    rows.sort(key=lambda r: r & -r)
    return True


def gf2_rref(vectors: Iterable[int]) -> list[int]:
    rows: list[int] = []
    for v in vectors:
        gf2_insert(rows, v)
    return rows


# ---------------------------------------------------------------------------
# generic GF(p) rows


def _reduce_generic(v: Vec, rows: Sequence[Vec], p: int) -> Vec:
    w = list(v)
    for r in rows:
        piv = next(j for j, c in enumerate(r) if c)
        if w[piv]:
            c = w[piv]  # rows are monic at their pivot
            for j, rj in enumerate(r):
                if rj:
                    w[j] = (w[j] - c * rj) % p
    return tuple(w)


def _insert_generic(rows: list[Vec], v: Vec, p: int) -> bool:
    v = _reduce_generic(v, rows, p)
    if not any(v):
        return False
    piv = next(j for j, c in enumerate(v) if c)
    scale = _inv(v[piv], p)
    v = tuple((scale * c) % p for c in v)
    for i, r in enumerate(rows):
        if r[piv]:
            c = r[piv]
            rows[i] = tuple((rj - c * vj) % p for rj, vj in zip(r, v))
    rows.append(v)
    rows.sort(key=lambda r: next(j for j, c in enumerate(r) if c))
    return True


def rref_rows(vectors: Iterable[Sequence[int]], p: int, ncols: int) -> tuple[Vec, ...]:
    """Canonical reduced row echelon basis of the span of `vectors`."""
    if p == 2:
        packed = gf2_rref(pack_vec(normalize_vec(v, 2)) for v in vectors)
        return tuple(unpack_vec(m, ncols) for m in packed)
    rows: list[Vec] = []
    for v in vectors:
        _insert_generic(rows, normalize_vec(v, p), p)
    return tuple(rows)


# ---------------------------------------------------------------------------
# public matrix / subspace types


@dataclass(frozen=True)
class Mat:
    """A matrix over GF(p): tuple of row tuples, entries in [0, p)."""

    p: int
    rows: tuple[Vec, ...]
    ncols: int

    @classmethod
    def from_rows(cls, p: int, rows: Iterable[Sequence[int]], ncols: int) -> "Mat":
        out = tuple(normalize_vec(r, p) for r in rows)
        for r in out:
            if len(r) != ncols:
                raise ValueError("row length does not match ncols")
        return cls(p, out, ncols)


def rref(m: Mat) -> Mat:
    return Mat(m.p, rref_rows(m.rows, m.p, m.ncols), m.ncols)


def transpose(m: Mat) -> Mat:
    cols = tuple(tuple(r[j] for r in m.rows) for j in range(m.ncols))
    return Mat(m.p, cols, len(m.rows))


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^ambient held as its canonical RREF basis."""

    p: int
    ambient: int
    rows: tuple[Vec, ...]

    @classmethod
    def span(cls, p: int, ambient: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        return cls(p, ambient, rref_rows(vectors, p, ambient))

    @classmethod
    def zero(cls, p: int, ambient: int) -> "Subspace":
        return cls(p, ambient, ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[int]) -> Vec:
        v = normalize_vec(v, self.p)
        if self.p == 2:
            return unpack_vec(gf2_reduce(pack_vec(v), [pack_vec(r) for r in self.rows]), self.ambient)
        return _reduce_generic(v, self.rows, self.p)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.p != b.p or a.ambient != b.ambient:
        raise ValueError("ambient mismatch")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace.span(a.p, a.ambient, a.rows + b.rows)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus block elimination: rows [A|A] and [B|0]; rows whose left
    block vanishes carry the intersection in the right block."""
    _check_compatible(a, b)
    n, p = a.ambient, a.p
    if p == 2:
        arows = [pack_vec(r) for r in a.rows]
        brows = [pack_vec(r) for r in b.rows]
        mask = (1 << n) - 1
        block = [r | (r << n) for r in arows] + list(brows)
        inter = [row >> n for row in gf2_rref(block) if not (row & mask)]
        return Subspace(p, n, tuple(unpack_vec(m, n) for m in gf2_rref(inter)))
    block = [r + r for r in a.rows] + [r + (0,) * n for r in b.rows]
    reduced = rref_rows(block, p, 2 * n)
    inter = [row[n:] for row in reduced if not any(row[:n])]
    return Subspace(p, n, rref_rows(inter, p, n))


def kernel(m: Mat) -> Subspace:
    """Right null space {v : each row of m dots v to zero}."""
    reduced = rref_rows(m.rows, m.p, m.ncols)
    pivots = [next(j for j, c in enumerate(r) if c) for r in reduced]
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [0] * m.ncols
        v[f] = 1
        for r, piv in zip(reduced, pivots):
            if r[f]:
                v[piv] = (-r[f]) % m.p
        basis.append(tuple(v))
    return Subspace(m.p, m.ncols, rref_rows(basis, m.p, m.ncols))


def left_kernel(m: Mat) -> Subspace:
    """{a : a . m = 0}, coefficients over the rows of m."""
    return kernel(transpose(m))


# ---------------------------------------------------------------------------
# tagged elimination: solve over a row list while tracking where each
# reduction came from.  Backbone of affine_meet / split_components / solve.


def _tagged_solve(rows: Sequence[tuple[Vec, tuple]], target: Vec, p: int,
                  tag_add, tag_scale, tag_zero):
    """Eliminate (vector, tag) pairs, then reduce target, accumulating tags.

    Returns the accumulated tag if target lies in the span, else None.
    Row operations apply identically to vectors and tags, so any linear
    invariant relating a row to its tag is preserved.
    """
    work: list[tuple[Vec, tuple]] = []
    for vec, tag in rows:
        vec = list(vec)
        for wv, wt in work:
            piv = next(j for j, c in enumerate(wv) if c)
            if vec[piv]:
                c = vec[piv]
                vec = [(a - c * b) % p for a, b in zip(vec, wv)]
                tag = tag_add(tag, tag_scale((-c) % p, wt))
        if any(vec):
            piv = next(j for j, c in enumerate(vec) if c)
            s = _inv(vec[piv], p)
            vec = [(s * c) % p for c in vec]
            tag = tag_scale(s, tag)
            work.append((tuple(vec), tag))
    residual = list(target)
    acc = tag_zero
    for wv, wt in work:
        piv = next(j for j, c in enumerate(wv) if c)
        if residual[piv]:
            c = residual[piv]
            residual = [(a - c * b) % p for a, b in zip(residual, wv)]
            acc = tag_add(acc, tag_scale(c, wt))
    if any(residual):
        return None
    return acc


def _vtag_add(p):
    return lambda u, v: tuple((a + b) % p for a, b in zip(u, v))


def _vtag_scale(p):
    return lambda c, v: tuple((c * a) % p for a in v)


def affine_meet(point: Sequence[int], w: Subspace, u: Subspace) -> Optional[Vec]:
    """Some v in (point + w) intersect u, or None if the coset misses u.

    Tags carry the u-component of every working row; the accumulated tag
    of point is then a member of u congruent to point mod w.
    """
    _check_compatible(w, u)
    p, n = w.p, w.ambient
    point = normalize_vec(point, p)
    if len(point) != n:
        raise ValueError("ambient mismatch")
    zero = (0,) * n
    rows = [(r, zero) for r in w.rows] + [(r, r) for r in u.rows]
    return _tagged_solve(rows, point, p, _vtag_add(p), _vtag_scale(p), zero)


def split_components(v: Sequence[int], parts: Sequence[Subspace]) -> Optional[list[Vec]]:
    """Write v = sum of one component per part; None if v is outside the sum.

    The parts are expected to be independent; with overlap the returned
    components are still a valid splitting, just not the unique one.
    """
    if not parts:
        raise ValueError("no parts")
    p, n = parts[0].p, parts[0].ambient
    for s in parts[1:]:
        _check_compatible(parts[0], s)
    v = normalize_vec(v, p)
    k = len(parts)
    zero = tuple((0,) * n for _ in range(k))

    def add(u, w):
        return tuple(tuple((a + b) % p for a, b in zip(uu, ww)) for uu, ww in zip(u, w))

    def scale(c, u):
        return tuple(tuple((c * a) % p for a in uu) for uu in u)

    rows = []
    for i, s in enumerate(parts):
        for r in s.rows:
            tag = list(zero)
            tag[i] = r
            rows.append((r, tuple(tag)))
    got = _tagged_solve(rows, v, p, add, scale, zero)
    return None if got is None else list(got)


def solve_combination(rows: Sequence[Sequence[int]], target: Sequence[int], p: int) -> Optional[Vec]:
    """Coefficients c with sum c_i * rows_i = target, or None."""
    if not rows:
        return None if any(c % p for c in target) else ()
    n = len(rows[0])
    k = len(rows)
    zero = (0,) * k
    tagged = []
    for i, r in enumerate(rows):
        tag = [0] * k
        tag[i] = 1
        tagged.append((normalize_vec(r, p), tuple(tag)))
    target = normalize_vec(target, p)
    if len(target) != n:
        raise ValueError("ambient mismatch")
    return _tagged_solve(tagged, target, p, _vtag_add(p), _vtag_scale(p), zero)
