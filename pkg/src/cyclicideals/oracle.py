"""Exhaustive GF(2) certificates: enumerate every ideal, decide each one.

Everything here is deliberately brute force.  The census lists all
ideals by breadth-first closure extension (cross-checkable against a
subset-closure sweep at tiny sizes); the decomposition search tries
every family of cyclic submodules in a canonical order.  Results are
exact within the feasibility bounds and are used as the ground truth
the constructive machinery is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import gf
from .decompose import CyclicDecomposition, Trace, _truncated, _trusted
from .ideals import (Ideal, cyclic, ideal_from_generators, ideal_sum, is_simple,
                     maximal_ideal, packed_cyclic_table, unit_ideal, zero_ideal)
from .rings import Algebra, Element
from .structure import DscVerdict


class InfeasibleSizeError(RuntimeError):
    """The algebra is too large (or the field too big) for brute force."""


def _require_feasible(alg: Algebra, max_dim: int) -> None:
    if alg.p != 2:
        raise InfeasibleSizeError(f"oracle handles GF(2) only, not GF({alg.p})")
    if alg.dim - 1 > max_dim:
        raise InfeasibleSizeError(
            f"dim M = {alg.dim - 1} exceeds the oracle bound {max_dim}")


def _apply(masks: list[int], v: int) -> int:
    out = 0
    while v:
        low = v & -v
        out ^= masks[low.bit_length() - 1]
        v ^= low
    return out


def _close(alg: Algebra, rows: tuple[int, ...], seeds: list[int]) -> tuple[int, ...]:
    """Smallest ideal containing span(rows) and the seed vectors, packed RREF."""
    actions = alg.gf2_action_masks()
    work = list(rows)
    queue = list(seeds)
    while queue:
        v = gf.gf2_reduce(queue.pop(), work)
        if not v:
            continue
        gf.gf2_insert(work, v)
        queue.extend(_apply(masks, v) for masks in actions)
    return tuple(work)


@dataclass
class CensusEntry:
    ideal: Ideal
    key: tuple[int, ...]
    decomposable: Optional[bool] = None
    lengths: Optional[tuple[int, ...]] = None


@dataclass
class IdealCensus:
    algebra: Algebra
    entries: tuple[CensusEntry, ...]

    @property
    def count(self) -> int:
        return len(self.entries)


def _entry_key_sort(alg: Algebra, key: tuple[int, ...]):
    return (len(key), tuple(gf.unpack_vec(r, alg.dim) for r in key))


def _ideal_from_key(alg: Algebra, key: tuple[int, ...]) -> Ideal:
    vecs = [gf.unpack_vec(r, alg.dim) for r in key]
    return Ideal(alg, gf.Subspace.span(alg.p, alg.dim, vecs))


def enumerate_ideals(alg: Algebra, max_dim: int = 8) -> IdealCensus:
    """Every ideal of alg, zero through R, in canonical (dim, basis) order.

    Breadth-first: extend each known ideal by one new generator chosen
    over its free coordinates, close up, deduplicate.  Cached per
    algebra.
    """
    cached = getattr(alg, "_census", None)
    if cached is not None:
        return cached
    _require_feasible(alg, max_dim)
    seen = {()}
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        nxt = []
        for rows in frontier:
            pivots = {r & -r for r in rows}
            free = [k for k in range(1, alg.dim) if (1 << k) not in pivots]
            for combo in range(1, 1 << len(free)):
                v = 0
                for b, k in enumerate(free):
                    if combo >> b & 1:
                        v |= 1 << k
                grown = _close(alg, rows, [v])
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    keys = sorted(seen, key=lambda k: _entry_key_sort(alg, k))
    keys.append(tuple(1 << k for k in range(alg.dim)))
    entries = []
    for key in keys:
        ideal = unit_ideal(alg) if len(key) == alg.dim else _ideal_from_key(alg, key)
        entries.append(CensusEntry(ideal, key))
    census = IdealCensus(alg, tuple(entries))
    alg._census = census
    return census


def enumerate_ideals_subsets(alg: Algebra) -> list[tuple[int, ...]]:
    """Independent re-enumeration: close every subset of the nonzero
    vectors of M.  Exponential in 2^dim(M); the cross-check partner for
    the breadth-first census at very small sizes."""
    mdim = alg.dim - 1
    if alg.p != 2 or mdim > 4:
        raise InfeasibleSizeError("subset enumeration needs GF(2) and dim M <= 4")
    vectors = [m << 1 for m in range(1, 1 << mdim)]
    seen = set()
    for mask in range(1 << len(vectors)):
        seeds = [v for b, v in enumerate(vectors) if mask >> b & 1]
        seen.add(_close(alg, (), seeds))
    keys = sorted(seen, key=lambda k: _entry_key_sort(alg, k))
    keys.append(tuple(1 << k for k in range(alg.dim)))
    return keys


def _candidates(alg: Algebra, key: tuple[int, ...]):
    """Distinct cyclic submodules inside the ideal, canonically ordered.

    Returns (generator vector, packed rows) pairs; the generator is the
    first element (coefficient order) producing that submodule.
    """
    table = packed_cyclic_table(alg)
    by_rows: dict[tuple[int, ...], int] = {}
    d = len(key)
    for s in range(1, 1 << d):
        v = 0
        for b in range(d):
            if s >> b & 1:
                v ^= key[b]
        rows = table[v]
        if rows not in by_rows:
            by_rows[rows] = v
    cands = [(v, rows) for rows, v in by_rows.items()]
    cands.sort(key=lambda c: (len(c[1]), tuple(gf.unpack_vec(r, alg.dim) for r in c[1])))
    return cands


def _proper_key(i: Ideal) -> tuple[int, ...]:
    return tuple(gf.pack_vec(r) for r in i.rows)


def brute_decompose(alg: Algebra, i: Ideal, max_dim: int = 8
                    ) -> Optional[CyclicDecomposition]:
    """First decomposition of i into independent cyclic submodules found
    by depth-first search over the canonical candidate order, or None
    after exhausting every family.  Absence results are cached."""
    _require_feasible(alg, max_dim)
    if i.algebra is not alg:
        raise ValueError("algebra mismatch")
    if i.dim == alg.dim:
        # only R itself contains a unit, so R = R*1 is the sole cover
        trace = Trace(branch="exhaustive", dims=(alg.dim,),
                      truncated=_truncated(alg), trusted=_trusted(alg, [alg.unit()]))
        return CyclicDecomposition(i, (alg.unit(),),
                                   (is_simple(alg, i),), trace)
    key = _proper_key(i)
    cache = getattr(alg, "_brute_cache", None)
    if cache is None:
        cache = alg._brute_cache = {}
    if key in cache:
        found = cache[key]
    else:
        cands = _candidates(alg, key)
        target = len(key)

        def dfs(start: int, rows: list[int], dim: int) -> Optional[list[int]]:
            if dim == target:
                return []
            for idx in range(start, len(cands)):
                v, crows = cands[idx]
                if dim + len(crows) > target:
                    continue
                merged = list(rows)
                if not all(gf.gf2_insert(merged, r) for r in crows):
                    continue
                rest = dfs(idx + 1, merged, dim + len(crows))
                if rest is not None:
                    return [v] + rest
            return None

        found = dfs(0, [], 0)
        cache[key] = found
    if found is None:
        return None
    gens = tuple(alg.element(gf.unpack_vec(v, alg.dim)) for v in found)
    flags = tuple(is_simple(alg, cyclic(alg, g)) for g in gens)
    dims = tuple(cyclic(alg, g).dim for g in gens)
    trace = Trace(branch="exhaustive", dims=dims,
                  truncated=_truncated(alg), trusted=_trusted(alg, gens))
    return CyclicDecomposition(i, gens, flags, trace)


def decomposition_lengths(alg: Algebra, i: Ideal, max_dim: int = 8) -> tuple[int, ...]:
    """Every achievable number of summands over all decompositions of i.

    Exhaustive; the singleton answer for all ideals at once is the
    length-invariance phenomenon.
    """
    _require_feasible(alg, max_dim)
    if i.dim == alg.dim:
        return (1,)
    key = _proper_key(i)
    if not key:
        return (0,)
    cands = _candidates(alg, key)
    target = len(key)
    found: set[int] = set()

    def dfs(start: int, rows: list[int], dim: int, depth: int) -> None:
        if dim == target:
            found.add(depth)
            return
        for idx in range(start, len(cands)):
            v, crows = cands[idx]
            if dim + len(crows) > target:
                continue
            merged = list(rows)
            if not all(gf.gf2_insert(merged, r) for r in crows):
                continue
            dfs(idx + 1, merged, dim + len(crows), depth + 1)

    dfs(0, [], 0, 0)
    return tuple(sorted(found))


def complete_census(census: IdealCensus, max_dim: int = 8) -> IdealCensus:
    """Fill in decomposability and achievable lengths for every entry."""
    alg = census.algebra
    for e in census.entries:
        dec = brute_decompose(alg, e.ideal, max_dim)
        e.decomposable = dec is not None
        e.lengths = decomposition_lengths(alg, e.ideal, max_dim)
    return census


def length_invariance(census: IdealCensus) -> bool:
    """True when no ideal admits two decompositions of different lengths."""
    for e in census.entries:
        if e.lengths is None:
            raise ValueError("census incomplete")
        if len(e.lengths) > 1:
            return False
    return True


def oracle_dsc(alg: Algebra, max_dim: int = 8) -> DscVerdict:
    """Ground-truth verdict: decompose every ideal or exhibit the first
    (canonical order) that cannot be decomposed."""
    census = enumerate_ideals(alg, max_dim)
    for e in census.entries:
        if brute_decompose(alg, e.ideal, max_dim) is None:
            note = ("exhaustive search over all families of cyclic "
                    "submodules found no direct-sum cover")
            return DscVerdict("no", None, e.ideal, note,
                              (f"census of {census.count} ideals",))
    return DscVerdict("yes", None, None, None,
                      (f"all {census.count} ideals decompose",))


def three_summand_counterexample(alg: Algebra, x: Element, y: Element,
                                 z: Element, rest: Optional[Ideal] = None) -> Ideal:
    """The ideal R(x+y) + R(x+z), not a direct sum of cyclics whenever
    M = Rx + Ry + Rz + rest is direct with all three summands non-simple."""
    if rest is None:
        rest = zero_ideal(alg)
    parts = [cyclic(alg, g) for g in (x, y, z)]
    for g, c in zip((x, y, z), parts):
        if is_simple(alg, c) or c.is_zero():
            raise ValueError(f"hypothesis not satisfied: R{g} must be non-simple")
    total = zero_ideal(alg)
    dimsum = 0
    for c in parts + [rest]:
        dimsum += c.dim
        total = ideal_sum(total, c)
    if dimsum != total.dim or total != maximal_ideal(alg):
        raise ValueError("hypothesis not satisfied: sum is not direct onto M")
    return ideal_from_generators(alg, [x + y, x + z])
