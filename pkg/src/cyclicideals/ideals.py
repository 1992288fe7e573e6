"""Ideals of a finite-dimensional local algebra as action-closed subspaces.

An ideal is a subspace of the algebra (in basis coordinates) closed
under multiplication by every generator of the maximal ideal.  Each one
is held in canonical RREF form, so ideals compare and hash structurally.
Closure is re-checked on construction: any operation that produced a
non-ideal is a bug we want to hear about immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import gf
from .rings import Algebra, Element


class Ideal:
    __slots__ = ("algebra", "space")

    def __init__(self, algebra: Algebra, space: gf.Subspace, _trusted: bool = False):
        if space.p != algebra.p or space.ambient != algebra.dim:
            raise ValueError("ambient mismatch")
        self.algebra = algebra
        self.space = space
        if not _trusted:
            self._check_closed()

    def _check_closed(self) -> None:
        alg = self.algebra
        full = self.space.dim == alg.dim
        for row in self.space.rows:
            if not full and row[0] != 0:
                raise ValueError("proper ideal with a unit coordinate")
            for g in alg.gens:
                if not self.space.contains(alg._mul_coeffs(g.coeffs, row)):
                    raise ValueError("subspace is not closed under the algebra action")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def rows(self) -> tuple[gf.Vec, ...]:
        return self.space.rows

    def basis_elements(self) -> list[Element]:
        return [self.algebra.element(r) for r in self.rows]

    def as_dict(self) -> dict:
        return {"basis": [self.algebra.el_str(r) for r in self.rows],
                "dim": self.dim}

    def contains(self, z: Element) -> bool:
        return self.space.contains(z.coeffs)

    def contains_ideal(self, other: "Ideal") -> bool:
        self._require_same(other)
        return self.space.contains_subspace(other.space)

    def is_zero(self) -> bool:
        return self.dim == 0

    def _require_same(self, other: "Ideal") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("algebra mismatch")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Ideal) and self.algebra is other.algebra
                and self.space == other.space)

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.space.rows))

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __and__(self, other: "Ideal") -> "Ideal":
        return ideal_intersect(self, other)

    def __le__(self, other: "Ideal") -> bool:
        return other.contains_ideal(self)

    def __repr__(self) -> str:
        gens = ", ".join(self.algebra.el_str(r) for r in self.rows)
        return f"Ideal<span {{{gens}}}>"


def ideal_from_generators(alg: Algebra, gens: Iterable[Element]) -> Ideal:
    """Smallest ideal containing the generators: span closure under the action."""
    rows: list[gf.Vec] = []
    space = gf.Subspace.zero(alg.p, alg.dim)
    queue = [g.coeffs for g in gens]
    while queue:
        v = queue.pop()
        red = space.reduce(v)
        if not any(red):
            continue
        if red[0]:
            # a unit got in, so the closure is everything
            return unit_ideal(alg)
        rows.append(red)
        space = gf.Subspace.span(alg.p, alg.dim, rows)
        rows = list(space.rows)
        for g in alg.gens:
            queue.append(alg._mul_coeffs(g.coeffs, red))
    return Ideal(alg, space)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    a._require_same(b)
    return Ideal(a.algebra, gf.subspace_sum(a.space, b.space))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    a._require_same(b)
    alg = a.algebra
    prods = [alg._mul_coeffs(u, v) for u in a.rows for v in b.rows]
    return Ideal(alg, gf.Subspace.span(alg.p, alg.dim, prods))


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    a._require_same(b)
    return Ideal(a.algebra, gf.subspace_intersect(a.space, b.space))


def zero_ideal(alg: Algebra) -> Ideal:
    return Ideal(alg, gf.Subspace.zero(alg.p, alg.dim))


def unit_ideal(alg: Algebra) -> Ideal:
    rows = [alg.basis_element(k).coeffs for k in range(alg.dim)]
    return Ideal(alg, gf.Subspace.span(alg.p, alg.dim, rows))


def maximal_ideal(alg: Algebra) -> Ideal:
    """The unique maximal ideal: everything with zero unit coordinate."""
    rows = [alg.basis_element(k).coeffs for k in range(1, alg.dim)]
    return Ideal(alg, gf.Subspace.span(alg.p, alg.dim, rows))


def cyclic(alg: Algebra, z: Element) -> Ideal:
    """The cyclic module Rz (an ideal, since R is commutative)."""
    return ideal_from_generators(alg, [z])


def _mult_matrix(alg: Algebra, z: Element) -> gf.Mat:
    rows = [alg._mul_coeffs(alg.basis_element(k).coeffs, z.coeffs) for k in range(alg.dim)]
    return gf.Mat(alg.p, tuple(rows), alg.dim)


def annihilator(alg: Algebra, target: Union[Element, Ideal]) -> Ideal:
    """Ann(z) = {a : a*z = 0}; for an ideal, intersect over its basis."""
    if isinstance(target, Ideal):
        out = unit_ideal(alg)
        for row in target.rows:
            out = ideal_intersect(out, annihilator(alg, alg.element(row)))
        return out
    space = gf.left_kernel(_mult_matrix(alg, target))
    return Ideal(alg, space)


def is_simple(alg: Algebra, i: Ideal) -> bool:
    """One-dimensional and killed by the maximal ideal."""
    if i.dim != 1:
        return False
    row = i.rows[0]
    return all(not any(alg._mul_coeffs(g.coeffs, row)) for g in alg.gens)


def module_times_ideal(alg: Algebra, i: Ideal) -> Ideal:
    """M * i, computed from generator action on a basis of i."""
    prods = [alg._mul_coeffs(g.coeffs, row) for g in alg.gens for row in i.rows]
    return Ideal(alg, gf.Subspace.span(alg.p, alg.dim, prods))


def min_generators(alg: Algebra, i: Ideal) -> int:
    """Minimal number of module generators, dim i - dim M*i (Nakayama)."""
    return i.dim - module_times_ideal(alg, i).dim


# ---------------------------------------------------------------------------
# quotient algebras R / I


class QuotientAlgebra(Algebra):
    """R/I modeled on the non-pivot coordinates of I's RREF basis.

    Multiplication lifts through the canonical section, multiplies in the
    source, and projects back, so associativity and commutativity are
    inherited rather than re-proved.
    """

    def __init__(self, source: Algebra, ideal: Ideal):
        self.source = source
        self.ideal = ideal
        self.p = source.p
        pivots = {next(j for j, c in enumerate(r) if c) for r in ideal.rows}
        self.nonpivot = tuple(j for j in range(source.dim) if j not in pivots)
        self.dim = len(self.nonpivot)
        gens = []
        seen = set()
        for g in source.gens:
            img = self.project_coeffs(g.coeffs)
            if any(img) and img not in seen:
                seen.add(img)
                gens.append(Element(self, img))
        self.gens = tuple(gens)

    def project_coeffs(self, coeffs: Sequence[int]) -> gf.Vec:
        red = self.ideal.space.reduce(coeffs)
        return tuple(red[j] for j in self.nonpivot)

    def lift_coeffs(self, coeffs: Sequence[int]) -> gf.Vec:
        out = [0] * self.source.dim
        for c, j in zip(coeffs, self.nonpivot):
            out[j] = c % self.p
        return tuple(out)

    def _mul_coeffs(self, a: gf.Vec, b: gf.Vec) -> gf.Vec:
        prod = self.source._mul_coeffs(self.lift_coeffs(a), self.lift_coeffs(b))
        return self.project_coeffs(prod)

    def el_str(self, coeffs: Sequence[int]) -> str:
        return self.source.el_str(self.lift_coeffs(coeffs))

    def __repr__(self) -> str:
        killed = ", ".join(self.source.el_str(r) for r in self.ideal.rows)
        return f"QuotientAlgebra<mod span {{{killed}}}, dim {self.dim}>"


@dataclass(frozen=True)
class QuotientMap:
    """R -> R/I with its canonical right inverse."""

    source: Algebra
    target: QuotientAlgebra

    def project(self, z: Element) -> Element:
        if z.algebra is not self.source:
            raise ValueError("algebra mismatch")
        return Element(self.target, self.target.project_coeffs(z.coeffs))

    def lift(self, z: Element) -> Element:
        if z.algebra is not self.target:
            raise ValueError("algebra mismatch")
        return Element(self.source, self.target.lift_coeffs(z.coeffs))


def quotient_algebra(alg: Algebra, i: Ideal) -> QuotientMap:
    if i.algebra is not alg:
        raise ValueError("algebra mismatch")
    if i.dim == alg.dim:
        raise ValueError("not proper")
    return QuotientMap(alg, QuotientAlgebra(alg, i))


# ---------------------------------------------------------------------------
# packed GF(2) caches used by the searches


def packed_cyclic_table(alg: Algebra) -> dict[int, tuple[int, ...]]:
    """Map every vector of the maximal-ideal span to cyclic(v)'s RREF rows.

    GF(2) only.  The table is cached on the algebra; searches and the
    brute-force oracle lean on it heavily.
    """
    assert alg.p == 2
    cached = getattr(alg, "_cyclic_table", None)
    if cached is not None:
        return cached
    actions = alg.gf2_action_masks()
    mdim = alg.dim - 1
    if mdim > 20:
        raise ValueError("cyclic table infeasible at this dimension")

    def apply(masks: list[int], v: int) -> int:
        out = 0
        while v:
            low = v & -v
            out ^= masks[low.bit_length() - 1]
            v ^= low
        return out

    table: dict[int, tuple[int, ...]] = {0: ()}
    for m in range(1, 1 << mdim):
        vec = m << 1  # maximal-ideal span sits above the unit coordinate
        rows: list[int] = []
        queue = [vec]
        while queue:
            v = queue.pop()
            v = gf.gf2_reduce(v, rows)
            if v:
                gf.gf2_insert(rows, v)
                for masks in actions:
                    queue.append(apply(masks, v))
        table[vec] = tuple(rows)
    alg._cyclic_table = table
    return table
