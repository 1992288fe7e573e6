"""Monomial quotient algebras GF(p)[x_1..x_v] / (monomial relations).

A presentation names a prime field, variables, a list of degree >= 2
monomial relations, and an optional total-degree truncation.  The
algebra it builds is spanned by the standard monomials (those divisible
by no relation and below the truncation degree), ordered by degree and
then lexicographically with earlier variables first, so position 0 is
always the unit monomial.  Products of standard monomials are again
standard or zero, which keeps multiplication a table lookup.

Quotients by arbitrary ideals (see ideals.quotient_algebra) share the
same element interface but multiply through lift / multiply / project.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import gf


class RingSyntaxError(ValueError):
    """Malformed ring file; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PresentationError(ValueError):
    """Structurally valid ring file describing a ring we reject."""


class DimensionLimitError(RuntimeError):
    """Basis enumeration exceeded the configured dimension guard."""


class NotExpressibleError(ValueError):
    """power_form got an element outside unit * x^n form."""


# ---------------------------------------------------------------------------
# monomials: exponent tuples over the presentation's variables


def mono_degree(e: Sequence[int]) -> int:
    return sum(e)


def mono_divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mono_str(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def pres_str(pres: "RingPresentation") -> str:
    base = f"GF({pres.p})[{','.join(pres.vars)}]"
    if pres.relations:
        rels = ",".join(mono_str(m, pres.vars) for m in pres.relations)
        base += f"/({rels})"
    if pres.truncate is not None:
        base += f" truncated at degree {pres.truncate}"
    return base


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingPresentation:
    """Validated ring description; relations are canonical exponent tuples."""

    p: int
    vars: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]
    truncate: Optional[int]
    nonnilpotent: tuple[bool, ...]

    @classmethod
    def make(cls, p: int, names: Sequence[str], relations: Iterable[Sequence[int]],
             truncate: Optional[int] = None) -> "RingPresentation":
        names = tuple(names)
        if not _is_prime(p):
            raise PresentationError("field size not prime")
        if not names:
            raise PresentationError("no variables declared")
        if len(set(names)) != len(names):
            raise PresentationError("duplicate variable name")
        rels = sorted({tuple(r) for r in relations})
        nv = len(names)
        for r in rels:
            if len(r) != nv or any(k < 0 for k in r):
                raise PresentationError("bad relation exponent vector")
            if mono_degree(r) <= 1:
                raise PresentationError("variable eliminated by degree-1 relation")
        if truncate is not None and truncate < 2:
            raise PresentationError("truncate bound must be at least 2")
        # a pure power of a variable lies in a monomial ideal exactly when
        # some generator is itself a pure power of that variable
        nonnil = []
        for i in range(nv):
            pure = any(r[i] > 0 and mono_degree(r) == r[i] for r in rels)
            nonnil.append(not pure)
        if truncate is None and any(nonnil):
            raise PresentationError("infinite dimensional without truncate")
        return cls(p, names, tuple(rels), truncate, tuple(nonnil))

    def var_index(self, name: str) -> int:
        return self.vars.index(name)


# ---------------------------------------------------------------------------
# ring file parser.  One declaration per line; '#' starts a comment; '/'
# is also accepted as a declaration separator so presentations can be
# written on a single line.


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _parse_monomial(text: str, names: Sequence[str], line_no: int, col0: int) -> tuple[int, ...]:
    exps = [0] * len(names)
    pos = 0
    expect_term = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "*":
            if expect_term:
                raise RingSyntaxError("unexpected '*'", line_no, col0 + pos + 1)
            expect_term = True
            pos += 1
            continue
        if not expect_term:
            raise RingSyntaxError("expected '*' between factors", line_no, col0 + pos + 1)
        m = _NAME_RE.match(text, pos)
        if not m:
            raise RingSyntaxError("expected variable name", line_no, col0 + pos + 1)
        name = m.group(0)
        if name not in names:
            raise RingSyntaxError(f"unknown variable '{name}'", line_no, col0 + pos + 1)
        pos = m.end()
        exp = 1
        if pos < len(text) and text[pos] == "^":
            pos += 1
            m = re.compile(r"\d+").match(text, pos)
            if not m or int(m.group(0)) < 1:
                raise RingSyntaxError("exponent must be a positive integer", line_no, col0 + pos + 1)
            exp = int(m.group(0))
            pos = m.end()
        exps[names.index(name)] += exp
        expect_term = False
    if expect_term:
        raise RingSyntaxError("empty monomial", line_no, col0 + 1)
    return tuple(exps)


def parse_presentation(text: str, truncate: Optional[int] = None) -> RingPresentation:
    """Parse the ring file grammar.

    Declarations, one per line (or '/'-separated):
        field <prime>
        vars <name> [<name> ...]
        rel <monomial>          # repeatable, monomial = term ('*' term)*
        truncate <N>            # optional total-degree truncation

    A truncate argument overrides whatever the text declares, so an
    infinite-dimensional presentation can still be modelled.
    """
    p: Optional[int] = None
    names: Optional[tuple[str, ...]] = None
    rel_specs: list[tuple[str, int, int]] = []
    declared: Optional[int] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        for chunk in line.split("/"):
            stripped = chunk.strip()
            start_col = col + chunk.index(stripped[0]) if stripped else col
            col += len(chunk) + 1
            if not stripped:
                continue
            fields = stripped.split(None, 1)
            keyword = fields[0]
            rest = fields[1] if len(fields) > 1 else ""
            rest_col = start_col + len(keyword) + 1
            if keyword == "field":
                if p is not None:
                    raise RingSyntaxError("duplicate field declaration", line_no, start_col + 1)
                if not rest.strip().isdigit():
                    raise RingSyntaxError("field expects an integer", line_no, rest_col + 1)
                p = int(rest)
            elif keyword == "vars":
                if names is not None:
                    raise RingSyntaxError("duplicate vars declaration", line_no, start_col + 1)
                got = tuple(rest.split())
                if not got or not all(_NAME_RE.fullmatch(n) for n in got):
                    raise RingSyntaxError("vars expects variable names", line_no, rest_col + 1)
                names = got
            elif keyword == "rel":
                if names is None:
                    raise RingSyntaxError("rel before vars", line_no, start_col + 1)
                rel_specs.append((rest, line_no, rest_col))
            elif keyword == "truncate":
                if declared is not None:
                    raise RingSyntaxError("duplicate truncate declaration", line_no, start_col + 1)
                if not rest.strip().isdigit():
                    raise RingSyntaxError("truncate expects an integer", line_no, rest_col + 1)
                declared = int(rest)
            else:
                raise RingSyntaxError(f"unknown declaration '{keyword}'", line_no, start_col + 1)

    if p is None:
        raise PresentationError("missing field declaration")
    if names is None:
        raise PresentationError("missing vars declaration")
    relations = [_parse_monomial(spec, names, ln, col) for spec, ln, col in rel_specs]
    return RingPresentation.make(p, names, relations,
                                 declared if truncate is None else truncate)


# ---------------------------------------------------------------------------
# elements


class Element:
    """An algebra element as a dense coefficient tuple over the basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "Algebra", coeffs: Sequence[int]):
        self.algebra = algebra
        self.coeffs = gf.normalize_vec(coeffs, algebra.p)
        if len(self.coeffs) != algebra.dim:
            raise ValueError("coefficient length does not match algebra dimension")

    def _require_same(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("algebra mismatch")

    def __add__(self, other: "Element") -> "Element":
        self._require_same(other)
        p = self.algebra.p
        return Element(self.algebra, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        self._require_same(other)
        p = self.algebra.p
        return Element(self.algebra, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        p = self.algebra.p
        return Element(self.algebra, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._require_same(other)
            return Element(self.algebra, self.algebra._mul_coeffs(self.coeffs, other.coeffs))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Element":
        c %= self.algebra.p
        return Element(self.algebra, tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative power")
        out = self.algebra.unit()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        # local ring: units are exactly the elements outside the maximal ideal
        return self.coeffs[0] != 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coeffs))

    def __str__(self) -> str:
        return self.algebra.el_str(self.coeffs)

    def __repr__(self) -> str:
        return f"<{self}>"


class Algebra:
    """Shared element plumbing; concrete classes supply the product."""

    p: int
    dim: int
    gens: tuple[Element, ...]

    def _mul_coeffs(self, a: gf.Vec, b: gf.Vec) -> gf.Vec:
        raise NotImplementedError

    def el_str(self, coeffs: Sequence[int]) -> str:
        raise NotImplementedError

    def element(self, coeffs: Sequence[int]) -> Element:
        return Element(self, coeffs)

    def zero(self) -> Element:
        return Element(self, (0,) * self.dim)

    def unit(self) -> Element:
        return Element(self, (1,) + (0,) * (self.dim - 1))

    def basis_element(self, k: int) -> Element:
        c = [0] * self.dim
        c[k] = 1
        return Element(self, c)

    # mask of each basis vector's image under multiplication by g, one
    # list per generator; only meaningful for p == 2 search code
    def gf2_action_masks(self) -> list[list[int]]:
        assert self.p == 2
        cached = getattr(self, "_gf2_actions", None)
        if cached is None:
            cached = []
            for g in self.gens:
                col = []
                for k in range(self.dim):
                    col.append(gf.pack_vec(self._mul_coeffs(g.coeffs, self.basis_element(k).coeffs)))
                cached.append(col)
            self._gf2_actions = cached
        return cached


class MonomialAlgebra(Algebra):
    """Standard-monomial model of a monomial quotient ring."""

    def __init__(self, presentation: RingPresentation, basis: Sequence[tuple[int, ...]]):
        self.presentation = presentation
        self.p = presentation.p
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        nv = len(presentation.vars)
        table = np.full((self.dim, self.dim), -1, dtype=np.int32)
        cap = presentation.truncate
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                prod = mono_mul(a, b)
                if cap is not None and mono_degree(prod) >= cap:
                    continue
                k = self.index.get(prod)
                if k is not None:
                    table[i, j] = k
        self.table = table
        self._tbl = [tuple(int(x) for x in row) for row in table]
        self.gens = tuple(self.basis_element(self.index[tuple(int(i == v) for i in range(nv))])
                          for v in range(nv))

    def _mul_coeffs(self, a: gf.Vec, b: gf.Vec) -> gf.Vec:
        p = self.p
        out = [0] * self.dim
        tbl = self._tbl
        for i, ca in enumerate(a):
            if not ca:
                continue
            row = tbl[i]
            for j, cb in enumerate(b):
                if cb:
                    k = row[j]
                    if k >= 0:
                        out[k] = (out[k] + ca * cb) % p
        return tuple(out)

    def el_str(self, coeffs: Sequence[int]) -> str:
        names = self.presentation.vars
        parts = []
        for i, c in enumerate(coeffs):
            if not c:
                continue
            mono = mono_str(self.basis[i], names)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def var(self, name: str) -> Element:
        return self.gens[self.presentation.var_index(name)]

    def __repr__(self) -> str:
        rels = ", ".join(mono_str(r, self.presentation.vars) for r in self.presentation.relations)
        trunc = f", truncate {self.presentation.truncate}" if self.presentation.truncate else ""
        return (f"MonomialAlgebra(GF({self.p})[{', '.join(self.presentation.vars)}]"
                f" / ({rels}){trunc}, dim {self.dim})")


def build_algebra(pres: RingPresentation, max_dim: int = 4096) -> MonomialAlgebra:
    """Enumerate the standard monomials and assemble the algebra.

    Raises DimensionLimitError when the basis would exceed max_dim (or
    when an untruncated exponent box is clearly hopeless).
    """
    nv = len(pres.vars)
    caps = []
    for i in range(nv):
        pure = [r[i] for r in pres.relations if r[i] > 0 and mono_degree(r) == r[i]]
        cap = min(pure) if pure else None
        if pres.truncate is not None:
            cap = pres.truncate if cap is None else min(cap, pres.truncate)
        caps.append(cap)  # exponent of var i is < cap
    box = 1
    for cap in caps:
        box *= cap
    if pres.truncate is None and box > 4 * max_dim * max(nv, 1) and box > 10 ** 6:
        raise DimensionLimitError("dimension exceeds configured limit")

    # pure powers are already enforced through caps
    impure = [r for r in pres.relations if not any(r[i] == mono_degree(r) for i in range(nv))]
    basis = []
    bound = pres.truncate

    def extend(prefix: list[int], degree: int) -> None:
        if len(prefix) == nv:
            mono = tuple(prefix)
            if not any(mono_divides(r, mono) for r in impure):
                basis.append(mono)
                if len(basis) > max_dim:
                    raise DimensionLimitError("dimension exceeds configured limit")
            return
        i = len(prefix)
        top = caps[i]
        e = 0
        while e < top and (bound is None or degree + e < bound):
            extend(prefix + [e], degree + e)
            e += 1

    extend([], 0)
    basis.sort(key=lambda m: (mono_degree(m), tuple(-k for k in m)))
    return MonomialAlgebra(pres, basis)


def parse_element(alg: MonomialAlgebra, text: str) -> Element:
    """Parse a polynomial expression over the ring variables.

    Grammar: signed terms joined by '+'/'-'; each term multiplies integer
    coefficients and variable powers, e.g. "x^2 + 2*x*y - 1".
    """
    tokens = re.findall(r"\d+|[A-Za-z_][A-Za-z0-9_]*|\^|\*|\+|-|\S", text)
    pos = 0

    def fail(msg: str):
        raise ValueError(f"bad element expression: {msg} (near token {pos})")

    def parse_factor() -> Element:
        nonlocal pos
        if pos >= len(tokens):
            fail("unexpected end")
        tok = tokens[pos]
        if tok.isdigit():
            pos += 1
            return alg.unit().scale(int(tok))
        if _NAME_RE.fullmatch(tok):
            if tok not in alg.presentation.vars:
                fail(f"unknown variable '{tok}'")
            pos += 1
            base = alg.var(tok)
            if pos < len(tokens) and tokens[pos] == "^":
                pos += 1
                if pos >= len(tokens) or not tokens[pos].isdigit():
                    fail("exponent must be an integer")
                n = int(tokens[pos])
                pos += 1
                return base ** n
            return base
        fail(f"unexpected token '{tok}'")

    def parse_term() -> Element:
        nonlocal pos
        out = parse_factor()
        while pos < len(tokens) and tokens[pos] == "*":
            pos += 1
            out = out * parse_factor()
        return out

    if not tokens:
        fail("empty expression")
    negate = False
    if tokens[pos] in "+-":
        negate = tokens[pos] == "-"
        pos += 1
    total = parse_term()
    if negate:
        total = -total
    while pos < len(tokens):
        op = tokens[pos]
        if op not in "+-":
            fail(f"unexpected token '{op}'")
        pos += 1
        term = parse_term()
        total = total - term if op == "-" else total + term
    return total


# ---------------------------------------------------------------------------
# unit-power normal form inside a cyclic module


def _mult_matrix(alg: Algebra, z: Element) -> gf.Mat:
    rows = [alg._mul_coeffs(alg.basis_element(k).coeffs, z.coeffs) for k in range(alg.dim)]
    return gf.Mat(alg.p, tuple(rows), alg.dim)


def power_form(alg: Algebra, x: Element, z: Element) -> tuple[Element, int]:
    """Write z = a * x^n with a a unit and n >= 1.

    Every nonzero member of Rx has this form when R/Ann(x) is a principal
    ideal ring (the caller's responsibility to ensure).  Raises
    NotExpressibleError otherwise, or when z is zero or outside Rx.
    """
    if z.is_zero():
        raise NotExpressibleError("not expressible")
    rx = gf.Subspace.span(alg.p, alg.dim, _mult_matrix(alg, x).rows)
    if not rx.contains(z.coeffs):
        raise NotExpressibleError("not expressible")
    n = 0
    xn = alg.unit()
    while n < alg.dim:
        n += 1
        xn = xn * x
        if xn.is_zero():
            break
        rows = _mult_matrix(alg, xn).rows
        a = gf.solve_combination(rows, z.coeffs, alg.p)
        if a is None:
            continue
        # the solution coset is a + Ann(x^n) which sits inside the maximal
        # ideal whenever x^n != 0, so a unit solution exists iff a is one
        if a[0] != 0:
            return alg.element(a), n
    raise NotExpressibleError("not expressible")
