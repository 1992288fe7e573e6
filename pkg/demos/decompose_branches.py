"""Walk one ideal through each decomposition branch and read the trace.

The decomposer picks the cheapest applicable route: a principal chunk
inside one axis, a semisimple pile killed by M, a single-axis split
with a socle correction, the two-axes cover, or the diagonal trick for
ideals that cling to both axes at once.
"""

from cyclicideals import (build_algebra, decompose_ideal, find_m_decomposition,
                          ideal_from_generators, parse_element,
                          parse_presentation)

PAIR = "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y\n"
AXIS = "field 2\nvars x y\nrel x*y\nrel y^2\ntruncate 6\n"


def show(alg, dec, gens: list[str]) -> None:
    i = ideal_from_generators(alg, [parse_element(alg, g) for g in gens])
    out = decompose_ideal(alg, dec, i)
    t = out.trace
    knobs = ", ".join(f"{k}={getattr(t, k)}" for k in ("axis", "n0", "m0", "l0")
                      if getattr(t, k) is not None)
    print(f"ideal ({', '.join(gens)}):  branch {t.branch}"
          + (f"  [{knobs}]" if knobs else ""))
    for g, simple, d in zip(out.generators, out.simple_flags, t.dims):
        print(f"    summand R({g})  dim {d}" + ("  simple" if simple else ""))


if __name__ == "__main__":
    pair = build_algebra(parse_presentation(PAIR))
    wit = find_m_decomposition(pair)
    print("ring GF(2)[x,y]/(x^3, y^3, x*y)")
    show(pair, wit, ["x^2", "y^2"])      # semisimple: M kills everything
    show(pair, wit, ["x", "y"])          # two axes, one generator each
    show(pair, wit, ["x + y"])           # diagonal: cyclic after all
    show(pair, wit, ["x + y^2"])         # diagonal with uneven exponents
    print()

    axis = build_algebra(parse_presentation(AXIS))
    wit = find_m_decomposition(axis)
    print("ring GF(2)[x,y]/(x*y, y^2), degree-6 model")
    show(axis, wit, ["x^3"])             # principal inside the chain axis
    show(axis, wit, ["x + y"])           # axis generator plus a correction
    show(axis, wit, ["x^2", "y"])        # axis power, simple tag-along
