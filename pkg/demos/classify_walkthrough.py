"""Decide the direct-sum-of-cyclics property for two small rings.

The first ring says yes and shows its witness; the second is the
smallest kind of refusal: three independent non-simple axes always
leave one ideal that no family of cyclic submodules can cover.
"""

from cyclicideals import build_algebra, classify_dsc, parse_presentation

YES_RING = """
field 2
vars x y
rel x^3
rel y^3
rel x*y
"""

NO_RING = """
field 2
vars x1 x2 x3
rel x1^3 / rel x2^3 / rel x3^3
rel x1*x2 / rel x1*x3 / rel x2*x3
"""


def report(text: str) -> None:
    alg = build_algebra(parse_presentation(text))
    verdict = classify_dsc(alg)
    print(f"ring of dimension {alg.dim}: {verdict.answer}")
    if verdict.witness is not None:
        w = verdict.witness
        parts = [f"R({g})" for g in (w.x, w.y) if g is not None]
        parts += [f"R({s}) [simple]" for s in w.simples]
        print("  witness: M =", " + ".join(parts))
    if verdict.counterexample is not None:
        basis = ", ".join(str(b) for b in verdict.counterexample.basis_elements())
        print(f"  stuck ideal: span{{{basis}}}")
        print(f"  reason: {verdict.counterexample_note}")
    for note in verdict.notes:
        print(f"  note: {note}")
    print()


if __name__ == "__main__":
    report(YES_RING)
    report(NO_RING)
