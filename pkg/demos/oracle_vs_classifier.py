"""Cross-check the constructive classifier against brute force.

Sweeps every GF(2) monomial presentation with up to three variables,
pure-power exponents 2 or 3, and any choice of vanishing pairwise
products, then decides each ring twice: structurally, and by
exhaustively decomposing every ideal in the census.
"""

from cyclicideals import classify_dsc, build_algebra, oracle_dsc
from cyclicideals.corpus import sweep_presentations

if __name__ == "__main__":
    tally = {"yes": 0, "no": 0}
    for label, pres in sweep_presentations():
        alg = build_algebra(pres)
        fast = classify_dsc(alg).answer
        slow = oracle_dsc(alg).answer
        marker = "agree" if fast == slow else "DISAGREE"
        tally[fast] = tally.get(fast, 0) + 1
        print(f"{label:<40} classifier={fast:<3} oracle={slow:<3} {marker}")
    print(f"\n{tally['yes']} rings have the property, {tally['no']} do not")
