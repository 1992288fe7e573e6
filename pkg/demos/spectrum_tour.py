"""Prime spectra of the five model rings, read off a witness split of M.

Once M = Rx + Ry + (simples) is in hand, the spectrum depends only on
which axes fail to be nilpotent: none (one closed point), one (a chain
of two primes), or both (an extra minimal prime for each axis).
"""

from cyclicideals import (build_algebra, find_m_decomposition,
                          parse_presentation, spec_classify)

MODELS = [
    ("power series, one variable", "field 2\nvars x\ntruncate 6\n"),
    ("square-zero pair",           "field 2\nvars x y\nrel x^2\nrel y^2\nrel x*y\n"),
    ("nilpotent pair, cube-zero",  "field 2\nvars x y\nrel x^3\nrel y^3\nrel x*y\n"),
    ("free axis + square-zero y",  "field 2\nvars x y\nrel x*y\nrel y^2\ntruncate 6\n"),
    ("two free axes",              "field 2\nvars x y\nrel x*y\ntruncate 6\n"),
]

if __name__ == "__main__":
    for label, text in MODELS:
        pres = parse_presentation(text)
        alg = build_algebra(pres)
        report = spec_classify(pres, find_m_decomposition(alg))
        primes = ", ".join(report.primes)
        trailer = "  (truncated model)" if report.truncated_model else ""
        print(f"{label:<28} case {report.case}:  Spec = {{{primes}}}  "
              f"krull dim {report.krull_dim}{trailer}")
