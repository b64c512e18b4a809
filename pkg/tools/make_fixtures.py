#!/usr/bin/env python3
"""Regenerate the committed test fixture corpora (deterministic, seeded).

Writes tests/fixtures/qx_corpus.json (rational-function modules) and
tests/fixtures/gauss_corpus_p{2,3,5}.json (p-adic Gauss-ring modules).
Run from the repository root:  python3 tools/make_fixtures.py
"""

import json
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def random_poly(rng, var, max_deg, coeff_range=3):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(-coeff_range, coeff_range) for _ in range(deg + 1)]
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*{var}")
        else:
            terms.append(f"{c}*{var}^{i}")
    return " + ".join(terms) if terms else "0"


def qx_corpus(count=200, seed=20240811):
    rng = random.Random(seed)
    modules = []
    for k in range(count):
        n = 2 + k % 3  # ranks 2, 3, 4
        g1 = [[random_poly(rng, "x", 3) for _ in range(n)] for _ in range(n)]
        modules.append(
            {"ring": {"kind": "rational_function", "variable": "x"}, "n": n, "G1": g1}
        )
    return modules


def gauss_corpus(p, count=50, seed=991):
    rng = random.Random(seed + p)
    modules = []
    for k in range(count):
        n = 2 + k % 2  # ranks 2, 3
        scale = p ** rng.randint(0, 4)
        g1 = [
            [f"{scale}*({random_poly(rng, 't', 2, 2)})" for _ in range(n)]
            for _ in range(n)
        ]
        modules.append(
            {
                "ring": {"kind": "gauss_padic", "variable": "t", "p": p, "radius_exp": 0},
                "n": n,
                "G1": g1,
            }
        )
    return modules


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "qx_corpus.json").write_text(json.dumps(qx_corpus(), indent=1) + "\n")
    for p in (2, 3, 5):
        (OUT / f"gauss_corpus_p{p}.json").write_text(
            json.dumps(gauss_corpus(p), indent=1) + "\n"
        )
    print("fixtures written to", OUT)


if __name__ == "__main__":
    main()
