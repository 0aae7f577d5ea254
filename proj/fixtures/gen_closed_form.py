"""Regenerates closed_form.json: lk of the example region for odd and even k."""
import json
from fractions import Fraction

K_MAX = 40


def lk(r, k):
    if k % 2 == 1:
        return Fraction(k + 1, 2)
    return Fraction(k - 2, 2) + Fraction(2 * r - 1, r)


def text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


cases = [
    {
        "name": f"r={r}",
        "domain": {"kind": "example_r", "r": str(r)},
        "k_max": K_MAX,
        "expect": {"lk": [text(lk(r, k)) for k in range(1, K_MAX + 1)]},
    }
    for r in (2, 3, 4, 5, 10)
]

with open("closed_form.json", "w") as f:
    json.dump({"name": "closed_form", "cases": cases}, f, indent=1)
    f.write("\n")
