#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ unit tests.

Run with `python3 tests/oracles/closed_form_oracle.py`; every printed value is
evaluated at 50 significant digits with mpmath, independently of the library.
"""
from mpmath import mp, mpf, sqrt, pi, cot, cos, csc, asin, quad, sin

mp.dps = 50


def area(n):
    return mpf(n) / 4 * cot(pi / n)


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 17)}")


T3 = area(3)
show("area(3)", T3)
show("area(6)", area(6))
show("exact(2,3)", sqrt(sqrt(3) * pi / 12))
show("exact(3,3)", sqrt(3) / 2)
for m, n in [(2, 3), (3, 3), (4, 3), (6, 3), (3, 4), (4, 4), (5, 4), (1, 3)]:
    show(f"lower_raw({m},{n})", (sqrt(m * n * pi * cot(pi / n)) - n) / 2)
for n in [3, 4, 6]:
    show(f"bracket_lo({n})", sqrt(n * pi * cot(pi / n)) / 2)
    show(f"bracket_hi({n})", sqrt(sqrt(3) / 2 * n * cot(pi / n)))
for A, tag in [(sqrt(3) / 8, "sqrt3/8"), (sqrt(3) / 24, "sqrt3/24"), (sqrt(3) / 12, "sqrt3/12"), (sqrt(3) / 4, "sqrt3/4"), (1, "1")]:
    show(f"sector_r({tag})", sqrt(6 * A / pi))
    show(f"sector_len({tag})", sqrt(2 * A * pi / 3))
    show(f"chord_r({tag})", sqrt(2 * A / pi))
    show(f"chord_len({tag})", sqrt(2 * A * pi))
    show(f"circle_len({tag})", 2 * sqrt(pi * A))
show("simplex(3,1)", sqrt(mpf(2) / 3))
show("conj(4,3)", sqrt(3 * sqrt(3) * pi / 8))
show("conj(6,3) main", sqrt(sqrt(3) * pi) / 2 + mpf(3) / 2 * (sqrt(3) - sqrt(sqrt(3) / pi)))
show("conj(6,3) alt", sqrt(3 * pi) / 2 + sqrt(3) - sqrt(3 * sqrt(3) / pi) / 2)


def family(n):
    s = sqrt(mpf(1) / (n + 1))
    return n * s + mpf(n) / 2 * (cos(pi / n) - s) * csc(pi / n)


for n in [3, 4, 5, 6]:
    show(f"family({n+1},{n})", family(n))

# Circular segment area by quadrature (independent of the closed form).
def segment_area_quad(r, d):
    # Region between chord y=0 (x in [-d, d]) and the minor arc of the circle
    # centred at (0, -sqrt(r^2-d^2)).
    h = sqrt(r * r - d * d)
    return quad(lambda x: sqrt(r * r - x * x) - h, [-d, d])


show("segment_quad(0.3031378,0.3031378)", segment_area_quad(mpf("0.3031378"), mpf("0.3031378")))
show("segment_quad(1,0.5)", segment_area_quad(mpf(1), mpf("0.5")))

# Median-arc split: three sectors of T/6 plus spokes to the centroid.
r6 = sqrt(6 * (T3 / 6) / pi)
show("median_r", r6)
show("median_spoke", 1 / sqrt(3) - r6)
show("median_total", 3 * sqrt(2 * (T3 / 6) * pi / 3) + 3 * (1 / sqrt(3) - r6))
r4 = sqrt(6 * (T3 / 4) / pi)
show("three_arcs_r", r4)
show("three_arcs_len_each", sqrt(2 * (T3 / 4) * pi / 3))
show("hex_h(4,100)", sqrt(4 * cot(pi / 4) / (6 * sqrt(3) * 100)))
