"""Wilker, Huygens, Cusa and Mitrinovic-Adamovic margins near 0.

Every margin vanishes to second order at x = 0, so computing it as a plain
difference of two nearly equal numbers loses everything.  The library
switches to an exact-rational series in sin^q there; this script shows the
margins shrinking smoothly with x, with their certified error estimates.
"""

from gentrig import half_period, validate
from gentrig.identities import margin

pair = validate(3, 2)
end = half_period(pair).value
print(f"(p, q) = (3, 2), half-period {end:.12f}\n")
print(f"{'x':>10} " + " ".join(f"{n:>22}" for n in ("wilker", "huygens", "cusa", "ma_lower")))
for frac in (0.9, 0.5, 1e-1, 1e-2, 1e-3, 1e-4, 1e-6):
    x = frac * end
    cells = []
    for name in ("wilker", "huygens", "cusa", "ma_lower"):
        m = margin(name, pair, x)
        cells.append(f"{m.value:11.4e} +-{m.err_est:8.1e}")
    print(f"{x:10.3e} " + " ".join(f"{c:>22}" for c in cells))

print("\nhyperbolic forms at (p, q) = (1.5, 3):")
pair = validate(1.5, 3)
for x in (1.5, 0.5, 1e-2, 1e-4):
    m = margin("wilker", pair, x, "hyp")
    print(f"  wilker margin at x = {x:g}: {m.value:.6e} (err {m.err_est:.1e})")
