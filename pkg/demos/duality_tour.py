"""Each family evaluated through the other.

sin_{p,q} is tamh at the dual index r, tam_{p,q} is sinh at r, and cos
is a power of cosh.  The two routes share no code below the quadrature
layer, so agreement is a real check.
"""

from gentrig import cos_pq, duality, half_period, sin_pq, tam_pq

for p, q in [(2, 2), (3, 2), (1.5, 4), (4, 0.5)]:
    pg = duality.pairing(p, q)
    # the transforms need x inside both the sin_{p,q} and sinh_{r,q} domains
    x = 0.6 * min(1.0, half_period(pg.primal).value)
    print(f"(p, q) = ({p}, {q}), r = {pg.r:.12g}, x = {x:.4f}")
    for name, native, dual in [
        ("sin", sin_pq, duality.sin_via_dual),
        ("cos", cos_pq, duality.cos_via_dual),
        ("tam", tam_pq, duality.tam_via_dual),
    ]:
        a = native(pg.primal, x).value
        b = dual(pg, x).value
        print(f"  {name}: native {a:.16f}  via dual {b:.16f}  diff {abs(a - b):.1e}")
    trig, hyp = duality.transported_pythagorean(pg, x)
    print(f"  Pythagorean across the transform: {trig:.1e} (trig), {hyp:.1e} (hyp)")
    print()
