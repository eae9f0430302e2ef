"""How sin_{p,q} and sinh_{p,q} change shape with (p, q).

For p > 1 the sine rises to 1 at a finite half-period; for p <= 1 the
half-period is infinite and the sine creeps up to 1 like tanh.  The
hyperbolic sine either grows for ever or blows up at a finite point,
depending on the dual index r.
"""

import numpy as np

from gentrig import dual_index, half_period, sin_pq, sinh_pq, validate


def sketch(label, xs, ys, width=40):
    print(label)
    top = max(ys)
    for x, y in zip(xs, ys):
        bar = "#" * int(round(width * y / top))
        print(f"  x={x:6.3f}  {y:10.6f}  {bar}")
    print()


for p, q in [(2, 2), (3, 1.5), (1.5, 3), (1, 2)]:
    pair = validate(p, q)
    h = half_period(pair)
    end = h.value if h.finite else 4.0
    xs = np.linspace(0, 0.98 * end, 8)
    ys = [sin_pq(pair, float(x)).value for x in xs]
    hp = f"{h.value:.10f}" if h.finite else "inf"
    sketch(f"sin_{{{p},{q}}}, half-period {hp}", xs, ys)

# sinh: unbounded domain when r <= 1, finite blow-up when r > 1
for p, q in [(2, 2), (1.2, 3)]:
    pair = validate(p, q)
    r = dual_index(pair)
    h = half_period(validate(r, q))
    end = 0.95 * h.value if h.finite else 2.5
    xs = np.linspace(0, end, 8)
    ys = [sinh_pq(pair, float(x)).value for x in xs]
    tail = f"blows up at {h.value:.6f}" if h.finite else "defined on all of [0, inf)"
    sketch(f"sinh_{{{p},{q}}}, dual index r = {r:.4f}, {tail}", xs, ys)
