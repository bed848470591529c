"""Building and transforming ladder webs.

A ladder lives on m uprights; every horizontal slice is a gl weight, a
tuple of thicknesses in [0, N]. Rungs move thickness sideways. Anything
that would push a label outside [0, N] collapses to the Zero marker.
"""

from qwebs.webs import (
    Ladder,
    Rung,
    Zero,
    compose,
    d_norm,
    enumerate_weights,
    highest_weight_ladder,
    ladder_from_sequence,
    reflect,
)

# The weights with two parts summing to 2, bounded by N = 2:
print("weights (m=2, d=2, N=2):", [tuple(k) for k in enumerate_weights(2, 2, 2)])

# A ladder is a base weight plus rungs listed bottom to top. E pulls
# thickness left, F pushes it right.
u = Ladder(2, 2, (2, 0), [Rung(1, -1, 1), Rung(1, 1, 1)])
print("\nslices of a digon:", [tuple(k) for k in u.weights()])

# The one-line text format round-trips exactly.
text = str(u)
print("text:", text)
print("round-trip:", Ladder.parse(text) == u)

# Divided-power sequences become ladders; the rightmost factor acts first.
# F then E applied to the weight (2):
lad = ladder_from_sequence([(1, 1, 1), (-1, 1, 1)], (2,), 2, 2, 2)
print("\nE1*F1 at (2):", lad)

# Out-of-range intermediates are Zero, a value rather than an error:
dead = ladder_from_sequence([(1, 1, 1)], (2,), 2, 2, 2)
print("E1 at (2):", dead, "| is Zero:", dead is Zero)

# Reflection flips a ladder upside down, swapping E with F. It reverses
# composition, the way transposition reverses matrix products.
up = Ladder(2, 2, (1, 1), [Rung(1, 1, 1)])
down = Ladder(2, 2, (2, 0), [Rung(1, -1, 1)])
both = compose(up, down)
print("\nreflect(compose):", reflect(both) == compose(reflect(down), reflect(up)))

# The highest weight ladder is ell parallel strands of full thickness; its
# normalization exponent vanishes, by design.
w = highest_weight_ladder(2, 3, 1)
print("\nhighest weight ladder:", w)
print("d-norm of its boundary:", d_norm(w.base, 2))
print("d-norm of (1,1):", d_norm((1, 1), 2))
