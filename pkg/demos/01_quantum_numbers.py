"""Quantum integers, binomials, and symmetric function identities.

Everything in the package is exact: coefficients are Python ints, powers of
q are dictionary keys, and nothing is ever evaluated in floating point.
"""

from qwebs.qpoly import (
    LaurentPoly,
    bar,
    elementary_ring,
    power_sum_in_e,
    qbinom,
    qint,
)

# Quantum integers [n] = q^(n-1) + q^(n-3) + ... + q^(1-n). They specialize
# to ordinary integers at q = 1 and are symmetric under q <-> q^-1.
for n in range(5):
    print(f"[{n}] = {qint(n)}")

# Quantum binomials count symmetrically as well. The bar involution swaps
# q and q^-1; a quantum binomial is a fixed point.
b = qbinom(4, 2)
print(f"\n[4 choose 2] = {b}")
print(f"bar invariant: {bar(b) == b}")
print(f"at q=1: {b.evaluate(1)}")

# Pascal recursion with q-weights, the identity every table of these obeys:
lhs = qbinom(5, 2)
rhs = LaurentPoly.q_power(-2) * qbinom(4, 1) + LaurentPoly.q_power(3) * qbinom(4, 2)
print(f"\nPascal with twists: {lhs == rhs}")

# Power sums rewritten in elementary symmetric generators. The degree-3
# power sum of two variables collapses to a short expression:
ring = elementary_ring(2)
e1, e2 = ring.var("e1"), ring.var("e2")
p3 = power_sum_in_e(3, 2)
print(f"\np_3(e1, e2) = {p3}")
print(f"equals e1^3 - 3 e1 e2: {p3 == e1 * e1 * e1 - ring.const(3) * e1 * e2}")

# These power sums are the potentials of the matrix factorization layer;
# a strand of thickness k carries p_(N+1) in the k elementary generators
# of its alphabet.
print(f"\np_4 in three generators has {len(power_sum_in_e(4, 3).terms())} terms")
