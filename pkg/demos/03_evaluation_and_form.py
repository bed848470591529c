"""Evaluating closed webs and pairing open ones.

The representation functor sends a ladder to a matrix between wedge-power
tensor products. Closed ladders (highest weight at both ends) evaluate to
Laurent polynomials; open ladders with a common boundary pair through a
q-sesquilinear form.
"""

from qwebs.qpoly import LaurentPoly, qbinom
from qwebs.webs import Ladder, Rung, WebLinComb, d_norm, highest_weight_ladder
from qwebs.repfun import ev_closed, ladder_matrix, web_form

# A thin circle at N=2 evaluates to the quantum integer [2]; colored
# circles give quantum binomials.
circle = Ladder(2, 2, (2, 0), [Rung(1, -1, 1), Rung(1, 1, 1)])
print("thin circle:", ev_closed(circle))

c31 = Ladder(3, 2, (3, 0), [Rung(1, -1, 1), Rung(1, 1, 1)])
print("circle colored 1 at N=3:", ev_closed(c31), "=", qbinom(3, 1))

# The underlying matrices: a rung is a map between slice spaces, and a
# ladder is the product of its rungs, bottom first.
f = Ladder(2, 2, (2, 0), [Rung(1, -1, 1)])
M = ladder_matrix(f)
print(f"\nF-rung matrix is {M.nrows} x {M.ncols}")

# The web form pairs two ladders from the highest weight pattern up to a
# common top. The highest weight web has norm one.
w = highest_weight_ladder(2, 2, 1)
print("\n<w, w> =", web_form(w, w))

# A single F-rung has norm q[2]; stacking a digon multiplies by [2] again.
fef = Ladder(2, 2, (2, 0), [Rung(1, -1, 1), Rung(1, 1, 1), Rung(1, -1, 1)])
print("<F, F>     =", web_form(f, f))
print("<F, FEF>   =", web_form(f, fef))
print("<FEF, FEF> =", web_form(fef, fef))

# The form is antilinear in the first slot and linear in the second, so a
# q-power scalar comes out conjugated or plain depending on where it sits.
c = LaurentPoly.q_power(3)
print("\nantilinear first slot:", web_form(WebLinComb.of(f, c), fef) == c.bar() * web_form(f, fef))
print("linear second slot:   ", web_form(f, WebLinComb.of(fef, c)) == c * web_form(f, fef))

# Swapping the arguments conjugates the pairing up to the normalisation
# twist q^(2 d) attached to the common top weight.
d = d_norm(f.top, 2)
lhs = web_form(f, fef)
rhs = LaurentPoly.q_power(2 * d) * web_form(fef, f).bar()
print("twisted symmetry:     ", lhs == rhs)
