"""Transfer matrices: central coefficients of products with even cycles.

For a graph Q with even degrees, the subset-indexed matrix
Phi(S, T) = (-1)^|S| [x^(a + 1_T - 1_S)] Q  (a = half the degree vector)
is symmetric or skew-symmetric, so its eigenvalues are all real or all
imaginary, and tr(Phi^k) for even k can only vanish if Phi itself is
zero.  Since |tr(Phi^k)| is the central coefficient magnitude of the
product of Q's graph with the k-cycle, one nonzero almost-central
coefficient of Q certifies list-colorability bounds for the entire
family of products at once.
"""

from graphpoly import (
    build_cycle,
    build_cycle_power,
    build_phi,
    cartesian_product,
    central_exponent,
    check_certificate,
    coefficient,
    cycle_product_graph,
    even_cycle_certificate,
    trace_power,
)

# -- the triangle's matrix ----------------------------------------------------
phi = build_phi(build_cycle(3))
print("triangle Phi: skew?", phi.sigma == -1, "| nonzeros per block:", phi.block_nnz())

# Twelve unit entries in skew pairs force tr(Phi^2) = -12.
print("tr Phi^2 =", trace_power(phi, 2))

# -- the trace against a direct computation -----------------------------------
# tr Phi^4 must match the central coefficient of the 12-vertex product
# of the triangle with the 4-cycle, computed monomial by monomial.
tr4 = trace_power(phi, 4)
product = cartesian_product(build_cycle(3), build_cycle(4))
direct = coefficient(product, central_exponent(product))
print(f"|tr Phi^4| = {abs(tr4)}  vs  |direct central of C3 x C4| = {abs(direct)}")

# The k = 2 comparison uses the digon (doubled rungs) as the 2-cycle.
g2 = cycle_product_graph(build_cycle(3), 2)
print("|tr Phi^2| =", abs(trace_power(phi, 2)),
      " vs  |central of C3 x digon| =", abs(coefficient(g2, central_exponent(g2))))

# -- certificates --------------------------------------------------------------
# One certificate covers all even cycle lengths: the odd cycle C5 has a
# nonzero almost-central coefficient, so every C5 x C_even is 3-choosable.
cert = even_cycle_certificate(build_cycle(5), 4)
print("C5 certificate: AT(C5 x C_even) <=", cert["at_bound"],
      "| verifies:", check_certificate(cert).ok)

# Powers of cycles: C6^2 is 4-regular with a nonzero central coefficient
# (the power parameter + 1 divides the length), giving the bound p + 2.
cert = even_cycle_certificate(build_cycle_power(6, 2), 4)
print("C6^2 certificate: AT(C6^2 x C_even) <=", cert["at_bound"])
