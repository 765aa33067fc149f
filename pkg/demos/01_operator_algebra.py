"""A tour of phase-tracked arithmetic in PF(D, 2n).

Mode operators g_1 .. g_{2n} satisfy g_j^D = 1 and g_j g_k = w^2 g_k g_j for
j < k, with w = exp(i*pi/D).  Every element is kept in normal order, so
products, inverses and powers accumulate explicit phase exponents mod 2D.
"""

import numpy as np

from pfstab import PfOperator, jw_modes, op_matrix, parse_operator

D, MODES = 3, 4

g1 = PfOperator.gamma(D, MODES, 1)
g2 = PfOperator.gamma(D, MODES, 2)

print("g1 * g2 =", g1 * g2)          # already normal ordered, no phase
print("g2 * g1 =", g2 * g1)          # one swap: w^-2 = w^4 shows up
print("commutation exponent:", g1.commutation_exponent(g2))

adjoint_pair = parse_operator("g2^-1 g3", D, MODES)
print("\nadjoint written with a negative exponent:", adjoint_pair)
print("its charge:", adjoint_pair.charge(), "(0 means parity preserving)")
print("its cube:", adjoint_pair.power(3))

# The dense Jordan-Wigner representation provides independent ground truth:
# the normal-ordering bookkeeping must match literal matrix products.
rep = jw_modes(D, MODES // 2)
a = PfOperator(D, MODES, 1, (1, 2, 0, 1))
b = PfOperator(D, MODES, 4, (0, 1, 1, 2))
lhs = op_matrix(rep, a) @ op_matrix(rep, b)
rhs = op_matrix(rep, a * b)
print("\nmax |matrix(a) matrix(b) - matrix(a*b)| =", np.abs(lhs - rhs).max())

# Weight, support and diameter are what distance and l_con count.
logical = PfOperator(3, 8, 0, (0, 2, 2, 0, 0, 1, 0, 0))
print("\noperator", logical)
print("weight:", logical.weight(), "support:", logical.support(), "diameter:", logical.diameter())
