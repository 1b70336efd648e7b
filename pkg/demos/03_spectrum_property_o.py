# Eigenvalues of c1 * (.) at q = 1 and both Property O verdicts.
import numpy as np

from oc_verifier import build_c1_matrix, eigenvalues, make_shape, perron_root, property_o_report

shape = make_shape(2, 3)
c1 = build_c1_matrix(shape)
eigs = eigenvalues(c1)
delta0 = np.abs(eigs).max()
print("largest moduli:", np.round(np.abs(eigs[:8]), 6))
print("delta0 (QR)   :", delta0)
print("delta0 (power):", perron_root(c1)[0])
# peripheral eigenvalues divided by delta0 should be the 6th roots of unity
print(np.round(eigs[: shape.fano_index] / delta0, 8))

for k, n in [(1, 2), (2, 2), (3, 4), (5, 5)]:
    rep = property_o_report(make_shape(k, n))
    print(f"IG({k},{2 * n + 1}): exact {rep.exact_verdict} (period {rep.period}), "
          f"numeric cond1 {rep.condition1} cond2 {rep.condition2} h={rep.max_modulus_count}")
