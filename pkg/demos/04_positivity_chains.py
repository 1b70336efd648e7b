# Positivity of T = sum c1^i and the explicit Chevalley chains behind it.
from oc_verifier import (
    chain_point_to_zero,
    chain_zero_to,
    make_shape,
    verify_conjecture_T_positive,
    verify_theorem_positive,
)

shape = make_shape(4, 5)
chain = chain_point_to_zero(shape)
acc = 1
print(chain.vertices[0])
for v, kind, c, d in zip(chain.vertices[1:], chain.edge_kinds, chain.edge_coefficients, chain.q_degrees()):
    acc *= c
    print(f"  --{kind:18s} x{c}-->  {acc} q^{d} {v}")

print(chain_zero_to(make_shape(2, 2), (3, -1)).vertices)

for k, n in [(2, 2), (3, 4), (4, 5)]:
    s = make_shape(k, n)
    pos = verify_theorem_positive(s)
    conj = verify_conjecture_T_positive(s)
    print(f"{s}: (a) {pos.a} (b) {pos.b} (c) {pos.c}; T[X(lam)] > 0 for all lam: {conj.holds}")
