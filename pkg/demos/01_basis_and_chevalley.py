# Schubert basis of IG(2, 5) and the quantum Chevalley rule.
from oc_verifier import chevalley_mult, enumerate_basis, make_shape, to_even

shape = make_shape(2, 2)
print(shape, "dim", shape.dimension, "Fano index", shape.fano_index)

# the basis, ordered by codimension; -1 parts are allowed when the first row is full
for lam in enumerate_basis(shape):
    print(f"  {str(lam):10s} codim {sum(lam)}   even diagram {to_even(shape, lam)}")

# [X(1)] * [X(lam)] for every class: covers with 2^A coefficients plus q-terms
for lam in enumerate_basis(shape):
    print(f"[X(1)] * [X{lam}] = {chevalley_mult(shape, lam)}")

# powers of the hyperplane class: the classical part of h^5 [X(0,0)] is deg IG(2,5) times the point
vals = {(0, 0): 1}
for _ in range(shape.dimension):
    nxt = {}
    for lam, c in vals.items():
        for t in chevalley_mult(shape, lam).classical_terms:
            nxt[t.partition] = nxt.get(t.partition, 0) + c * t.coefficient
    vals = nxt
print("h^5 =", vals)
