"""
Rees matrix semigroups
======================

Triples (i, g, lambda) over an abelian group with a sandwich matrix. The
classifier looks for one of three 2x2 submatrix shapes.
"""

from wiremonoids import ReesMatrixSemigroup, a2, collapse_to_trivial, is_isomorphic, nfb_submatrix_classify, parse_group, parse_matrix
from wiremonoids.rees import Form3Witness

Z = parse_group("Z")
S = ReesMatrixSemigroup(Z, parse_matrix("e,e;e,(0|1)", Z))
x, y = S.triple(0, (2,), 1), S.triple(1, (-1,), 1)
print(x, "*", y, "=", S.mul(x, y))

cert = nfb_submatrix_classify(S.matrix, Z)
print(cert)

# For the third shape, R/J is A_2.
W = Form3Witness(S, cert)
print(is_isomorphic(W.quotient(), a2(), involution=False) is not None)

# Forgetting the group coordinate is a homomorphism onto the trivial-group version.
T, phi = collapse_to_trivial(S)
print(phi(S.mul(x, y)) == T.mul(phi(x), phi(y)))

for text, group in (("(1),(2);(3),0", "Z4"), ("0,(1);(2),0", "Z4"), ("e,e;e,e", "Z")):
    G = parse_group(group)
    print(text, "over", group, "->", nfb_submatrix_classify(parse_matrix(text, G), G))
