# coding: utf-8

# # Free or not?
#
# Two arrangements of lines in the projective plane with very similar
# combinatorics: one is free, the other is not.

# In[1]:

from arrkit import arrangement as ar
from arrkit.lattice import char_poly
from arrkit.logmodule import freeness_test, minimal_generators, ziegler_coker_dim


# In[2]:

S = ar.stanley()
print("chi =", char_poly(S))   # factors as (t-1)(t-3)^2
v = freeness_test(S)
print(v.kind, "|", v.witness)


# The factorization of chi is not enough. The Ziegler restriction onto the
# first hyperplane has exponents (1, 5), and the cokernel of the
# restriction map measures the defect.

# In[3]:

z = ziegler_coker_dim(S, 0)
print("cokernel dim", z.dim, "by degree", z.by_degree, "prediction", z.prediction)
print("minimal generators of D in degrees", minimal_generators(S).degrees)


# Adding one line makes it free, with a Saito basis to prove it.

# In[4]:

E = ar.stanley_extended()
v = freeness_test(E)
print(v.kind, v.exponents)
for b in v.certificate.basis:
    print("  ", b)
print("det =", v.certificate.scalar, "* Q")
