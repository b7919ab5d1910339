# coding: utf-8

# # Intersection lattices and point counts
#
# Everything here is exact: polynomials have rational coefficients and nothing
# is ever converted to floating point.

# In[1]:

from arrkit import arrangement as ar
from arrkit.lattice import build_lattice, chamber_count, char_poly, fq_count, poincare_poly


# The braid arrangement x_i = x_j in C^4 has 6 hyperplanes.

# In[2]:

A = ar.braid(4)
L = build_lattice(A)
print("flats per codimension:", L.counts())
print("chi    =", char_poly(L))
print("pi     =", poincare_poly(L))
print("regions:", chamber_count(L))


# Counting points of F_q^n off the arrangement. The formula evaluates chi(q);
# enumeration walks over all q^n points, so keep it small.

# In[3]:

B = ar.braid(3)
for q in (5, 7, 11):
    print(q, fq_count(B, q), fq_count(B, q, mode="enumerate"))


# The .arr text format round-trips.

# In[4]:

text = ar.to_arr(ar.stanley())
print(text)
assert ar.parse_arr(text) == ar.stanley()
