# coding: utf-8

# # Hilbert series, the limit formula and Chern classes
#
# Graded pieces of the logarithmic modules are computed degree by degree.
# Their Hilbert series are rational and can be fitted exactly.

# In[1]:

from arrkit import arrangement as ar
from arrkit.lattice import char_poly
from arrkit.solomonterao import chern_check, d_hilbert, phi_polynomial, limit_chi


# In[2]:

H, dims = d_hilbert(ar.stanley())
print("Hilb(D) =", H)
print(dims.as_list())


# Fitting all the form modules gives a two-variable series. Its limit along
# y = t(1-x) - 1 recovers chi, free or not.

# In[3]:

for A in (ar.boolean(3), ar.stanley()):
    phi = phi_polynomial(A)
    print(limit_chi(phi), "vs", char_poly(A))


# In[4]:

rep = chern_check(ar.stanley())
print("c_t =", rep.chern.to_str("t"), " expected", rep.expected.to_str("t"), " agrees:", rep.agrees)
