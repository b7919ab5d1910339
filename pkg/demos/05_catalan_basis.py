# coding: utf-8

# # A basis for the coned Catalan arrangement

# In[1]:

from arrkit import arrangement as ar
from arrkit.catalan import catalan_basis, fpi_decompose
from arrkit.exactmath import MPoly
from arrkit.logmodule import addition_chain


# The decomposition into the F_{p,i} family, on a small example.

# In[2]:

x1, x2 = MPoly.var(0, 2), MPoly.var(1, 2)
print(fpi_decompose(x1 ** 2 + x2 ** 2))


# In[3]:

for n in (2, 3):
    cert = catalan_basis(n)
    print(f"Cat_{n}:", cert.exponents, "det =", cert.saito.scalar, "* Q")


# An independent route for n = 2, adding one hyperplane at a time.

# In[4]:

for step in addition_chain(ar.catalan(2)):
    print(step.exponents)
