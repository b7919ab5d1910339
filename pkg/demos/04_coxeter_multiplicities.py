# coding: utf-8

# # Type A Coxeter arrangements with constant multiplicity

# In[1]:

from arrkit.coxeter import constant_multiplicity_basis, invariant_module, make_typeA, nabla, primitive_derivation
from arrkit.logmodule import saito_check
from arrkit.solomonterao import fitted_exponents


# In[2]:

C = make_typeA(2)
print("h =", C.h, "degrees", C.degrees)
print("basic invariants:", [P.to_str() for P in C.invariants])


# Free bases for m = 1..4 come from the primitive derivation. The Hilbert
# series fit gives the same exponents without any construction.

# In[3]:

for m in range(1, 5):
    cert = saito_check(C.arrangement.with_mult(m), constant_multiplicity_basis(C, m))
    print(m, cert.exponents, fitted_exponents(C.arrangement.with_mult(m)))


# Invariant generators for m = 5 sit in degrees e_i + 2h, and the primitive
# derivation pushes them down one step.

# In[4]:

IB = invariant_module(C, 5)
print(IB.degrees)
D = primitive_derivation(C)
for g in IB.generators:
    r = nabla(D, g)
    print(r.is_polynomial(), r.as_derivation().is_member(C.arrangement.with_mult(3)))
