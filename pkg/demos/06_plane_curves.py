# coding: utf-8

# # Curves from a free basis
#
# Decone a free line arrangement and evaluate the two non-Euler basis
# elements on a generic linear form. The two curves meet exactly at the
# multiple points.

# In[1]:

from arrkit import arrangement as ar
from arrkit.curves import bezout_refutation, bezout_report, curve_pair


# In[2]:

pair = curve_pair(ar.stanley_extended())
print("C1:", pair.c1.to_str(["u", "v"]))
print("C2:", pair.c2.to_str(["u", "v"]))
for P, m in pair.points:
    print(P.coords, "mu", P.mu, "mult", m)


# In[3]:

rep = bezout_report(pair)
print(rep.to_json()["bezout_sum"], "=", rep.degree_product, rep.ok)


# For the non-free arrangement, a line carries too many multiple points for
# a cubic.

# In[4]:

print(bezout_refutation(ar.stanley()).to_json())
