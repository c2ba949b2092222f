"""
One polynomial, four disks
==========================

The cubic p(z) = z^3 + z^2 + z + 4 (coefficients listed from a_0 upward) is
small enough to evaluate every bound by hand. At t1 = 1, t2 = 0 its condition
sequence is (4, -3, 0, 0), which splits at k = 0, and the complex, real-part,
off-center and part-wise off-center bounds all land on the same disk.
"""

import numpy as np

from rootdisk import Polynomial, bound_rsm_complex, bound_rsm_parts, bound_thm17, bound_thm110
from rootdisk import condition_seq, oracle

p = Polynomial([4, 1, 1, 1])

# the sign pattern that every theorem below relies on
s = condition_seq(p.moduli, 1.0, 0.0)
print("condition sequence:", s.values)

# %%
# Each bound checks its own hypotheses and reports the split it used.

reports = [
    bound_rsm_complex(p, 1.0, 0.0),
    bound_rsm_parts(p, 1.0, 0.0),
    bound_thm17(p, 1.0, 0.0),
    bound_thm110(p, 1.0, 0.0),
]
for rep in reports:
    print(f"{rep.theorem.value:12s} k={rep.k} m={rep.m} center={rep.center:.3g} radius={rep.radius:.15g}")

# %%
# The roots themselves, from the independent simultaneous-iteration solver.

rs = oracle.roots(p)
for z in rs.roots:
    print(f"  z = {z.real:+.12f} {z.imag:+.12f}i   |z| = {abs(z):.12f}")
print("largest modulus:", rs.max_modulus)
print("tightness of the common disk:", oracle.tightness(rs, reports[0].disk))

# %%
# A radius of 7 is far from sharp here: the largest root has modulus about 1.74.
# The parameter search in ``03_parameter_search.py`` shows how much of that gap
# a better (t1, t2) recovers.
assert np.isclose(reports[2].radius, 7.0)
