"""
Comparing the bounds on generated instances
===========================================

Random polynomials are drawn so that the off-center modulus theorem (thm17)
and the part-wise theorem (thm110) hold by construction. For each draw we
compare the off-center disk with the origin-centered disk it refines, using
the enclosing radius |c| + r as the common yardstick.
"""

import numpy as np

from rootdisk import bounds as bd
from rootdisk import genpoly as gp
from rootdisk import oracle

rng = np.random.default_rng(2024)

# %%
# Modulus-based family. rsm_complex needs t1 > t2, so equal draws are skipped.

gains, tight = [], []
for _ in range(200):
    spec = gp.random_spec(rng, "thm17")
    p = gp.gen_thm17_instance(spec)
    if not spec.t1 > spec.t2:
        continue
    inner = bd.bound_thm17(p, spec.t1, spec.t2)
    outer = bd.rsm_complex_radius(p, spec.t1, spec.t2, inner.k, inner.alpha)
    gains.append(1 - inner.enclosing / outer)
    tight.append(oracle.tightness(oracle.roots(p), inner.disk))

gains = np.array(gains)
print(f"thm17 vs rsm_complex over {gains.size} draws")
print(f"  relative shrink of the enclosing radius: median {np.median(gains):.3f}, min {gains.min():.3f}")
print(f"  tightness of the thm17 disk: median {np.median(tight):.3f}")

# %%
# Part-wise family. Measured by enclosing radius the two disks agree up to
# round-off: the off-center form moves the center without shrinking |c| + r.

diffs = []
for _ in range(200):
    spec = gp.random_spec(rng, "thm110")
    p = gp.gen_thm110_instance(spec)
    if not spec.t1 > spec.t2:
        continue
    inner = bd.bound_thm110(p, spec.t1, spec.t2)
    outer = bd.rsm_parts_radius(p, spec.t1, spec.t2, inner.k, inner.m)
    diffs.append(outer - inner.enclosing)

diffs = np.array(diffs)
print(f"thm110 vs rsm_parts over {diffs.size} draws")
print(f"  outer minus inner enclosing radius: min {diffs.min():.2e}, max {diffs.max():.2e}")

# %%
# The real-coefficient corollary pays a fixed price over its parent theorem.

p = gp.gen_thm110_instance(gp.GenSpec(n=6, k=2, t1=1.0, seed=5))
a = bd.bound_cor112(p, 1.0, 0.0)
b = bd.bound_thm110(p, 1.0, 0.0, k=a.k, m=0)
print(f"cor112 radius {a.radius:.6f} vs thm110 radius {b.radius:.6f}; "
      f"gap {a.radius - b.radius:.6f} = 2 a_(n-1)/a_n = {2 * p[5].real / p[6].real:.6f}")
