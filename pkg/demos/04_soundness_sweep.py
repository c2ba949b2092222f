"""
A soundness sweep
=================

Draw instances from each generator, compute the disks, and check every root
from the independent solver against them. A single root outside a disk
(beyond round-off) would contradict the theorem or expose a bug.
"""

import time

import numpy as np

from rootdisk import bounds as bd
from rootdisk import genpoly as gp
from rootdisk import oracle
from rootdisk.core import cauchy_bound

rng = np.random.default_rng(0)
stats = {}


def record(name, p, disk):
    rs = oracle.roots(p)
    ok, worst = oracle.verify_containment(rs, disk, 1e-8 * max(1.0, cauchy_bound(p)))
    n, bad, w = stats.get(name, (0, 0, -np.inf))
    stats[name] = (n + 1, bad + (not ok), max(w, worst / max(1.0, cauchy_bound(p))))


t0 = time.perf_counter()

# %%
# Modulus-based theorems. The t-only forms apply when t2 = 0.

for _ in range(300):
    spec = gp.random_spec(rng, "thm17")
    p = gp.gen_thm17_instance(spec)
    record("thm17", p, bd.bound_thm17(p, spec.t1, spec.t2).disk)
    if spec.t1 > spec.t2:
        record("rsm_complex", p, bd.bound_rsm_complex(p, spec.t1, spec.t2).disk)
    if spec.t2 == 0:
        record("aziz_t", p, bd.bound_aziz_t(p, spec.t1).disk)
        record("cor19", p, bd.bound_cor19(p, spec.t1).disk)

# %%
# Real- and imaginary-part theorems.

for _ in range(300):
    spec = gp.random_spec(rng, "thm110")
    p = gp.gen_thm110_instance(spec)
    record("thm110", p, bd.bound_thm110(p, spec.t1, spec.t2).disk)
    if spec.t1 > spec.t2:
        record("rsm_parts", p, bd.bound_rsm_parts(p, spec.t1, spec.t2).disk)

# %%
# The classical unit-disk theorem and its wedge generalization.

for seed in range(300):
    p = gp.gen_ek_instance(int(rng.integers(2, 13)), seed)
    record("ek", p, bd.bound_ek(p).disk)
    record("govil_rahman", p, bd.bound_govil_rahman(p).disk)

print(f"{'theorem':14s} {'draws':>6s} {'outside':>8s} {'worst (|z-c|-r)/cb':>20s}")
for name, (n, bad, worst) in stats.items():
    print(f"{name:14s} {n:6d} {bad:8d} {worst:20.3e}")
print(f"elapsed {time.perf_counter() - t0:.2f}s")
