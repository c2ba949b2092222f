"""
Choosing t1 and t2
==================

Every parameterized bound holds for any (t1, t2) that satisfies its sign
conditions, so the radius can be minimized over the feasible set. The search
works on a grid in t1 and the ratio t2/t1, then subdivides around the best
point.
"""

from rootdisk import Polynomial, SearchConfig, Theorem, feasible_region_sample, optimize_params, oracle

# %%
# z^2 + z + 1 has all its roots on the unit circle, so no valid disk can be
# smaller than radius 1, and the search finds exactly that.

res = optimize_params(Polynomial([1, 1, 1]), Theorem.AZIZ_REAL)
print(f"[1,1,1] aziz_real: t1 = {res.best.t1:.10f}, radius = {res.best.radius:.10f}")

# %%
# z^2 + 5z + 6 = (z + 2)(z + 3). Feasibility forces t1 >= 5 here, which is
# loose against the true spectral radius of 3.

p = Polynomial([6, 5, 1])
res = optimize_params(p, Theorem.AZIZ_REAL)
pts = feasible_region_sample(p, Theorem.AZIZ_REAL)
print(f"[6,5,1] aziz_real: t1 = {res.best.t1:.10f}; smallest feasible grid t1 = {min(t for t, *_ in pts):.4f}")

# %%
# The cubic from the first demo. At fixed parameters the off-center disks sit
# inside the origin-centered ones, but that ordering need not survive
# optimization: thm17 only admits splits k <= n - 3, which here pins it to
# the hand-picked point and radius 7, while rsm_complex may split anywhere
# and finds a disk about three times smaller.

p = Polynomial([4, 1, 1, 1])
top = oracle.roots(p).max_modulus
for th in (Theorem.RSM_COMPLEX, Theorem.THM17, Theorem.RSM_PARTS, Theorem.THM110, Theorem.COR112):
    res = optimize_params(p, th)
    b = res.best
    print(f"{th.value:12s} t1={b.t1:.6f} t2={b.t2:.6f} enclosing={b.enclosing:.6f} "
          f"tightness={top / b.enclosing:.3f} feasible={res.feasible_fraction:.2%}")

# %%
# A coarser configuration trades a little accuracy for speed.

fast = SearchConfig(grid_points=16, refine_iterations=1)
res = optimize_params(p, Theorem.THM110, fast)
print(f"coarse thm110: enclosing={res.best.enclosing:.6f} after {res.evaluations} evaluations")
