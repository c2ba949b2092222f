import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootdisk import bounds as bd
from rootdisk import genpoly as gp
from rootdisk import oracle
from rootdisk.core import Disk, HypothesisError, Polynomial, RadiusAnomaly, cauchy_bound
from rootdisk.hypotheses import Theorem
from rootdisk.wedge import HALF_PI, Wedge

FIXTURE = Polynomial([4, 1, 1, 1])


# ---------------------------------------------------------------------------
# term-by-term reference formulas in plain python


def ref_thm17(p, t1, t2, k, alpha):
    n, a = p.degree, p.coeffs
    an = abs(a[n])
    center = (t1 - t2) - a[n - 1] / a[n]
    r = (2 * t2 * abs(a[k + 1]) + 2 * abs(a[k])) / (an * t1 ** (n - k - 1)) * math.cos(alpha)
    r += 2 * math.sin(alpha) / an * sum(abs(a[v]) / t1 ** (n - v - 1) for v in range(n - 1))
    r += (t2 + abs(a[n - 1] / a[n])) * (math.sin(alpha) - math.cos(alpha))
    return center, r


def ref_rsm_complex(p, t1, t2, k, alpha):
    n, a = p.degree, p.coeffs
    an = abs(a[n])
    ak1 = abs(a[k + 1]) if k + 1 <= n else 0.0
    lead = (2 * abs(a[k]) + 2 * t2 * ak1) / (t1 ** (n - k) * an)
    tail = sum(abs(a[j]) / t1 ** (n - j - 1) for j in range(n))
    return t1 * ((lead - 1) * math.cos(alpha) + math.sin(alpha)) + 2 * math.sin(alpha) / an * tail


def ref_thm110(p, t1, t2, k, m):
    n, a = p.degree, p.coeffs
    re, im = [c.real for c in a], [c.imag for c in a]
    an = abs(a[n])
    center = -(re[n - 1] - (t1 - t2) * re[n]) / a[n]
    r = 2 * (re[k + 1] * t2 + re[k]) / (an * t1 ** (n - k - 1))
    r += 2 * (im[m + 1] * t2 + im[m]) / (an * t1 ** (n - m - 1))
    r -= (t2 * re[n] + t1 * im[n] + re[n - 1]) / an
    return center, r


def ref_rsm_parts(p, t1, t2, k, m):
    n, a = p.degree, p.coeffs
    re = [c.real for c in a] + [0.0]
    im = [c.imag for c in a] + [0.0]
    return t1 / abs(a[n]) * (2 * t1 ** (k - n) * (re[k] + t2 * re[k + 1])
                             + 2 * t1 ** (m - n) * (im[m] + t2 * im[m + 1]) - (re[n] + im[n]))


specs17 = st.builds(lambda seed: gp.random_spec(np.random.default_rng(seed), "thm17"), st.integers(0, 2**32))
specs110 = st.builds(lambda seed: gp.random_spec(np.random.default_rng(seed), "thm110"), st.integers(0, 2**32))


class TestFixture:
    @pytest.mark.parametrize("fn", [
        lambda p: bd.bound_rsm_complex(p, 1.0, 0.0, k=0),
        lambda p: bd.bound_rsm_parts(p, 1.0, 0.0, k=0, m=0),
        lambda p: bd.bound_thm17(p, 1.0, 0.0, k=0),
        lambda p: bd.bound_thm110(p, 1.0, 0.0, k=0, m=0),
        lambda p: bd.bound_aziz_t(p, 1.0, k=0),
        lambda p: bd.bound_cor19(p, 1.0, k=0),
    ])
    def test_radius_seven(self, fn):
        rep = fn(FIXTURE)
        assert rep.radius == pytest.approx(7.0, abs=1e-12)
        assert abs(rep.center) <= 1e-12
        assert rep.enclosing >= oracle.roots(FIXTURE).max_modulus

    def test_cor112_radius(self):
        # t2 + a_2/a_3 + 2 a_0 / (a_3 t1^2) = 0 + 1 + 8
        rep = bd.bound_cor112(FIXTURE, 1.0, 0.0)
        assert rep.disk == Disk(0, 9.0)

    def test_report_json(self):
        obj = bd.bound_thm17(FIXTURE, 1.0, 0.0).to_json()
        assert obj["center"] == [0.0, 0.0] and obj["radius"] == 7.0 and obj["enclosing"] == 7.0
        assert obj["theorem"] == "thm17" and obj["k"] == 0 and obj["ok"] is True


class TestClassical:
    def test_ek_unit_disk(self):
        assert bd.bound_ek(Polynomial([1, 2, 3])).disk == Disk(0, 1.0)

    def test_ek_rejects(self):
        with pytest.raises(HypothesisError) as exc:
            bd.bound_ek(Polynomial([3, 2, 1]))
        assert not exc.value.report.ok

    def test_aziz_real(self):
        with pytest.raises(HypothesisError):
            bd.bound_aziz_real(Polynomial([6, 5, 1]), 3.0, 0.0)
        assert bd.bound_aziz_real(Polynomial([6, 5, 1]), 5.0, 0.0).disk == Disk(0, 5.0)

    def test_govil_rahman_small_wedge(self):
        p = Polynomial([1, 2 * cmath.exp(1j * math.pi / 6), 3])
        rep = bd.bound_govil_rahman(p)
        a = math.pi / 12
        assert rep.radius == pytest.approx(math.cos(a) + math.sin(a) + 2 * math.sin(a) / 3 * 6)
        ok, _ = oracle.verify_containment(oracle.roots(p), rep.disk)
        assert ok

    def test_govil_rahman_exactly_one_on_reals(self):
        assert bd.bound_govil_rahman(Polynomial([1, 1, 2, 5])).radius == 1.0

    def test_aziz_t_peak_at_top(self):
        # alpha = 0, k = n, t = 1 and |a_k| = |a_n|: t((2 - 1) * 1 + 0) = 1
        assert bd.bound_aziz_t(Polynomial([1, 2, 3]), 1.0, k=2).radius == 1.0


class TestWedgeDegenerate:
    def test_rsm_complex_right_angle(self):
        # cos = 0: t1 + (2/|a_n|) sum_{j<n} |a_j| / t1^(n-j-1) = 1 + 2 * 6
        rep = bd.bound_rsm_complex(FIXTURE, 1.0, 0.0, k=0, wedge=Wedge(0.0, HALF_PI))
        assert rep.radius == pytest.approx(13.0, abs=1e-12)

    def test_thm17_right_angle(self):
        # 2 (|a_0| + |a_1|) + (t2 + |a_2/a_3|) = 10 + 1
        rep = bd.bound_thm17(FIXTURE, 1.0, 0.0, k=0, wedge=Wedge(0.0, HALF_PI))
        assert rep.radius == pytest.approx(11.0, abs=1e-12)

    def test_wedge_must_cover(self):
        with pytest.raises(HypothesisError):
            bd.bound_thm17(FIXTURE, 1.0, 0.0, wedge=Wedge(1.0, 0.1))


class TestErrors:
    def test_inadmissible_k(self):
        with pytest.raises(HypothesisError):
            bd.bound_thm17(FIXTURE, 1.0, 0.0, k=1)

    def test_degree_two_thm17(self):
        with pytest.raises(HypothesisError) as exc:
            bd.bound_thm17(Polynomial([1, 2, 3]), 1.0, 0.0)
        assert "n ≥ 3 required" in exc.value.report.violations

    def test_negative_radius_raises(self):
        with pytest.raises(RadiusAnomaly) as exc:
            bd._make_disk(Theorem.THM17, 0, -1.0, t1=1.0)
        assert exc.value.inputs["t1"] == 1.0

    def test_nan_radius_raises(self):
        with pytest.raises(RadiusAnomaly):
            bd._make_disk(Theorem.THM17, 0, math.nan)

    def test_edge_index_flag(self):
        # increasing moduli split at k = n
        rep = bd.bound_rsm_complex(Polynomial([1, 2, 3]), 1.5, 0.0)
        assert rep.k == 2 and "edge-index" in rep.flags


class TestBestBound:
    def test_picks_smallest(self):
        reps = [bd.bound_rsm_complex(FIXTURE, 1.0, 0.0), bd.bound_cor112(FIXTURE, 1.0, 0.0)]
        assert bd.best_bound(FIXTURE, reps).theorem is Theorem.RSM_COMPLEX

    def test_tie_goes_to_earlier_theorem(self):
        reps = [bd.bound_thm17(FIXTURE, 1.0, 0.0, k=0), bd.bound_rsm_complex(FIXTURE, 1.0, 0.0, k=0)]
        assert bd.best_bound(FIXTURE, reps).theorem is Theorem.RSM_COMPLEX

    def test_empty(self):
        with pytest.raises(ValueError):
            bd.best_bound(FIXTURE, [])


class TestAgainstReference:
    @settings(max_examples=40, deadline=None)
    @given(specs17)
    def test_thm17_and_rsm_complex(self, spec):
        p = gp.gen_thm17_instance(spec)
        rep = bd.bound_thm17(p, spec.t1, spec.t2)
        center, r = ref_thm17(p, spec.t1, spec.t2, rep.k, rep.alpha)
        assert rep.center == pytest.approx(center, rel=1e-12, abs=1e-12)
        assert rep.radius == pytest.approx(r, rel=1e-12, abs=1e-12)
        if spec.t1 > spec.t2:
            rc = bd.bound_rsm_complex(p, spec.t1, spec.t2, k=rep.k)
            assert rc.radius == pytest.approx(ref_rsm_complex(p, spec.t1, spec.t2, rep.k, rep.alpha), rel=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(specs110)
    def test_thm110_and_rsm_parts(self, spec):
        p = gp.gen_thm110_instance(spec)
        rep = bd.bound_thm110(p, spec.t1, spec.t2)
        center, r = ref_thm110(p, spec.t1, spec.t2, rep.k, rep.m)
        assert rep.center == pytest.approx(center, rel=1e-12, abs=1e-12)
        assert rep.radius == pytest.approx(r, rel=1e-12, abs=1e-12)
        if spec.t1 > spec.t2:
            rp = bd.bound_rsm_parts(p, spec.t1, spec.t2, k=rep.k, m=rep.m)
            assert rp.radius == pytest.approx(ref_rsm_parts(p, spec.t1, spec.t2, rep.k, rep.m), rel=1e-12)


class TestProperties:
    @settings(max_examples=40, deadline=None)
    @given(specs17)
    def test_thm17_contains_roots(self, spec):
        p = gp.gen_thm17_instance(spec)
        ok, _ = oracle.verify_containment(oracle.roots(p), bd.bound_thm17(p, spec.t1, spec.t2).disk,
                                          1e-8 * cauchy_bound(p))
        assert ok

    @settings(max_examples=40, deadline=None)
    @given(specs110)
    def test_thm110_contains_roots(self, spec):
        p = gp.gen_thm110_instance(spec)
        ok, _ = oracle.verify_containment(oracle.roots(p), bd.bound_thm110(p, spec.t1, spec.t2).disk,
                                          1e-8 * cauchy_bound(p))
        assert ok

    @settings(max_examples=40, deadline=None)
    @given(specs17, st.floats(1e-3, 1e3))
    def test_scale_invariance(self, spec, lam):
        p = gp.gen_thm17_instance(spec)
        a = bd.bound_thm17(p, spec.t1, spec.t2)
        b = bd.bound_thm17(p.scaled(lam), spec.t1, spec.t2, k=a.k)
        assert b.radius == pytest.approx(a.radius, rel=1e-10, abs=1e-12)
        assert b.center == pytest.approx(a.center, rel=1e-10, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(specs17, st.floats(-math.pi, math.pi))
    def test_rotation_invariance(self, spec, phi):
        # moduli and a_{n-1}/a_n are unchanged by a common rotation
        p = gp.gen_thm17_instance(spec)
        a = bd.bound_thm17(p, spec.t1, spec.t2)
        b = bd.bound_thm17(p.scaled(cmath.exp(1j * phi)), spec.t1, spec.t2, k=a.k)
        assert b.radius == pytest.approx(a.radius, rel=1e-9, abs=1e-12)
        assert b.center == pytest.approx(a.center, rel=1e-9, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(specs110.map(lambda s: gp.GenSpec(**{**s.__dict__, "m": None})))
    def test_cor112_offset_from_thm110(self, spec):
        p = gp.gen_thm110_instance(spec)
        a = bd.bound_cor112(p, spec.t1, spec.t2)
        b = bd.bound_thm110(p, spec.t1, spec.t2, k=a.k, m=0)
        n = p.degree
        gap = 2 * (spec.t2 + p[n - 1].real / p[n].real)
        assert a.radius - b.radius == pytest.approx(gap, rel=1e-9, abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 12), st.integers(0, 2**32))
    def test_govil_rahman_one_on_ek(self, n, seed):
        assert bd.bound_govil_rahman(gp.gen_ek_instance(n, seed)).radius == 1.0
