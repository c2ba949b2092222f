import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootdisk import genpoly as gp
from rootdisk import hypotheses as hyp
from rootdisk.genpoly import GenerationError, GenSpec


class TestThm17:
    def test_real_positive_when_alpha_zero(self):
        p = gp.gen_thm17_instance(GenSpec(n=3, k=0, t1=1.0, alpha=0.0, seed=7))
        a = [c.real for c in p.coeffs]
        assert p.is_real and all(x > 0 for x in a)
        assert a[0] >= a[1] >= a[2] >= a[3]
        assert hyp.check_thm17(p, 1.0, 0.0).ok

    def test_minimum_ratio(self):
        spec = GenSpec(n=3, k=0, t1=1.0, alpha=0.0, seed=7, ratio_range=(1.05, 1.05))
        p = gp.gen_thm17_instance(spec)
        ratios = [p.coeffs[j].real / p.coeffs[j + 1].real for j in range(3)]
        np.testing.assert_allclose(ratios, 1.05)
        assert hyp.check_thm17(p, 1.0, 0.0).ok

    @pytest.mark.parametrize("spec", [
        GenSpec(n=2, k=0),
        GenSpec(n=5, k=3),
        GenSpec(n=5, k=0, t1=1.0, t2=2.0),
        GenSpec(n=5, k=0, alpha=2.0),
    ])
    def test_gates(self, spec):
        with pytest.raises(GenerationError) as exc:
            gp.gen_thm17_instance(spec)
        assert exc.value.spec == spec

    def test_wedge_respected(self):
        spec = GenSpec(n=6, k=2, t1=1.3, alpha=0.4, seed=11)
        p = gp.gen_thm17_instance(spec)
        assert hyp.check_thm17(p, spec.t1, 0.0).wedge.alpha <= 0.4 + 1e-12

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**63))
    def test_replay_passes_checker(self, seed):
        spec = gp.random_spec(np.random.default_rng(seed), "thm17")
        p = gp.gen_thm17_instance(spec)
        rep = hyp.check_thm17(p, spec.t1, spec.t2)
        assert rep.ok and rep.k <= spec.k


class TestThm110:
    def test_example(self):
        p = gp.gen_thm110_instance(GenSpec(n=4, k=1, m=2, t1=1.0, seed=3))
        rep = hyp.check_thm110(p, 1.0, 0.0)
        assert rep.ok and rep.k <= 1 and rep.m <= 2
        assert p.coeffs[-1].real > 0
        assert all(c.imag >= 0 for c in p.coeffs)

    def test_real_when_m_none(self):
        p = gp.gen_thm110_instance(GenSpec(n=4, k=1, t1=1.0, seed=3))
        assert p.is_real
        rep = hyp.check_thm110(p, 1.0, 0.0)
        assert rep.ok and rep.m_range == tuple(range(p.degree))

    @pytest.mark.parametrize("spec", [GenSpec(n=3, k=3), GenSpec(n=3, k=0, m=3), GenSpec(n=0, k=0)])
    def test_gates(self, spec):
        with pytest.raises(GenerationError):
            gp.gen_thm110_instance(spec)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**63))
    def test_replay_passes_checker(self, seed):
        spec = gp.random_spec(np.random.default_rng(seed), "thm110")
        p = gp.gen_thm110_instance(spec)
        rep = hyp.check_thm110(p, spec.t1, spec.t2)
        assert rep.ok and rep.k <= spec.k and rep.m <= spec.m


class TestEK:
    @given(st.integers(1, 15), st.integers(0, 2**32))
    def test_passes_checker(self, n, seed):
        p = gp.gen_ek_instance(n, seed)
        assert p.degree == n and hyp.check_ek(p)

    def test_ties_occur(self):
        p = gp.gen_ek_instance(12, 0, tie_prob=1.0)
        assert len(set(p.coeffs)) == 1


class TestCorpus:
    def test_seed_determinism(self):
        spec = GenSpec(n=7, k=2, t1=0.8, t2=0.1, alpha=1.0, seed=2**63 + 5)
        assert gp.gen_thm17_instance(spec) == gp.gen_thm17_instance(spec)

    def test_all_pass_and_coverage(self, thm17_corpus, thm110_corpus):
        combos = set()
        for spec, p in thm17_corpus:
            assert hyp.check_thm17(p, spec.t1, spec.t2).ok
            combos.add((spec.n, spec.k))
        assert len(combos) >= 10
        for spec, p in thm110_corpus:
            assert hyp.check_thm110(p, spec.t1, spec.t2).ok

    def test_margin(self, thm17_corpus):
        # the split is never decided by entries inside the tolerance band
        for spec, p in thm17_corpus[:100]:
            rep = hyp.check_thm17(p, spec.t1, spec.t2)
            s = hyp.condition_seq(p.moduli, spec.t1, spec.t2).values
            tol = hyp.default_tol(p)
            assert abs(s[rep.k]) >= tol

    def test_spec_json(self):
        obj = GenSpec(n=4, k=1, m=2).to_json()
        assert obj["ratio_range"] == [1.05, 3.0] and obj["m"] == 2

    def test_random_spec_gates(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            s = gp.random_spec(rng, "thm17")
            assert 3 <= s.n <= 10 and 0 <= s.k <= s.n - 3 and 0 <= s.alpha <= math.pi / 2
            s = gp.random_spec(rng, "thm110")
            assert 0 <= s.k <= s.n - 1 and 0 <= s.m <= s.n - 1

    def test_unknown_checker(self):
        with pytest.raises(ValueError):
            gp.generate(GenSpec(n=3, k=0), "thm99")
