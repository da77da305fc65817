import random
from fractions import Fraction

import pytest

from cellpack import Instance, eval_rc_sequence, fptas, scale_factor, solve_dp


class TestScaleFactor:
    def test_worked_example(self, ex1):
        assert scale_factor(ex1, "0.4") == 1
        assert scale_factor(ex1, 2) == 5
        assert scale_factor(ex1, Fraction(2)) == 5

    def test_floor_at_one(self, ex1):
        assert scale_factor(ex1, "1/1000000") == 1

    def test_exact_rational(self, ex1):
        # 0.6 * 20 / 8 = 3/2, kept exact rather than 1.4999....
        assert scale_factor(ex1, "0.6") == Fraction(3, 2)

    def test_rejects_bad_epsilon(self, ex1):
        with pytest.raises(ValueError):
            scale_factor(ex1, 0)
        with pytest.raises(ValueError):
            scale_factor(ex1, "-1/2")
        with pytest.raises(TypeError):
            scale_factor(ex1, 0.25)


class TestFptas:
    def test_unit_factor_is_exact(self, ex1):
        # eps=0.4 gives t=1, so the scaled instance is the original.
        assert fptas(ex1, "0.4").objective == 33

    def test_single_square(self):
        inst = Instance.from_lengths((9,), 12)
        assert fptas(inst, "3").objective == 9

    def test_bound_for_large_epsilon(self, ex1):
        sol = fptas(ex1, 2)
        assert 33 <= sol.objective <= 99

    def test_result_revalidates_under_true_lengths(self, ex1):
        sol = fptas(ex1, 2)
        width, height = eval_rc_sequence(sol.rc_sequence, ex1)
        assert height == sol.objective
        assert width == sol.budget_used <= ex1.strip_width

    def test_scaled_heights_keep_instance_ordering(self):
        # ceil(l/t) stays non-increasing, so the rectangle solver never rejects.
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randint(1, 12)
            lengths = [rng.randint(1, 60) for _ in range(n)]
            inst = Instance.from_lengths(lengths, sum(lengths))
            fptas(inst, "7/3")  # would raise on an ordering violation

    @pytest.mark.parametrize("eps", ["0.1", "0.25", "0.5", "1", "2"])
    def test_ratio_on_random_instances(self, eps):
        rng = random.Random(hash(eps) & 0xFFFF)
        bound = 1 + Fraction(eps)
        for _ in range(25):
            n = rng.randint(1, 10)
            lengths = [rng.randint(1, 20) for _ in range(n)]
            b = rng.randint(max(lengths), sum(lengths))
            inst = Instance.from_lengths(lengths, b)
            opt = solve_dp(inst).objective
            got = fptas(inst, eps).objective
            assert opt <= got <= bound * opt
