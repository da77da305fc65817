import random
from pathlib import Path

import pytest

from cellpack import (
    Instance,
    RCSequence,
    assignment_from_layout,
    brute_force_oracle,
    check_assignment,
    emit_basic_model,
    emit_model,
    emit_rc_model,
    emit_sorted_model,
    parse_assignment_text,
    rc_sequence_to_layout,
)

GOLDEN = Path(__file__).parent / "golden"


def small_instances():
    return {
        "n1": Instance.from_lengths((5,), 5),
        "n2": Instance.from_lengths((5, 4), 9),
        "n8": Instance.from_lengths((20, 15, 13, 13, 11, 8, 5, 3), 60),
    }


class TestStructure:
    def test_basic_counts(self):
        doc = emit_basic_model(Instance.from_lengths((5, 4), 9))
        assert len(doc.binaries) == 8
        assert doc.variable_count == 8 + 4
        names = [row.name for row in doc.rows]
        assert names.count("assign_1") == 1 and sum(n.startswith("assign") for n in names) == 2
        assert sum(n.startswith("cell") for n in names) == 4
        assert sum(n.startswith("rowh") for n in names) == 4
        assert sum(n.startswith("colw") for n in names) == 4
        assert names[-1] == "width"

    def test_basic_smallest_instance_rows(self):
        doc = emit_basic_model(Instance.from_lengths((5,), 5))
        assert [row.name for row in doc.rows] == [
            "assign_1", "cell_1_1", "rowh_1_1", "colw_1_1", "width",
        ]
        assert len(doc.binaries) == 1

    def test_cubic_binary_count(self, ex1):
        assert len(emit_basic_model(ex1).binaries) == 8 ** 3
        assert emit_basic_model(ex1).variable_count == 512 + 16
        assert emit_sorted_model(ex1).variable_count == 512

    def test_sorted_has_no_continuous_variables(self, ex1):
        doc = emit_sorted_model(ex1)
        assert doc.continuous == ()
        assert "y_1" not in doc.text and "z_1" not in doc.text

    def test_sorted_row_count_n2(self):
        doc = emit_sorted_model(Instance.from_lengths((5, 4), 9))
        # 2 assign + 4 cell + 1 width + 2 row-direction + 2 column-direction
        assert doc.constraint_count == 11

    def test_rc_two_binaries_per_square(self, ex1):
        doc = emit_rc_model(ex1)
        assert doc.variable_count == 16
        assert len(doc.binaries) == 16

    def test_rc_smallest_instance(self):
        doc = emit_rc_model(Instance.from_lengths((5,), 5))
        assert [row.name for row in doc.rows] == ["width", "base_mu", "base_nu"]
        assert "obj: 5 mu_1" in doc.text

    def test_rc_quadratic_row_for_two_squares(self):
        doc = emit_rc_model(Instance.from_lengths((5, 4), 9))
        assert " rc_2: mu_2 + nu_2 + [ mu_1 * nu_1 ] >= 2" in doc.text
        assert " cap_2: mu_2 + nu_2 <= 1" in doc.text

    def test_relaxed_variant_drops_caps(self, ex1):
        doc = emit_rc_model(ex1, "relaxed")
        assert all(not row.name.startswith("cap") for row in doc.rows)
        assert emit_rc_model(ex1).constraint_count == doc.constraint_count + 7

    def test_variant_rejected_elsewhere(self, ex1):
        with pytest.raises(ValueError):
            emit_model(ex1, "basic", "relaxed")
        with pytest.raises(ValueError):
            emit_model(ex1, "nope")


class TestEmissionDeterminism:
    @pytest.mark.parametrize("kind", ["basic", "sorted", "rc"])
    def test_repeat_emission_identical(self, ex1, kind):
        assert emit_model(ex1, kind).text == emit_model(ex1, kind).text

    @pytest.mark.parametrize("tag", ["n1", "n2", "n8"])
    @pytest.mark.parametrize("kind", ["basic", "sorted", "rc"])
    def test_golden_bytes(self, tag, kind):
        inst = small_instances()[tag]
        expected = (GOLDEN / f"{tag}_{kind}.lp").read_text(encoding="ascii")
        assert emit_model(inst, kind).text == expected


class TestCheckAssignment:
    def test_rc_assignment_from_worked_sequence(self, ex1):
        layout = rc_sequence_to_layout(RCSequence.from_string("CCRC"))
        asg = assignment_from_layout("rc", ex1, layout)
        assert {i for i in range(1, 9) if asg[f"mu_{i}"]} == {1, 4}
        assert {i for i in range(1, 9) if asg[f"nu_{i}"]} == {1, 2, 3, 7}
        feasible, objective, violated = check_assignment(emit_rc_model(ex1), ex1, asg)
        assert feasible and objective == 33 and violated == []

    def test_all_zero_violates_base_rows(self, ex1):
        doc = emit_rc_model(ex1)
        zero = {name: 0 for name in doc.binaries}
        feasible, objective, violated = check_assignment(doc, ex1, zero)
        assert not feasible and objective == 0
        assert "base_mu" in violated and "base_nu" in violated

    def test_unsorted_placement_violates_order_rows(self, ex1):
        from cellpack import Layout

        placement = Layout.from_rows([[3, 7, 2], [5, 6, 9], [4, 1, 8]])
        doc = emit_sorted_model(ex1)
        asg = assignment_from_layout("sorted", ex1, placement)
        feasible, _, violated = check_assignment(doc, ex1, asg)
        assert not feasible
        assert any(name.startswith(("rsort", "csort")) for name in violated)

    def test_width_row_violation(self):
        inst = Instance.from_lengths((5, 5), 5)
        doc = emit_rc_model(inst)
        asg = {"mu_1": 1, "nu_1": 1, "mu_2": 0, "nu_2": 1}
        feasible, _, violated = check_assignment(doc, inst, asg)
        assert not feasible and "width" in violated

    def test_error_cases(self, ex1):
        doc = emit_rc_model(ex1)
        good = {name: 0 for name in doc.binaries}
        with pytest.raises(ValueError, match="unknown variable"):
            check_assignment(doc, ex1, {**good, "mu_99": 0})
        with pytest.raises(ValueError, match="missing binary"):
            check_assignment(doc, ex1, {"mu_1": 1})
        with pytest.raises(ValueError, match="non-binary"):
            check_assignment(doc, ex1, {**good, "mu_1": 2})

    @pytest.mark.parametrize("kind", ["basic", "sorted", "rc"])
    def test_oracle_solutions_check_out(self, kind):
        rng = random.Random(55)
        for _ in range(25):
            n = rng.randint(1, 6)
            lengths = [rng.randint(1, 20) for _ in range(n)]
            b = rng.randint(max(lengths), sum(lengths))
            inst = Instance.from_lengths(lengths, b)
            sol = brute_force_oracle(inst)
            layout = rc_sequence_to_layout(sol.rc_sequence)
            doc = emit_model(inst, kind)
            asg = assignment_from_layout(kind, inst, layout)
            feasible, objective, violated = check_assignment(doc, inst, asg)
            assert feasible, (kind, inst.lengths, b, violated)
            assert objective == sol.objective

    def test_relaxed_variant_accepts_oracle_solutions(self, ex1):
        sol = brute_force_oracle(ex1)
        layout = rc_sequence_to_layout(sol.rc_sequence)
        doc = emit_rc_model(ex1, "relaxed")
        feasible, objective, _ = check_assignment(doc, ex1, assignment_from_layout("rc", ex1, layout))
        assert feasible and objective == sol.objective


class TestAssignmentFile:
    def test_parse_roundtrip(self):
        text = "# solution\nmu_1 1\nnu_1 1  # bottom-left\n\nmu_2 0\n"
        assert parse_assignment_text(text) == {"mu_1": 1, "nu_1": 1, "mu_2": 0}

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_assignment_text("mu_1 1\nmu_2 one\n")
        with pytest.raises(ValueError, match="line 1"):
            parse_assignment_text("mu_1\n")
        with pytest.raises(ValueError, match="duplicate"):
            parse_assignment_text("mu_1 1\nmu_1 0\n")
