from cellpack import Instance, RCSequence, render_packing_svg


def test_structure_of_worked_example(ex1):
    svg = render_packing_svg(ex1, RCSequence.from_string("CCRC"))
    # 8 labeled squares plus the strip frame.
    assert svg.count("<rect") == 8 + 1
    assert svg.count("<text") == 8
    # one horizontal partition (2 rows), three vertical (4 columns)
    assert svg.count("<line") == 1 + 3
    assert "INFEASIBLE" not in svg
    assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")


def test_single_square():
    svg = render_packing_svg(Instance.from_lengths((5,), 5), RCSequence())
    assert svg.count("<rect") == 2  # square + frame
    assert svg.count("<line") == 0


def test_infeasible_banner(ex1):
    svg = render_packing_svg(ex1, RCSequence.from_string("CCCCCCC"))
    assert "INFEASIBLE" in svg
    assert svg.count("<rect") == 8 + 1  # still fully drawn


def test_scale_changes_coordinates_only(ex1):
    small = render_packing_svg(ex1, RCSequence.from_string("CCRC"), scale=2)
    large = render_packing_svg(ex1, RCSequence.from_string("CCRC"), scale=8)
    assert small != large
    assert small.count("<rect") == large.count("<rect")


def test_deterministic(ex1):
    seq = RCSequence.from_string("CRCC")
    assert render_packing_svg(ex1, seq) == render_packing_svg(ex1, seq)


def test_fillers_not_drawn():
    inst = Instance.from_lengths((4, 3, 2), 9)
    svg = render_packing_svg(inst, RCSequence.from_string("CR"))  # 2x2 grid, one filler
    assert svg.count("<rect") == 3 + 1
