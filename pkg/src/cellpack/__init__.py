"""Solvers, generators and model emitters for packing squares into
independent partition cells of a bounded-width strip."""

__version__ = "0.1.0"

from .approx import fptas, scale_factor
from .core import (
    ADD_COL,
    ADD_ROW,
    Instance,
    InstanceError,
    Layout,
    LayoutError,
    RCSequence,
    SolutionReport,
    apply_ac,
    apply_ar,
    base_layout,
    bottleneck_values,
    enumerate_sorted_layouts,
    eval_rc_sequence,
    is_rc_layout,
    is_sorted_layout,
    layout_height,
    layout_width,
    omega,
    rc_sequence_to_layout,
    sorted_to_rc_layout,
    to_sorted_layout,
)
from .exact import (
    DpSolution,
    RippInstance,
    brute_force_oracle,
    restricted_shapes,
    solve_dp,
    solve_dp_low_memory,
    solve_ripp_width_dp,
)
from .formulations import (
    ModelDocument,
    assignment_from_layout,
    check_assignment,
    emit_basic_model,
    emit_model,
    emit_rc_model,
    emit_sorted_model,
    parse_assignment_text,
)
from .instgen import (
    InstanceFormatError,
    PartitionInput,
    gen_uniform,
    parse_instance_text,
    read_instance,
    reduce_partition,
    render_instance_text,
    write_instance,
)
from .multidim import (
    KInstance,
    apply_thickness,
    solve_kdim_dp,
    solve_kdim_plan,
    solve_with_thickness,
)
from .render import render_packing_svg

__all__ = [
    "__version__",
    "ADD_COL",
    "ADD_ROW",
    "Instance",
    "InstanceError",
    "InstanceFormatError",
    "Layout",
    "LayoutError",
    "RCSequence",
    "SolutionReport",
    "DpSolution",
    "RippInstance",
    "KInstance",
    "ModelDocument",
    "PartitionInput",
    "apply_ac",
    "apply_ar",
    "apply_thickness",
    "assignment_from_layout",
    "base_layout",
    "bottleneck_values",
    "brute_force_oracle",
    "check_assignment",
    "emit_basic_model",
    "emit_model",
    "emit_rc_model",
    "emit_sorted_model",
    "enumerate_sorted_layouts",
    "eval_rc_sequence",
    "fptas",
    "gen_uniform",
    "is_rc_layout",
    "is_sorted_layout",
    "layout_height",
    "layout_width",
    "omega",
    "parse_assignment_text",
    "parse_instance_text",
    "rc_sequence_to_layout",
    "read_instance",
    "reduce_partition",
    "render_instance_text",
    "render_packing_svg",
    "restricted_shapes",
    "scale_factor",
    "solve_dp",
    "solve_dp_low_memory",
    "solve_kdim_dp",
    "solve_kdim_plan",
    "solve_ripp_width_dp",
    "solve_with_thickness",
    "sorted_to_rc_layout",
    "to_sorted_layout",
    "write_instance",
]
