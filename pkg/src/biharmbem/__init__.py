"""Boundary integral solver for time-harmonic flexural wave scattering by a
clamped cavity in a thin elastic plate.

The scattered field of the fourth-order plate equation is split into a
radiating Helmholtz part and an exponentially decaying modified-Helmholtz
part, coupled through the clamped boundary conditions.  The package provides
three boundary integral formulations discretized by spectrally accurate
logarithmic quadrature on smooth cavities, and a graded-mesh variant for
cavities with a corner.
"""

from .assembly import (
    FORMULATIONS,
    DensityPair,
    LinearSystem,
    PlaneWave,
    PointSource,
    assemble,
    rhs_from_incident,
    solve,
    with_rhs,
)
from .geometry import (
    BoundaryCurve,
    CurveJet,
    Discretization,
    collocation_nodes,
    curve_jet,
    curve_point,
    graded_map,
    jet_table,
    winding_number,
)
from .kernels import (
    KERNEL_IDS,
    KernelSplitValue,
    kernel_direct,
    kernel_split,
    remainder_kernel,
)
from .postfield import (
    FarField,
    FieldSample,
    circle_points,
    eval_field,
    eval_fields,
    far_field,
    l2_error_on_circle,
)
from .quadrature import WeightTable, sin2_weight_gap, trapezoid, weight_table, weights

__all__ = [
    "FORMULATIONS",
    "KERNEL_IDS",
    "BoundaryCurve",
    "CurveJet",
    "DensityPair",
    "Discretization",
    "FarField",
    "FieldSample",
    "KernelSplitValue",
    "LinearSystem",
    "PlaneWave",
    "PointSource",
    "WeightTable",
    "assemble",
    "circle_points",
    "collocation_nodes",
    "curve_jet",
    "curve_point",
    "eval_field",
    "eval_fields",
    "far_field",
    "graded_map",
    "jet_table",
    "kernel_direct",
    "kernel_split",
    "l2_error_on_circle",
    "remainder_kernel",
    "sin2_weight_gap",
    "rhs_from_incident",
    "solve",
    "trapezoid",
    "weight_table",
    "weights",
    "winding_number",
    "with_rhs",
]

__version__ = "0.1.0"
