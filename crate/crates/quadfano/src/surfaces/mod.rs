//! Curves on the auxiliary surfaces: smooth quadric, quadric cone, quartic del Pezzo.

pub mod bpf;
pub mod dp4;
pub mod quadric;

pub use bpf::{
    bpf_decompose, bpf_decompositions_all, fixed_component_witness, BpfDecomposition,
    FixedComponentWitness,
};
pub use dp4::{
    dp4_enumerate_weak_fano_pairs, dp4_lines, dp4_secant_line_profile, enumerate_dp4_curves,
    DP4Curve,
};
pub use quadric::{
    cone_secant_count, enumerate_cone_curves, enumerate_smooth_quadric_curves, residual_system_f2,
    ConeCurve, SmoothQuadricCurve,
};
