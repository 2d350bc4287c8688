//! Experiments. Each returns a [`Report`]; window-scale results are finite
//! evidence about infinite graphs, never proofs.

mod counterexamples;
mod ends;
mod finite;
mod report;
mod samples;
mod theorem;

pub use counterexamples::{
    doubled_grid_nonbond_cut, u_turns, verify_counterexample_bond, verify_counterexample_calg,
    verify_counterexample_ctop, zigzag_truncation,
};
pub use ends::{
    end_degree_estimate, fan_growth_study, padded_study, padded_witness_radius, StudyMode,
    PADDED_SEARCH_DEPTH,
};
pub use finite::{
    orthogonality_report, orthogonality_sweep, peel_sweep, verify_duality_finite,
    verify_minimal_orthogonality_finite, Audit, FiniteContext, DEFAULT_SAMPLES, EXHAUSTIVE_EDGES,
    MAX_MASK_EDGES,
};
pub use report::{Check, Report, Verdict};
pub use samples::{connected_subsets, interior_bonds, walk_edges};
pub use theorem::{
    default_probe_set, double_ray_truncations, verify_theorem_window, DOUBLE_RAY_RAYS, MAX_SAMPLES,
};
#[cfg(test)]
mod tests;
