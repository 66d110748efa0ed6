//! Shared fixtures for the benchmarks.

use spreadlab_core::graph::{cycle_with_pendant_path, petersen, Family, Graph};

/// A small fixed set of sparse and dense graphs.
pub fn fixture_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", petersen()),
        ("k8", Family::Complete(8).build().expect("valid family")),
        ("c12", Family::Cycle(12).build().expect("valid family")),
        ("k4_5", Family::CompleteBipartite(4, 5).build().expect("valid family")),
        ("c5_pendant_p5", cycle_with_pendant_path(5, 4).expect("valid family")),
    ]
}
