//! Low-rank tensor completion on the Tucker quotient manifold by Riemannian
//! conjugate gradient, with per-mode side information.
//!
//! A third-order tensor of multilinear rank `(r1, r2, r3)` is represented by a
//! total-space point `(G, U1, U2, U3)` (small core plus orthonormal factors),
//! identified up to per-mode orthogonal rotations. The completion objective is
//! the squared misfit on the observed entries plus a subspace penalty pulling
//! each factor span towards the column space of a feature matrix. The solver
//! walks the quotient manifold with a preconditioned metric; setting the metric
//! mode to least-squares or all side-information weights to zero recovers the
//! plain completion solvers as special cases.
//!
//! The crate is `no_std` (with `alloc`); all file formats, timing and the
//! command-line front end live in the companion `tucker-cg-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod geometry;
pub mod gradcheck;
mod linalg;
pub mod objective;
pub mod obs;
pub mod solver;
pub mod synth;
pub mod tensor;

pub use error::{Error, Result};
pub use geometry::{
    retract, AmbientVector, FeatureBasis, MetricContext, MetricMode, TuckerPoint,
};
pub use objective::{chordal_distance_sq, cost, euclid_grad, riem_grad, CostParts, ProblemData};
pub use obs::{ObservationSet, SparseTensor3};
pub use solver::{
    init_point, solve_rcg, solve_rcg_with, Clock, InitMode, IterTrace, NullClock, SolveResult,
    SolverConfig, Termination,
};
pub use synth::{manifold_dim, Scenario, ScenarioSpec};
pub use tensor::{
    dematricize, inner, kron_apply, matricize, mode_product, tucker_to_full, uf, DenseTensor3,
    Matrix, MultiLinearRank,
};
