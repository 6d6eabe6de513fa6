//! Fast free-space Poisson and biharmonic solvers in cylindrical coordinates.

pub mod collision;
mod dd;
pub mod discretization;
pub mod elliptic;
pub mod error;
mod linalg;
pub mod quadrature;
pub mod radial;
pub mod reference;
pub mod specfun;
pub mod transforms;

pub use collision::{collision_axisymmetric, rosenbluth_g, rosenbluth_h, CollisionParams, CollisionResult};
pub use discretization::{build_grid, CylGrid, RadialBackend, SolverConfig};
pub use elliptic::{solve_biharmonic, solve_poisson, spectral_decay_report, DecayReport, DerivativeRequest, EllipticKind, SolutionBundle, StageTiming};
pub use error::{Error, Result};
pub use radial::{radiation_bc_residual, solve_fourth_order, solve_modified_bessel, spectral_integration_solve, RadialSolution};
pub use reference::{GaussianSpec, Variance};
pub use quadrature::{build_singular_rule, rule_nodes, SingularRule};
