//! Shared fixtures for the criterion benchmarks in `benches/`.

use cylharm::reference::sample_mixture;
use cylharm::{build_grid, CylGrid, GaussianSpec, SolverConfig};

/// The single-Gaussian convergence case at a given `N_z`, with an off-axis
/// center so several azimuthal modes are active.
pub fn gaussian_case(n_theta: usize, n_z: usize) -> (SolverConfig, CylGrid, Vec<f64>) {
    let cfg = SolverConfig::uniform(8.0, 8.0, 8, 16, n_theta, n_z);
    let grid = build_grid(&cfg).expect("valid benchmark grid");
    let f = sample_mixture(&grid, &[GaussianSpec::isotropic(0.223, [0.5, 0.2, 0.0], 1.0)]);
    (cfg, grid, f)
}

/// A Maxwellian on the axisymmetric collision grid.
pub fn maxwellian_case(n_z: usize) -> (SolverConfig, Vec<f64>) {
    let cfg = SolverConfig::uniform(16.0, 16.0, 12, 16, 1, n_z);
    let grid = build_grid(&cfg).expect("valid benchmark grid");
    let f = sample_mixture(&grid, &[GaussianSpec::centered(1.23)]);
    (cfg, f)
}
