use super::*;
use crate::reference::{gaussian_biharmonic_exact, gaussian_poisson_exact, sample_mixture, GaussianSpec};
use crate::transforms::theta_decompose_real;

const V: f64 = 0.223;

fn config(n_theta: usize, n_z: usize) -> SolverConfig {
    SolverConfig::uniform(8.0, 8.0, 8, 16, n_theta, n_z)
}

fn rel_linf(got: &[f64], want: &[f64]) -> f64 {
    let scale = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    got.iter().zip(want).fold(0.0f64, |m, (a, b)| m.max((a - b).abs())) / scale
}

fn exact_on(grid: &CylGrid, spec: &GaussianSpec, biharmonic: bool, a: u32, b: u32, c: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len());
    for &z in &grid.z_nodes {
        for &t in &grid.theta_nodes {
            for &r in &grid.r_nodes {
                let d = if biharmonic { gaussian_biharmonic_exact(spec, r, t, z) } else { gaussian_poisson_exact(spec, r, t, z) };
                out.push(d.unwrap().get(a, b, c).unwrap());
            }
        }
    }
    out
}

#[test]
fn zero_field_gives_zero() {
    let cfg = config(4, 16);
    let grid = build_grid(&cfg).unwrap();
    let f = vec![0.0; grid.len()];
    let req = DerivativeRequest::new(&[(0, 0, 0), (2, 1, 1)]);
    for bundle in [solve_poisson(&f, &req, &cfg).unwrap(), solve_biharmonic(&f, &req, &cfg).unwrap()] {
        assert!(bundle.fields.values().flatten().all(|v| *v == 0.0));
    }
}

#[test]
fn centered_gaussian_poisson() {
    let cfg = config(4, 64);
    let grid = build_grid(&cfg).unwrap();
    let spec = GaussianSpec::centered(V);
    let f = sample_mixture(&grid, &[spec]);
    let req = DerivativeRequest::new(&[(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 0, 0), (0, 0, 2)]);
    let bundle = solve_poisson(&f, &req, &cfg).unwrap();
    assert!(bundle.warnings.is_empty());
    for &(a, b, c) in &req.triples {
        let err = rel_linf(bundle.get(a, b, c).unwrap(), &exact_on(&grid, &spec, false, a, b, c));
        let tol = if a + c == 0 { 1e-10 } else { 1e-9 };
        assert!(err < tol, "({a},{b},{c}): {err:.3e}");
    }
    assert_eq!(bundle.timings.len(), 5);
}

#[test]
fn shifted_gaussian_poisson_with_theta_derivative() {
    let cfg = SolverConfig::uniform(8.0, 8.0, 8, 16, 32, 64);
    let grid = build_grid(&cfg).unwrap();
    let spec = GaussianSpec::isotropic(0.5, [1.0, 0.5, 0.3], -0.7);
    let f = sample_mixture(&grid, &[spec]);
    let req = DerivativeRequest::gradient();
    let bundle = solve_poisson(&f, &req, &cfg).unwrap();
    for &(a, b, c) in &req.triples {
        let err = rel_linf(bundle.get(a, b, c).unwrap(), &exact_on(&grid, &spec, false, a, b, c));
        assert!(err < 1e-9, "({a},{b},{c}): {err:.3e}");
    }
}

#[test]
fn centered_gaussian_biharmonic() {
    let cfg = config(4, 64);
    let grid = build_grid(&cfg).unwrap();
    let spec = GaussianSpec::centered(V);
    let f = sample_mixture(&grid, &[spec]);
    let req = DerivativeRequest::new(&[(2, 0, 0), (1, 0, 1), (0, 0, 2), (3, 0, 0), (2, 0, 1), (1, 0, 2), (0, 0, 3), (1, 0, 0), (0, 0, 0)]);
    let bundle = solve_biharmonic(&f, &req, &cfg).unwrap();
    assert_eq!(bundle.reduced_accuracy, vec![(1, 0, 0), (0, 0, 0)]);
    for &(a, b, c) in &req.triples {
        let err = rel_linf(bundle.get(a, b, c).unwrap(), &exact_on(&grid, &spec, true, a, b, c));
        match a + c {
            0 | 1 => continue,
            2 => assert!(err < 1e-9, "({a},{b},{c}): {err:.3e}"),
            _ => assert!(err < 1e-8, "({a},{b},{c}): {err:.3e}"),
        }
    }
    // Delta (Delta^-2 f) = Delta^-1 f
    let pois = solve_poisson(&f, &DerivativeRequest::value(), &cfg).unwrap();
    let (rr, r1, zz) = (bundle.get(2, 0, 0).unwrap(), bundle.get(1, 0, 0).unwrap(), bundle.get(0, 0, 2).unwrap());
    let lap: Vec<f64> = (0..grid.len()).map(|i| rr[i] + r1[i] / grid.r_nodes[i % grid.n_r()] + zz[i]).collect();
    let err = rel_linf(&lap, pois.get(0, 0, 0).unwrap());
    assert!(err < 1e-9, "{err:.3e}");
}

#[test]
fn single_mode_input_stays_in_its_mode() {
    let cfg = SolverConfig::uniform(8.0, 8.0, 4, 16, 16, 32);
    let grid = build_grid(&cfg).unwrap();
    let f = grid.sample(|r, t, z| r * r * (-(r * r + z * z) / 0.8).exp() * (2.0 * t).cos());
    let bundle = solve_poisson(&f, &DerivativeRequest::value(), &cfg).unwrap();
    let modes = theta_decompose_real(&grid, bundle.get(0, 0, 0).unwrap());
    let norm = modes.iter().map(|m| m.max_abs()).fold(0.0, f64::max);
    for m in &modes {
        if m.n != 2 {
            assert!(m.max_abs() < 1e-13 * norm, "n={}: {:.3e}", m.n, m.max_abs() / norm);
        }
    }
}

#[test]
fn even_input_gives_even_potential_and_odd_z_derivative() {
    let cfg = SolverConfig::uniform(8.0, 8.0, 4, 16, 2, 32);
    let grid = build_grid(&cfg).unwrap();
    let f = grid.sample(|r, _, z| (-(r * r) / 0.7 - z * z / 1.3).exp() * (1.0 + 0.2 * z * z));
    let bundle = solve_poisson(&f, &DerivativeRequest::new(&[(0, 0, 0), (0, 0, 1)]), &cfg).unwrap();
    let (u, uz) = (bundle.get(0, 0, 0).unwrap(), bundle.get(0, 0, 1).unwrap());
    let umax = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let uzmax = uz.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let nz = grid.n_z();
    for iz in 1..nz {
        for ir in 0..grid.n_r() {
            let (i, j) = (grid.index(ir, 0, iz), grid.index(ir, 0, nz - iz));
            assert!((u[i] - u[j]).abs() < 1e-12 * umax);
            assert!((uz[i] + uz[j]).abs() < 1e-12 * uzmax);
        }
    }
}

#[test]
fn scaling_is_exact() {
    let cfg = SolverConfig::uniform(8.0, 8.0, 2, 16, 8, 16);
    let grid = build_grid(&cfg).unwrap();
    let f = sample_mixture(&grid, &[GaussianSpec::isotropic(0.4, [0.5, 0.0, 0.2], 1.0)]);
    let f3: Vec<f64> = f.iter().map(|v| 3.0 * v).collect();
    let req = DerivativeRequest::new(&[(0, 0, 0), (1, 1, 1)]);
    let a = solve_poisson(&f, &req, &cfg).unwrap();
    let b = solve_poisson(&f3, &req, &cfg).unwrap();
    for key in a.fields.keys() {
        let (x, y) = (&a.fields[key], &b.fields[key]);
        let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(x.iter().zip(y).all(|(p, q)| (3.0 * p - q).abs() <= 1e-14 * 3.0 * scale));
    }
}

#[test]
fn rejects_bad_requests_and_shapes() {
    let cfg = config(4, 16);
    let grid = build_grid(&cfg).unwrap();
    let f = vec![0.0; grid.len()];
    assert!(matches!(solve_poisson(&f, &DerivativeRequest::new(&[(3, 0, 0)]), &cfg), Err(Error::UnsupportedDerivative(_))));
    assert!(solve_biharmonic(&f, &DerivativeRequest::new(&[(3, 0, 0)]), &cfg).is_ok());
    assert!(solve_biharmonic(&f, &DerivativeRequest::new(&[(4, 0, 0)]), &cfg).is_err());
    assert!(solve_poisson(&f, &DerivativeRequest::new(&[(0, 4, 0)]), &cfg).is_err());
    assert!(solve_poisson(&f, &DerivativeRequest::new(&[]), &cfg).is_err());
    assert!(matches!(solve_poisson(&f[1..], &DerivativeRequest::value(), &cfg), Err(Error::InvalidInput(_))));
    let spec = cfg.clone().with_edges(vec![0.0, 8.0]).with_backend(RadialBackend::SpectralIntegration);
    let g1 = build_grid(&spec).unwrap();
    assert!(solve_biharmonic(&vec![0.0; g1.len()], &DerivativeRequest::value(), &spec).is_err());
}

#[test]
fn support_violation_warns() {
    let cfg = config(2, 16);
    let grid = build_grid(&cfg).unwrap();
    let f = grid.sample(|r, _, z| (-(r * r + z * z) / 40.0).exp());
    let bundle = solve_poisson(&f, &DerivativeRequest::value(), &cfg).unwrap();
    assert_eq!(bundle.warnings.len(), 2);
}

#[test]
fn spectral_backend_agrees_on_one_panel() {
    let cfg = SolverConfig::uniform(8.0, 8.0, 1, 64, 1, 32).with_backend(RadialBackend::SpectralIntegration);
    let grid = build_grid(&cfg).unwrap();
    let spec = GaussianSpec::centered(0.6);
    let f = sample_mixture(&grid, &[spec]);
    let bundle = solve_poisson(&f, &DerivativeRequest::new(&[(0, 0, 0), (1, 0, 0)]), &cfg).unwrap();
    for a in 0..2 {
        let err = rel_linf(bundle.get(a, 0, 0).unwrap(), &exact_on(&grid, &spec, false, a, 0, 0));
        assert!(err < 1e-8, "a={a}: {err:.3e}");
    }
}

#[test]
fn decay_report_flags_aliasing() {
    let spec = GaussianSpec::centered(V);
    let cfg = SolverConfig::uniform(8.0, 8.0, 16, 16, 4, 128);
    let grid = build_grid(&cfg).unwrap();
    let rep = spectral_decay_report(&sample_mixture(&grid, &[spec]), &cfg).unwrap();
    assert!(rep.r_tail < 1e-12 && rep.theta_tail == 0.0 && rep.kappa_tail < 1e-12, "{rep:?}");
    assert!(rep.is_resolved());
    let coarse = config(4, 16);
    let g2 = build_grid(&coarse).unwrap();
    let rep = spectral_decay_report(&sample_mixture(&g2, &[spec]), &coarse).unwrap();
    assert!(rep.kappa_tail > 1e-6 && rep.under_resolved_kappa, "{rep:?}");
    let cfg8 = SolverConfig::uniform(8.0, 8.0, 2, 8, 16, 16);
    let g3 = build_grid(&cfg8).unwrap();
    let rep = spectral_decay_report(&g3.sample(|r, _, z| (-(r * r + z * z)).exp()), &cfg8).unwrap();
    assert_eq!(rep.theta_tail, 0.0);
}
