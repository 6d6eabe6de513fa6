//! Azimuthal mode analysis/synthesis and the oversampled z transforms.
//!
//! Conventions: `f^(n)(r, z) = (2 pi / N_theta) sum_l e^{-i n theta_l} f(r, theta_l, z)`
//! and `f = (1 / 2 pi) sum_n f^(n) e^{i n theta}`; in z,
//! `f_hat(kappa) = h_z sum_l e^{-i kappa z_l} f(z_l)` and the inverse uses the
//! [`SingularRule`] with a `1 / 2 pi` factor.

use crate::discretization::CylGrid;
use crate::error::{Error, Result};
use crate::quadrature::SingularRule;
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use std::f64::consts::PI;
use std::sync::Arc;

/// Samples of one azimuthal mode on the `(r, z)` grid, `r` fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeField {
    pub n: i64,
    pub n_r: usize,
    pub n_z: usize,
    pub values: Vec<Complex64>,
}

impl ModeField {
    pub fn zeros(n: i64, n_r: usize, n_z: usize) -> ModeField {
        ModeField { n, n_r, n_z, values: vec![Complex64::new(0.0, 0.0); n_r * n_z] }
    }

    #[inline]
    pub fn at(&self, ir: usize, iz: usize) -> Complex64 {
        self.values[ir + self.n_r * iz]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Samples of one mode's z transform on the rule's nodes. Column `c` holds
/// `kappa = kappas[c]`: first the regular nodes in ascending `k`, then the
/// correction nodes (see [`SingularRule::spectral_nodes`]).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralModeField {
    pub n: i64,
    pub n_r: usize,
    pub kappas: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl SpectralModeField {
    pub fn zeros(n: i64, n_r: usize, rule: &SingularRule) -> SpectralModeField {
        let kappas = rule.spectral_nodes();
        let len = n_r * kappas.len();
        SpectralModeField { n, n_r, kappas, values: vec![Complex64::new(0.0, 0.0); len] }
    }

    #[inline]
    pub fn at(&self, ir: usize, col: usize) -> Complex64 {
        self.values[ir + self.n_r * col]
    }

    pub fn column(&self, col: usize) -> &[Complex64] {
        &self.values[col * self.n_r..(col + 1) * self.n_r]
    }

    pub fn column_mut(&mut self, col: usize) -> &mut [Complex64] {
        &mut self.values[col * self.n_r..(col + 1) * self.n_r]
    }
}

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    let mut planner = FftPlanner::new();
    if inverse {
        planner.plan_fft_inverse(len)
    } else {
        planner.plan_fft_forward(len)
    }
}

#[inline]
fn mode_to_bin(n: i64, len: usize) -> usize {
    n.rem_euclid(len as i64) as usize
}

/// All azimuthal modes `n = -N_theta/2 .. N_theta/2 - 1` of complex samples.
pub fn theta_decompose(grid: &CylGrid, samples: &[Complex64]) -> Vec<ModeField> {
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    assert_eq!(samples.len(), grid.len());
    let fft = plan(nt, false);
    let scale = 2.0 * PI / nt as f64;
    let half = (nt / 2) as i64;
    let mut modes: Vec<ModeField> = (-half..nt as i64 - half).map(|n| ModeField::zeros(n, nr, nz)).collect();
    let mut line = vec![Complex64::new(0.0, 0.0); nt];
    for iz in 0..nz {
        for ir in 0..nr {
            for (it, v) in line.iter_mut().enumerate() {
                *v = samples[grid.index(ir, it, iz)];
            }
            fft.process(&mut line);
            for mode in modes.iter_mut() {
                mode.values[ir + nr * iz] = line[mode_to_bin(mode.n, nt)] * scale;
            }
        }
    }
    modes
}

/// Modes `n = 0 ..= N_theta/2` of real samples; negative modes are the
/// conjugates of these.
pub fn theta_decompose_real(grid: &CylGrid, samples: &[f64]) -> Vec<ModeField> {
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    assert_eq!(samples.len(), grid.len());
    let fft = plan(nt, false);
    let scale = 2.0 * PI / nt as f64;
    let n_half = nt / 2;
    let columns: Vec<Vec<Complex64>> = (0..nz)
        .into_par_iter()
        .map(|iz| {
            let mut line = vec![Complex64::new(0.0, 0.0); nt];
            let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
            let mut out = vec![Complex64::new(0.0, 0.0); (n_half + 1) * nr];
            for ir in 0..nr {
                for (it, v) in line.iter_mut().enumerate() {
                    *v = Complex64::new(samples[grid.index(ir, it, iz)], 0.0);
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for n in 0..=n_half {
                    out[ir + nr * n] = line[n % nt] * scale;
                }
            }
            out
        })
        .collect();
    (0..=n_half)
        .map(|n| {
            let mut mode = ModeField::zeros(n as i64, nr, nz);
            for (iz, col) in columns.iter().enumerate() {
                mode.values[nr * iz..nr * (iz + 1)].copy_from_slice(&col[nr * n..nr * (n + 1)]);
            }
            mode
        })
        .collect()
}

/// `(i n)^b`, with the unpaired Nyquist mode of an even-length transform
/// dropped for odd `b`.
fn theta_multiplier(n: i64, b: u32, n_theta: usize) -> Complex64 {
    if b == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if n_theta % 2 == 0 && n.unsigned_abs() as usize * 2 == n_theta && b % 2 == 1 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(0.0, n as f64).powu(b)
}

/// Synthesize `d^b/d theta^b` of a field from its complete mode set.
pub fn theta_synthesize(grid: &CylGrid, modes: &[ModeField], m_theta: u32) -> Result<Vec<Complex64>> {
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    if modes.len() != nt {
        return Err(Error::InvalidInput(format!("expected {nt} modes, got {}", modes.len())));
    }
    let fft = plan(nt, true);
    let mut out = vec![Complex64::new(0.0, 0.0); grid.len()];
    let mut line = vec![Complex64::new(0.0, 0.0); nt];
    let mult: Vec<(usize, Complex64)> =
        modes.iter().map(|m| (mode_to_bin(m.n, nt), theta_multiplier(m.n, m_theta, nt) / (2.0 * PI))).collect();
    for iz in 0..nz {
        for ir in 0..nr {
            line.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
            for (mode, &(bin, c)) in modes.iter().zip(&mult) {
                line[bin] = mode.values[ir + nr * iz] * c;
            }
            fft.process(&mut line);
            for (it, v) in line.iter().enumerate() {
                out[grid.index(ir, it, iz)] = *v;
            }
        }
    }
    Ok(out)
}

/// Real synthesis from modes `0 ..= N_theta/2` (as from
/// [`theta_decompose_real`]), filling negative modes by conjugate symmetry.
pub fn theta_synthesize_real(grid: &CylGrid, half_modes: &[ModeField], m_theta: u32) -> Result<Vec<f64>> {
    let (nr, nt, nz) = (grid.n_r(), grid.n_theta(), grid.n_z());
    if half_modes.len() != nt / 2 + 1 {
        return Err(Error::InvalidInput(format!("expected {} modes, got {}", nt / 2 + 1, half_modes.len())));
    }
    let fft = plan(nt, true);
    let slabs: Vec<Vec<f64>> = (0..nz)
        .into_par_iter()
        .map(|iz| {
            let mut slab = vec![0.0; nr * nt];
            let mut line = vec![Complex64::new(0.0, 0.0); nt];
            let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
            for ir in 0..nr {
                line.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
                for mode in half_modes {
                    let n = mode.n;
                    let v = mode.values[ir + nr * iz] / (2.0 * PI);
                    let bin = mode_to_bin(n, nt);
                    if n > 0 && (2 * n as usize) < nt {
                        line[bin] = v * theta_multiplier(n, m_theta, nt);
                        line[mode_to_bin(-n, nt)] = v.conj() * theta_multiplier(-n, m_theta, nt);
                    } else if n == 0 {
                        line[0] = Complex64::new(v.re, 0.0) * theta_multiplier(0, m_theta, nt);
                    } else {
                        // Nyquist: real part only, shared by +-N/2
                        line[bin] = Complex64::new(v.re, 0.0) * theta_multiplier(n, m_theta, nt);
                    }
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for (it, v) in line.iter().enumerate() {
                    slab[ir + nr * it] = v.re;
                }
            }
            slab
        })
        .collect();
    Ok(slabs.concat())
}

/// Place original z samples (index `l = -N_z/2 ..`) into a padded FFT buffer.
#[inline]
fn padded_slot(iz: usize, n_z: usize, n_pad: usize) -> usize {
    (iz as i64 - (n_z / 2) as i64).rem_euclid(n_pad as i64) as usize
}

/// Forward z transform of one mode on all rule nodes.
pub fn z_forward(grid: &CylGrid, mode: &ModeField, rule: &SingularRule) -> SpectralModeField {
    let fft = plan(rule.n_padded, false);
    z_forward_with(grid, mode, rule, fft.as_ref())
}

pub(crate) fn z_forward_with(grid: &CylGrid, mode: &ModeField, rule: &SingularRule, fft: &dyn Fft<f64>) -> SpectralModeField {
    let (nr, nz) = (mode.n_r, mode.n_z);
    let npad = rule.n_padded;
    let hz = grid.config.h_z();
    let mut out = SpectralModeField::zeros(mode.n, nr, rule);
    let reg = rule.regular_indices();
    let n_reg = reg.len();
    let mut buf = vec![Complex64::new(0.0, 0.0); npad];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    // phases for the correction nodes, shared across r
    let corr_phase: Vec<Vec<Complex64>> = rule
        .correction_nodes
        .iter()
        .map(|&k| grid.z_nodes.iter().map(|&z| Complex64::from_polar(hz, -k * z)).collect())
        .collect();
    for ir in 0..nr {
        buf.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
        for iz in 0..nz {
            buf[padded_slot(iz, nz, npad)] = mode.values[ir + nr * iz];
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        for (col, &k) in reg.iter().enumerate() {
            out.values[ir + nr * col] = buf[mode_to_bin(k, npad)] * hz;
        }
        for (ic, phase) in corr_phase.iter().enumerate() {
            let mut s = Complex64::new(0.0, 0.0);
            for iz in 0..nz {
                s += phase[iz] * mode.values[ir + nr * iz];
            }
            out.values[ir + nr * (n_reg + ic)] = s;
        }
    }
    out
}

/// Inverse z transform of `(i kappa)^c u_hat` back to the original z grid.
pub fn z_inverse_singular(grid: &CylGrid, spectral: &SpectralModeField, rule: &SingularRule, z_deriv_order: u32) -> Result<ModeField> {
    let fft = plan(rule.n_padded, true);
    z_inverse_with(grid, spectral, rule, z_deriv_order, fft.as_ref())
}

pub(crate) fn z_inverse_with(
    grid: &CylGrid,
    spectral: &SpectralModeField,
    rule: &SingularRule,
    c: u32,
    fft: &dyn Fft<f64>,
) -> Result<ModeField> {
    let expected = rule.spectral_nodes().len();
    if spectral.kappas.len() != expected || spectral.values.len() != spectral.n_r * expected {
        return Err(Error::InvalidInput(format!(
            "spectral field has {} nodes, rule needs {expected}",
            spectral.kappas.len()
        )));
    }
    let nr = spectral.n_r;
    let nz = grid.n_z();
    let npad = rule.n_padded;
    let half = (npad / 2) as i64;
    let reg = rule.regular_indices();
    let n_reg = reg.len();
    let ik = |k: f64| Complex64::new(0.0, k).powu(c);
    let reg_mult: Vec<Complex64> = reg
        .iter()
        .map(|&k| {
            let kappa = k as f64 * rule.h;
            let m = if k == -half && c % 2 == 1 { Complex64::new(0.0, 0.0) } else { ik(kappa) };
            m * (rule.h / (2.0 * PI))
        })
        .collect();
    let corr_phase: Vec<Vec<Complex64>> = rule
        .correction_nodes
        .iter()
        .zip(&rule.correction_weights)
        .map(|(&k, &w)| {
            let m = ik(k) * (w / (2.0 * PI));
            grid.z_nodes.iter().map(|&z| m * Complex64::from_polar(1.0, k * z)).collect()
        })
        .collect();
    let mut out = ModeField::zeros(spectral.n, nr, nz);
    let mut buf = vec![Complex64::new(0.0, 0.0); npad];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    for ir in 0..nr {
        buf.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
        for (col, &k) in reg.iter().enumerate() {
            buf[mode_to_bin(k, npad)] = spectral.values[ir + nr * col] * reg_mult[col];
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        for iz in 0..nz {
            let mut s = buf[padded_slot(iz, nz, npad)];
            for (ic, phase) in corr_phase.iter().enumerate() {
                s += phase[iz] * spectral.values[ir + nr * (n_reg + ic)];
            }
            out.values[ir + nr * iz] = s;
        }
    }
    Ok(out)
}

pub(crate) fn fft_plans(npad: usize) -> (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>) {
    let mut planner = FftPlanner::new();
    (planner.plan_fft_forward(npad), planner.plan_fft_inverse(npad))
}
