//! Gaussian source descriptions and the named example setups.

use cylharm::{GaussianSpec, SolverConfig};

/// Grid parameters shared by the commands that build a grid from flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_max: f64,
    pub z_half: f64,
    pub panels: usize,
    pub cheb_order: usize,
    pub n_theta: usize,
    pub n_z: usize,
}

impl GridSpec {
    pub fn config(&self) -> SolverConfig {
        SolverConfig::uniform(self.r_max, self.z_half, self.panels, self.cheb_order, self.n_theta, self.n_z)
    }
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub sources: Vec<GaussianSpec>,
    pub grid: GridSpec,
}

pub const PRESET_NAMES: [&str; 4] = ["example1", "maxwellian", "anisotropic", "example3"];

/// The paper-style setups: a single Gaussian convergence case, the
/// Maxwellian and its anisotropic perturbation, and the three-source run.
pub fn preset(name: &str) -> Option<Preset> {
    let axisym = |r: f64, panels| GridSpec { r_max: r, z_half: r, panels, cheb_order: 16, n_theta: 1, n_z: 128 };
    let p = match name {
        "example1" => Preset { sources: vec![GaussianSpec::centered(0.223)], grid: axisym(8.0, 8) },
        "maxwellian" => Preset { sources: vec![GaussianSpec::centered(1.23)], grid: axisym(16.0, 12) },
        "anisotropic" => Preset { sources: vec![GaussianSpec::anisotropic(1.107, 1.353, [0.0; 3], 1.0)], grid: axisym(16.0, 12) },
        "example3" => Preset {
            sources: vec![
                GaussianSpec::isotropic(0.2, [4.3, 1.2, 3.6], -1.0),
                GaussianSpec::isotropic(0.6, [-1.1, 4.1, -0.8], -1.3),
                GaussianSpec::isotropic(0.3, [5.3, 3.5, -3.2], 1.2),
            ],
            grid: GridSpec { r_max: 16.0, z_half: 16.0, panels: 12, cheb_order: 16, n_theta: 64, n_z: 96 },
        },
        _ => return None,
    };
    Some(p)
}

/// Parse `V,X,Y,Z,W` (isotropic) or `VR:VZ,X,Y,Z,W` (anisotropic, centered
/// on the axis). Coordinates are Cartesian; `W` is the total mass.
pub fn parse_source(s: &str) -> Result<GaussianSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!("source '{s}': expected V,X,Y,Z,W"));
    }
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("source '{s}': '{t}' is not a number"));
    let center = [num(parts[1])?, num(parts[2])?, num(parts[3])?];
    let w = num(parts[4])?;
    let spec = match parts[0].split_once(':') {
        Some((vr, vz)) => {
            let (vr, vz) = (num(vr)?, num(vz)?);
            if center[0] != 0.0 || center[1] != 0.0 {
                return Err(format!("source '{s}': anisotropic sources must sit on the axis"));
            }
            GaussianSpec::anisotropic(vr, vz, center, w)
        }
        None => GaussianSpec::isotropic(num(parts[0])?, center, w),
    };
    Ok(spec)
}

/// Parse `a,b,c` derivative orders.
pub fn parse_triple(s: &str) -> Result<(u32, u32, u32), String> {
    let v: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("derivative '{s}': expected a,b,c with non-negative integers")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(format!("derivative '{s}': expected three orders a,b,c")),
    }
}
