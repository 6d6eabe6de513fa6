//! The `CYLF0001` binary field container.
//!
//! Layout, all little-endian: 8-byte magic, `u32` dims `(N_r, N_theta, N_z)`,
//! `u32` panel count `N_I`, `N_I + 1` `f64` panel edges, `f64` half-height `A`,
//! then `N_r * N_theta * N_z` `f64` samples with `r` fastest, then `theta`,
//! then `z`.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use cylharm::{CylGrid, SolverConfig};

pub const MAGIC: &[u8; 8] = b"CYLF0001";

#[derive(Debug, thiserror::Error)]
pub enum FieldFileError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldFile {
    pub n_r: u32,
    pub n_theta: u32,
    pub n_z: u32,
    pub panel_edges: Vec<f64>,
    pub z_half: f64,
    pub samples: Vec<f64>,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Cursor<'_> {
    fn take<const N: usize>(&mut self, what: &str) -> Result<[u8; N], FieldFileError> {
        let end = self.at + N;
        let chunk = self
            .bytes
            .get(self.at..end)
            .ok_or_else(|| FieldFileError::Format(format!("truncated file while reading {what}")))?;
        self.at = end;
        Ok(chunk.try_into().unwrap())
    }

    fn u32(&mut self, what: &str) -> Result<u32, FieldFileError> {
        self.take::<4>(what).map(u32::from_le_bytes)
    }

    fn f64(&mut self, what: &str) -> Result<f64, FieldFileError> {
        self.take::<8>(what).map(f64::from_le_bytes)
    }
}

impl FieldFile {
    /// Wrap samples laid out on `grid`.
    pub fn from_grid(grid: &CylGrid, samples: Vec<f64>) -> FieldFile {
        FieldFile {
            n_r: grid.n_r() as u32,
            n_theta: grid.n_theta() as u32,
            n_z: grid.n_z() as u32,
            panel_edges: grid.config.panel_edges.clone(),
            z_half: grid.config.z_half,
            samples,
        }
    }

    pub fn n_panels(&self) -> usize {
        self.panel_edges.len() - 1
    }

    pub fn len(&self) -> usize {
        self.n_r as usize * self.n_theta as usize * self.n_z as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(28 + 8 * (self.panel_edges.len() + 1 + self.samples.len()));
        out.extend_from_slice(MAGIC);
        for d in [self.n_r, self.n_theta, self.n_z, self.n_panels() as u32] {
            out.extend_from_slice(&d.to_le_bytes());
        }
        for v in self.panel_edges.iter().chain([&self.z_half]).chain(&self.samples) {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<FieldFile, FieldFileError> {
        let mut c = Cursor { bytes, at: 0 };
        if &c.take::<8>("magic")? != MAGIC {
            return Err(FieldFileError::Format("not a CYLF0001 field file (bad magic)".into()));
        }
        let (n_r, n_theta, n_z) = (c.u32("N_r")?, c.u32("N_theta")?, c.u32("N_z")?);
        let n_i = c.u32("panel count")? as usize;
        if n_i == 0 || n_i > bytes.len() / 8 {
            return Err(FieldFileError::Format(format!("implausible panel count {n_i}")));
        }
        let panel_edges = (0..=n_i).map(|_| c.f64("panel edges")).collect::<Result<Vec<_>, _>>()?;
        let z_half = c.f64("A")?;
        let n = n_r as usize * n_theta as usize * n_z as usize;
        let rest = bytes.len() - c.at;
        if rest != 8 * n {
            return Err(FieldFileError::Format(format!(
                "payload has {rest} bytes, header {n_r}x{n_theta}x{n_z} needs {}",
                8 * n
            )));
        }
        let samples = (0..n).map(|_| c.f64("samples")).collect::<Result<Vec<_>, _>>()?;
        let file = FieldFile { n_r, n_theta, n_z, panel_edges, z_half, samples };
        file.check()?;
        Ok(file)
    }

    fn check(&self) -> Result<(), FieldFileError> {
        let e = &self.panel_edges;
        if e[0] != 0.0 || e.windows(2).any(|w| !(w[1] > w[0])) || !e.iter().all(|v| v.is_finite()) {
            return Err(FieldFileError::Format("panel edges must start at 0 and increase".into()));
        }
        if !(self.z_half > 0.0 && self.z_half.is_finite()) {
            return Err(FieldFileError::Format(format!("A must be positive, got {}", self.z_half)));
        }
        if self.n_r == 0 || self.n_theta == 0 || self.n_z == 0 || self.n_r as usize % self.n_panels() != 0 {
            return Err(FieldFileError::Format(format!(
                "N_r = {} is not a positive multiple of N_I = {}",
                self.n_r,
                self.n_panels()
            )));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<FieldFile, FieldFileError> {
        let bytes = fs::read(path).map_err(|source| FieldFileError::Io { path: path.display().to_string(), source })?;
        FieldFile::from_bytes(&bytes).map_err(|e| FieldFileError::Format(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<(), FieldFileError> {
        let io_err = |source| FieldFileError::Io { path: path.display().to_string(), source };
        let mut f = fs::File::create(path).map_err(io_err)?;
        f.write_all(&self.to_bytes()).map_err(io_err)?;
        f.sync_all().map_err(io_err)
    }

    /// Solver configuration whose grid matches this file's layout.
    pub fn config(&self) -> SolverConfig {
        SolverConfig::uniform(
            *self.panel_edges.last().unwrap(),
            self.z_half,
            self.n_panels(),
            self.n_r as usize / self.n_panels(),
            self.n_theta as usize,
            self.n_z as usize,
        )
        .with_edges(self.panel_edges.clone())
    }

    /// Same grid, different samples.
    pub fn with_samples(&self, samples: Vec<f64>, n_theta: u32) -> FieldFile {
        FieldFile { n_theta, samples, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> FieldFile {
        FieldFile {
            n_r: 4,
            n_theta: 2,
            n_z: 3,
            panel_edges: vec![0.0, 0.5, 2.0],
            z_half: 3.0,
            samples: (0..24).map(|i| (i as f64 * 0.37).sin() / 3.0).collect(),
        }
    }

    #[test]
    fn header_layout() {
        let b = sample().to_bytes();
        assert_eq!(&b[..8], MAGIC);
        assert_eq!(u32::from_le_bytes(b[8..12].try_into().unwrap()), 4);
        assert_eq!(u32::from_le_bytes(b[20..24].try_into().unwrap()), 2);
        assert_eq!(f64::from_le_bytes(b[24..32].try_into().unwrap()), 0.0);
        assert_eq!(f64::from_le_bytes(b[48..56].try_into().unwrap()), 3.0);
        assert_eq!(b.len(), 56 + 24 * 8);
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let mut f = sample();
        f.samples[3] = -0.0;
        f.samples[5] = f64::MIN_POSITIVE / 8.0;
        let g = FieldFile::from_bytes(&f.to_bytes()).unwrap();
        assert_eq!(g.to_bytes(), f.to_bytes());
        assert!(g.samples.iter().zip(&f.samples).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn rejects_malformed() {
        let b = sample().to_bytes();
        assert!(FieldFile::from_bytes(&b[..b.len() - 1]).is_err());
        assert!(FieldFile::from_bytes(&b[..10]).is_err());
        let mut bad = b.clone();
        bad[0] = b'X';
        assert!(FieldFile::from_bytes(&bad).is_err());
        let mut extra = b.clone();
        extra.extend_from_slice(&[0; 8]);
        assert!(FieldFile::from_bytes(&extra).is_err());
        let mut f = sample();
        f.panel_edges = vec![0.0, 2.0, 1.0];
        assert!(FieldFile::from_bytes(&f.to_bytes()).is_err());
        let mut f = sample();
        f.n_r = 3;
        f.samples.truncate(18);
        assert!(FieldFile::from_bytes(&f.to_bytes()).is_err());
    }

    #[test]
    fn config_matches_layout() {
        let cfg = sample().config();
        assert_eq!(cfg.cheb_order, 2);
        assert_eq!(cfg.panel_edges, vec![0.0, 0.5, 2.0]);
        assert_eq!(cfg.r_max, 2.0);
        assert_eq!((cfg.n_theta, cfg.n_z), (2, 3));
    }
}
