//! Run configuration: defaults, `key = value` files and validation.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Settings shared by every subcommand. `None` means "use the subcommand's
/// own default" for grid and packet parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mass: f64,
    pub seed: u64,
    pub tol_exact: f64,
    pub tol_fd: f64,
    pub samples: usize,
    pub grid_n: Option<usize>,
    pub p_max: Option<f64>,
    pub p0: f64,
    pub sigma_p: Option<f64>,
    pub mix: f64,
    pub t_max: f64,
    pub dt: f64,
    pub out: Option<PathBuf>,
    pub word: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mass: 1.0,
            seed: 20_240_521,
            tol_exact: 1e-12,
            tol_fd: 1e-6,
            samples: 100,
            grid_n: None,
            p_max: None,
            p0: 0.0,
            sigma_p: None,
            mix: 0.5,
            t_max: 40.0,
            dt: 0.05,
            out: None,
            word: None,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("invalid value for '{key}': '{value}'")))
}

/// Resolved grid settings for a packet simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketGrid {
    pub n: usize,
    pub p_max: f64,
    pub sigma_p: f64,
}

impl RunConfig {
    /// Set one key. Dashes and underscores are interchangeable.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim().replace('-', "_");
        match key.as_str() {
            "mass" => self.mass = parse_num(&key, value)?,
            "seed" => self.seed = parse_num(&key, value)?,
            "tol_exact" => self.tol_exact = parse_num(&key, value)?,
            "tol_fd" => self.tol_fd = parse_num(&key, value)?,
            "samples" => self.samples = parse_num(&key, value)?,
            "grid_n" => self.grid_n = Some(parse_num(&key, value)?),
            "p_max" => self.p_max = Some(parse_num(&key, value)?),
            "p0" => self.p0 = parse_num(&key, value)?,
            "sigma_p" => self.sigma_p = Some(parse_num(&key, value)?),
            "mix" => self.mix = parse_num(&key, value)?,
            "t_max" => self.t_max = parse_num(&key, value)?,
            "dt" => self.dt = parse_num(&key, value)?,
            "out" => self.out = Some(PathBuf::from(value.trim())),
            "word" => self.word = Some(value.trim().to_string()),
            _ => return Err(Error::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// Apply `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            self.set(k, v)
                .map_err(|e| Error::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> std::io::Result<String> {
        std::fs::read_to_string(path)
    }

    /// Checks independent of the subcommand.
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::Config(format!(
                    "{name} must be positive and finite, got {v}"
                )))
            }
        };
        positive("mass", self.mass)?;
        positive("tol-exact", self.tol_exact)?;
        positive("tol-fd", self.tol_fd)?;
        if let Some(s) = self.sigma_p {
            positive("sigma-p", s)?;
        }
        positive("dt", self.dt)?;
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if !(self.t_max.is_finite() && self.t_max >= 0.0) {
            return Err(Error::Config(format!(
                "t-max must be non-negative, got {}",
                self.t_max
            )));
        }
        if !(0.0..=1.0).contains(&self.mix) {
            return Err(Error::Config(format!("mix must lie in [0, 1], got {}", self.mix)));
        }
        if !self.p0.is_finite() {
            return Err(Error::Config("p0 must be finite".into()));
        }
        if let Some(n) = self.grid_n {
            if n < 4 || !n.is_power_of_two() {
                return Err(Error::Config(format!(
                    "grid-n must be a power of two >= 4, got {n}"
                )));
            }
        }
        if let Some(p) = self.p_max {
            positive("p-max", p)?;
        }
        Ok(())
    }

    /// Grid and packet width for the packet simulators, falling back to the
    /// given defaults; enforces `sigma_p > 2 dp`.
    pub fn packet_grid(
        &self,
        default_n: usize,
        default_p_max: f64,
        default_sigma: f64,
    ) -> Result<PacketGrid> {
        let n = self.grid_n.unwrap_or(default_n);
        let p_max = self.p_max.unwrap_or(default_p_max);
        let sigma_p = self.sigma_p.unwrap_or(default_sigma);
        let dp = 2.0 * p_max / n as f64;
        if sigma_p <= 2.0 * dp {
            return Err(Error::Config(format!(
                "sigma-p {sigma_p} must exceed twice the grid spacing {dp}"
            )));
        }
        Ok(PacketGrid { n, p_max, sigma_p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_file_text() {
        let mut c = RunConfig::default();
        c.apply_text(
            "# comment\nmass = 2.5\n tol-fd=1e-5 # trailing\n\ngrid_n = 512\nword = boost:x:0.5,rot:y:0.3\n",
        )
        .unwrap();
        assert_eq!(c.mass, 2.5);
        assert_eq!(c.tol_fd, 1e-5);
        assert_eq!(c.grid_n, Some(512));
        assert_eq!(c.word.as_deref(), Some("boost:x:0.5,rot:y:0.3"));
        c.validate().unwrap();
    }

    #[test]
    fn parse_errors_name_the_line() {
        let mut c = RunConfig::default();
        let e = c.apply_text("mass = 1\nbogus = 3\n").unwrap_err();
        assert!(e.to_string().contains("line 2"));
        assert!(c.apply_text("mass 3").is_err());
        assert!(c.apply_text("samples = -1").is_err());
    }

    #[test]
    fn validation() {
        let ok = RunConfig::default();
        ok.validate().unwrap();
        let bad = |f: fn(&mut RunConfig)| {
            let mut c = RunConfig::default();
            f(&mut c);
            c.validate().is_err()
        };
        assert!(bad(|c| c.samples = 0));
        assert!(bad(|c| c.mass = 0.0));
        assert!(bad(|c| c.grid_n = Some(1000)));
        assert!(bad(|c| c.mix = 1.5));
        assert!(bad(|c| c.tol_fd = f64::NAN));
        // tolerances are not required to be ordered
        RunConfig {
            tol_fd: 1e-16,
            ..RunConfig::default()
        }
        .validate()
        .unwrap();
        let narrow = RunConfig {
            sigma_p: Some(0.01),
            ..RunConfig::default()
        };
        assert!(narrow.packet_grid(1024, 8.0, 0.2).is_err());
        let g = RunConfig::default().packet_grid(1024, 8.0, 0.2).unwrap();
        assert_eq!((g.n, g.p_max, g.sigma_p), (1024, 8.0, 0.2));
    }
}
