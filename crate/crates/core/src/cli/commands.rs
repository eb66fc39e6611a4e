//! Subcommand drivers. They return text and an exit status; the binary owns
//! all I/O.

use std::fmt::Write as _;

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::lab::{check_covariance, CheckReport};
use crate::operators::FdScheme;
use crate::sampling;
use crate::spinor::{scalar_product, Branch, MomentumLattice, Spin, SpinorField};
use crate::tensor::Word;
use crate::wavepacket::{yukawa_demo, zbw_report, PacketSpec, YukawaParams, ZbwParams};

use super::config::RunConfig;
use super::suite::{run_suite, SuiteSettings};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Fail = 1,
    Usage = 2,
    Io = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Result of a subcommand: a human-readable summary and optional CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub summary: String,
    pub csv: Option<String>,
}

impl Outcome {
    fn usage(err: &Error) -> Self {
        Self {
            status: Status::Usage,
            summary: format!("error: {err}\n"),
            csv: None,
        }
    }

    fn judged(passed: bool, summary: String, csv: Option<String>) -> Self {
        Self {
            status: if passed { Status::Pass } else { Status::Fail },
            summary,
            csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimKind {
    Zbw,
    Locality,
    Covariance,
    Yukawa,
}

pub const DEFAULT_WORD: &str = "boost:x:0.5,rot:y:0.3";

/// Render a report table with a header and a closing tally.
pub fn format_reports(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<36} {:<40} {:>10} {:>9} {:>6} RESULT",
        "CHECK", "RELATION", "RESIDUAL", "TOL", "N"
    );
    for r in reports {
        let _ = writeln!(out, "{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
    out
}

pub fn run_verify(cfg: &RunConfig) -> Outcome {
    if let Err(e) = cfg.validate() {
        return Outcome::usage(&e);
    }
    let settings = SuiteSettings {
        mass: cfg.mass,
        seed: cfg.seed,
        tol_exact: cfg.tol_exact,
        tol_fd: cfg.tol_fd,
        samples: cfg.samples,
    };
    match run_suite(&settings) {
        Ok(reports) => {
            let mut summary = format!(
                "verify: mass={} seed={} samples={} tol-exact={:e} tol-fd={:e}\n",
                cfg.mass, cfg.seed, cfg.samples, cfg.tol_exact, cfg.tol_fd
            );
            summary.push_str(&format_reports(&reports));
            Outcome::judged(reports.iter().all(|r| r.passed), summary, None)
        }
        Err(e) => Outcome::judged(false, format!("verify aborted: {e}\n"), None),
    }
}

pub fn run_sim(kind: SimKind, cfg: &RunConfig) -> Outcome {
    if let Err(e) = cfg.validate() {
        return Outcome::usage(&e);
    }
    let result = match kind {
        SimKind::Zbw => zbw(cfg),
        SimKind::Locality => locality(cfg),
        SimKind::Covariance => covariance(cfg),
        SimKind::Yukawa => yukawa(cfg),
    };
    result.unwrap_or_else(|e| match e {
        Error::Config(_) | Error::WordParse(_) | Error::InvalidPacket(_) | Error::InvalidGrid(_) => {
            Outcome::usage(&e)
        }
        other => Outcome::judged(false, format!("error: {other}\n"), None),
    })
}

fn band(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "OUT OF BAND"
    }
}

fn zbw(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.mass;
    let g = cfg.packet_grid(1024, 8.0 * m, 0.2 * m)?;
    let params = ZbwParams {
        n: g.n,
        p_max: g.p_max,
        mass: m,
        packet: PacketSpec {
            p0: cfg.p0,
            sigma_p: g.sigma_p,
            mix: cfg.mix,
            spin: Spin::Up,
        },
        t_max: cfg.t_max,
        dt: cfg.dt,
    };
    let rec = zbw_report(&params)?;
    let mut csv = Vec::new();
    rec.write_csv(&mut csv)
        .map_err(|e| Error::Config(e.to_string()))?;
    let csv = String::from_utf8(csv).expect("csv is ascii");

    let e0 = (m * m + cfg.p0 * cfg.p0).sqrt();
    let osc = rec.dirac_oscillation;
    let mixed = cfg.mix > 0.0 && cfg.mix < 1.0;
    let mut s = String::new();
    let mut ok = true;
    let _ = writeln!(
        s,
        "zbw: N={} p_max={} sigma_p={} mix={} rows={}",
        g.n,
        g.p_max,
        g.sigma_p,
        cfg.mix,
        rec.times.len()
    );
    if mixed {
        let f_ok = (osc.frequency - 2.0 * e0).abs() <= 0.05 * 2.0 * e0;
        let a_ok = osc.amplitude <= 1.0 / (2.0 * m);
        ok &= f_ok && a_ok;
        let _ = writeln!(
            s,
            "dirac oscillation frequency {:.6} (2E = {:.6}) {}",
            osc.frequency,
            2.0 * e0,
            band(f_ok)
        );
        let _ = writeln!(
            s,
            "dirac oscillation amplitude {:.6e} (bound {:.6e}) {}",
            osc.amplitude,
            0.5 / m,
            band(a_ok)
        );
    } else {
        let a_ok = osc.amplitude < 1e-10;
        ok &= a_ok;
        let _ = writeln!(
            s,
            "dirac oscillation amplitude {:.3e} (single branch) {}",
            osc.amplitude,
            band(a_ok)
        );
    }
    let r_ok = rec.field_fit_residual < 1e-6;
    let v_ok = (rec.field_slope - rec.expected_slope).abs() < 1e-3;
    ok &= r_ok && v_ok;
    let _ = writeln!(
        s,
        "field linear-fit residual {:.3e} {}",
        rec.field_fit_residual,
        band(r_ok)
    );
    let _ = writeln!(
        s,
        "field slope {:.9} (expected {:.9}) {}",
        rec.field_slope,
        rec.expected_slope,
        band(v_ok)
    );
    let _ = writeln!(
        s,
        "dirac drift {:.6e}, max imaginary part {:.3e}",
        rec.dirac_drift, rec.max_dirac_imag
    );
    Ok(Outcome::judged(ok, s, Some(csv)))
}

fn locality(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.mass;
    let n = cfg.grid_n.unwrap_or(256);
    let lattice = MomentumLattice::one_dim(n, cfg.p_max.unwrap_or(8.0 * m), m)?;
    let step = lattice.reciprocal_spacing();
    let origin = Vector3::zeros();
    let mut csv = String::from("n,d,ratio_particle,ratio_antiparticle\n");
    let mut worst: f64 = 0.0;
    let bases: Vec<(Branch, Spin, SpinorField, f64)> = Branch::BOTH
        .iter()
        .flat_map(|&b| Spin::BOTH.map(move |s| (b, s)))
        .map(|(b, s)| {
            let f0 = SpinorField::localized(&lattice, b, s, &origin, 0.0);
            let n0 = scalar_product(&f0, &f0)?.re;
            Ok((b, s, f0, n0))
        })
        .collect::<Result<_>>()?;
    for k in 1..lattice.len() {
        let d = Vector3::new(0.0, 0.0, k as f64 * step);
        let mut ratio = [0.0_f64; 2];
        for (b, s, f0, n0) in &bases {
            let fd = SpinorField::localized(&lattice, *b, *s, &d, 0.0);
            let r = scalar_product(f0, &fd)?.norm() / n0;
            let slot = &mut ratio[usize::from(*b == Branch::Antiparticle)];
            *slot = slot.max(r);
        }
        worst = worst.max(ratio[0]).max(ratio[1]);
        let _ = writeln!(csv, "{k},{:.11e},{:.11e},{:.11e}", d.z, ratio[0], ratio[1]);
    }
    let ok = worst < 1e-8;
    let summary = format!(
        "locality: N={} p_max={} displacements={}\nmax overlap ratio {:.3e} (bound 1e-8) {}\n",
        n,
        lattice.p_max(),
        lattice.len() - 1,
        worst,
        band(ok)
    );
    Ok(Outcome::judged(ok, summary, Some(csv)))
}

fn covariance(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.mass;
    let word: Word = cfg.word.as_deref().unwrap_or(DEFAULT_WORD).parse()?;
    let fd = FdScheme::default();
    let mut rng = sampling::rng_for(cfg.seed, 0);
    let mut csv = String::from("sample,branch,spin,px,py,pz,spinor_residual,eigen_residual\n");
    let (mut ws, mut we) = (0.0_f64, 0.0_f64);
    for i in 0..cfg.samples {
        let p = sampling::momentum(&mut rng, m, 2.0 * m);
        let x = sampling::position(&mut rng, 1.0 / m);
        let x0: f64 = rand::Rng::random_range(&mut rng, -0.5..=0.5) / m;
        let (b, s) = (sampling::branch(&mut rng), sampling::spin(&mut rng));
        let rep = check_covariance(&word, &p, b, s, &x, x0, &fd, 1e-10, cfg.tol_fd)?;
        ws = ws.max(rep.spinor.max_residual);
        we = we.max(rep.eigenvalue.max_residual);
        let v = p.spatial();
        let _ = writeln!(
            csv,
            "{i},{b},{:+},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e}",
            s.value(),
            v.x,
            v.y,
            v.z,
            rep.spinor.max_residual,
            rep.eigenvalue.max_residual
        );
    }
    let (s_ok, e_ok) = (ws < 1e-10, we < cfg.tol_fd);
    let summary = format!(
        "covariance: word=[{word}] samples={}\nspinor identity residual {:.3e} (bound 1e-10) {}\ntransformed eigenvalue residual {:.3e} (bound {:e}) {}\n",
        cfg.samples,
        ws,
        band(s_ok),
        we,
        cfg.tol_fd,
        band(e_ok)
    );
    Ok(Outcome::judged(s_ok && e_ok, summary, Some(csv)))
}

fn yukawa(cfg: &RunConfig) -> Result<Outcome> {
    let base = YukawaParams::for_mass(cfg.mass);
    let g = cfg.packet_grid(base.n, base.p_max, base.sigma_p)?;
    let params = YukawaParams {
        n: g.n,
        p_max: g.p_max,
        sigma_p: g.sigma_p,
        ..base
    };
    let rep = yukawa_demo(&params)?;
    let mut csv = String::from("x,remainder,field\n");
    for ((x, r), f) in rep.positions.iter().zip(&rep.remainder).zip(&rep.field) {
        let _ = writeln!(csv, "{x:.11e},{r:.11e},{f:.11e}");
    }
    let ok = (0.9..=1.1).contains(&rep.ratio_to_mass);
    let summary = format!(
        "yukawa: N={} p_max={} sigma_p={} fit window [{}, {}]\ndecay constant {:.6} (ratio to mass {:.6}, band [0.9, 1.1]) {}\npower-law exponent {:.4}\n99.9% radius: remainder {:.4}, field {:.4}\n",
        g.n,
        g.p_max,
        g.sigma_p,
        params.fit_from,
        params.fit_to,
        rep.decay_constant,
        rep.ratio_to_mass,
        band(ok),
        rep.power,
        rep.remainder_radius,
        rep.field_radius
    );
    Ok(Outcome::judged(ok, summary, Some(csv)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_samples_is_usage() {
        let cfg = RunConfig {
            samples: 0,
            ..RunConfig::default()
        };
        assert_eq!(run_verify(&cfg).status, Status::Usage);
        assert_eq!(run_sim(SimKind::Covariance, &cfg).status, Status::Usage);
    }

    #[test]
    fn bad_word_is_usage() {
        let cfg = RunConfig {
            word: Some("boost:w:1".into()),
            samples: 1,
            ..RunConfig::default()
        };
        assert_eq!(run_sim(SimKind::Covariance, &cfg).status, Status::Usage);
    }

    #[test]
    fn locality_defaults_pass() {
        let out = run_sim(SimKind::Locality, &RunConfig::default());
        assert_eq!(out.status, Status::Pass, "{}", out.summary);
        assert_eq!(out.csv.unwrap().lines().count(), 256);
    }

    #[test]
    fn covariance_small_run() {
        let cfg = RunConfig {
            samples: 5,
            ..RunConfig::default()
        };
        let out = run_sim(SimKind::Covariance, &cfg);
        assert_eq!(out.status, Status::Pass, "{}", out.summary);
        assert_eq!(out.csv.unwrap().lines().count(), 6);
    }
}
