//! One-dimensional wavepackets on a momentum grid: spectral time evolution,
//! position expectation values, Zitterbewegung analysis and the Yukawa-kernel
//! remainder of the field position operator.
//!
//! Momenta point along z and the spin label is held fixed. Antiparticle
//! amplitudes are indexed by their momentum label `q`; in the Dirac spinor
//! sum that label sits on the Fourier mode `-q`.

use std::f64::consts::PI;
use std::io::Write;
use std::sync::Arc;

use nalgebra::Vector3;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::dirac::{boost_spinor_rep, boost_spinor_rep_grad, c, DiracVector, ZERO};
use crate::error::{Error, Result};
use crate::numeric::{fit_line, least_squares, pairwise_sum, pairwise_sum_complex};
use crate::spinor::{rest_spinor, spinor_components, Branch, Spin};
use crate::tensor::Momentum;

/// Uniform periodic grid `p_n = (n - N/2) dp`, `dp = 2 p_max / N`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid1D {
    n: usize,
    p_max: f64,
    mass: f64,
}

impl MomentumGrid1D {
    pub fn new(n: usize, p_max: f64, mass: f64) -> Result<Self> {
        if n < 4 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "mode count {n} is not a power of two >= 4"
            )));
        }
        if !(p_max.is_finite() && p_max > 0.0) {
            return Err(Error::InvalidGrid(format!("p_max {p_max}")));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        Ok(Self { n, p_max, mass })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.p_max / self.n as f64
    }

    /// Reciprocal lattice spacing `2 pi / (2 p_max)`.
    pub fn reciprocal_spacing(&self) -> f64 {
        PI / self.p_max
    }

    /// Position-space period `2 pi / dp`.
    pub fn position_period(&self) -> f64 {
        2.0 * PI / self.spacing()
    }

    pub fn node(&self, i: usize) -> f64 {
        (i as f64 - (self.n / 2) as f64) * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    pub fn momentum(&self, i: usize) -> Momentum {
        Momentum::new(self.mass, Vector3::new(0.0, 0.0, self.node(i))).expect("mass validated")
    }

    pub fn energy(&self, i: usize) -> f64 {
        self.node(i).hypot(self.mass)
    }

    /// Invariant measure `(dp/2pi) m/E` at node `i`.
    pub fn weight(&self, i: usize) -> f64 {
        self.spacing() / (2.0 * PI) * self.mass / self.energy(i)
    }

    /// Index of the node carrying `-p_i` (periodic wrap at the lower edge).
    pub fn mirror(&self, i: usize) -> usize {
        (self.n - i) % self.n
    }
}

/// Periodic spectral derivative `d/dp` on the grid, Nyquist mode dropped.
pub struct SpectralDerivative {
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    wavenumbers: Vec<f64>,
}

impl SpectralDerivative {
    pub fn new(grid: &MomentumGrid1D) -> Self {
        let n = grid.len();
        let base = 2.0 * PI / (n as f64 * grid.spacing());
        let wavenumbers = (0..n)
            .map(|j| match j.cmp(&(n / 2)) {
                std::cmp::Ordering::Less => base * j as f64,
                std::cmp::Ordering::Equal => 0.0,
                std::cmp::Ordering::Greater => base * (j as f64 - n as f64),
            })
            .collect();
        let mut planner = FftPlanner::new();
        Self {
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
            wavenumbers,
        }
    }

    pub fn apply(&self, f: &[Complex64]) -> Vec<Complex64> {
        let n = f.len() as f64;
        let mut buf = f.to_vec();
        self.forward.process(&mut buf);
        for (z, &k) in buf.iter_mut().zip(&self.wavenumbers) {
            *z *= Complex64::new(0.0, k / n);
        }
        self.inverse.process(&mut buf);
        buf
    }
}

/// Amplitudes on both branches for one spin label.
#[derive(Debug, Clone, PartialEq)]
pub struct WavePacket {
    grid: MomentumGrid1D,
    spin: Spin,
    particle: Vec<Complex64>,
    antiparticle: Vec<Complex64>,
}

/// Parameters of a Gaussian packet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketSpec {
    pub p0: f64,
    pub sigma_p: f64,
    /// Particle fraction `w` in `[0, 1]`.
    pub mix: f64,
    pub spin: Spin,
}

/// Gaussian amplitudes `exp(-(p - p0)^2 / (4 sigma^2))` on both branches,
/// weighted `sqrt(w)` and `sqrt(1 - w)` and normalized in the invariant measure.
pub fn build_packet(grid: &MomentumGrid1D, spec: &PacketSpec) -> Result<WavePacket> {
    let PacketSpec {
        p0,
        sigma_p,
        mix,
        spin,
    } = *spec;
    if !(0.0..=1.0).contains(&mix) {
        return Err(Error::InvalidPacket(format!("mix {mix} outside [0, 1]")));
    }
    if !(sigma_p > 2.0 * grid.spacing()) {
        return Err(Error::InvalidPacket(format!(
            "sigma_p {sigma_p} must exceed twice the grid spacing {}",
            grid.spacing()
        )));
    }
    if !(p0.abs() + 4.0 * sigma_p < grid.p_max()) {
        return Err(Error::InvalidPacket(format!(
            "|p0| + 4 sigma_p = {} reaches p_max {}",
            p0.abs() + 4.0 * sigma_p,
            grid.p_max()
        )));
    }
    let shape: Vec<f64> = grid
        .nodes()
        .iter()
        .map(|p| (-(p - p0).powi(2) / (4.0 * sigma_p * sigma_p)).exp())
        .collect();
    let norm: Vec<f64> = shape
        .iter()
        .enumerate()
        .map(|(i, g)| grid.weight(i) * g * g)
        .collect();
    let norm = pairwise_sum(&norm).sqrt();
    let amp = |frac: f64| -> Vec<Complex64> { shape.iter().map(|g| c(frac.sqrt() * g / norm)).collect() };
    Ok(WavePacket {
        grid: grid.clone(),
        spin,
        particle: amp(mix),
        antiparticle: amp(1.0 - mix),
    })
}

impl WavePacket {
    pub fn grid(&self) -> &MomentumGrid1D {
        &self.grid
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn amplitudes(&self, branch: Branch) -> &[Complex64] {
        match branch {
            Branch::Particle => &self.particle,
            Branch::Antiparticle => &self.antiparticle,
        }
    }

    /// `sum_n weight_n |a_n|^2` on one branch.
    pub fn branch_norm(&self, branch: Branch) -> f64 {
        let t: Vec<f64> = self
            .amplitudes(branch)
            .iter()
            .enumerate()
            .map(|(i, a)| self.grid.weight(i) * a.norm_sqr())
            .collect();
        pairwise_sum(&t)
    }

    pub fn norm(&self) -> f64 {
        self.branch_norm(Branch::Particle) + self.branch_norm(Branch::Antiparticle)
    }

    /// Branches that carry any amplitude.
    pub fn occupied(&self) -> Vec<Branch> {
        Branch::BOTH
            .into_iter()
            .filter(|&b| self.amplitudes(b).iter().any(|a| *a != ZERO))
            .collect()
    }

    /// Copy with one branch zeroed.
    pub fn branch_component(&self, branch: Branch) -> WavePacket {
        let mut out = self.clone();
        let zero = vec![ZERO; self.grid.len()];
        match branch {
            Branch::Particle => out.antiparticle = zero,
            Branch::Antiparticle => out.particle = zero,
        }
        out
    }

    /// Largest amplitude on the two edge nodes.
    pub fn edge_amplitude(&self) -> f64 {
        let last = self.grid.len() - 1;
        [&self.particle, &self.antiparticle]
            .iter()
            .flat_map(|a| [a[0].norm(), a[last].norm()])
            .fold(0.0, f64::max)
    }

    /// Dirac spinor at each Fourier node.
    pub fn dirac_field(&self) -> Vec<DiracVector> {
        let g = &self.grid;
        (0..g.len())
            .map(|i| {
                let p = g.momentum(i);
                let j = g.mirror(i);
                let up = spinor_components(&p, Branch::Particle, self.spin) * self.particle[i];
                let down =
                    spinor_components(&p.reversed(), Branch::Antiparticle, self.spin) * self.antiparticle[j];
                up + down
            })
            .collect()
    }
}

/// Multiply branch amplitudes by `exp(-/+ i E t)`.
pub fn evolve(packet: &WavePacket, t: f64) -> WavePacket {
    let mut out = packet.clone();
    for i in 0..packet.grid.len() {
        let ph = Complex64::from_polar(1.0, -packet.grid.energy(i) * t);
        out.particle[i] *= ph;
        out.antiparticle[i] *= ph.conj();
    }
    out
}

/// Which position operator to take the expectation of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionKind {
    /// `i d/dp` on the full four-spinor.
    Dirac,
    /// The branch field position operator; single-branch packets only.
    Field,
}

/// Complex expectation `<psi|x|psi> / <psi|psi>` of the z-position.
pub fn expect_position_complex(
    packet: &WavePacket,
    kind: PositionKind,
    deriv: &SpectralDerivative,
) -> Result<Complex64> {
    let g = &packet.grid;
    match kind {
        PositionKind::Dirac => {
            let psi = packet.dirac_field();
            let mut d = vec![DiracVector::zeros(); g.len()];
            for comp in 0..4 {
                let col: Vec<Complex64> = psi.iter().map(|v| v[comp]).collect();
                for (dv, z) in d.iter_mut().zip(deriv.apply(&col)) {
                    dv[comp] = z;
                }
            }
            let num: Vec<Complex64> = (0..g.len())
                .map(|i| psi[i].dotc(&d[i]) * Complex64::new(0.0, g.weight(i)))
                .collect();
            let den: Vec<f64> = (0..g.len())
                .map(|i| psi[i].norm_squared() * g.weight(i))
                .collect();
            Ok(pairwise_sum_complex(&num) / pairwise_sum(&den))
        }
        PositionKind::Field => {
            let occupied = packet.occupied();
            let branch = match occupied.as_slice() {
                [b] => *b,
                [] => return Err(Error::InvalidPacket("empty packet".into())),
                _ => return Err(Error::MixedBranch),
            };
            // The matrix part annihilates the branch spinor, so only the
            // amplitude is differentiated; psi^dagger psi = E/m cancels m/E.
            let a = packet.amplitudes(branch);
            let da = deriv.apply(a);
            let cell = g.spacing() / (2.0 * PI);
            let sign = branch.sign();
            let num: Vec<Complex64> = (0..g.len())
                .map(|i| a[i].conj() * da[i] * Complex64::new(0.0, sign * cell))
                .collect();
            let den: Vec<f64> = a.iter().map(|z| z.norm_sqr() * cell).collect();
            Ok(pairwise_sum_complex(&num) / pairwise_sum(&den))
        }
    }
}

pub fn expect_position(packet: &WavePacket, kind: PositionKind, deriv: &SpectralDerivative) -> Result<f64> {
    expect_position_complex(packet, kind, deriv).map(|z| z.re)
}

/// `<p/E>` weighted by `|a|^2 (dp/2pi)`, the drift of a branch under [`evolve`].
///
/// Antiparticle amplitudes carry `exp(+iEt)`, which is evolution backwards
/// under `H_AP`; their label drift is therefore `+q/E`, the reverse of the
/// `-p/E` generated by the velocity operator.
pub fn mean_velocity(packet: &WavePacket, branch: Branch) -> f64 {
    let g = &packet.grid;
    let a = packet.amplitudes(branch);
    let num: Vec<f64> = (0..g.len())
        .map(|i| a[i].norm_sqr() * g.node(i) / g.energy(i))
        .collect();
    let den: Vec<f64> = a.iter().map(|z| z.norm_sqr()).collect();
    pairwise_sum(&num) / pairwise_sum(&den)
}

/// Inputs to [`zbw_report`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZbwParams {
    pub n: usize,
    pub p_max: f64,
    pub mass: f64,
    pub packet: PacketSpec,
    pub t_max: f64,
    pub dt: f64,
}

impl Default for ZbwParams {
    fn default() -> Self {
        Self {
            n: 1024,
            p_max: 8.0,
            mass: 1.0,
            packet: PacketSpec {
                p0: 0.0,
                sigma_p: 0.2,
                mix: 0.5,
                spin: Spin::Up,
            },
            t_max: 40.0,
            dt: 0.05,
        }
    }
}

/// Dominant angular frequency and half peak-to-peak amplitude of a sampled
/// signal after removing its least-squares line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillation {
    pub frequency: f64,
    pub amplitude: f64,
}

/// Spectral peak of the detrended signal, Hann-windowed and zero-padded
/// sixteenfold.
pub fn analyze_oscillation(times: &[f64], values: &[f64], dt: f64) -> Oscillation {
    let fit = fit_line(times, values);
    let detrended: Vec<f64> = times
        .iter()
        .zip(values)
        .map(|(t, v)| v - fit.intercept - fit.slope * t)
        .collect();
    let (lo, hi) = detrended
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
            (a.min(v), b.max(v))
        });
    let amplitude = if detrended.is_empty() {
        0.0
    } else {
        (hi - lo) / 2.0
    };
    let n = detrended.len();
    if n < 3 {
        return Oscillation {
            frequency: 0.0,
            amplitude,
        };
    }
    let padded = 16 * n;
    let mut buf = vec![ZERO; padded];
    for (i, v) in detrended.iter().enumerate() {
        let w = 0.5 - 0.5 * (2.0 * PI * i as f64 / (n - 1) as f64).cos();
        buf[i] = c(v * w);
    }
    FftPlanner::new().plan_fft_forward(padded).process(&mut buf);
    let peak = (1..=padded / 2)
        .max_by(|&a, &b| buf[a].norm().total_cmp(&buf[b].norm()))
        .unwrap_or(0);
    Oscillation {
        frequency: 2.0 * PI * peak as f64 / (padded as f64 * dt),
        amplitude,
    }
}

/// Dirac versus field position trajectories of one packet.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRecord {
    pub times: Vec<f64>,
    pub x_dirac: Vec<f64>,
    pub x_dirac_im: Vec<f64>,
    /// Field position of the particle component (antiparticle if no particle part).
    pub x_field: Vec<f64>,
    /// Straight line `x_field(0) + <v> t` with the classical mean velocity.
    pub x_analytic: Vec<f64>,
    pub dirac_drift: f64,
    pub dirac_oscillation: Oscillation,
    pub field_slope: f64,
    pub field_fit_residual: f64,
    pub expected_slope: f64,
    pub max_dirac_imag: f64,
}

impl TrajectoryRecord {
    /// CSV with a header row and 12 significant digits per value.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "t,x_dirac,x_dirac_im,x_field,x_analytic")?;
        for i in 0..self.times.len() {
            writeln!(
                out,
                "{:.11e},{:.11e},{:.11e},{:.11e},{:.11e}",
                self.times[i], self.x_dirac[i], self.x_dirac_im[i], self.x_field[i], self.x_analytic[i]
            )?;
        }
        Ok(())
    }
}

/// Sample times `0, dt, ..., t_max`.
pub fn sample_times(t_max: f64, dt: f64) -> Result<Vec<f64>> {
    if !(dt.is_finite() && dt > 0.0 && t_max.is_finite() && t_max >= 0.0) {
        return Err(Error::InvalidPacket(format!("t_max {t_max}, dt {dt}")));
    }
    let steps = (t_max / dt + 1e-9).floor() as usize;
    Ok((0..=steps).map(|i| i as f64 * dt).collect())
}

pub fn zbw_report(params: &ZbwParams) -> Result<TrajectoryRecord> {
    let grid = MomentumGrid1D::new(params.n, params.p_max, params.mass)?;
    let packet = build_packet(&grid, &params.packet)?;
    let deriv = SpectralDerivative::new(&grid);
    let times = sample_times(params.t_max, params.dt)?;
    let field_branch = packet.occupied().first().copied().unwrap_or(Branch::Particle);
    let single = packet.branch_component(field_branch);
    let mut x_dirac = Vec::with_capacity(times.len());
    let mut x_dirac_im = Vec::with_capacity(times.len());
    let mut x_field = Vec::with_capacity(times.len());
    for &t in &times {
        let d = expect_position_complex(&evolve(&packet, t), PositionKind::Dirac, &deriv)?;
        x_dirac.push(d.re);
        x_dirac_im.push(d.im);
        x_field.push(expect_position(&evolve(&single, t), PositionKind::Field, &deriv)?);
    }
    let expected_slope = mean_velocity(&single, field_branch);
    let x_analytic = times.iter().map(|t| x_field[0] + expected_slope * t).collect();
    let field_fit = fit_line(&times, &x_field);
    let dirac_fit = fit_line(&times, &x_dirac);
    Ok(TrajectoryRecord {
        dirac_oscillation: analyze_oscillation(&times, &x_dirac, params.dt),
        dirac_drift: dirac_fit.slope,
        field_slope: field_fit.slope,
        field_fit_residual: field_fit.max_residual,
        expected_slope,
        max_dirac_imag: x_dirac_im.iter().fold(0.0, |a: f64, b| a.max(b.abs())),
        times,
        x_dirac,
        x_dirac_im,
        x_field,
        x_analytic,
    })
}

/// Inputs to [`yukawa_demo`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YukawaParams {
    pub n: usize,
    pub p_max: f64,
    pub mass: f64,
    pub sigma_p: f64,
    /// Fit window in position space.
    pub fit_from: f64,
    pub fit_to: f64,
    pub samples: usize,
}

impl YukawaParams {
    /// Well-resolved defaults for mass `m`.
    pub fn for_mass(mass: f64) -> Self {
        Self {
            n: 2048,
            p_max: 32.0,
            mass,
            sigma_p: 2.0,
            fit_from: (4.0_f64).min(4.0 / mass),
            fit_to: (12.0_f64).min(30.0 / mass),
            samples: 400,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct YukawaReport {
    /// Fitted `kappa` in `log|r| = c + alpha log x - kappa x`.
    pub decay_constant: f64,
    pub ratio_to_mass: f64,
    pub power: f64,
    pub positions: Vec<f64>,
    pub remainder: Vec<f64>,
    pub field: Vec<f64>,
    /// Radii containing 99.9% of `|r|^2` and `|psi|^2` on the sampled half-line.
    pub remainder_radius: f64,
    pub field_radius: f64,
}

/// `d/dp ((m/E) psi_+(p))` along z.
fn weighted_spinor_derivative(p: &Momentum, spin: Spin) -> DiracVector {
    let (m, e) = (p.mass(), p.energy());
    let rest = rest_spinor(Branch::Particle, spin);
    let dm =
        boost_spinor_rep_grad(p, 2) * c(m / e) - boost_spinor_rep(p) * c(m * p.component(2) / (e * e * e));
    dm * rest
}

fn radius(xs: &[f64], f: &[f64], frac: f64) -> f64 {
    let w: Vec<f64> = f.iter().map(|v| v * v).collect();
    let total = pairwise_sum(&w);
    let mut acc = 0.0;
    for (x, wi) in xs.iter().zip(&w) {
        acc += wi;
        if acc >= frac * total {
            return *x;
        }
    }
    *xs.last().unwrap_or(&0.0)
}

/// Nonlocal remainder `r(x) = (X_P psi)(x) - x psi(x)` for a centred Gaussian
/// particle packet, computed from its momentum-space form, and an exponential
/// fit of its tail.
pub fn yukawa_demo(params: &YukawaParams) -> Result<YukawaReport> {
    let grid = MomentumGrid1D::new(params.n, params.p_max, params.mass)?;
    let YukawaParams {
        fit_from,
        fit_to,
        samples,
        sigma_p,
        mass,
        ..
    } = *params;
    if !(fit_from > 0.0 && fit_to > fit_from && samples >= 16) {
        return Err(Error::InsufficientTail(format!(
            "window [{fit_from}, {fit_to}] with {samples} samples"
        )));
    }
    if fit_to + 4.0 / mass > grid.position_period() / 2.0 {
        return Err(Error::InsufficientTail(
            "fit window exceeds the periodic position range".into(),
        ));
    }
    let spin = Spin::Up;
    let x_end = fit_to + 4.0 / mass.min(1.0);
    let positions: Vec<f64> = (0..samples)
        .map(|i| x_end * i as f64 / (samples - 1) as f64)
        .collect();
    let cell = grid.spacing() / (2.0 * PI);
    let modes: Vec<(f64, DiracVector, DiracVector)> = (0..grid.len())
        .map(|i| {
            let p = grid.momentum(i);
            let a = (-p.component(2).powi(2) / (4.0 * sigma_p * sigma_p)).exp();
            let f = spinor_components(&p, Branch::Particle, spin) * c(a * mass / p.energy());
            let d = weighted_spinor_derivative(&p, spin) * Complex64::new(0.0, -a);
            (p.component(2), f, d)
        })
        .collect();
    let mut remainder = Vec::with_capacity(samples);
    let mut field = Vec::with_capacity(samples);
    for &x in &positions {
        let mut r = DiracVector::zeros();
        let mut f = DiracVector::zeros();
        for (p, fv, dv) in &modes {
            let ph = Complex64::from_polar(cell, p * x);
            r += dv * ph;
            f += fv * ph;
        }
        remainder.push(r.norm());
        field.push(f.norm());
    }
    let mut design = Vec::new();
    let mut logs = Vec::new();
    for (x, r) in positions.iter().zip(&remainder) {
        if *x >= fit_from && *x <= fit_to {
            if !(*r > 0.0 && r.ln().is_finite()) {
                return Err(Error::InsufficientTail(format!(
                    "remainder underflows at x = {x}"
                )));
            }
            design.push(vec![1.0, x.ln(), -x]);
            logs.push(r.ln());
        }
    }
    if design.len() < 8 {
        return Err(Error::InsufficientTail(format!(
            "{} samples in fit window",
            design.len()
        )));
    }
    let coef = least_squares(&design, &logs).ok_or_else(|| Error::InsufficientTail("singular fit".into()))?;
    Ok(YukawaReport {
        decay_constant: coef[2],
        ratio_to_mass: coef[2] / mass,
        power: coef[1],
        remainder_radius: radius(&positions, &remainder, 0.999),
        field_radius: radius(&positions, &field, 0.999),
        positions,
        remainder,
        field,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> MomentumGrid1D {
        MomentumGrid1D::new(1024, 8.0, 1.0).unwrap()
    }

    fn spec(p0: f64, mix: f64) -> PacketSpec {
        PacketSpec {
            p0,
            sigma_p: 0.2,
            mix,
            spin: Spin::Up,
        }
    }

    #[test]
    fn grid_basics() {
        let g = grid();
        assert_eq!(g.spacing() * g.len() as f64, 16.0);
        assert!((g.reciprocal_spacing() - 2.0 * PI / 16.0).abs() < 1e-15);
        assert_eq!(g.node(512), 0.0);
        assert_eq!(g.mirror(512), 512);
        assert_eq!(g.node(g.mirror(100)), -g.node(100));
        assert!(MomentumGrid1D::new(1000, 8.0, 1.0).is_err());
    }

    #[test]
    fn spectral_derivative_of_periodic_mode() {
        let g = MomentumGrid1D::new(64, PI, 1.0).unwrap();
        let d = SpectralDerivative::new(&g);
        let f: Vec<Complex64> = g
            .nodes()
            .iter()
            .map(|p| Complex64::from_polar(1.0, 3.0 * p))
            .collect();
        let df = d.apply(&f);
        for (a, b) in f.iter().zip(&df) {
            assert!((b - a * Complex64::new(0.0, 3.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn packet_validation() {
        let g = grid();
        assert!(build_packet(
            &g,
            &PacketSpec {
                sigma_p: 0.02,
                ..spec(0.0, 1.0)
            }
        )
        .is_err());
        assert!(build_packet(&g, &spec(7.5, 1.0)).is_err());
        assert!(build_packet(&g, &spec(0.0, 1.5)).is_err());
    }

    #[test]
    fn packet_norms() {
        let g = grid();
        let pure = build_packet(&g, &spec(0.0, 1.0)).unwrap();
        assert!(pure.amplitudes(Branch::Antiparticle).iter().all(|a| *a == ZERO));
        assert!((pure.norm() - 1.0).abs() < 1e-12);
        let mixed = build_packet(&g, &spec(0.0, 0.5)).unwrap();
        assert!((mixed.branch_norm(Branch::Particle) - 0.5).abs() < 1e-12);
        assert!((mixed.branch_norm(Branch::Antiparticle) - 0.5).abs() < 1e-12);
        assert!(mixed.edge_amplitude() < 1e-12);
    }

    #[test]
    fn evolution_composes() {
        let p = build_packet(&grid(), &spec(0.5, 0.3)).unwrap();
        assert_eq!(evolve(&p, 0.0), p);
        let two = evolve(&evolve(&p, 1.3), 2.9);
        let one = evolve(&p, 4.2);
        for b in Branch::BOTH {
            for (x, y) in two.amplitudes(b).iter().zip(one.amplitudes(b)) {
                assert!((x - y).norm() < 1e-13);
            }
        }
        assert!((two.norm() - p.norm()).abs() < 1e-13);
        let g = p.grid();
        let single = evolve(&p, 2.0).amplitudes(Branch::Particle)[700] / p.amplitudes(Branch::Particle)[700];
        assert!((single - Complex64::from_polar(1.0, -2.0 * g.energy(700))).norm() < 1e-14);
    }

    #[test]
    fn symmetric_packet_is_centred() {
        let g = grid();
        let d = SpectralDerivative::new(&g);
        for mix in [1.0, 0.5] {
            let p = build_packet(&g, &spec(0.0, mix)).unwrap();
            let x = expect_position_complex(&p, PositionKind::Dirac, &d).unwrap();
            assert!(x.norm() < 1e-10);
        }
        let mixed = build_packet(&g, &spec(0.0, 0.5)).unwrap();
        assert_eq!(
            expect_position(&mixed, PositionKind::Field, &d),
            Err(Error::MixedBranch)
        );
    }

    #[test]
    fn field_position_drifts_classically() {
        let g = grid();
        let d = SpectralDerivative::new(&g);
        for branch in Branch::BOTH {
            let mix = if branch == Branch::Particle { 1.0 } else { 0.0 };
            let p = build_packet(&g, &spec(1.0, mix)).unwrap();
            let ts: Vec<f64> = (0..=20).map(|i| i as f64 * 2.0).collect();
            let xs: Vec<f64> = ts
                .iter()
                .map(|&t| expect_position(&evolve(&p, t), PositionKind::Field, &d).unwrap())
                .collect();
            let fit = fit_line(&ts, &xs);
            assert!(fit.max_residual < 1e-6);
            assert!((fit.slope - mean_velocity(&p, branch)).abs() < 1e-3, "{branch}");
        }
    }

    #[test]
    fn oscillation_of_pure_tone() {
        let ts: Vec<f64> = (0..801).map(|i| i as f64 * 0.05).collect();
        let ys: Vec<f64> = ts.iter().map(|t| 0.3 * t + 0.25 * (2.0 * t).sin()).collect();
        let o = analyze_oscillation(&ts, &ys, 0.05);
        assert!((o.frequency - 2.0).abs() < 0.02, "{o:?}");
        assert!((o.amplitude - 0.25).abs() < 0.02);
    }

    #[test]
    fn pure_particle_dirac_is_flat() {
        let rec = zbw_report(&ZbwParams {
            packet: spec(0.0, 1.0),
            t_max: 5.0,
            ..Default::default()
        })
        .unwrap();
        assert!(rec.dirac_oscillation.amplitude < 1e-10);
        assert!(rec.field_fit_residual < 1e-10);
    }

    #[test]
    fn csv_shape() {
        let rec = zbw_report(&ZbwParams {
            t_max: 1.0,
            ..Default::default()
        })
        .unwrap();
        let mut buf = Vec::new();
        rec.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "t,x_dirac,x_dirac_im,x_field,x_analytic");
        assert_eq!(lines.len(), 22);
        assert!(lines[1].starts_with("0.00000000000e0,"));
    }

    #[test]
    fn sample_times_count() {
        assert_eq!(sample_times(40.0, 0.05).unwrap().len(), 801);
        assert!(sample_times(1.0, 0.0).is_err());
    }

    #[test]
    fn yukawa_window_validation() {
        let bad = YukawaParams {
            fit_from: 5.0,
            fit_to: 4.0,
            ..YukawaParams::for_mass(1.0)
        };
        assert!(matches!(yukawa_demo(&bad), Err(Error::InsufficientTail(_))));
    }
}
