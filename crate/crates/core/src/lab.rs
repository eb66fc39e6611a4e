//! Named end-to-end verifications that report their worst residual against a
//! tolerance.

use std::fmt;

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::dirac::{
    block_diag, boost_spinor_rep, boost_spinor_rep_closed, boost_spinor_rep_inv, c, clifford_basis,
    diagonal_blocks, fw_unitary, max_abs, off_diagonal_norm, spinor_rep_from_word, wigner_d_block,
    DiracMatrix, DiracVector, SpinMatrix2,
};
use crate::error::{Error, Result};
use crate::operators::{field_position, hamiltonian, nw_position, time_slice, FdScheme};
use crate::spinor::{
    energy_projector, localized_phase, scalar_product, spinor_components, Branch, MomentumLattice, Spin,
    SpinorField,
};
use crate::tensor::{
    lorentz_from_word, transform_momentum, wigner_rotation, FourVector, LorentzMatrix, Momentum, Word,
};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    /// Identifier of the relation being verified.
    pub anchor: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub samples: usize,
    /// Description of the worst sample.
    pub details: String,
}

impl CheckReport {
    pub fn new(name: &str, anchor: &str, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            anchor: anchor.to_string(),
            max_residual: 0.0,
            tolerance,
            passed: true,
            samples: 0,
            details: String::new(),
        }
    }

    /// Record one sample. NaN residuals always count as the worst case.
    pub fn record(&mut self, residual: f64, describe: impl FnOnce() -> String) {
        self.samples += 1;
        let worse = residual.is_nan() || residual > self.max_residual || self.samples == 1;
        if worse && !self.max_residual.is_nan() {
            self.max_residual = residual;
            self.details = describe();
        }
        self.passed = !self.max_residual.is_nan() && self.max_residual <= self.tolerance;
    }

    pub fn merge(&mut self, other: &CheckReport) {
        let samples = self.samples + other.samples;
        let details = other.details.clone();
        self.record(other.max_residual, || details);
        self.samples = samples;
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<36} {:<40} {:>10.3e} {:>9.1e} {:>6} {}",
            self.name,
            self.anchor,
            self.max_residual,
            self.tolerance,
            self.samples,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

fn describe_p(p: &Momentum) -> String {
    let s = p.spatial();
    format!("m={} p=({:.4},{:.4},{:.4})", p.mass(), s.x, s.y, s.z)
}

/// Residual of `X^k(x0) f = x^k f` for the localized state at `(x0, x)`.
pub fn check_position_eigenstate(
    x: &Vector3<f64>,
    x0: f64,
    p: &Momentum,
    branch: Branch,
    spin: Spin,
    fd: &FdScheme,
    tolerance: f64,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new("position eigenstate", "localized-state eigenvalue", tolerance);
    let ops = time_slice(&field_position(branch), x0);
    let f = |q: &Momentum| spinor_components(q, branch, spin) * localized_phase(q, branch, x, x0);
    for (k, op) in ops.iter().enumerate() {
        let r = (op.apply(f, p, fd)? - f(p) * c(x[k])).norm();
        rep.record(r, || format!("{branch} {} k={} x0={x0}", describe_p(p), k + 1));
    }
    Ok(rep)
}

/// `M(L_q)^-1 M(Lambda) M(L_p)` as `diag(u, u)`; returns `u` and the size of
/// the off-block and block-mismatch parts.
pub fn spinor_wigner_block(word: &Word, p: &Momentum) -> Result<(SpinMatrix2, f64)> {
    let lambda = lorentz_from_word(word)?;
    let q = transform_momentum(&lambda, p)?;
    let d = boost_spinor_rep_inv(&q) * spinor_rep_from_word(word)? * boost_spinor_rep(p);
    let (u, v) = diagonal_blocks(&d);
    Ok((u, off_diagonal_norm(&d).max(max_abs(&(u - v)))))
}

/// Split result of [`check_covariance`].
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceReport {
    /// `M(Lambda) psi(p) = sum D psi(q)` and the related block identities.
    pub spinor: CheckReport,
    /// The transformed localized state is a position eigenstate at `Lambda x`.
    pub eigenvalue: CheckReport,
}

#[allow(clippy::too_many_arguments)]
pub fn check_covariance(
    word: &Word,
    p: &Momentum,
    branch: Branch,
    spin: Spin,
    x: &Vector3<f64>,
    x0: f64,
    fd: &FdScheme,
    tol_spinor: f64,
    tol_eigen: f64,
) -> Result<CovarianceReport> {
    let lambda = lorentz_from_word(word)?;
    let m_lambda = spinor_rep_from_word(word)?;
    let q = transform_momentum(&lambda, p)?;
    let r = wigner_rotation(&lambda, p)?;
    let (u, block_err) = spinor_wigner_block(word, p)?;
    let d_vec = wigner_d_block(&r)?;
    let sign_err = max_abs(&(u - d_vec)).min(max_abs(&(u + d_vec)));
    let det_err = (u.determinant() - Complex64::new(1.0, 0.0)).norm();
    let tag = || format!("word=[{word}] {branch} {}", describe_p(p));

    let mut spinor = CheckReport::new("covariance: spinor identity", "wigner-rotated spinor", tol_spinor);
    spinor.record(block_err.max(sign_err).max(det_err), tag);

    let combo = |k: &Momentum| -> DiracVector {
        let col = spin.index();
        Spin::BOTH.iter().fold(DiracVector::zeros(), |acc, &s2| {
            acc + spinor_components(k, branch, s2) * u[(s2.index(), col)]
        })
    };
    let lhs = m_lambda * spinor_components(p, branch, spin);
    spinor.record((lhs - combo(&q)).norm(), tag);

    // localized state maps to the localized state at the transformed event
    let x_new = lambda.apply(&FourVector::from_parts(x0, *x));
    let (x0n, xn) = (x_new.t, x_new.spatial());
    let transformed = |k: &Momentum| combo(k) * localized_phase(k, branch, &xn, x0n);
    let pushed = lhs * localized_phase(p, branch, x, x0);
    spinor.record((transformed(&q) - pushed).norm(), tag);

    let mut eigen = CheckReport::new(
        "covariance: transformed eigenvalue",
        "covariant eigenvalue",
        tol_eigen,
    );
    let ops = time_slice(&field_position(branch), x0n);
    for (k, op) in ops.iter().enumerate() {
        let out = op.apply(transformed, &q, fd)?;
        eigen.record((out - transformed(&q) * c(xn[k])).norm(), || {
            format!("{} k={}", tag(), k + 1)
        });
    }
    Ok(CovarianceReport {
        spinor,
        eigenvalue: eigen,
    })
}

/// `D(R(w2 w1, p)) = D(R(w2, L1 p)) D(R(w1, p))` for the spinor-level blocks.
pub fn check_wigner_cocycle(w1: &Word, w2: &Word, p: &Momentum, tolerance: f64) -> Result<CheckReport> {
    let mut rep = CheckReport::new("wigner cocycle", "wigner-rotation composition", tolerance);
    let l1 = lorentz_from_word(w1)?;
    let p1 = transform_momentum(&l1, p)?;
    let (u21, _) = spinor_wigner_block(&w2.then_after(w1), p)?;
    let (u2, _) = spinor_wigner_block(w2, &p1)?;
    let (u1, _) = spinor_wigner_block(w1, p)?;
    rep.record(max_abs(&(u21 - u2 * u1)), || {
        format!("w1=[{w1}] w2=[{w2}] {}", describe_p(p))
    });
    // the vector-level rotations compose the same way
    let r21 = wigner_rotation(&lorentz_from_word(&w2.then_after(w1))?, p)?;
    let r2 = wigner_rotation(&lorentz_from_word(w2)?, &p1)?;
    let r1 = wigner_rotation(&l1, p)?;
    let comp: LorentzMatrix = r2.compose(&r1);
    rep.record((r21.matrix() - comp.matrix()).abs().max(), || {
        "vector rotations".into()
    });
    Ok(rep)
}

/// Worst `|<psi_0|psi_d>| / <psi_0|psi_0>` over the given displacements, both
/// branches and both spins.
pub fn check_locality_displacements(
    lattice: &MomentumLattice,
    displacements: &[Vector3<f64>],
    tolerance: f64,
) -> Result<CheckReport> {
    for d in displacements {
        if !lattice.is_commensurate(d) {
            return Err(Error::IncommensurateDisplacement(d.norm()));
        }
    }
    let mut rep = CheckReport::new("NW locality", "displaced-state orthogonality", tolerance);
    for branch in Branch::BOTH {
        for spin in Spin::BOTH {
            let f0 = SpinorField::localized(lattice, branch, spin, &Vector3::zeros(), 0.0);
            let n0 = scalar_product(&f0, &f0)?.re;
            for d in displacements {
                let fd = SpinorField::localized(lattice, branch, spin, d, 0.0);
                let ratio = scalar_product(&f0, &fd)?.norm() / n0;
                rep.record(ratio, || format!("{branch} d={:.6}", d.norm()));
            }
        }
    }
    Ok(rep)
}

/// Lattice displacements `n * 2pi/(2 p_max)` along z, `n = 1..=count`.
pub fn check_locality_grid(lattice: &MomentumLattice, count: usize, tolerance: f64) -> Result<CheckReport> {
    let step = lattice.reciprocal_spacing();
    let ds: Vec<Vector3<f64>> = (1..=count)
        .map(|n| Vector3::new(0.0, 0.0, n as f64 * step))
        .collect();
    check_locality_displacements(lattice, &ds, tolerance)
}

/// Square of the inverse boost, the parity relation and the Hamiltonian
/// eigenvalue equation.
pub fn check_parity(p: &Momentum, branch: Branch, spin: Spin, tolerance: f64) -> CheckReport {
    let b = clifford_basis();
    let mut rep = CheckReport::new("parity / hamiltonian", "inverse-boost square", tolerance);
    let (m, e) = (p.mass(), p.energy());
    let sp = b.gamma5 * b.sigma_dot(p.spatial());
    let minv = boost_spinor_rep_inv(p);
    let m2 = minv * minv;
    let closed = DiracMatrix::identity() * c(e / m) - sp * c(1.0 / m);
    let tag = || format!("{branch} {}", describe_p(p));
    rep.record(max_abs(&(m2 - closed)), tag);
    let s = branch.sign();
    let psi = spinor_components(p, branch, spin);
    rep.record((m2 * psi - b.gamma[0] * psi * c(s)).norm(), tag);
    let lhs = b.gamma[0] * psi * c(s * m);
    let rhs = (DiracMatrix::identity() * c(e) - sp) * psi;
    rep.record((lhs - rhs).norm(), tag);
    rep.record((hamiltonian(branch, p) * psi - psi * c(e)).norm(), tag);
    rep
}

/// Trial fields for the NW comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrialField {
    /// `psi_+(p, spin)` with unit amplitude.
    Constant(Spin),
    /// Gaussian amplitude times `psi_+(p, spin)`.
    Gaussian {
        center: Vector3<f64>,
        width: f64,
        spin: Spin,
    },
}

impl TrialField {
    pub fn eval(&self, p: &Momentum) -> DiracVector {
        match *self {
            TrialField::Constant(spin) => spinor_components(p, Branch::Particle, spin),
            TrialField::Gaussian { center, width, spin } => {
                let amp = (-(p.spatial() - center).norm_squared() / (4.0 * width * width)).exp();
                spinor_components(p, Branch::Particle, spin) * c(amp)
            }
        }
    }
}

/// Spinor-level FW identity and the projected difference between the field
/// and NW position operators on a particle trial field.
pub fn check_fw_equivalence(
    p: &Momentum,
    trial: &TrialField,
    fd: &FdScheme,
    tol_exact: f64,
    tol_fd: f64,
) -> Result<(CheckReport, CheckReport)> {
    let b = clifford_basis();
    let tag = || describe_p(p);
    let mut ident = CheckReport::new("FW boost identity", "FW unitary vs boost", tol_exact);
    let proj0 = (DiracMatrix::identity() + b.gamma[0]) * c(0.5);
    let lhs = boost_spinor_rep(p) * proj0;
    let rhs = fw_unitary(p) * proj0 * c((p.energy() / p.mass()).sqrt());
    ident.record(max_abs(&(lhs - rhs)), tag);

    let mut op = CheckReport::new("NW = field position", "FW mean position", tol_fd);
    let proj = energy_projector(p, 1.0);
    let (x, nw) = (field_position(Branch::Particle), nw_position());
    let f = |q: &Momentum| trial.eval(q);
    for k in 0..3 {
        let d = proj * (nw[k].apply(f, p, fd)? - x[k].apply(f, p, fd)?);
        op.record(d.norm(), || format!("{} k={}", tag(), k + 1));
    }
    Ok((ident, op))
}

/// Projector used by the branch-preservation check: the complement of the
/// branch subspace at the paired momentum.
pub fn leakage_projector(p: &Momentum, branch: Branch) -> DiracMatrix {
    match branch {
        Branch::Particle => energy_projector(p, -1.0),
        Branch::Antiparticle => energy_projector(&p.reversed(), 1.0),
    }
}

/// `Lambda_-+ X f` for a smooth branch field `f = g(p) psi(p)`.
pub fn check_branch_preservation(
    p: &Momentum,
    branch: Branch,
    spin: Spin,
    fd: &FdScheme,
    tolerance: f64,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new("branch preservation", "no branch mixing", tolerance);
    let f = |q: &Momentum| {
        let g = (-(q.spatial() - Vector3::new(0.2, -0.1, 0.4)).norm_squared() / 3.0).exp();
        spinor_components(q, branch, spin) * Complex64::from_polar(g, q.component(2))
    };
    let leak = leakage_projector(p, branch);
    for (k, op) in field_position(branch).iter().enumerate() {
        let r = (leak * op.apply(f, p, fd)?).norm();
        rep.record(r, || format!("{branch} {} k={}", describe_p(p), k + 1));
    }
    Ok(rep)
}

/// `diag(u, u)` for a 2x2 block; convenience for reports and tests.
pub fn dirac_block(u: &SpinMatrix2) -> DiracMatrix {
    block_diag(u, u)
}

/// Exponential and rational forms of `M(L_p)` agree.
pub fn boost_form_residual(p: &Momentum) -> f64 {
    max_abs(&(boost_spinor_rep(p) - boost_spinor_rep_closed(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn p() -> Momentum {
        Momentum::from_components(1.0, 0.3, -0.2, 0.75).unwrap()
    }

    #[test]
    fn report_bookkeeping() {
        let mut r = CheckReport::new("a", "b", 1e-3);
        r.record(1e-4, || "x".into());
        r.record(1e-5, || "y".into());
        assert!(r.passed && r.details == "x" && r.samples == 2);
        r.record(f64::NAN, || "nan".into());
        assert!(!r.passed && r.details == "nan");
        r.record(1.0, || "later".into());
        assert!(r.max_residual.is_nan());
    }

    #[test]
    fn eigenstate_examples() {
        let fd = FdScheme::new();
        let rest = Momentum::at_rest(1.0).unwrap();
        // near-optimal step for the fourth-order scheme keeps roundoff below 1e-12
        let coarse = FdScheme::with_step(1e-3).unwrap();
        let r = check_position_eigenstate(
            &Vector3::zeros(),
            0.0,
            &rest,
            Branch::Particle,
            Spin::Up,
            &coarse,
            1e-12,
        )
        .unwrap();
        assert!(r.passed, "{r}");
        let x = Vector3::new(0.4, 0.0, -1.1);
        for br in Branch::BOTH {
            let r = check_position_eigenstate(&x, 0.0, &p(), br, Spin::Up, &fd, 1e-6).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn covariance_examples() {
        let fd = FdScheme::new();
        let q = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        let x = Vector3::new(0.4, 0.0, -1.1);
        for (w, br, x0) in [
            ("", Branch::Particle, 0.0),
            ("rot:y:0.3", Branch::Particle, 0.0),
            ("boost:x:0.5", Branch::Antiparticle, 0.2),
        ] {
            let word: Word = w.parse().unwrap();
            let r = check_covariance(&word, &q, br, Spin::Up, &x, x0, &fd, 1e-10, 1e-6).unwrap();
            assert!(
                r.spinor.passed && r.eigenvalue.passed,
                "{w}: {} / {}",
                r.spinor,
                r.eigenvalue
            );
        }
    }

    #[test]
    fn cocycle_example() {
        let w1: Word = "boost:x:0.5,rot:z:1.0".parse().unwrap();
        let w2: Word = "boost:y:-0.8,rot:x:2.5,boost:z:1.2".parse().unwrap();
        assert!(check_wigner_cocycle(&w1, &w2, &p(), 1e-10).unwrap().passed);
    }

    #[test]
    fn locality_examples() {
        let l = MomentumLattice::one_dim(256, 8.0, 1.0).unwrap();
        let r = check_locality_grid(&l, 8, 1e-8).unwrap();
        assert!(r.passed && r.samples == 32, "{r}");
        let self_overlap = check_locality_displacements(&l, &[Vector3::zeros()], 1.0).unwrap();
        assert!((self_overlap.max_residual - 1.0).abs() < 1e-12);
        let bad = check_locality_displacements(&l, &[Vector3::new(0.0, 0.0, 0.1)], 1e-8);
        assert!(matches!(bad, Err(Error::IncommensurateDisplacement(_))));
        assert!((l.reciprocal_spacing() - 2.0 * PI / 16.0).abs() < 1e-15);
    }

    #[test]
    fn parity_examples() {
        let q = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        let minv = boost_spinor_rep_inv(&q);
        let expect = DiracMatrix::from_diagonal(&nalgebra::Vector4::new(c(2.0), c(0.5), c(0.5), c(2.0)));
        assert!(max_abs(&(minv * minv - expect)) < 1e-12);
        for br in Branch::BOTH {
            assert!(check_parity(&p(), br, Spin::Down, 1e-12).passed);
        }
        let rest = Momentum::at_rest(1.0).unwrap();
        let psi = spinor_components(&rest, Branch::Particle, Spin::Up);
        assert!((clifford_basis().gamma[0] * psi - psi).norm() == 0.0);
    }

    #[test]
    fn fw_equivalence_examples() {
        let fd = FdScheme::new();
        let rest = Momentum::at_rest(1.0).unwrap();
        let (a, b) = check_fw_equivalence(&rest, &TrialField::Constant(Spin::Up), &fd, 1e-12, 1e-12).unwrap();
        assert!(a.passed && b.passed, "{a} {b}");
        let l = MomentumLattice::one_dim(64, 4.0, 1.0).unwrap();
        let trial = TrialField::Gaussian {
            center: Vector3::new(0.0, 0.0, 0.5),
            width: 0.7,
            spin: Spin::Down,
        };
        for q in l.momenta() {
            let (a, b) = check_fw_equivalence(&q, &trial, &fd, 1e-12, 1e-6).unwrap();
            assert!(a.passed && b.passed, "{a} {b}");
        }
    }

    #[test]
    fn branches_are_preserved() {
        let fd = FdScheme::new();
        for br in Branch::BOTH {
            assert!(
                check_branch_preservation(&p(), br, Spin::Up, &fd, 1e-6)
                    .unwrap()
                    .passed
            );
        }
    }
}
