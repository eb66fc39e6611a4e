//! Pauli-Lubanski vector, field spin and Wigner spin as momentum-dependent
//! Dirac matrices.

use nalgebra::Vector3;

use crate::dirac::{boost_spinor_rep, boost_spinor_rep_inv, c, clifford_basis, DiracMatrix, I};
use crate::spinor::Branch;
use crate::tensor::{levi_civita, metric_sign, Momentum};

use super::component::{MatrixField, OperatorComponent};

/// Which construction of `W^mu` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliLubanskiMode {
    /// Epsilon contraction of the spin generators with `P`, generators taken
    /// in the rest-label frame `M(L_p)^-1 sigma M(L_p)`.
    Definition,
    /// `W^0 = Sigma.p/2`, `W = m Sigma/2 + p (Sigma.p) / (2(m+E))`.
    Closed,
}

fn contract(p: &Momentum, generator: impl Fn(usize, usize) -> DiracMatrix) -> [DiracMatrix; 4] {
    let four = p.four_vector();
    let p_lower = [four.lower(0), four.lower(1), four.lower(2), four.lower(3)];
    let mut gens = [[DiracMatrix::zeros(); 4]; 4];
    for (nu, row) in gens.iter_mut().enumerate() {
        for (rho, g) in row.iter_mut().enumerate() {
            if nu != rho {
                *g = generator(nu, rho);
            }
        }
    }
    let mut w = [DiracMatrix::zeros(); 4];
    for (mu, wmu) in w.iter_mut().enumerate() {
        for nu in 0..4 {
            for rho in 0..4 {
                for (sigma, &ps) in p_lower.iter().enumerate() {
                    let e = levi_civita(mu, nu, rho, sigma);
                    if e != 0 {
                        *wmu += gens[nu][rho] * c(0.5 * f64::from(e) * ps);
                    }
                }
            }
        }
    }
    w
}

/// `W^0..W^3`.
pub fn pauli_lubanski(p: &Momentum, mode: PauliLubanskiMode) -> [DiracMatrix; 4] {
    match mode {
        PauliLubanskiMode::Closed => {
            let b = clifford_basis();
            let sp = b.sigma_dot(p.spatial());
            let (m, e) = (p.mass(), p.energy());
            let mut w = [
                sp * c(0.5),
                DiracMatrix::zeros(),
                DiracMatrix::zeros(),
                DiracMatrix::zeros(),
            ];
            for k in 0..3 {
                w[k + 1] = b.sigma_spin[k] * c(m / 2.0) + sp * c(p.component(k) / (2.0 * (m + e)));
            }
            w
        }
        PauliLubanskiMode::Definition => {
            let b = clifford_basis();
            let (mm, minv) = (boost_spinor_rep(p), boost_spinor_rep_inv(p));
            contract(p, |nu, rho| minv * b.generator_lower(nu, rho) * mm)
        }
    }
}

/// Contraction with the fixed Weyl-basis generators. Equal to
/// `M(L_p) W_closed M(L_p)^-1`.
pub fn pauli_lubanski_lab_frame(p: &Momentum) -> [DiracMatrix; 4] {
    let b = clifford_basis();
    contract(p, |nu, rho| b.generator_lower(nu, rho))
}

/// `W_mu W^mu`.
pub fn pauli_lubanski_square(w: &[DiracMatrix; 4]) -> DiracMatrix {
    (0..4).fold(DiracMatrix::zeros(), |acc, mu| {
        acc + w[mu] * w[mu] * c(metric_sign(mu))
    })
}

/// Field spin `S = (E W - p W^0)/m^2 + i gamma5 (W x p)/m^2`, built from the
/// closed-form `W`. Flipping the signs of both `P` and `W` on the
/// antiparticle branch leaves every bilinear unchanged.
pub fn field_spin(p: &Momentum, branch: Branch) -> [DiracMatrix; 3] {
    let b = clifford_basis();
    let s = branch.sign();
    let w = pauli_lubanski(p, PauliLubanskiMode::Closed).map(|m| m * c(s));
    let (e, pv) = (p.energy() * s, p.spatial() * s);
    let m2 = p.mass() * p.mass();
    let mut out = [DiracMatrix::zeros(); 3];
    for (i, o) in out.iter_mut().enumerate() {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let cross = w[j + 1] * c(pv[k]) - w[k + 1] * c(pv[j]);
        *o = (w[i + 1] * c(e) - w[0] * c(pv[i])) / c(m2) + b.gamma5 * cross * I / c(m2);
    }
    out
}

/// Closed form `dS^i/dp^j`.
pub fn field_spin_gradient(p: &Momentum, i: usize, j: usize) -> DiracMatrix {
    let b = clifford_basis();
    let (m, e) = (p.mass(), p.energy());
    let sp = b.sigma_dot(p.spatial());
    let dej = p.component(j) / e;
    let delta = if i == j { 1.0 } else { 0.0 };
    let eps_j = b.sigma_cross(&Vector3::ith(j, 1.0))[i];
    b.sigma_spin[i] * c(dej / (2.0 * m))
        - (sp * c(delta) + b.sigma_spin[j] * c(p.component(i))) / c(2.0 * m * (m + e))
        + sp * c(p.component(i) * dej / (2.0 * m * (m + e) * (m + e)))
        + b.gamma5 * eps_j * (I / (2.0 * m))
}

/// `S^i` as a multiplicative operator component.
pub fn field_spin_component(branch: Branch, i: usize) -> OperatorComponent {
    OperatorComponent::multiplicative(MatrixField::with_gradient(
        "S",
        move |p: &Momentum| field_spin(p, branch)[i],
        move |p: &Momentum, j| field_spin_gradient(p, i, j),
    ))
}

/// Wigner spin `(W - W^0 p/(m+E))/m`.
pub fn wigner_spin(p: &Momentum, mode: PauliLubanskiMode) -> [DiracMatrix; 3] {
    let w = pauli_lubanski(p, mode);
    let (m, e) = (p.mass(), p.energy());
    [0, 1, 2].map(|k| (w[k + 1] - w[0] * c(p.component(k) / (m + e))) / c(m))
}
