//! Free Hamiltonians and velocity operators.

use crate::dirac::{c, clifford_basis, DiracMatrix, I};
use crate::error::Result;
use crate::spinor::Branch;
use crate::tensor::Momentum;

use super::component::{commutator, DerivativeMode, MatrixField, OperatorComponent};
use super::position::field_position;

/// `H_P = gamma0 gamma.p + m gamma0`, `H_AP = gamma0 gamma.p - m gamma0`.
pub fn hamiltonian(branch: Branch, p: &Momentum) -> DiracMatrix {
    let b = clifford_basis();
    b.gamma[0] * b.gamma_dot(p.spatial()) + b.gamma[0] * c(branch.sign() * p.mass())
}

pub fn hamiltonian_component(branch: Branch) -> OperatorComponent {
    let b = clifford_basis();
    OperatorComponent::multiplicative(MatrixField::with_gradient(
        "H",
        move |p: &Momentum| hamiltonian(branch, p),
        move |_, k| b.gamma[0] * b.gamma[k + 1],
    ))
}

/// `V^k = -i [X^k, H]` for the branch.
pub fn velocity(branch: Branch, p: &Momentum, mode: &DerivativeMode) -> Result<[DiracMatrix; 3]> {
    let x = field_position(branch);
    let h = hamiltonian_component(branch);
    let mut out = [DiracMatrix::zeros(); 3];
    for (k, v) in out.iter_mut().enumerate() {
        *v = commutator(&x[k], &h, p, mode)? * (-I);
    }
    Ok(out)
}

/// Closed form of the particle velocity matrix:
/// `(E/m) g0 gk + gk + i (Sigma x p)^k / m - (g0 g.p) p^k (E - m g0) / (mE(m+E))`.
pub fn velocity_closed(p: &Momentum) -> [DiracMatrix; 3] {
    let b = clifford_basis();
    let (m, e) = (p.mass(), p.energy());
    let g0 = b.gamma[0];
    let g0gp = g0 * b.gamma_dot(p.spatial());
    let cross = b.sigma_cross(p.spatial());
    let tail = g0gp * (DiracMatrix::identity() * c(e) - g0 * c(m));
    [0, 1, 2].map(|k| {
        g0 * b.gamma[k + 1] * c(e / m) + b.gamma[k + 1] + cross[k] * (I / m)
            - tail * c(p.component(k) / (m * e * (m + e)))
    })
}

/// Term that annihilates particle spinors and turns [`velocity_closed`] into `p^k/E`.
pub fn velocity_correction(p: &Momentum) -> [DiracMatrix; 3] {
    let b = clifford_basis();
    let (m, e) = (p.mass(), p.energy());
    let g0 = b.gamma[0];
    let g0gp = g0 * b.gamma_dot(p.spatial());
    let dirac = g0gp + g0 * c(m) - DiracMatrix::identity() * c(e);
    [0, 1, 2]
        .map(|k| (g0 * b.gamma[k + 1] * c(1.0 / m) - g0gp * c(p.component(k) / (m * e * (m + e)))) * dirac)
}

/// Velocity of the bare `i d/dp` position: `-i [i d/dp^k, H_P] = gamma0 gamma^k`.
pub fn dirac_velocity(k: usize) -> DiracMatrix {
    let b = clifford_basis();
    b.gamma[0] * b.gamma[k + 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::max_abs;
    use crate::spinor::{branch_projector, spinor_components, Spin};

    fn p() -> Momentum {
        Momentum::from_components(1.0, 0.3, -0.2, 0.75).unwrap()
    }

    #[test]
    fn hamiltonian_examples() {
        let g0 = clifford_basis().gamma[0];
        let rest = Momentum::at_rest(1.0).unwrap();
        assert_eq!(hamiltonian(Branch::Particle, &rest), g0);
        let q = p();
        let diff = hamiltonian(Branch::Antiparticle, &q) - (hamiltonian(Branch::Particle, &q) - g0 * c(2.0));
        assert!(max_abs(&diff) < 1e-15);
        for br in Branch::BOTH {
            let h = hamiltonian(br, &q);
            assert!(max_abs(&(h - h.adjoint())) < 1e-15);
            for sp in Spin::BOTH {
                let psi = spinor_components(&q, br, sp);
                assert!((h * psi - psi * c(q.energy())).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn commutator_velocity_matches_closed_form() {
        let q = p();
        let v = velocity(Branch::Particle, &q, &DerivativeMode::Analytic).unwrap();
        let closed = velocity_closed(&q);
        let corr = velocity_correction(&q);
        for k in 0..3 {
            assert!(max_abs(&(v[k] - closed[k])) < 1e-12);
            let sum = closed[k] + corr[k] - DiracMatrix::identity() * c(q.component(k) / q.energy());
            assert!(max_abs(&sum) < 1e-12);
            for sp in Spin::BOTH {
                assert!((corr[k] * spinor_components(&q, Branch::Particle, sp)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn subspace_velocities() {
        let q = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        for (br, expect) in [(Branch::Particle, 0.6), (Branch::Antiparticle, -0.6)] {
            let v = velocity(br, &q, &DerivativeMode::default()).unwrap();
            let proj = branch_projector(&q, br);
            assert!(max_abs(&(v[2] * proj - proj * c(expect))) < 1e-6);
        }
        let rest = Momentum::at_rest(1.0).unwrap();
        let v = velocity(Branch::Particle, &rest, &DerivativeMode::Analytic).unwrap();
        let proj = branch_projector(&rest, Branch::Particle);
        assert!(max_abs(&(v[0] * proj)) < 1e-12);
    }

    #[test]
    fn dirac_velocity_spectrum() {
        for k in 0..3 {
            let v = dirac_velocity(k);
            assert!(max_abs(&(v * v - DiracMatrix::identity())) < 1e-15);
            assert!(max_abs(&(v - v.adjoint())) < 1e-15);
            assert!(v.trace().norm() < 1e-15);
        }
    }
}
