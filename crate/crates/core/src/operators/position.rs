//! Field position, Newton-Wigner position and momentum operator components.

use nalgebra::Vector3;

use crate::dirac::{
    boost_spinor_rep_grad, boost_spinor_rep_inv, c, clifford_basis, fw_unitary_closed, fw_unitary_grad,
    DiracMatrix, I,
};
use crate::spinor::Branch;
use crate::tensor::Momentum;

use super::component::{MatrixField, OperatorComponent};

/// Matrix part `A_k(p)` of the particle field position operator:
/// `(Sigma x p)^k / (2m(m+E)) - i gamma5 (Sigma^k/(2m) - (Sigma.p) p^k / (2mE(m+E)))`.
pub fn position_matrix_part(p: &Momentum, k: usize) -> DiracMatrix {
    let b = clifford_basis();
    let (m, e) = (p.mass(), p.energy());
    let cross = b.sigma_cross(p.spatial())[k];
    let sp = b.sigma_dot(p.spatial());
    let inner = b.sigma_spin[k] * c(1.0 / (2.0 * m)) - sp * c(p.component(k) / (2.0 * m * e * (m + e)));
    cross * c(1.0 / (2.0 * m * (m + e))) - b.gamma5 * inner * I
}

/// Closed form `dA_k/dp^j`.
pub fn position_matrix_gradient(p: &Momentum, k: usize, j: usize) -> DiracMatrix {
    let b = clifford_basis();
    let (m, e) = (p.mass(), p.energy());
    let dej = p.component(j) / e;
    let sp = b.sigma_dot(p.spatial());
    let cross = b.sigma_cross(p.spatial())[k];
    let cross_j = b.sigma_cross(&Vector3::ith(j, 1.0))[k];
    let d1 = cross_j * c(1.0 / (2.0 * m * (m + e))) - cross * c(dej / (2.0 * m * (m + e) * (m + e)));
    let g = 1.0 / (2.0 * m * e * (m + e));
    let dg = -(2.0 * e + m) / (2.0 * m * e * e * (m + e) * (m + e));
    let delta = if j == k { 1.0 } else { 0.0 };
    let d2 = b.sigma_spin[j] * c(p.component(k) * g) + sp * c(delta * g + p.component(k) * dg * dej);
    d1 + b.gamma5 * d2 * I
}

/// `-i (dM(L_p)/dp^k) M(L_p)^-1`, the generator form of `A_k`.
pub fn position_matrix_from_boost(p: &Momentum, k: usize) -> DiracMatrix {
    boost_spinor_rep_grad(p, k) * boost_spinor_rep_inv(p) * (-I)
}

fn matrix_part_field(sign: f64, k: usize) -> MatrixField {
    MatrixField::with_gradient(
        "A",
        move |p: &Momentum| position_matrix_part(p, k) * c(sign),
        move |p: &Momentum, j| position_matrix_gradient(p, k, j) * c(sign),
    )
}

/// `X^k = eps (i d/dp^k + A_k(p))` for the chosen branch.
pub fn field_position(branch: Branch) -> [OperatorComponent; 3] {
    let s = branch.sign();
    [0, 1, 2].map(|k| OperatorComponent::differential(I * s, k, matrix_part_field(s, k)))
}

/// Field position with the matrix part shifted by `beta * p^k`. Conjugating
/// states by `exp(i eps beta |p|^2 / 2)` maps it back to [`field_position`].
pub fn field_position_gauged(branch: Branch, beta: f64) -> [OperatorComponent; 3] {
    let base = field_position(branch);
    [0, 1, 2].map(|k| {
        let shift = MatrixField::with_gradient(
            "beta p",
            move |p: &Momentum| DiracMatrix::identity() * c(beta * p.component(k)),
            move |_, j| DiracMatrix::identity() * c(if j == k { beta } else { 0.0 }),
        );
        base[k].with_added_field(&shift)
    })
}

/// Phase relating eigenstates of the gauged and canonical operators.
pub fn gauge_phase(p: &Momentum, branch: Branch, beta: f64) -> num_complex::Complex64 {
    num_complex::Complex64::from_polar(1.0, branch.sign() * beta * p.spatial().norm_squared() / 2.0)
}

/// Operator on the time slice `x0`: adds `x0 p^k / E`.
pub fn time_slice(ops: &[OperatorComponent; 3], x0: f64) -> [OperatorComponent; 3] {
    if x0 == 0.0 {
        return ops.clone();
    }
    [0, 1, 2].map(|k| {
        let drift = MatrixField::with_gradient(
            "x0 p/E",
            move |p: &Momentum| DiracMatrix::identity() * c(x0 * p.component(k) / p.energy()),
            move |p: &Momentum, j| {
                let e = p.energy();
                let delta = if j == k { 1.0 } else { 0.0 };
                DiracMatrix::identity() * c(x0 * (delta / e - p.component(k) * p.component(j) / (e * e * e)))
            },
        );
        ops[k].with_added_field(&drift)
    })
}

/// Matrix part of the Newton-Wigner operator in the Dirac representation:
/// `i U_P (dU_P^dagger/dp^k) - i p^k / (2E^2)`.
pub fn nw_matrix_part(p: &Momentum, k: usize) -> DiracMatrix {
    let u = fw_unitary_closed(p);
    let du_dag = fw_unitary_grad(p, k).adjoint();
    let e = p.energy();
    u * du_dag * I - DiracMatrix::identity() * (I * (p.component(k) / (2.0 * e * e)))
}

/// The measure counterterm `p^k / (2E^2)` (coefficient of `-i`).
pub fn nw_counterterm(p: &Momentum, k: usize) -> f64 {
    let e = p.energy();
    p.component(k) / (2.0 * e * e)
}

/// FW mean position `U_P (i d/dp^k - i p^k/(2E^2)) U_P^dagger`.
pub fn nw_position() -> [OperatorComponent; 3] {
    [0, 1, 2].map(|k| {
        OperatorComponent::differential(
            I,
            k,
            MatrixField::new("A_NW", move |p: &Momentum| nw_matrix_part(p, k)),
        )
    })
}

/// Momentum `P^j`; acts as `-p^j` on antiparticle plane-wave spinors.
pub fn momentum_component(branch: Branch, j: usize) -> OperatorComponent {
    let s = branch.sign();
    OperatorComponent::multiplicative(MatrixField::with_gradient(
        "P",
        move |p: &Momentum| DiracMatrix::identity() * c(s * p.component(j)),
        move |_, k| DiracMatrix::identity() * c(if k == j { s } else { 0.0 }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{max_abs, DiracVector};
    use crate::operators::component::{commutator, DerivativeMode};
    use crate::operators::fd::FdScheme;
    use crate::operators::spin::field_spin;
    use crate::spinor::{energy_projector, localized_phase, spinor_components, Spin};
    use num_complex::Complex64;

    fn p() -> Momentum {
        Momentum::from_components(1.0, 0.3, -0.2, 0.75).unwrap()
    }

    #[test]
    fn rest_matrix_part() {
        let b = clifford_basis();
        let rest = Momentum::at_rest(2.0).unwrap();
        for k in 0..3 {
            let expect = b.gamma5 * b.sigma_spin[k] * (-I / 4.0);
            assert!(max_abs(&(position_matrix_part(&rest, k) - expect)) < 1e-15);
        }
    }

    #[test]
    fn matrix_part_is_boost_generator() {
        for q in [p(), Momentum::from_components(0.5, -2.0, 1.0, 3.0).unwrap()] {
            for k in 0..3 {
                let a = position_matrix_part(&q, k);
                assert!(max_abs(&(a - position_matrix_from_boost(&q, k))) < 1e-12);
                let fd: DiracMatrix = FdScheme::new()
                    .momentum_derivative(&q, k, crate::dirac::boost_spinor_rep)
                    .unwrap();
                let from_fd = fd * crate::dirac::boost_spinor_rep_inv(&q) * (-I);
                assert!(max_abs(&(a - from_fd)) < 1e-8);
            }
        }
    }

    #[test]
    fn gradient_matches_fd() {
        let q = Momentum::from_components(1.3, 0.4, -0.9, 0.2).unwrap();
        for k in 0..3 {
            for j in 0..3 {
                let fd: DiracMatrix = FdScheme::new()
                    .momentum_derivative(&q, j, |r| position_matrix_part(r, k))
                    .unwrap();
                assert!(max_abs(&(fd - position_matrix_gradient(&q, k, j))) < 1e-9);
            }
        }
    }

    #[test]
    fn orbital_plus_spin_is_wigner_spin() {
        let b = clifford_basis();
        let q = p();
        let a: Vec<_> = (0..3).map(|k| position_matrix_part(&q, k)).collect();
        let s = field_spin(&q, Branch::Particle);
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let l = a[j] * c(q.component(k)) - a[k] * c(q.component(j));
            assert!(max_abs(&(l + s[i] - b.sigma_spin[i] * c(0.5))) < 1e-10);
        }
    }

    #[test]
    fn canonical_commutators() {
        let q = p();
        for br in Branch::BOTH {
            let x = field_position(br);
            for mode in [DerivativeMode::Analytic, DerivativeMode::default()] {
                let tol = if mode == DerivativeMode::Analytic {
                    1e-10
                } else {
                    1e-6
                };
                for i in 0..3 {
                    for j in 0..3 {
                        let xx = commutator(&x[i], &x[j], &q, &mode).unwrap();
                        assert!(max_abs(&xx) < tol, "{br} XX {i}{j}");
                        let s = crate::operators::spin::field_spin_component(br, j);
                        assert!(max_abs(&commutator(&x[i], &s, &q, &mode).unwrap()) < tol);
                        let xp = commutator(&x[i], &momentum_component(br, j), &q, &mode).unwrap();
                        let expect =
                            DiracMatrix::identity() * if i == j { I } else { Complex64::new(0.0, 0.0) };
                        assert!(max_abs(&(xp - expect)) < tol);
                    }
                }
            }
        }
    }

    #[test]
    fn position_eigenstate() {
        let q = p();
        let x = Vector3::new(0.4, 0.0, -1.1);
        let fd = FdScheme::new();
        for br in Branch::BOTH {
            for x0 in [0.0, 0.7] {
                let ops = time_slice(&field_position(br), x0);
                let f = |r: &Momentum| spinor_components(r, br, Spin::Up) * localized_phase(r, br, &x, x0);
                for k in 0..3 {
                    let out = ops[k].apply(f, &q, &fd).unwrap();
                    assert!((out - f(&q) * c(x[k])).norm() < 1e-6, "{br} x0={x0} k={k}");
                }
            }
        }
    }

    #[test]
    fn gauge_hook_preserves_algebra_and_maps_eigenstates() {
        let q = p();
        let beta = 0.37;
        let fd = FdScheme::new();
        let mode = DerivativeMode::FiniteDifference(fd);
        for br in Branch::BOTH {
            let g = field_position_gauged(br, beta);
            for i in 0..3 {
                for j in 0..3 {
                    assert!(max_abs(&commutator(&g[i], &g[j], &q, &mode).unwrap()) < 1e-6);
                }
            }
            let x = Vector3::new(0.2, -0.5, 0.9);
            let f = |r: &Momentum| {
                spinor_components(r, br, Spin::Down)
                    * localized_phase(r, br, &x, 0.0)
                    * gauge_phase(r, br, beta)
            };
            for k in 0..3 {
                let out = g[k].apply(f, &q, &fd).unwrap();
                assert!((out - f(&q) * c(x[k])).norm() < 1e-6);
            }
        }
    }

    #[test]
    fn nw_counterterm_value() {
        let q = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        assert!((nw_counterterm(&q, 2) - 0.24).abs() < 1e-15);
    }

    #[test]
    fn nw_equals_field_position_on_particles() {
        let fd = FdScheme::new();
        let nw = nw_position();
        let x = field_position(Branch::Particle);
        for q in [Momentum::at_rest(1.0).unwrap(), p()] {
            let proj = energy_projector(&q, 1.0);
            let f = |r: &Momentum| {
                let amp = (-(r.spatial() - Vector3::new(0.1, 0.0, 0.5)).norm_squared()).exp();
                spinor_components(r, Branch::Particle, Spin::Up) * c(amp)
            };
            for k in 0..3 {
                let d: DiracVector =
                    proj * (nw[k].apply(f, &q, &fd).unwrap() - x[k].apply(f, &q, &fd).unwrap());
                assert!(d.norm() < 1e-6);
            }
        }
    }
}
