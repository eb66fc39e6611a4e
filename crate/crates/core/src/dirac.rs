//! Weyl-basis Clifford algebra and the spinor representation matrices.
//!
//! All exponentials are evaluated through exact 2x2 Pauli-vector identities;
//! no general matrix exponential is used.

use std::sync::OnceLock;

use nalgebra::{Matrix2, Matrix3, Matrix4, Vector3, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{levi_civita3, metric_sign, LorentzMatrix, Momentum, Primitive, Word};

pub type DiracMatrix = Matrix4<Complex64>;
pub type DiracVector = Vector4<Complex64>;
pub type SpinMatrix2 = Matrix2<Complex64>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The three Pauli matrices.
pub fn pauli() -> [SpinMatrix2; 3] {
    [
        Matrix2::new(ZERO, ONE, ONE, ZERO),
        Matrix2::new(ZERO, -I, I, ZERO),
        Matrix2::new(ONE, ZERO, ZERO, -ONE),
    ]
}

/// `v . sigma` for a real 3-vector.
pub fn pauli_dot(v: &Vector3<f64>) -> SpinMatrix2 {
    let s = pauli();
    s[0] * c(v.x) + s[1] * c(v.y) + s[2] * c(v.z)
}

/// Block matrix `[[a, b], [c, d]]` from 2x2 blocks.
pub fn blocks(a: &SpinMatrix2, b: &SpinMatrix2, cc: &SpinMatrix2, d: &SpinMatrix2) -> DiracMatrix {
    let mut m = DiracMatrix::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(b);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(cc);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}

pub fn block_diag(a: &SpinMatrix2, d: &SpinMatrix2) -> DiracMatrix {
    blocks(a, &SpinMatrix2::zeros(), &SpinMatrix2::zeros(), d)
}

/// Upper-left and lower-right 2x2 blocks.
pub fn diagonal_blocks(m: &DiracMatrix) -> (SpinMatrix2, SpinMatrix2) {
    (
        m.fixed_view::<2, 2>(0, 0).into_owned(),
        m.fixed_view::<2, 2>(2, 2).into_owned(),
    )
}

/// Largest entry of the off-diagonal 2x2 blocks.
pub fn off_diagonal_norm(m: &DiracMatrix) -> f64 {
    max_abs(&m.fixed_view::<2, 2>(0, 2)).max(max_abs(&m.fixed_view::<2, 2>(2, 0)))
}

/// Max entrywise modulus of a complex matrix.
pub fn max_abs<R, C, S>(m: &nalgebra::Matrix<Complex64, R, C, S>) -> f64
where
    R: nalgebra::Dim,
    C: nalgebra::Dim,
    S: nalgebra::RawStorage<Complex64, R, C>,
{
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

pub fn commutator(a: &DiracMatrix, b: &DiracMatrix) -> DiracMatrix {
    a * b - b * a
}

pub fn anticommutator(a: &DiracMatrix, b: &DiracMatrix) -> DiracMatrix {
    a * b + b * a
}

/// Fixed Weyl-basis matrices.
#[derive(Debug, Clone)]
pub struct CliffordBasis {
    /// `gamma^mu`, upper index.
    pub gamma: [DiracMatrix; 4],
    /// `gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(-I, I)`.
    pub gamma5: DiracMatrix,
    /// Dirac spin matrices `Sigma^k = diag(sigma^k, sigma^k)`.
    pub sigma_spin: [DiracMatrix; 3],
    /// Spinor generators `sigma^{mu nu} = (i/4) [gamma^mu, gamma^nu]`, upper indices.
    pub generators: [[DiracMatrix; 4]; 4],
}

impl CliffordBasis {
    fn build() -> Self {
        let s = pauli();
        let id = SpinMatrix2::identity();
        let z = SpinMatrix2::zeros();
        let g0 = blocks(&z, &id, &id, &z);
        let gk = [0, 1, 2].map(|k| blocks(&z, &s[k], &(-s[k]), &z));
        let gamma = [g0, gk[0], gk[1], gk[2]];
        let gamma5 = gamma[0] * gamma[1] * gamma[2] * gamma[3] * I;
        let sigma_spin = [0, 1, 2].map(|k| block_diag(&s[k], &s[k]));
        let mut generators = [[DiracMatrix::zeros(); 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                generators[mu][nu] = commutator(&gamma[mu], &gamma[nu]) * Complex64::new(0.0, 0.25);
            }
        }
        Self {
            gamma,
            gamma5,
            sigma_spin,
            generators,
        }
    }

    /// Generator with both indices lowered by the metric.
    pub fn generator_lower(&self, mu: usize, nu: usize) -> DiracMatrix {
        self.generators[mu][nu] * c(metric_sign(mu) * metric_sign(nu))
    }

    /// `Sigma . v`.
    pub fn sigma_dot(&self, v: &Vector3<f64>) -> DiracMatrix {
        self.sigma_spin[0] * c(v.x) + self.sigma_spin[1] * c(v.y) + self.sigma_spin[2] * c(v.z)
    }

    /// `gamma . v = gamma^k v^k` over spatial components.
    pub fn gamma_dot(&self, v: &Vector3<f64>) -> DiracMatrix {
        self.gamma[1] * c(v.x) + self.gamma[2] * c(v.y) + self.gamma[3] * c(v.z)
    }

    /// `(Sigma x v)^k`.
    pub fn sigma_cross(&self, v: &Vector3<f64>) -> [DiracMatrix; 3] {
        let s = &self.sigma_spin;
        [
            s[1] * c(v.z) - s[2] * c(v.y),
            s[2] * c(v.x) - s[0] * c(v.z),
            s[0] * c(v.y) - s[1] * c(v.x),
        ]
    }
}

/// The shared Weyl basis.
pub fn clifford_basis() -> &'static CliffordBasis {
    static BASIS: OnceLock<CliffordBasis> = OnceLock::new();
    BASIS.get_or_init(CliffordBasis::build)
}

/// `exp(s * sigma . v)` for real `v`: `cosh(s|v|) + sinh(s|v|) sigma.v_hat`.
fn pauli_exp_real(v: &Vector3<f64>, s: f64) -> SpinMatrix2 {
    let n = v.norm();
    if n == 0.0 {
        return SpinMatrix2::identity();
    }
    SpinMatrix2::identity() * c((s * n).cosh()) + pauli_dot(&(v / n)) * c((s * n).sinh())
}

/// SU(2) element `exp(-i angle sigma.axis / 2)`.
pub fn su2_rotation(axis: &Vector3<f64>, angle: f64) -> SpinMatrix2 {
    let (s, co) = (angle / 2.0).sin_cos();
    SpinMatrix2::identity() * c(co) - pauli_dot(axis) * Complex64::new(0.0, s)
}

/// Spinor boost `M(L_p) = exp(gamma5 Sigma.xi / 2) = diag(e^{-sigma.xi/2}, e^{sigma.xi/2})`.
pub fn boost_spinor_rep(p: &Momentum) -> DiracMatrix {
    let xi = p.rapidity();
    block_diag(&pauli_exp_real(&xi, -0.5), &pauli_exp_real(&xi, 0.5))
}

/// Rational form `(E + m + gamma5 Sigma.p) / sqrt(2m(E+m))`.
pub fn boost_spinor_rep_closed(p: &Momentum) -> DiracMatrix {
    let b = clifford_basis();
    let (e, m) = (p.energy(), p.mass());
    let num = DiracMatrix::identity() * c(e + m) + b.gamma5 * b.sigma_dot(p.spatial());
    num / c((2.0 * m * (e + m)).sqrt())
}

/// `M(L_p)^-1 = M(L_{-p})`.
pub fn boost_spinor_rep_inv(p: &Momentum) -> DiracMatrix {
    boost_spinor_rep(&p.reversed())
}

/// Analytic `dM(L_p)/dp^k` from the rational form.
pub fn boost_spinor_rep_grad(p: &Momentum, k: usize) -> DiracMatrix {
    let b = clifford_basis();
    let (e, m) = (p.energy(), p.mass());
    let norm = (2.0 * m * (e + m)).sqrt();
    let de = p.component(k) / e;
    let num = DiracMatrix::identity() * c(e + m) + b.gamma5 * b.sigma_dot(p.spatial());
    let dnum = DiracMatrix::identity() * c(de) + b.gamma5 * b.sigma_spin[k];
    // d/dp (1/sqrt(2m(E+m))) = -(dE/dp) / (2 (E+m) sqrt(2m(E+m)))
    dnum / c(norm) - num * c(de / (2.0 * (e + m) * norm))
}

/// `diag(u, u)` with `u = exp(-i sigma.axis angle / 2)`.
pub fn rotation_spinor_rep(axis: &Vector3<f64>, angle: f64) -> Result<DiracMatrix> {
    let n = axis.norm();
    if !n.is_finite() || (n - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitAxis(n));
    }
    let u = su2_rotation(axis, angle);
    Ok(block_diag(&u, &u))
}

/// Spinor image of one word primitive.
pub fn primitive_spinor_rep(prim: &Primitive) -> Result<DiracMatrix> {
    match *prim {
        Primitive::Boost { axis, rapidity } => {
            let n = axis.norm();
            if (n - 1.0).abs() > 1e-12 {
                return Err(Error::NonUnitAxis(n));
            }
            let xi = axis * rapidity;
            Ok(block_diag(&pauli_exp_real(&xi, -0.5), &pauli_exp_real(&xi, 0.5)))
        }
        Primitive::Rotation { axis, angle } => rotation_spinor_rep(&axis, angle),
    }
}

/// `M(L)` for a word: product of primitive spinor matrices in word order.
pub fn spinor_rep_from_word(word: &Word) -> Result<DiracMatrix> {
    let mut acc = DiracMatrix::identity();
    for prim in word.primitives() {
        acc *= primitive_spinor_rep(prim)?;
    }
    Ok(acc)
}

/// Axis and angle (in `[0, pi]`) of a spatial rotation matrix.
pub fn axis_angle(r: &Matrix3<f64>) -> (Vector3<f64>, f64) {
    let cos = ((r.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    let anti = Vector3::new(
        r[(2, 1)] - r[(1, 2)],
        r[(0, 2)] - r[(2, 0)],
        r[(1, 0)] - r[(0, 1)],
    ) / 2.0;
    let sin = anti.norm();
    if sin < 1e-12 && cos > 0.0 {
        return (Vector3::z(), 0.0);
    }
    if cos > -0.5 {
        return (anti / sin, sin.atan2(cos));
    }
    // near pi: n n^T from the symmetric part, sign from the antisymmetric part
    let sym = (r + r.transpose()) / 2.0 - Matrix3::identity() * cos;
    let nn = sym / (1.0 - cos);
    let col = (0..3)
        .max_by(|&a, &b| nn[(a, a)].total_cmp(&nn[(b, b)]))
        .unwrap_or(0);
    let mut n = nn.column(col).into_owned();
    n /= n.norm();
    if n.dot(&anti) < 0.0 {
        n = -n;
    }
    let angle = if sin < 1e-15 {
        std::f64::consts::PI
    } else {
        anti.dot(&n).atan2(cos)
    };
    (n, angle)
}

/// SU(2) block `u` of the Dirac representation `diag(u, u)` of a spatial
/// rotation. The vector rotation fixes `u` up to sign; the lift with
/// non-negative trace is returned.
pub fn wigner_d_block(r: &LorentzMatrix) -> Result<SpinMatrix2> {
    let scale = 1.0 + r.matrix().abs().max();
    let mixing = r.timelike_mixing();
    if mixing > 1e-10 * scale {
        return Err(Error::NotARotation(format!("timelike mixing {mixing:e}")));
    }
    let s = r.spatial_block();
    let orth = (s.transpose() * s - Matrix3::identity()).abs().max();
    if orth > 1e-9 || s.determinant() < 0.0 {
        return Err(Error::NotARotation(format!("orthogonality residual {orth:e}")));
    }
    let (axis, angle) = axis_angle(&s);
    Ok(su2_rotation(&axis, angle))
}

/// FW angle vector `theta = p_hat atan(|p|/m)`.
pub fn fw_angle(p: &Momentum) -> Vector3<f64> {
    match p.direction() {
        None => Vector3::zeros(),
        Some(n) => n * (p.norm() / p.mass()).atan(),
    }
}

/// `U_P(p) = exp(-gamma0 gamma5 Sigma.theta / 2)`, the adjoint of the
/// Foldy-Wouthuysen unitary. `(gamma0 gamma5 Sigma.n)^2 = -1`, so the
/// exponential is `cos(|theta|/2) - sin(|theta|/2) gamma0 gamma5 Sigma.n`.
pub fn fw_unitary(p: &Momentum) -> DiracMatrix {
    let b = clifford_basis();
    let theta = fw_angle(p);
    let t = theta.norm();
    if t == 0.0 {
        return DiracMatrix::identity();
    }
    let gen = b.gamma[0] * b.gamma5 * b.sigma_dot(&(theta / t));
    DiracMatrix::identity() * c((t / 2.0).cos()) - gen * c((t / 2.0).sin())
}

/// Rational form `(E + m - gamma0 gamma5 Sigma.p) / sqrt(2E(E+m))`.
pub fn fw_unitary_closed(p: &Momentum) -> DiracMatrix {
    let b = clifford_basis();
    let (e, m) = (p.energy(), p.mass());
    let num = DiracMatrix::identity() * c(e + m) - b.gamma[0] * b.gamma5 * b.sigma_dot(p.spatial());
    num / c((2.0 * e * (e + m)).sqrt())
}

/// Analytic `dU_P/dp^k` of the rational form.
pub fn fw_unitary_grad(p: &Momentum, k: usize) -> DiracMatrix {
    let b = clifford_basis();
    let (e, m) = (p.energy(), p.mass());
    let de = p.component(k) / e;
    let d = 2.0 * e * (e + m);
    let norm = d.sqrt();
    let g = b.gamma[0] * b.gamma5;
    let num = DiracMatrix::identity() * c(e + m) - g * b.sigma_dot(p.spatial());
    let dnum = DiracMatrix::identity() * c(de) - g * b.sigma_spin[k];
    // d(2E(E+m))/dp = 2 dE (2E + m)
    let dd = 2.0 * de * (2.0 * e + m);
    dnum / c(norm) - num * c(dd / (2.0 * d * norm))
}

/// `gamma^mu gamma^nu ... ` helper: Hermitian conjugate.
pub fn dagger(m: &DiracMatrix) -> DiracMatrix {
    m.adjoint()
}

/// `(sigma x a)` style cross product for 3-arrays of Dirac matrices with a
/// real vector: `(A x v)^i = eps_ijk A^j v^k`.
pub fn cross_with_vector(a: &[DiracMatrix; 3], v: &Vector3<f64>) -> [DiracMatrix; 3] {
    let mut out = [DiracMatrix::zeros(); 3];
    for (i, o) in out.iter_mut().enumerate() {
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita3(i, j, k);
                if e != 0.0 {
                    *o += a[j] * c(e * v[k]);
                }
            }
        }
    }
    out
}
