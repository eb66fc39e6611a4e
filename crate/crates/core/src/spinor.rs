//! Particle and antiparticle Dirac spinors, plane-wave phases, the invariant
//! scalar product on a momentum lattice, and energy projectors.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::{Vector2, Vector3};
use num_complex::Complex64;

use crate::dirac::{boost_spinor_rep, c, clifford_basis, DiracMatrix, DiracVector, ONE, ZERO};
use crate::error::{Error, Result};
use crate::numeric::pairwise_sum_complex;
use crate::tensor::Momentum;

/// Particle (`+1`) or antiparticle (`-1`) branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Particle,
    Antiparticle,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Particle, Branch::Antiparticle];

    pub fn sign(self) -> f64 {
        match self {
            Branch::Particle => 1.0,
            Branch::Antiparticle => -1.0,
        }
    }

    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Branch::Particle),
            -1 => Some(Branch::Antiparticle),
            _ => None,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Particle => "particle",
            Branch::Antiparticle => "antiparticle",
        })
    }
}

/// Rest-frame spin projection along z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    /// `+1/2` or `-1/2`.
    pub fn value(self) -> f64 {
        match self {
            Spin::Up => 0.5,
            Spin::Down => -0.5,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }

    pub fn from_index(i: usize) -> Self {
        if i == 0 {
            Spin::Up
        } else {
            Spin::Down
        }
    }

    /// `sigma^3` eigenvector.
    pub fn chi(self) -> Vector2<Complex64> {
        match self {
            Spin::Up => Vector2::new(ONE, ZERO),
            Spin::Down => Vector2::new(ZERO, ONE),
        }
    }
}

/// Rest-frame spinor `(chi; eps chi) / sqrt(2)`.
pub fn rest_spinor(branch: Branch, spin: Spin) -> DiracVector {
    let chi = spin.chi();
    let e = branch.sign();
    DiracVector::new(chi[0], chi[1], chi[0] * e, chi[1] * e) / c(std::f64::consts::SQRT_2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinor {
    pub components: DiracVector,
    pub branch: Branch,
    pub spin: Spin,
    pub momentum: Momentum,
}

impl DiracSpinor {
    /// `psi^dagger psi`, equal to `E/m` for this normalization.
    pub fn density(&self) -> f64 {
        self.components.norm_squared()
    }

    /// `psi-bar psi = psi^dagger gamma^0 psi`, equal to the branch sign.
    pub fn bar_product(&self) -> f64 {
        let g0 = &clifford_basis().gamma[0];
        (self.components.adjoint() * g0 * self.components)[(0, 0)].re
    }
}

/// `M(L_p)` applied to the rest spinor of the given branch and spin.
pub fn dirac_spinor(p: &Momentum, branch: Branch, spin: Spin) -> DiracSpinor {
    DiracSpinor {
        components: boost_spinor_rep(p) * rest_spinor(branch, spin),
        branch,
        spin,
        momentum: *p,
    }
}

/// Components only, for use inside momentum-space closures.
pub fn spinor_components(p: &Momentum, branch: Branch, spin: Spin) -> DiracVector {
    boost_spinor_rep(p) * rest_spinor(branch, spin)
}

/// Plane-wave mode `phase * spinor` at space-time point `(time, location)`.
/// Particle modes carry `exp(-i(E t - p.x))`, antiparticle modes the conjugate.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveState {
    pub spinor: DiracSpinor,
    pub location: Vector3<f64>,
    pub time: f64,
}

impl PlaneWaveState {
    pub fn new(spinor: DiracSpinor, location: Vector3<f64>, time: f64) -> Self {
        Self {
            spinor,
            location,
            time,
        }
    }

    pub fn phase(&self) -> Complex64 {
        let p = &self.spinor.momentum;
        let arg = p.energy() * self.time - p.spatial().dot(&self.location);
        Complex64::from_polar(1.0, -self.spinor.branch.sign() * arg)
    }

    pub fn value(&self) -> DiracVector {
        self.spinor.components * self.phase()
    }
}

/// Shift a plane-wave state by `d`. The phase changes by `exp(+i eps p.d)`.
pub fn translate_phase(state: &PlaneWaveState, d: &Vector3<f64>) -> PlaneWaveState {
    PlaneWaveState {
        spinor: state.spinor.clone(),
        location: state.location + d,
        time: state.time,
    }
}

/// Factor a translation by `d` multiplies into a branch-`eps` plane wave.
pub fn translation_factor(p: &Momentum, branch: Branch, d: &Vector3<f64>) -> Complex64 {
    Complex64::from_polar(1.0, branch.sign() * p.spatial().dot(d))
}

/// Momentum-space coefficient of a state localized at `x` on the time slice
/// `x0`: `exp(+i eps (E x0 - p.x))`, the conjugate of the mode phase.
pub fn localized_phase(p: &Momentum, branch: Branch, x: &Vector3<f64>, x0: f64) -> Complex64 {
    let arg = p.energy() * x0 - p.spatial().dot(x);
    Complex64::from_polar(1.0, branch.sign() * arg)
}

/// Positive-energy (`sign = +1`) or negative-energy (`sign = -1`) projector of
/// `H_D(p) = gamma^0 gamma.p + m gamma^0`.
pub fn energy_projector(p: &Momentum, sign: f64) -> DiracMatrix {
    let b = clifford_basis();
    let h = b.gamma[0] * b.gamma_dot(p.spatial()) + b.gamma[0] * c(p.mass());
    let e = p.energy();
    (DiracMatrix::identity() * c(e) + h * c(sign.signum())) / c(2.0 * e)
}

/// Projector onto the subspace a branch spinor with label `p` lives in.
/// Antiparticle spinors pair with spatial momentum `-p`.
pub fn branch_projector(p: &Momentum, branch: Branch) -> DiracMatrix {
    match branch {
        Branch::Particle => energy_projector(p, 1.0),
        Branch::Antiparticle => energy_projector(&p.reversed(), -1.0),
    }
}

/// Uniform momentum lattice, either along z (`dim = 1`) or a cube (`dim = 3`).
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumLattice {
    n: usize,
    p_max: f64,
    mass: f64,
    dim: usize,
}

impl MomentumLattice {
    pub fn new(dim: usize, n: usize, p_max: f64, mass: f64) -> Result<Self> {
        if dim != 1 && dim != 3 {
            return Err(Error::InvalidGrid(format!("dimension {dim} (expected 1 or 3)")));
        }
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "mode count {n} is not a power of two >= 2"
            )));
        }
        if !(p_max.is_finite() && p_max > 0.0) {
            return Err(Error::InvalidGrid(format!("p_max {p_max}")));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        Ok(Self { n, p_max, mass, dim })
    }

    pub fn one_dim(n: usize, p_max: f64, mass: f64) -> Result<Self> {
        Self::new(1, n, p_max, mass)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modes_per_axis(&self) -> usize {
        self.n
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.p_max / self.n as f64
    }

    /// Reciprocal lattice spacing `2 pi / (2 p_max)`.
    pub fn reciprocal_spacing(&self) -> f64 {
        PI / self.p_max
    }

    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn axis_value(&self, i: usize) -> f64 {
        (i as f64 - (self.n / 2) as f64) * self.spacing()
    }

    pub fn momentum(&self, idx: usize) -> Momentum {
        let v = if self.dim == 1 {
            Vector3::new(0.0, 0.0, self.axis_value(idx))
        } else {
            let (i, j, k) = (idx / (self.n * self.n), (idx / self.n) % self.n, idx % self.n);
            Vector3::new(self.axis_value(i), self.axis_value(j), self.axis_value(k))
        };
        Momentum::new(self.mass, v).expect("lattice mass validated at construction")
    }

    pub fn momenta(&self) -> impl Iterator<Item = Momentum> + '_ {
        (0..self.len()).map(move |i| self.momentum(i))
    }

    /// Invariant measure `(dp / 2 pi)^dim * m / E` at one node.
    pub fn measure(&self, idx: usize) -> f64 {
        let cell = (self.spacing() / (2.0 * PI)).powi(self.dim as i32);
        cell * self.mass / self.momentum(idx).energy()
    }

    /// True when `d` lies on the reciprocal lattice along every axis.
    pub fn is_commensurate(&self, d: &Vector3<f64>) -> bool {
        let step = self.reciprocal_spacing();
        let axes: &[usize] = if self.dim == 1 { &[2] } else { &[0, 1, 2] };
        let off_axis_ok = self.dim == 3 || (d.x == 0.0 && d.y == 0.0);
        off_axis_ok
            && axes.iter().all(|&a| {
                let r = d[a] / step;
                (r - r.round()).abs() < 1e-9
            })
    }
}

/// Spinor-valued function sampled at every lattice node for both spin labels.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    lattice: MomentumLattice,
    values: Vec<[DiracVector; 2]>,
}

impl SpinorField {
    pub fn from_fn<F>(lattice: &MomentumLattice, mut f: F) -> Self
    where
        F: FnMut(&Momentum, Spin) -> DiracVector,
    {
        let values = lattice
            .momenta()
            .map(|p| [f(&p, Spin::Up), f(&p, Spin::Down)])
            .collect();
        Self {
            lattice: lattice.clone(),
            values,
        }
    }

    pub fn lattice(&self) -> &MomentumLattice {
        &self.lattice
    }

    pub fn value(&self, idx: usize, spin: Spin) -> &DiracVector {
        &self.values[idx][spin.index()]
    }

    /// Localized state at `x` on slice `x0` carrying spin `spin` only.
    pub fn localized(
        lattice: &MomentumLattice,
        branch: Branch,
        spin: Spin,
        x: &Vector3<f64>,
        x0: f64,
    ) -> Self {
        Self::from_fn(lattice, |p, s| {
            if s == spin {
                spinor_components(p, branch, s) * localized_phase(p, branch, x, x0)
            } else {
                DiracVector::zeros()
            }
        })
    }
}

/// `<f|g> = sum_lambda sum_nodes measure * f^dagger g`, conjugate-linear in `f`.
pub fn scalar_product(f: &SpinorField, g: &SpinorField) -> Result<Complex64> {
    if f.lattice != g.lattice {
        return Err(Error::GridMismatch);
    }
    let terms: Vec<Complex64> = (0..f.lattice.len())
        .map(|i| {
            let w = f.lattice.measure(i);
            let mut s = ZERO;
            for l in 0..2 {
                s += f.values[i][l].dotc(&g.values[i][l]);
            }
            s * w
        })
        .collect();
    Ok(pairwise_sum_complex(&terms))
}
