//! Minkowski-space kinematics in natural units with metric diag(+,-,-,-).
//!
//! Lorentz matrices act on contravariant components `(t, x, y, z)`.
//! Boosts and rotations are active: `boost(z, eta)` maps the rest
//! momentum `(m, 0, 0, 0)` to `(m cosh eta, 0, 0, m sinh eta)`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};

use crate::error::{Error, Result};

/// Rest-frame guard for the removable singularity of `p / |p|`.
const REST_GUARD: f64 = 1e-12;

/// Metric tensor `g = diag(+1, -1, -1, -1)`.
pub fn metric() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, -1.0, -1.0))
}

/// Sign of the diagonal metric entry for index `mu`.
#[inline]
pub fn metric_sign(mu: usize) -> f64 {
    if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Totally antisymmetric symbol with upper indices, normalized so that
/// `eps^{1230} = +1` (hence `eps^{0123} = -1`).
pub fn levi_civita(mu: usize, nu: usize, rho: usize, sigma: usize) -> i8 {
    let idx = [mu, nu, rho, sigma];
    if idx.iter().any(|&i| i > 3) {
        return 0;
    }
    let mut parity = 1i8;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                parity = -parity;
            }
        }
    }
    -parity
}

/// Three-index Levi-Civita symbol over spatial indices `0..3`.
pub fn levi_civita3(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// A contravariant space-time 4-vector `x^mu = (t, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub fn from_parts(t: f64, spatial: Vector3<f64>) -> Self {
        Self::new(t, spatial.x, spatial.y, spatial.z)
    }

    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn to_vector(&self) -> Vector4<f64> {
        Vector4::new(self.t, self.x, self.y, self.z)
    }

    pub fn from_vector(v: &Vector4<f64>) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    /// Component with index lowered by the metric.
    pub fn lower(&self, mu: usize) -> f64 {
        metric_sign(mu) * self.to_vector()[mu]
    }
}

/// `a^0 b^0 - a . b`.
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z
}

/// An on-shell momentum: spatial part plus a positive mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    spatial: Vector3<f64>,
    mass: f64,
    energy: f64,
}

impl Momentum {
    pub fn new(mass: f64, spatial: Vector3<f64>) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        if !spatial.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite("momentum"));
        }
        let energy = (spatial.norm_squared() + mass * mass).sqrt();
        Ok(Self {
            spatial,
            mass,
            energy,
        })
    }

    pub fn from_components(mass: f64, px: f64, py: f64, pz: f64) -> Result<Self> {
        Self::new(mass, Vector3::new(px, py, pz))
    }

    pub fn at_rest(mass: f64) -> Result<Self> {
        Self::new(mass, Vector3::zeros())
    }

    /// Puts the spatial part of `v` on the mass shell of `mass`.
    pub fn from_four_vector(mass: f64, v: &FourVector) -> Result<Self> {
        let p = Self::new(mass, v.spatial())?;
        let shell = (v.t - p.energy).abs();
        if v.t <= 0.0 || shell > 1e-9 * (1.0 + p.energy) {
            return Err(Error::InvalidLorentz(format!(
                "4-vector ({}, {}, {}, {}) is off the mass shell m = {}",
                v.t, v.x, v.y, v.z, mass
            )));
        }
        Ok(p)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn spatial(&self) -> &Vector3<f64> {
        &self.spatial
    }

    pub fn component(&self, k: usize) -> f64 {
        self.spatial[k]
    }

    pub fn norm(&self) -> f64 {
        self.spatial.norm()
    }

    pub fn is_at_rest(&self) -> bool {
        self.norm() < REST_GUARD * self.mass
    }

    pub fn four_vector(&self) -> FourVector {
        FourVector::from_parts(self.energy, self.spatial)
    }

    /// Same mass, spatial momentum replaced.
    pub fn with_spatial(&self, spatial: Vector3<f64>) -> Self {
        // mass already validated; only the energy changes
        let energy = (spatial.norm_squared() + self.mass * self.mass).sqrt();
        Self {
            spatial,
            mass: self.mass,
            energy,
        }
    }

    /// Same mass, spatial momentum negated.
    pub fn reversed(&self) -> Self {
        self.with_spatial(-self.spatial)
    }

    /// `|xi| = artanh(|p| / E)`, evaluated as `asinh(|p| / m)`.
    pub fn rapidity_magnitude(&self) -> f64 {
        (self.norm() / self.mass).asinh()
    }

    /// Rapidity vector `xi = p_hat * artanh(|p| / E)`; zero at rest.
    pub fn rapidity(&self) -> Vector3<f64> {
        if self.is_at_rest() {
            return Vector3::zeros();
        }
        self.spatial * (self.rapidity_magnitude() / self.norm())
    }

    /// Unit vector along `p`, or `None` at rest.
    pub fn direction(&self) -> Option<Vector3<f64>> {
        if self.is_at_rest() {
            None
        } else {
            Some(self.spatial / self.norm())
        }
    }
}

/// A restricted (proper, orthochronous) Lorentz transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix(Matrix4<f64>);

impl LorentzMatrix {
    pub fn identity() -> Self {
        Self(Matrix4::identity())
    }

    /// Validates `L^T g L = g`, `det L = 1` and `L^0_0 >= 1`.
    pub fn new(m: Matrix4<f64>) -> Result<Self> {
        if !m.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("Lorentz matrix"));
        }
        let scale = 1.0 + m.abs().max().powi(2);
        let resid = Self::metric_residual_of(&m);
        if resid > 1e-9 * scale {
            return Err(Error::InvalidLorentz(format!(
                "metric not preserved, residual {resid:e}"
            )));
        }
        let det = m.determinant();
        if (det - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidLorentz(format!("determinant {det}")));
        }
        if m[(0, 0)] < 1.0 - 1e-9 * scale {
            return Err(Error::InvalidLorentz(format!(
                "not orthochronous, L00 = {}",
                m[(0, 0)]
            )));
        }
        Ok(Self(m))
    }

    fn metric_residual_of(m: &Matrix4<f64>) -> f64 {
        let g = metric();
        (m.transpose() * g * m - g).abs().max()
    }

    /// Max entrywise `|L^T g L - g|`.
    pub fn metric_residual(&self) -> f64 {
        Self::metric_residual_of(&self.0)
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn entry(&self, mu: usize, nu: usize) -> f64 {
        self.0[(mu, nu)]
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector::from_vector(&(self.0 * v.to_vector()))
    }

    /// `L1 * L2` (apply `L2` first).
    pub fn compose(&self, rhs: &LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(self.0 * rhs.0)
    }

    /// `g L^T g`, the exact inverse for a Lorentz matrix.
    pub fn inverse(&self) -> LorentzMatrix {
        let g = metric();
        LorentzMatrix(g * self.0.transpose() * g)
    }

    /// Spatial 3x3 block.
    pub fn spatial_block(&self) -> Matrix3<f64> {
        self.0.fixed_view::<3, 3>(1, 1).into_owned()
    }

    /// Largest entry of the time row/column mixing and of `|L00 - 1|`; zero
    /// for a pure spatial rotation.
    pub fn timelike_mixing(&self) -> f64 {
        let mut worst = (self.0[(0, 0)] - 1.0).abs();
        for k in 1..4 {
            worst = worst.max(self.0[(0, k)].abs()).max(self.0[(k, 0)].abs());
        }
        worst
    }
}

fn unit_axis(axis: Vector3<f64>) -> Result<Vector3<f64>> {
    let n = axis.norm();
    if !n.is_finite() || (n - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitAxis(n));
    }
    Ok(axis)
}

fn boost_matrix(axis: &Vector3<f64>, rapidity: f64) -> Matrix4<f64> {
    let (sh, ch) = (rapidity.sinh(), rapidity.cosh());
    let mut m = Matrix4::identity();
    m[(0, 0)] = ch;
    for i in 0..3 {
        m[(0, i + 1)] = axis[i] * sh;
        m[(i + 1, 0)] = axis[i] * sh;
        for j in 0..3 {
            m[(i + 1, j + 1)] += (ch - 1.0) * axis[i] * axis[j];
        }
    }
    m
}

fn rotation_matrix(axis: &Vector3<f64>, angle: f64) -> Matrix4<f64> {
    let (s, c) = angle.sin_cos();
    let mut m = Matrix4::identity();
    for i in 0..3 {
        for j in 0..3 {
            let mut r = (1.0 - c) * axis[i] * axis[j];
            if i == j {
                r += c;
            }
            for k in 0..3 {
                r -= s * levi_civita3(i, j, k) * axis[k];
            }
            m[(i + 1, j + 1)] = r;
        }
    }
    m
}

/// Standard boost `L_p` with `L_p (m, 0) = (E, p)`.
pub fn standard_boost(p: &Momentum) -> LorentzMatrix {
    match p.direction() {
        None => LorentzMatrix::identity(),
        Some(n) => {
            // cosh|xi| = E/m and sinh|xi| = |p|/m exactly
            let (ch, sh) = (p.energy() / p.mass(), p.norm() / p.mass());
            let mut m = Matrix4::identity();
            m[(0, 0)] = ch;
            for i in 0..3 {
                m[(0, i + 1)] = n[i] * sh;
                m[(i + 1, 0)] = n[i] * sh;
                for j in 0..3 {
                    m[(i + 1, j + 1)] += (ch - 1.0) * n[i] * n[j];
                }
            }
            LorentzMatrix(m)
        }
    }
}

/// Spatial axis names accepted by the word grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn unit(self) -> Vector3<f64> {
        match self {
            Axis::X => Vector3::x(),
            Axis::Y => Vector3::y(),
            Axis::Z => Vector3::z(),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    fn name(&self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

/// One factor of a transformation word.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Primitive {
    Boost { axis: Vector3<f64>, rapidity: f64 },
    Rotation { axis: Vector3<f64>, angle: f64 },
}

impl Primitive {
    pub fn boost(axis: Vector3<f64>, rapidity: f64) -> Result<Self> {
        Ok(Primitive::Boost {
            axis: unit_axis(axis)?,
            rapidity,
        })
    }

    pub fn rotation(axis: Vector3<f64>, angle: f64) -> Result<Self> {
        Ok(Primitive::Rotation {
            axis: unit_axis(axis)?,
            angle,
        })
    }

    pub fn axis(&self) -> Vector3<f64> {
        match self {
            Primitive::Boost { axis, .. } | Primitive::Rotation { axis, .. } => *axis,
        }
    }

    /// The inverse transformation.
    pub fn inverse(&self) -> Self {
        match *self {
            Primitive::Boost { axis, rapidity } => Primitive::Boost {
                axis,
                rapidity: -rapidity,
            },
            Primitive::Rotation { axis, angle } => Primitive::Rotation { axis, angle: -angle },
        }
    }

    pub fn lorentz(&self) -> Result<LorentzMatrix> {
        match self {
            Primitive::Boost { axis, rapidity } => {
                Ok(LorentzMatrix(boost_matrix(&unit_axis(*axis)?, *rapidity)))
            }
            Primitive::Rotation { axis, angle } => {
                Ok(LorentzMatrix(rotation_matrix(&unit_axis(*axis)?, *angle)))
            }
        }
    }
}

/// A product of boosts and rotations, multiplied in word order
/// (the last primitive acts first).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Word(pub Vec<Primitive>);

impl Word {
    pub fn new(primitives: Vec<Primitive>) -> Self {
        Self(primitives)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reversed word of inverted primitives.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Primitive::inverse).collect())
    }

    /// `self * rhs` as a word (apply `rhs` first).
    pub fn then_after(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `kind:axis:value` items joined by commas, e.g.
    /// `boost:x:0.5,rot:y:0.3`. Kinds are `boost` and `rot`; axes `x|y|z`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        for item in s.split(',') {
            let parts: Vec<&str> = item.trim().split(':').collect();
            if parts.len() != 3 {
                return Err(Error::WordParse(format!(
                    "expected kind:axis:value, got '{item}'"
                )));
            }
            let axis = match parts[1].trim() {
                "x" => Axis::X,
                "y" => Axis::Y,
                "z" => Axis::Z,
                other => return Err(Error::WordParse(format!("unknown axis '{other}'"))),
            };
            let value: f64 = parts[2]
                .trim()
                .parse()
                .map_err(|_| Error::WordParse(format!("bad number '{}'", parts[2])))?;
            if !value.is_finite() {
                return Err(Error::WordParse(format!("non-finite value '{}'", parts[2])));
            }
            let prim = match parts[0].trim() {
                "boost" => Primitive::boost(axis.unit(), value)?,
                "rot" => Primitive::rotation(axis.unit(), value)?,
                other => return Err(Error::WordParse(format!("unknown kind '{other}'"))),
            };
            out.push(prim);
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            let (kind, axis, value) = match p {
                Primitive::Boost { axis, rapidity } => ("boost", axis, rapidity),
                Primitive::Rotation { axis, angle } => ("rot", axis, angle),
            };
            let named = [Axis::X, Axis::Y, Axis::Z]
                .into_iter()
                .find(|a| (a.unit() - axis).norm() == 0.0);
            match named {
                Some(a) => write!(f, "{kind}:{}:{value}", a.name())?,
                None => write!(f, "{kind}:({},{},{}):{value}", axis.x, axis.y, axis.z)?,
            }
        }
        Ok(())
    }
}

/// Product of the primitive matrices in word order.
pub fn lorentz_from_word(word: &Word) -> Result<LorentzMatrix> {
    let mut acc = Matrix4::identity();
    for prim in word.primitives() {
        acc *= prim.lorentz()?.0;
    }
    Ok(LorentzMatrix(acc))
}

/// Wigner rotation `R = L_{Lp}^-1 L L_p`.
pub fn wigner_rotation(lambda: &LorentzMatrix, p: &Momentum) -> Result<LorentzMatrix> {
    LorentzMatrix::new(lambda.0)?;
    let q = transform_momentum(lambda, p)?;
    let r = standard_boost(&q)
        .inverse()
        .compose(lambda)
        .compose(&standard_boost(p));
    let scale = 1.0 + lambda.0.abs().max().powi(2);
    let mixing = r.timelike_mixing();
    if mixing > 1e-10 * scale {
        return Err(Error::NotARotation(format!(
            "Wigner rotation mixes time, residual {mixing:e}"
        )));
    }
    Ok(r)
}

/// `q = L p`, kept on the mass shell of `p`.
pub fn transform_momentum(lambda: &LorentzMatrix, p: &Momentum) -> Result<Momentum> {
    let q = lambda.apply(&p.four_vector());
    Momentum::from_four_vector(p.mass(), &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2};

    fn close(a: &Matrix4<f64>, b: &Matrix4<f64>, tol: f64) -> bool {
        (a - b).abs().max() <= tol
    }

    #[test]
    fn dot_examples() {
        let e0 = FourVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(&e0, &e0), 1.0);
        let null = FourVector::new(1.0, 0.0, 0.0, 1.0);
        assert_eq!(minkowski_dot(&null, &null), 0.0);
        let p = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        assert!((p.energy() - 1.25).abs() < 1e-15);
        assert!((minkowski_dot(&p.four_vector(), &p.four_vector()) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn levi_civita_convention() {
        assert_eq!(levi_civita(1, 2, 3, 0), 1);
        assert_eq!(levi_civita(0, 1, 2, 3), -1);
        assert_eq!(levi_civita(0, 0, 2, 3), 0);
        assert_eq!(levi_civita(1, 0, 2, 3), 1);
    }

    #[test]
    fn mass_must_be_positive() {
        assert!(matches!(
            Momentum::from_components(0.0, 0.0, 0.0, 1.0),
            Err(Error::NonPositiveMass(_))
        ));
        assert!(Momentum::from_components(-1.0, 0.0, 0.0, 1.0).is_err());
        assert!(Momentum::from_components(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn rapidity_relations() {
        let p = Momentum::from_components(2.0, 0.3, -1.2, 0.7).unwrap();
        let xi = p.rapidity().norm();
        assert!((xi.cosh() - p.energy() / p.mass()).abs() < 1e-14);
        assert!((xi.sinh() - p.norm() / p.mass()).abs() < 1e-14);
        assert_eq!(Momentum::at_rest(1.0).unwrap().rapidity(), Vector3::zeros());
    }

    #[test]
    fn standard_boost_examples() {
        let rest = Momentum::at_rest(1.0).unwrap();
        assert_eq!(*standard_boost(&rest).matrix(), Matrix4::identity());

        let p = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        let expected = Matrix4::new(
            1.25, 0.0, 0.0, 0.75, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.75, 0.0, 0.0, 1.25,
        );
        let l = standard_boost(&p);
        assert!(close(l.matrix(), &expected, 1e-12));
        assert!(l.metric_residual() < 1e-12);
        let k = l.apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!((k.t - 1.25).abs() < 1e-12 && (k.z - 0.75).abs() < 1e-12);
    }

    #[test]
    fn word_examples() {
        assert_eq!(
            *lorentz_from_word(&Word::empty()).unwrap().matrix(),
            Matrix4::identity()
        );
        let quarter = Word::new(vec![Primitive::rotation(Vector3::z(), FRAC_PI_2).unwrap()]);
        let v = lorentz_from_word(&quarter)
            .unwrap()
            .apply(&FourVector::new(0.0, 1.0, 0.0, 0.0));
        assert!(v.x.abs() < 1e-15 && (v.y - 1.0).abs() < 1e-15);

        let b = Word::new(vec![Primitive::boost(Vector3::z(), LN_2).unwrap()]);
        let p = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        assert!(close(
            lorentz_from_word(&b).unwrap().matrix(),
            standard_boost(&p).matrix(),
            1e-12
        ));
    }

    #[test]
    fn non_unit_axis_rejected() {
        assert!(matches!(
            Primitive::boost(Vector3::new(1.0, 1.0, 0.0), 0.1),
            Err(Error::NonUnitAxis(_))
        ));
        assert!(Primitive::rotation(Vector3::zeros(), 0.1).is_err());
    }

    #[test]
    fn word_parsing() {
        let w: Word = "boost:x:0.5,rot:y:0.3".parse().unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.to_string(), "boost:x:0.5,rot:y:0.3");
        assert!("boost:w:0.5".parse::<Word>().is_err());
        assert!("shear:x:0.5".parse::<Word>().is_err());
        assert!("boost:x".parse::<Word>().is_err());
        assert!("boost:x:abc".parse::<Word>().is_err());
        assert!("".parse::<Word>().unwrap().is_empty());
    }

    #[test]
    fn wigner_rotation_examples() {
        let p = Momentum::from_components(1.0, 0.0, 0.0, 0.75).unwrap();
        let collinear =
            lorentz_from_word(&Word::new(vec![Primitive::boost(Vector3::z(), 0.8).unwrap()])).unwrap();
        let r = wigner_rotation(&collinear, &p).unwrap();
        assert!(close(r.matrix(), &Matrix4::identity(), 1e-12));

        let rot =
            lorentz_from_word(&Word::new(vec![Primitive::rotation(Vector3::y(), 0.3).unwrap()])).unwrap();
        let r = wigner_rotation(&rot, &p).unwrap();
        assert!(close(r.matrix(), rot.matrix(), 1e-12));

        let bx = lorentz_from_word(&Word::new(vec![Primitive::boost(Vector3::x(), 0.5).unwrap()])).unwrap();
        let r = wigner_rotation(&bx, &p).unwrap();
        assert!(r.timelike_mixing() < 1e-10);
        let s = r.spatial_block();
        assert!((s.transpose() * s - Matrix3::identity()).abs().max() < 1e-12);
        // rotation about y: the y axis is fixed, angle from the trace
        assert!((s * Vector3::y() - Vector3::y()).norm() < 1e-12);
        let angle = ((s.trace() - 1.0) / 2.0).clamp(-1.0, 1.0).acos();
        assert!(angle > 1e-3);
    }

    #[test]
    fn off_shell_rejected() {
        let v = FourVector::new(2.0, 0.0, 0.0, 0.5);
        assert!(Momentum::from_four_vector(1.0, &v).is_err());
    }

    #[test]
    fn invalid_lorentz_rejected() {
        let mut m = Matrix4::identity();
        m[(1, 1)] = 2.0;
        assert!(LorentzMatrix::new(m).is_err());
        let parity = Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, -1.0, -1.0));
        assert!(LorentzMatrix::new(parity).is_err());
        let reversal = Matrix4::from_diagonal(&Vector4::new(-1.0, -1.0, 1.0, 1.0));
        assert!(LorentzMatrix::new(reversal).is_err());
    }
}
