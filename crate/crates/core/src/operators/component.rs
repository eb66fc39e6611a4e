//! Operators of the form `c * d/dp^k + A(p)` and their commutators.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::dirac::{commutator as matrix_commutator, DiracMatrix, DiracVector, ZERO};
use crate::error::{Error, Result};
use crate::tensor::Momentum;

use super::fd::FdScheme;

type EvalFn = dyn Fn(&Momentum) -> DiracMatrix + Send + Sync;
type GradFn = dyn Fn(&Momentum, usize) -> DiracMatrix + Send + Sync;

/// How derivatives of matrix fields are obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivativeMode {
    FiniteDifference(FdScheme),
    /// Use the closed-form gradient; fails if the field has none.
    Analytic,
}

impl Default for DerivativeMode {
    fn default() -> Self {
        DerivativeMode::FiniteDifference(FdScheme::default())
    }
}

/// Momentum-dependent 4x4 matrix with an optional closed-form gradient.
#[derive(Clone)]
pub struct MatrixField {
    name: Arc<str>,
    eval: Arc<EvalFn>,
    grad: Option<Arc<GradFn>>,
}

impl fmt::Debug for MatrixField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixField")
            .field("name", &self.name)
            .field("analytic_gradient", &self.grad.is_some())
            .finish()
    }
}

impl MatrixField {
    pub fn new<F>(name: &str, eval: F) -> Self
    where
        F: Fn(&Momentum) -> DiracMatrix + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
            grad: None,
        }
    }

    pub fn with_gradient<F, G>(name: &str, eval: F, grad: G) -> Self
    where
        F: Fn(&Momentum) -> DiracMatrix + Send + Sync + 'static,
        G: Fn(&Momentum, usize) -> DiracMatrix + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
            grad: Some(Arc::new(grad)),
        }
    }

    pub fn zero() -> Self {
        Self::with_gradient("0", |_| DiracMatrix::zeros(), |_, _| DiracMatrix::zeros())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, p: &Momentum) -> DiracMatrix {
        (self.eval)(p)
    }

    pub fn has_analytic_gradient(&self) -> bool {
        self.grad.is_some()
    }

    /// `dA/dp^k`.
    pub fn gradient(&self, p: &Momentum, k: usize, mode: &DerivativeMode) -> Result<DiracMatrix> {
        match mode {
            DerivativeMode::Analytic => match &self.grad {
                Some(g) => Ok(g(p, k)),
                None => Err(Error::NoAnalyticDerivative(self.name.to_string())),
            },
            DerivativeMode::FiniteDifference(fd) => fd.momentum_derivative(p, k, |q| self.eval(q)),
        }
    }

    /// Pointwise sum; the gradient survives only if both terms have one.
    pub fn plus(&self, other: &MatrixField) -> MatrixField {
        let (a, b) = (self.eval.clone(), other.eval.clone());
        let grad: Option<Arc<GradFn>> = match (&self.grad, &other.grad) {
            (Some(ga), Some(gb)) => {
                let (ga, gb) = (ga.clone(), gb.clone());
                Some(Arc::new(move |p: &Momentum, k| ga(p, k) + gb(p, k)))
            }
            _ => None,
        };
        MatrixField {
            name: format!("{} + {}", self.name, other.name).into(),
            eval: Arc::new(move |p| a(p) + b(p)),
            grad,
        }
    }

    pub fn scaled(&self, s: Complex64) -> MatrixField {
        let a = self.eval.clone();
        let grad: Option<Arc<GradFn>> = self.grad.as_ref().map(|g| {
            let g = g.clone();
            Arc::new(move |p: &Momentum, k| g(p, k) * s) as Arc<GradFn>
        });
        MatrixField {
            name: format!("({s})*{}", self.name).into(),
            eval: Arc::new(move |p| a(p) * s),
            grad,
        }
    }
}

/// One component of a momentum-space operator: `deriv_coeff * d/dp^index + field(p)`.
#[derive(Debug, Clone)]
pub struct OperatorComponent {
    deriv_coeff: Complex64,
    index: Option<usize>,
    field: MatrixField,
}

impl OperatorComponent {
    /// Differential operator along `index` (0-based spatial index).
    pub fn differential(deriv_coeff: Complex64, index: usize, field: MatrixField) -> Self {
        assert!(index < 3, "spatial index out of range: {index}");
        Self {
            deriv_coeff,
            index: Some(index),
            field,
        }
    }

    /// Pure multiplication by a matrix field.
    pub fn multiplicative(field: MatrixField) -> Self {
        Self {
            deriv_coeff: ZERO,
            index: None,
            field,
        }
    }

    pub fn deriv_coeff(&self) -> Complex64 {
        self.deriv_coeff
    }

    pub fn index(&self) -> Option<usize> {
        self.index
    }

    pub fn field(&self) -> &MatrixField {
        &self.field
    }

    pub fn matrix(&self, p: &Momentum) -> DiracMatrix {
        self.field.eval(p)
    }

    /// Same derivative term with an extra matrix field added.
    pub fn with_added_field(&self, extra: &MatrixField) -> Self {
        Self {
            deriv_coeff: self.deriv_coeff,
            index: self.index,
            field: self.field.plus(extra),
        }
    }

    /// Apply to a spinor-valued function of momentum, evaluated at `p`.
    pub fn apply<F>(&self, f: F, p: &Momentum, fd: &FdScheme) -> Result<DiracVector>
    where
        F: Fn(&Momentum) -> DiracVector,
    {
        let mut out = self.matrix(p) * f(p);
        if let Some(k) = self.index {
            if self.deriv_coeff != ZERO {
                let d: DiracVector = fd.momentum_derivative(p, k, &f)?;
                out += d * self.deriv_coeff;
            }
        }
        Ok(out)
    }
}

/// `[a, b]` at `p`: `c_a dB/dp^{k_a} - c_b dA/dp^{k_b} + [A(p), B(p)]`.
pub fn commutator(
    a: &OperatorComponent,
    b: &OperatorComponent,
    p: &Momentum,
    mode: &DerivativeMode,
) -> Result<DiracMatrix> {
    let (ma, mb) = (a.matrix(p), b.matrix(p));
    let mut out = matrix_commutator(&ma, &mb);
    if let (Some(k), true) = (a.index, a.deriv_coeff != ZERO) {
        out += b.field.gradient(p, k, mode)? * a.deriv_coeff;
    }
    if let (Some(k), true) = (b.index, b.deriv_coeff != ZERO) {
        out -= a.field.gradient(p, k, mode)? * b.deriv_coeff;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{c, max_abs, I};

    fn p() -> Momentum {
        Momentum::from_components(1.0, 0.3, -0.2, 0.75).unwrap()
    }

    fn bare_x(k: usize) -> OperatorComponent {
        OperatorComponent::differential(I, k, MatrixField::zero())
    }

    #[test]
    fn bare_positions_commute_exactly() {
        for i in 0..3 {
            for j in 0..3 {
                let r = commutator(&bare_x(i), &bare_x(j), &p(), &DerivativeMode::default()).unwrap();
                assert_eq!(max_abs(&r), 0.0);
            }
        }
    }

    #[test]
    fn canonical_pair_with_scalar_field() {
        for j in 0..3 {
            let pj = MatrixField::with_gradient(
                "p",
                move |q: &Momentum| DiracMatrix::identity() * c(q.component(j)),
                move |_, k| DiracMatrix::identity() * c(if k == j { 1.0 } else { 0.0 }),
            );
            let pj = OperatorComponent::multiplicative(pj);
            for i in 0..3 {
                for mode in [DerivativeMode::Analytic, DerivativeMode::default()] {
                    let r = commutator(&bare_x(i), &pj, &p(), &mode).unwrap();
                    let expect = DiracMatrix::identity() * if i == j { I } else { ZERO };
                    assert!(max_abs(&(r - expect)) < 1e-10);
                }
            }
        }
    }

    #[test]
    fn missing_gradient_is_reported() {
        let f = OperatorComponent::multiplicative(MatrixField::new("opaque", |q: &Momentum| {
            DiracMatrix::identity() * c(q.energy())
        }));
        let err = commutator(&bare_x(0), &f, &p(), &DerivativeMode::Analytic).unwrap_err();
        assert_eq!(err, Error::NoAnalyticDerivative("opaque".into()));
        let r = commutator(&bare_x(0), &f, &p(), &DerivativeMode::default()).unwrap();
        assert!((r[(0, 0)] - I * (0.3 / p().energy())).norm() < 1e-10);
    }

    #[test]
    fn apply_on_plane_wave() {
        let x = bare_x(2);
        let f = |q: &Momentum| DiracVector::repeat(Complex64::from_polar(1.0, -q.component(2) * 1.5));
        let out = x.apply(f, &p(), &FdScheme::new()).unwrap();
        assert!((out - f(&p()) * c(1.5)).norm() < 1e-9);
    }

    #[test]
    fn field_algebra() {
        let a = MatrixField::with_gradient("a", |_| DiracMatrix::identity(), |_, _| DiracMatrix::zeros());
        let b = MatrixField::new("b", |_| DiracMatrix::identity());
        let s = a.plus(&a).scaled(c(0.5));
        assert!(s.has_analytic_gradient());
        assert_eq!(s.eval(&p()), DiracMatrix::identity());
        assert!(!a.plus(&b).has_analytic_gradient());
    }
}
