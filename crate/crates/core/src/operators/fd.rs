//! Central differences with one Richardson extrapolation step.

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::dirac::{c, DiracMatrix, DiracVector};
use crate::error::{Error, Result};
use crate::tensor::Momentum;

/// Values that can be differenced: closed under real linear combination.
pub trait FdValue: Sized {
    /// `a * ca + b * cb`.
    fn combine(a: &Self, ca: f64, b: &Self, cb: f64) -> Self;
    fn is_finite(&self) -> bool;
}

impl FdValue for f64 {
    fn combine(a: &Self, ca: f64, b: &Self, cb: f64) -> Self {
        a * ca + b * cb
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl FdValue for Complex64 {
    fn combine(a: &Self, ca: f64, b: &Self, cb: f64) -> Self {
        a * ca + b * cb
    }
    fn is_finite(&self) -> bool {
        Complex64::is_finite(*self)
    }
}

macro_rules! fd_value_for_matrix {
    ($t:ty) => {
        impl FdValue for $t {
            fn combine(a: &Self, ca: f64, b: &Self, cb: f64) -> Self {
                a * c(ca) + b * c(cb)
            }
            fn is_finite(&self) -> bool {
                self.iter().all(|z| z.is_finite())
            }
        }
    };
}

fd_value_for_matrix!(DiracMatrix);
fd_value_for_matrix!(DiracVector);

/// Step policy: a fixed step, or `rel_step * (m + |p|)` at each point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdScheme {
    step: Option<f64>,
    rel_step: f64,
}

impl Default for FdScheme {
    fn default() -> Self {
        Self {
            step: None,
            rel_step: Self::DEFAULT_REL_STEP,
        }
    }
}

impl FdScheme {
    pub const DEFAULT_REL_STEP: f64 = 1e-4;

    pub fn new() -> Self {
        Self::default()
    }

    /// Fixed absolute step.
    pub fn with_step(h: f64) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::FdStepUnderflow(h));
        }
        Ok(Self {
            step: Some(h),
            rel_step: Self::DEFAULT_REL_STEP,
        })
    }

    pub fn step_for(&self, p: &Momentum) -> f64 {
        self.step.unwrap_or(self.rel_step * (p.mass() + p.norm()))
    }

    /// `(4 D(h/2) - D(h)) / 3` with `D` the symmetric difference quotient.
    pub fn derivative<T, F>(&self, x: f64, h: f64, f: F) -> Result<T>
    where
        T: FdValue,
        F: Fn(f64) -> T,
    {
        let half = h / 2.0;
        if !(half > 0.0) || x + half == x || x - half == x {
            return Err(Error::FdStepUnderflow(h));
        }
        let central = |s: f64| {
            let d = T::combine(&f(x + s), 1.0, &f(x - s), -1.0);
            T::combine(&d, 1.0 / (2.0 * s), &d, 0.0)
        };
        let coarse = central(h);
        let fine = central(half);
        let out = T::combine(&fine, 4.0 / 3.0, &coarse, -1.0 / 3.0);
        if out.is_finite() {
            Ok(out)
        } else {
            Err(Error::NonFinite("finite-difference derivative"))
        }
    }

    /// `d f / d p^k` along the mass shell (energy recomputed at each point).
    pub fn momentum_derivative<T, F>(&self, p: &Momentum, k: usize, f: F) -> Result<T>
    where
        T: FdValue,
        F: Fn(&Momentum) -> T,
    {
        let h = self.step_for(p);
        let base = *p.spatial();
        self.derivative(base[k], h, |t| {
            let mut v: Vector3<f64> = base;
            v[k] = t;
            f(&p.with_spatial(v))
        })
    }
}
