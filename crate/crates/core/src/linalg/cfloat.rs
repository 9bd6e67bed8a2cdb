//! Double-precision complex numbers for the numeric spot checks.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default absolute tolerance for floating comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A finite complex double. Construction rejects NaN and infinities.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct CFloat(Complex64);

impl CFloat {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Self(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub(crate) fn from_parts_unchecked(re: f64, im: f64) -> Self {
        Self(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn zero() -> Self {
        Self(Complex64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        Self(Complex64::new(1.0, 0.0))
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn abs(self) -> f64 {
        self.0.norm()
    }

    pub fn sqrt(self) -> Self {
        Self(self.0.sqrt())
    }

    pub fn is_finite(self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self.0 - other.0).norm() <= tol
    }

    pub fn as_complex(self) -> Complex64 {
        self.0
    }
}

impl Add for CFloat {
    type Output = CFloat;
    fn add(self, rhs: CFloat) -> CFloat {
        CFloat(self.0 + rhs.0)
    }
}

impl Sub for CFloat {
    type Output = CFloat;
    fn sub(self, rhs: CFloat) -> CFloat {
        CFloat(self.0 - rhs.0)
    }
}

impl Mul for CFloat {
    type Output = CFloat;
    fn mul(self, rhs: CFloat) -> CFloat {
        CFloat(self.0 * rhs.0)
    }
}

impl Div for CFloat {
    type Output = CFloat;
    fn div(self, rhs: CFloat) -> CFloat {
        CFloat(self.0 / rhs.0)
    }
}

impl Neg for CFloat {
    type Output = CFloat;
    fn neg(self) -> CFloat {
        CFloat(-self.0)
    }
}

impl fmt::Display for CFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im >= 0.0 {
            write!(f, "{:e} + {:e} i", self.0.re, self.0.im)
        } else {
            write!(f, "{:e} - {:e} i", self.0.re, -self.0.im)
        }
    }
}

impl fmt::Debug for CFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CFloat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(CFloat::new(f64::NAN, 0.0).is_err());
        assert!(CFloat::new(0.0, f64::INFINITY).is_err());
        assert!(CFloat::new(1.0, -2.0).is_ok());
    }

    #[test]
    fn sqrt_of_minus_one() {
        let z = CFloat::new(-1.0, 0.0).unwrap().sqrt();
        assert!(z.approx_eq(CFloat::new(0.0, 1.0).unwrap(), DEFAULT_TOL));
    }
}
