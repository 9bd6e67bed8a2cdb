//! Exact complex-rational scalars `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::CFloat;

/// A Gaussian rational number. Both parts are arbitrary-precision rationals
/// kept in lowest terms with positive denominators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

/// Short alias used throughout the crate.
pub type Gr = GaussianRational;

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den` as a real value. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    pub fn complex(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `max(|re|, |im|)`; an exact stand-in for the modulus.
    pub fn max_norm(&self) -> BigRational {
        let (a, b) = (self.re.abs(), self.im.abs());
        if a >= b {
            a
        } else {
            b
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root when one exists in `ℚ(i)`.
    ///
    /// The returned root has positive real part, or zero real part and
    /// non-negative imaginary part.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (x + yi)² = a + bi  ⟹  x² = (a + r)/2, y² = (r − a)/2, r = |z|
        let r = rational_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&r + &self.re) / &two))?;
        let mut y = rational_sqrt(&((&r - &self.re) / &two))?;
        if self.im.is_negative() {
            y = -y;
        }
        let root = if x.is_zero() {
            Self::new(x, y.abs())
        } else {
            Self::new(x, y)
        };
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }

    pub fn to_cfloat(&self) -> CFloat {
        CFloat::from_parts_unchecked(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Square root of a non-negative rational if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }
}

impl<'a> Add<&'a Gr> for &'a Gr {
    type Output = Gr;
    fn add(self, rhs: &Gr) -> Gr {
        Gr::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Gr> for &'a Gr {
    type Output = Gr;
    fn sub(self, rhs: &Gr) -> Gr {
        Gr::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Gr> for &'a Gr {
    type Output = Gr;
    fn mul(self, rhs: &Gr) -> Gr {
        // structure-constant and ad matrices are mostly zeros
        if self.is_zero() || rhs.is_zero() {
            return Gr::zero();
        }
        if self.is_real() && rhs.is_real() {
            return Gr::new(&self.re * &rhs.re, BigRational::zero());
        }
        Gr::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a Gr> for &'a Gr {
    type Output = Gr;
    /// Panics on division by zero, like the rational type underneath.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Gr) -> Gr {
        let inv = rhs.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &Gr {
    type Output = Gr;
    fn neg(self) -> Gr {
        Gr::new(-&self.re, -&self.im)
    }
}

impl Neg for Gr {
    type Output = Gr;
    fn neg(self) -> Gr {
        Gr::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Gr> for Gr {
            type Output = Gr;
            fn $m(self, rhs: Gr) -> Gr { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Gr> for Gr {
            type Output = Gr;
            fn $m(self, rhs: &Gr) -> Gr { (&self).$m(rhs) }
        }
        impl<'a> $tr<Gr> for &'a Gr {
            type Output = Gr;
            fn $m(self, rhs: Gr) -> Gr { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Gr> for Gr {
    fn add_assign(&mut self, rhs: &Gr) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for Gr {
    fn add_assign(&mut self, rhs: Gr) {
        *self += &rhs;
    }
}

impl SubAssign<&Gr> for Gr {
    fn sub_assign(&mut self, rhs: &Gr) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Gr> for Gr {
    fn mul_assign(&mut self, rhs: &Gr) {
        *self = &*self * rhs;
    }
}

impl Sum for Gr {
    fn sum<I: Iterator<Item = Gr>>(iter: I) -> Gr {
        iter.fold(Gr::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a Gr> for Gr {
    fn sum<I: Iterator<Item = &'a Gr>>(iter: I) -> Gr {
        iter.fold(Gr::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for Gr {
    fn product<I: Iterator<Item = Gr>>(iter: I) -> Gr {
        iter.fold(Gr::one(), |acc, x| &acc * &x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text: `3/2`, `-i`, `1/2 i`, `1/2 + i`, `-1 - 3/4 i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_abs = self.im.abs();
        let im_mag = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{} i", fmt_rational(&im_abs))
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{sign}{im_mag}")
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{} {sign} {im_mag}", fmt_rational(&self.re))
            }
        }
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({self})")
    }
}
