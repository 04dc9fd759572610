//! Coefficient rings for operators: exact Gaussian rationals and `Complex64`.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Complex number with exact rational real and imaginary parts.
///
/// Both parts are `BigRational`, which keeps itself in lowest terms, so
/// structural equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(v: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    /// `num/den` on the real axis. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
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
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &d, -(&self.im / &d)))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_integer(1)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip().expect("division by zero")
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::from_integer(v)
    }
}

fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Renders as `a/b+c/d*i`; signs live in the numerators.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ratio(&self.re, f)?;
        f.write_str("+")?;
        fmt_ratio(&self.im, f)?;
        f.write_str("*i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl core::str::FromStr for GaussianRational {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let s = s.trim();
        let (re, im) = s.split_once('+').ok_or(())?;
        let im = im.strip_suffix("*i").ok_or(())?;
        Ok(GaussianRational::new(parse_ratio(re).ok_or(())?, parse_ratio(im).ok_or(())?))
    }
}

/// The operations the operator algebra needs from its coefficient ring.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact (no rounding).
    const EXACT: bool;

    fn imag_unit() -> Self;
    fn from_i64(v: i64) -> Self;
    fn conj(&self) -> Self;
    fn recip(&self) -> Option<Self>;
    /// Modulus as a float, used for pivot selection.
    fn magnitude(&self) -> f64;
    fn to_complex(&self) -> Complex64;
    /// Zero test relative to `scale`; exact rings ignore the scale.
    fn is_negligible(&self, scale: f64) -> bool;
}

impl Coefficient for GaussianRational {
    const EXACT: bool = true;

    fn imag_unit() -> Self {
        GaussianRational::i()
    }
    fn from_i64(v: i64) -> Self {
        GaussianRational::from_integer(v)
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn recip(&self) -> Option<Self> {
        GaussianRational::recip(self)
    }
    fn magnitude(&self) -> f64 {
        let z = self.to_complex64();
        libm::hypot(z.re, z.im)
    }
    fn to_complex(&self) -> Complex64 {
        self.to_complex64()
    }
    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
}

/// Relative tolerance used by `is_negligible` for floating coefficients.
pub const FLOAT_ZERO_TOLERANCE: f64 = 1e-10;

impl Coefficient for Complex64 {
    const EXACT: bool = false;

    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn recip(&self) -> Option<Self> {
        if self.re == 0.0 && self.im == 0.0 {
            None
        } else {
            Some(self.inv())
        }
    }
    fn magnitude(&self) -> f64 {
        libm::hypot(self.re, self.im)
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn is_negligible(&self, scale: f64) -> bool {
        self.magnitude() <= FLOAT_ZERO_TOLERANCE * scale.max(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_and_parse() {
        let z = GaussianRational::from_parts(-1, 2, 3, 4);
        assert_eq!(z.to_string(), "-1/2+3/4*i");
        assert_eq!("-1/2+3/4*i".parse::<GaussianRational>(), Ok(z));
        assert_eq!("1/1+-1/1*i".parse::<GaussianRational>(), Ok(GaussianRational::from_parts(1, 1, -1, 1)));
        assert!("1/0+0/1*i".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn lowest_terms_equality() {
        assert_eq!(GaussianRational::ratio(2, 4), GaussianRational::ratio(1, 2));
        let z = GaussianRational::from_parts(1, 1, 1, 1);
        assert_eq!(z.clone() * z.recip().unwrap(), GaussianRational::one());
        assert_eq!(GaussianRational::i() * GaussianRational::i(), GaussianRational::from_integer(-1));
    }
}
