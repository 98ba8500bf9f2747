//! Arbitrary-precision rationals and Gaussian rationals.
//!
//! All coefficients in this crate are Gaussian rationals `a + bi` with
//! exact rational components. Floating point appears nowhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number, reduced with positive denominator.
pub type Rat = BigRational;

/// Build a rational from an integer pair, `p/q`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Build a rational from an integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parse a rational of the form `p` or `p/q` (optional leading `-`).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Render a rational as `p` or `p/q`.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rising factorial `(a)_l = a(a+1)…(a+l−1)` on rationals, `(a)_0 = 1`.
pub fn poch_rat(a: &Rat, l: u32) -> Rat {
    let mut acc = Rat::one();
    for k in 0..l {
        acc *= a + rat_int(k as i64);
    }
    acc
}

/// Exact binomial coefficient `C(n, k)` as a rational.
pub fn binom(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for j in 0..k {
        acc *= rat_int((n - j) as i64) / rat_int((j + 1) as i64);
    }
    acc
}

/// Gaussian rational `re + im·i` with `i² = −1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussianRational { re, im: Rat::zero() }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²` (a nonnegative rational).
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rat_str(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", rat_str(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}i", rat_str(&self.re), rat_str(&self.im))
        } else {
            write!(f, "{}+{}i", rat_str(&self.re), rat_str(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_unit_squares_to_minus_one() {
        let i = GaussianRational::i();
        let m = &i * &i;
        assert_eq!(m, GaussianRational::from_i64(-1));
    }

    #[test]
    fn gaussian_inverse() {
        let z = GaussianRational::new(rat(1, 2), rat(-3, 4));
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn pochhammer_on_rationals() {
        // (a)_0 = 1 by convention
        assert_eq!(poch_rat(&rat(7, 3), 0), rat_int(1));
        // (3)_2 = 3·4 = 12
        assert_eq!(poch_rat(&rat_int(3), 2), rat_int(12));
        // (1/2)_3 = (1/2)(3/2)(5/2) = 15/8
        assert_eq!(poch_rat(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binom(5, 2), rat_int(10));
        assert_eq!(binom(3, 0), rat_int(1));
        assert_eq!(binom(2, 3), rat_int(0));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rat("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rat("-1/3").unwrap(), rat(-1, 3));
        assert_eq!(parse_rat("4").unwrap(), rat_int(4));
        assert!(parse_rat("1/0").is_none());
        assert_eq!(rat_str(&rat(-3, 7)), "-3/7");
        assert_eq!(rat_str(&rat_int(9)), "9");
    }
}
