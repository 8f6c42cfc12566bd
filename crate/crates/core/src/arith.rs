//! Exact scalar arithmetic: arbitrary-precision integers, rationals,
//! Gaussian rationals, and double factorials.
//!
//! The coefficient field everywhere in this crate is Q(i), represented by
//! [`GaussianRational`]. Plain rationals embed with a zero imaginary
//! part; operations whose result is rational simply never produce a
//! nonzero imaginary part. Values are immutable and all operations are
//! pure, so they are safe to share between threads.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type BigRational = num::rational::BigRational;

/// The double factorial `b!! = b (b-2) (b-4) ...` with `(-1)!! = 0!! = 1`.
///
/// Rejects `b < -1`.
pub fn double_factorial(b: i64) -> Result<BigInt, Error> {
    if b < -1 {
        return Err(Error::DoubleFactorialRange(b));
    }
    let mut acc = BigInt::one();
    let mut k = b;
    while k >= 2 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// Binomial coefficient, 0 whenever `m < 0`, `k < 0` or `m < k`.
///
/// The zero convention matches counting monomials: `binomial(n + d - 1,
/// n - 1)` is the number of degree-`d` monomials in `n` variables also
/// when `d < 0` (namely none).
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || m < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * BigInt::from(m - k + j) / BigInt::from(j);
    }
    acc
}

/// An exact element `re + im*i` of Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    /// The exact fraction `n/d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit, with `i*i = -1` exactly.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the imaginary part is zero.
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, a non-negative rational, zero only at zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
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

impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Panics when dividing by zero; use [`GaussianRational::inv`] to
    /// handle that case.
    #[allow(clippy::suspicious_arithmetic_impl)] // field division is multiplication by the inverse
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Renders one rational in the scalar syntax: `n` or `n/d`.
fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Scalar text syntax: `a/b`, `a/b+c/d*i`, `-`, integer shorthand.
    /// Round-trips exactly through [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&format_rational(&self.re));
        }
        if !self.im.is_zero() {
            let mag = self.im.abs();
            let sign = if self.im.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if self.im.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            if mag.is_one() {
                out.push('i');
            } else {
                out.push_str(&format_rational(&mag));
                out.push_str("*i");
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        crate::text::parse_scalar(s)
    }
}
