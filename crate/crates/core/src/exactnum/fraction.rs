use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Result, SlopeError};

/// An exact rational number in lowest terms.
///
/// The denominator is always positive and `gcd(|num|, den) = 1`; zero is `0/1`.
/// Intermediates are computed in 128 bits and narrowed back with a check, so the
/// operator impls panic on overflow rather than wrap. Use the `checked_*`
/// methods when overflow must be handled.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

fn reduce128(num: i128, den: i128) -> Option<Fraction> {
    if den == 0 {
        return None;
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    Some(Fraction {
        num: i64::try_from(n).ok()?,
        den: i64::try_from(d).ok()?,
    })
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// Builds `num/den` in lowest terms. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(SlopeError::domain("zero denominator"));
        }
        reduce128(num as i128, den as i128).ok_or(SlopeError::Overflow("fraction construction"))
    }

    pub const fn from_int(n: i64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.num, &self.den)
    }

    /// Representative of `self` modulo 1 in `[0, 1)`.
    pub fn fract(&self) -> Fraction {
        Fraction {
            num: Integer::mod_floor(&self.num, &self.den),
            den: self.den,
        }
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        let n = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        reduce128(n, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.checked_add(-rhs)
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        reduce128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    /// `None` on division by zero or overflow.
    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        reduce128(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }

    pub fn mul_int(self, k: i64) -> Self {
        self * Fraction::from_int(k)
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction::ZERO
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_int(n)
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("fraction overflow in add")
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("fraction overflow in sub")
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("fraction overflow in mul")
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Self {
        Fraction {
            num: self.num.checked_neg().expect("fraction overflow in neg"),
            den: self.den,
        }
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = SlopeError;

    /// Accepts `n` or `n/d`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || SlopeError::parse(0, format!("invalid fraction {s:?}"));
        match s.split_once('/') {
            None => s
                .trim()
                .parse::<i64>()
                .map(Fraction::from_int)
                .map_err(|_| bad()),
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().map_err(|_| bad())?;
                let d = d.trim().parse::<i64>().map_err(|_| bad())?;
                Fraction::new(n, d)
            }
        }
    }
}
