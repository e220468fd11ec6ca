use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of `Q/Z`: the reduced fraction `num/den` with `0 <= num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QZValue {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl QZValue {
    pub const ZERO: QZValue = QZValue { num: 0, den: 1 };
    pub const HALF: QZValue = QZValue { num: 1, den: 2 };

    /// `a/b mod 1`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b <= 0 {
            return Err(Error::invalid(format!("denominator must be positive, got {b}")));
        }
        let b = b as u64;
        let a = a.rem_euclid(b as i64) as u64;
        Ok(Self::reduced(a, b))
    }

    fn reduced(a: u64, b: u64) -> Self {
        if a == 0 {
            return QZValue::ZERO;
        }
        let g = gcd(a, b);
        QZValue { num: a / g, den: b / g }
    }

    /// `k/4`.
    pub fn quarter(k: i64) -> Self {
        QZValue::new(k, 4).expect("positive denominator")
    }

    /// Image of `Z/2` in `Q/Z`: `0 -> 0`, `1 -> 1/2`.
    pub fn from_z2(bit: u8) -> Self {
        if bit & 1 == 1 {
            QZValue::HALF
        } else {
            QZValue::ZERO
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Additive order in `Q/Z`.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn add(self, other: QZValue) -> QZValue {
        let g = gcd(self.den, other.den);
        let den = self.den / g * other.den;
        let a = (self.num as u128 * (den / self.den) as u128 + other.num as u128 * (den / other.den) as u128)
            % den as u128;
        Self::reduced(a as u64, den)
    }

    pub fn neg(self) -> QZValue {
        if self.num == 0 {
            self
        } else {
            QZValue { num: self.den - self.num, den: self.den }
        }
    }

    pub fn sub(self, other: QZValue) -> QZValue {
        self.add(other.neg())
    }

    pub fn times(self, k: i64) -> QZValue {
        let den = self.den as i128;
        let a = (self.num as i128 * k as i128).rem_euclid(den);
        Self::reduced(a as u64, self.den)
    }

    /// `exp(2 pi i v)` as `(re, im)`.
    pub fn unit_circle(self) -> (f64, f64) {
        let angle = std::f64::consts::TAU * self.num as f64 / self.den as f64;
        (angle.cos(), angle.sin())
    }
}

impl Default for QZValue {
    fn default() -> Self {
        QZValue::ZERO
    }
}

impl Ord for QZValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128)
            .cmp(&(other.num as u128 * self.den as u128))
            .then(self.den.cmp(&other.den))
    }
}

impl PartialOrd for QZValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QZValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for QZValue {
    type Err = Error;

    /// `a/b` or an integer (which is 0 in `Q/Z`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parse_int = |txt: &str, pos: usize| -> Result<i64> {
            txt.trim().parse::<i64>().map_err(|_| Error::parse(pos, format!("bad integer '{txt}' in '{t}'")))
        };
        match t.split_once('/') {
            Some((a, b)) => {
                let a = parse_int(a, 0)?;
                let b = parse_int(b, t.find('/').unwrap_or(0) + 1)?;
                QZValue::new(a, b)
            }
            None => QZValue::new(parse_int(t, 0)?, 1),
        }
    }
}
