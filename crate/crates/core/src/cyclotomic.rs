//! Canonical arithmetic in `Z[q]`, `q` a primitive `2p`-th root of unity.
//!
//! Elements are stored as coordinates in the power basis `1, q, ..., q^(p-2)`
//! modulo `Φ_2p(x) = x^(p-1) - x^(p-2) + ... - x + 1`, so equality of field
//! elements is equality of coordinate vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::primes::{check_odd_prime, check_prime};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    p: u32,
    coords: Vec<BigInt>,
}

/// Folds a vector indexed by exponents mod `2p` into canonical coordinates.
fn reduce(p: u32, mut raw: Vec<BigInt>) -> Vec<BigInt> {
    let p = p as usize;
    debug_assert_eq!(raw.len(), 2 * p);
    // q^p = -1
    for e in p..2 * p {
        let c = std::mem::take(&mut raw[e]);
        raw[e - p] -= c;
    }
    raw.truncate(p);
    // q^(p-1) = -Σ_{k<p-1} (-1)^k q^k
    let top = raw.pop().unwrap_or_default();
    if !top.is_zero() {
        for (k, c) in raw.iter_mut().enumerate() {
            if k % 2 == 0 {
                *c -= &top;
            } else {
                *c += &top;
            }
        }
    }
    raw
}

impl Cyclotomic {
    /// The integer `n`. Also valid for `p = 2`, where `K = Q` and only
    /// rational integers occur.
    pub fn from_int(p: u32, n: impl Into<BigInt>) -> Result<Self> {
        check_prime(p)?;
        let mut coords = vec![BigInt::zero(); (p - 1) as usize];
        coords[0] = n.into();
        Ok(Self { p, coords })
    }

    pub fn zero(p: u32) -> Result<Self> {
        Self::from_int(p, 0)
    }

    pub fn one(p: u32) -> Result<Self> {
        Self::from_int(p, 1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(p: u32, k: i64) -> Result<Self> {
        Self::from_exponents(p, [(k, BigInt::one())])
    }

    /// `Σ c q^e` over the given pairs.
    pub fn from_exponents<I>(p: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        check_odd_prime(p, "cyclotomic reduction")?;
        let n = 2 * p as i64;
        let mut raw = vec![BigInt::zero(); 2 * p as usize];
        for (e, c) in terms {
            raw[e.rem_euclid(n) as usize] += c;
        }
        Ok(Self { p, coords: reduce(p, raw) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Canonical coordinates `c_0..c_(p-2)`.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `Some(n)` when the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Fixed by `q -> q^-1`, i.e. lies in the real subfield `K`.
    pub fn is_real(&self) -> bool {
        self.p == 2 || galois(self, -1).map(|c| &c == self).unwrap_or(false)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.p, other.p, "cyclotomic elements for different primes");
    }
}

/// Maps an integral Laurent polynomial to its value at `z = q`.
pub fn to_cyclotomic(f: &LaurentPoly, p: u32) -> Result<Cyclotomic> {
    check_odd_prime(p, "to_cyclotomic")?;
    let mut terms = Vec::new();
    for (e, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegral(format!("coefficient {c} at z^{e} of {f}")));
        }
        terms.push((e, c.to_integer()));
    }
    Cyclotomic::from_exponents(p, terms)
}

/// The automorphism `q -> q^k`, defined for `gcd(k, 2p) = 1`.
pub fn galois(x: &Cyclotomic, k: i64) -> Result<Cyclotomic> {
    let p = x.p;
    check_odd_prime(p, "galois")?;
    let n = 2 * p as i64;
    if k.gcd(&n) != 1 {
        return Err(Error::NotCoprime { k, modulus: n });
    }
    let terms = x.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as i64 * k, c.clone()));
    Cyclotomic::from_exponents(p, terms)
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same(rhs);
        Cyclotomic { p: self.p, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same(rhs);
        Cyclotomic { p: self.p, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same(rhs);
        if self.p == 2 {
            return Cyclotomic { p: 2, coords: vec![&self.coords[0] * &rhs.coords[0]] };
        }
        let mut raw = vec![BigInt::zero(); 2 * self.p as usize];
        for (i, a) in self.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coords.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Cyclotomic { p: self.p, coords: reduce(self.p, raw) }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { p: self.p, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Power-basis form, e.g. `2 - q + 3q^2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}
