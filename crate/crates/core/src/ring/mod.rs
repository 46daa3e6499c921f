//! The Grothendieck ring `Gr(Ver_p)`.
//!
//! Objects are integer multiplicity vectors over the simples `L_1..L_(p-1)`
//! (1-indexed, `L_1` the unit). Negative entries are allowed; they stand
//! for virtual classes, and operations that need an actual object say so.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{to_cyclotomic, Cyclotomic};
use crate::error::{Error, Result};
use crate::laurent::{quantum_int, LaurentPoly};
use crate::primes::{check_odd_prime, check_prime};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVerObj")]
pub struct VerObj {
    p: u32,
    mults: Vec<i64>,
}

#[derive(Deserialize)]
struct RawVerObj {
    p: u32,
    mults: Vec<i64>,
}

impl TryFrom<RawVerObj> for VerObj {
    type Error = Error;
    fn try_from(raw: RawVerObj) -> Result<Self> {
        VerObj::new(raw.p, raw.mults)
    }
}

/// Splitting along the grading `Ver_p = Ver_p^+ ⊕ Ver_p^-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParitySplit {
    /// Summands `L_r` with `r` odd.
    pub plus: VerObj,
    /// Summands `L_r` with `r` even.
    pub minus: VerObj,
}

impl VerObj {
    pub fn new(p: u32, mults: Vec<i64>) -> Result<Self> {
        check_prime(p)?;
        if mults.len() != (p - 1) as usize {
            return Err(Error::OutOfRange(format!(
                "Ver_{p} has {} simples, got {} multiplicities",
                p - 1,
                mults.len()
            )));
        }
        Ok(Self { p, mults })
    }

    pub fn zero(p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(Self { p, mults: vec![0; (p - 1) as usize] })
    }

    pub fn unit(p: u32) -> Result<Self> {
        Self::simple(p, 1)
    }

    /// The simple object `L_r`, `1 <= r <= p - 1`.
    pub fn simple(p: u32, r: usize) -> Result<Self> {
        let mut x = Self::zero(p)?;
        if r == 0 || r >= p as usize {
            return Err(Error::OutOfRange(format!("L_{r} is not a simple of Ver_{p}")));
        }
        x.mults[r - 1] = 1;
        Ok(x)
    }

    /// Parses the compact form `"a1,a2,..."`.
    pub fn parse(p: u32, s: &str) -> Result<Self> {
        let mults = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("multiplicity {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, mults)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    /// Multiplicity of `L_r` (1-indexed).
    pub fn mult(&self, r: usize) -> i64 {
        self.mults[r - 1]
    }

    /// Nonzero `(r, a_r)` pairs in index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.mults.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, &a)| (i + 1, a))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(|&a| a == 0)
    }

    /// All multiplicities nonnegative.
    pub fn is_effective(&self) -> bool {
        self.mults.iter().all(|&a| a >= 0)
    }

    pub fn require_effective(&self) -> Result<()> {
        if self.is_effective() {
            Ok(())
        } else {
            Err(Error::NotEffective)
        }
    }

    /// Total number of simple summands `Σ a_r`.
    pub fn length(&self) -> i64 {
        self.mults.iter().sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { p: self.p, mults: self.mults.iter().map(|a| a * c).collect() }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::PrimeMismatch(self.p, other.p))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mults = self.mults.iter().zip(&other.mults).map(|(a, b)| a + b).collect();
        Ok(Self { p: self.p, mults })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(-1))
    }

    /// The fusion product, extended bilinearly:
    /// `L_r ⊗ L_s = Σ_{i=1}^{min(r,s,p-r,p-s)} L_{|r-s|+2i-1}`.
    pub fn fuse(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let p = self.p as usize;
        let mut out = vec![0i64; p - 1];
        for (r, a) in self.support() {
            for (s, b) in other.support() {
                let n = r.min(s).min(p - r).min(p - s);
                let base = r.abs_diff(s);
                for i in 1..=n {
                    out[base + 2 * i - 2] += a * b;
                }
            }
        }
        Ok(Self { p: self.p, mults: out })
    }

    /// `self^{⊗n}`.
    pub fn fuse_pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(self.p)?;
        for _ in 0..n {
            acc = acc.fuse(self)?;
        }
        Ok(acc)
    }

    /// The character `χ_j(L_r) = [r]_{q^j}`, `1 <= j <= p - 1`.
    pub fn char_chi(&self, j: usize) -> Result<Cyclotomic> {
        let p = self.p;
        if j == 0 || j >= p as usize {
            return Err(Error::OutOfRange(format!("character index {j} outside 1..{}", p - 1)));
        }
        if p == 2 {
            return Cyclotomic::from_int(2, self.mults[0]);
        }
        let mut rep = LaurentPoly::zero();
        for (r, a) in self.support() {
            rep += &quantum_int(r as i64).compose_power(j as i64).scale_int(a);
        }
        to_cyclotomic(&rep, p)
    }

    /// Frobenius–Perron dimension, `χ_1`.
    pub fn fpdim(&self) -> Result<Cyclotomic> {
        self.char_chi(1)
    }

    /// `Σ a_r [r]_z`, the symmetric representative of `fpdim`.
    pub fn fpdim_rep(&self) -> LaurentPoly {
        self.signed_rep(false)
    }

    /// Super Frobenius–Perron dimension `d_+ - d_-`, which is `χ_(p-1)`.
    /// In characteristic 2 it coincides with `fpdim`.
    pub fn sfpdim(&self) -> Result<Cyclotomic> {
        if self.p == 2 {
            return self.fpdim();
        }
        self.char_chi(self.p as usize - 1)
    }

    /// `Σ (-1)^(r-1) a_r [r]_z`.
    pub fn sfpdim_rep(&self) -> LaurentPoly {
        self.signed_rep(self.p != 2)
    }

    fn signed_rep(&self, graded: bool) -> LaurentPoly {
        let mut rep = LaurentPoly::zero();
        for (r, a) in self.support() {
            let sign = if graded && r % 2 == 0 { -a } else { a };
            rep += &quantum_int(r as i64).scale_int(sign);
        }
        rep
    }

    pub fn parity_split(&self) -> Result<ParitySplit> {
        check_odd_prime(self.p, "parity_split")?;
        let pick = |odd: bool| Self {
            p: self.p,
            mults: self.mults.iter().enumerate().map(|(i, &a)| if ((i + 1) % 2 == 1) == odd { a } else { 0 }).collect(),
        };
        Ok(ParitySplit { plus: pick(true), minus: pick(false) })
    }

    /// Categorical dimension in `F_p`: `Σ a_r r mod p`.
    pub fn dim_modp(&self) -> Result<u32> {
        check_odd_prime(self.p, "dim_modp")?;
        let p = self.p as i64;
        let d = self.support().fold(0i64, |acc, (r, a)| (acc + a.rem_euclid(p) * r as i64) % p);
        Ok(d as u32)
    }

    /// `Σ a_r dim(L_r)` evaluated at `z = 1`; the ordinary dimension of the
    /// preimage object when every summand is lifted to a Jordan block.
    pub fn block_dimension(&self) -> BigInt {
        self.support().map(|(r, a)| BigInt::from(a) * r).sum()
    }
}

impl Add for &VerObj {
    type Output = VerObj;
    /// Panics on mismatched `p`; use [`VerObj::try_add`] to get an error.
    fn add(self, rhs: &VerObj) -> VerObj {
        self.try_add(rhs).expect("adding objects of different Ver_p")
    }
}

impl Sub for &VerObj {
    type Output = VerObj;
    fn sub(self, rhs: &VerObj) -> VerObj {
        self.try_sub(rhs).expect("subtracting objects of different Ver_p")
    }
}

impl Neg for &VerObj {
    type Output = VerObj;
    fn neg(self) -> VerObj {
        self.scale(-1)
    }
}

/// `L1+3L3`, `L3-L1`, `0`.
impl fmt::Display for VerObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (r, a)) in self.support().enumerate() {
            if a < 0 {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            match a.abs() {
                1 => write!(f, "L{r}")?,
                n => write!(f, "{n}L{r}")?,
            }
        }
        Ok(())
    }
}
