//! Laurent polynomials in one variable `z` with rational coefficients.
//!
//! This is the carrier for quantum integers `[r]_z`, symmetrized Gauss
//! binomials and the symmetric representatives of Frobenius–Perron
//! dimensions. Exactness matters more than speed here: coefficients are
//! arbitrary-precision rationals and every operation that promises an
//! integer result checks it.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::primes::check_odd_prime;

pub use parse::parse_laurent;

/// A finitely supported sum `Σ b_j z^j`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut f = Self::zero();
        f.add_term(exp, c);
        f
    }

    /// `z^exp` with coefficient 1.
    pub fn z_pow(exp: i64) -> Self {
        Self::monomial(exp, rat(1))
    }

    /// `Σ coeffs[k] z^(offset + k)`.
    pub fn from_ints(offset: i64, coeffs: &[i64]) -> Self {
        let mut f = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            f.add_term(offset + k as i64, rat(c));
        }
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// `b_j = b_{-j}` for every `j`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, c)| self.coeffs.get(&-e) == Some(c))
    }

    /// Integer coefficient of `z^exp`, or an integrality error.
    pub fn int_coeff(&self, exp: i64) -> Result<BigInt> {
        let c = self.coeff(exp);
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(Error::NonIntegral(format!("coefficient {c} at z^{exp}")))
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&e, b)| (e, b * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `z -> z^k`.
    pub fn compose_power(&self, k: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// The substitution `z -> 1/z`.
    pub fn bar(&self) -> Self {
        self.compose_power(-1)
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.values().cloned().sum()
    }

    pub fn eval_at_minus_one(&self) -> BigRational {
        self.coeffs.iter().map(|(&e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c }).sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / divisor`; fails unless the remainder is zero.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(dmin), Some(dmax)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision("division by zero".into()));
        };
        let Some(nmin) = self.min_exp() else {
            return Ok(Self::zero());
        };
        // Normalize both sides to ordinary polynomials with nonzero constant
        // term; the quotient is then an ordinary polynomial as well.
        let lead = divisor.coeffs[&dmax].clone();
        let dtop = dmax - dmin;
        let mut rem = self.shift(-nmin);
        let den = divisor.shift(-dmin);
        let mut quot = Self::zero();
        while let Some(rtop) = rem.max_exp() {
            if rtop < dtop {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves remainder {rem}")));
            }
            let c = rem.coeffs[&rtop].clone() / &lead;
            let e = rtop - dtop;
            rem -= &den.shift(e).scale(&c);
            quot.add_term(e, c);
        }
        Ok(quot.shift(nmin - dmin))
    }
}

/// The quantum integer `[r]_z = (z^r - z^-r)/(z - z^-1)`.
pub fn quantum_int(r: i64) -> LaurentPoly {
    if r < 0 {
        return -quantum_int(-r);
    }
    LaurentPoly::from_terms((0..r).map(|k| (r - 1 - 2 * k, rat(1))))
}

/// Symmetrized Gauss binomial `binom(n, m)_z`, computed as an exact quotient
/// of `Π (z^(n-j+1) - z^-(n-j+1))` by `Π (z^j - z^-j)`, `j = 1..m`.
pub fn gauss_binom(n: i64, m: i64) -> Result<LaurentPoly> {
    if n < 0 || m < 0 || m > n {
        return Err(Error::OutOfRange(format!("Gauss binomial needs 0 <= m <= n, got n = {n}, m = {m}")));
    }
    let diff = |k: i64| &LaurentPoly::z_pow(k) - &LaurentPoly::z_pow(-k);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for j in 1..=m {
        num = &num * &diff(n - j + 1);
        den = &den * &diff(j);
    }
    let g = num.div_exact(&den)?;
    if !g.is_integral() {
        return Err(Error::NonIntegral(format!("Gauss binomial ({n}, {m})")));
    }
    Ok(g)
}

/// `τ(f) = p Σ_j (-1)^j b_{pj} - f(-1)`, which equals twice the field trace
/// `K -> Q` of `f(q)` for symmetric `f`, `q = e^{πi/p}`.
pub fn tau(f: &LaurentPoly, p: u32) -> Result<BigRational> {
    check_odd_prime(p, "tau")?;
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let p = p as i64;
    let mut alt = BigRational::zero();
    for (e, c) in f.terms() {
        if e % p == 0 {
            if (e / p).rem_euclid(2) == 0 {
                alt += c;
            } else {
                alt -= c;
            }
        }
    }
    Ok(alt * rat(p) - f.eval_at_minus_one())
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Human form, highest exponent first: `z^2+1+z^-2`, `3z-1/2z^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, "-")?,
                (_, false) => write!(f, "+")?,
            }
            let a = c.abs();
            let unit = a.is_one();
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !unit {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "{a}*")?;
                }
            }
            match e {
                1 => write!(f, "z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoeff {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct WireLaurent {
    offset: i64,
    coeffs: Vec<WireCoeff>,
}

fn coeff_to_wire(c: &BigRational) -> WireCoeff {
    if c.is_integer() {
        if let Ok(n) = i64::try_from(c.to_integer()) {
            return WireCoeff::Int(n);
        }
    }
    WireCoeff::Text(c.to_string())
}

fn coeff_from_wire(c: WireCoeff) -> std::result::Result<BigRational, String> {
    match c {
        WireCoeff::Int(n) => Ok(rat(n)),
        WireCoeff::Text(s) => s.trim().parse::<BigRational>().map_err(|e| format!("{s:?}: {e}")),
    }
}

/// JSON form `{"offset": j0, "coeffs": [c_j0, c_j0+1, ...]}`. Integer
/// coefficients are numbers; others (or ones beyond `i64`) are strings `"n/d"`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                WireLaurent { offset: lo, coeffs: (lo..=hi).map(|e| coeff_to_wire(&self.coeff(e))).collect() }
            }
            _ => WireLaurent { offset: 0, coeffs: vec![] },
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireLaurent::deserialize(d)?;
        let mut f = LaurentPoly::zero();
        for (k, c) in wire.coeffs.into_iter().enumerate() {
            let c = coeff_from_wire(c).map_err(serde::de::Error::custom)?;
            f.add_term(wire.offset + k as i64, c);
        }
        Ok(f)
    }
}
