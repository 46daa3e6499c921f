//! Type-A Verlinde categories `Ver_p(SL_m)` and their image in `Ver_p`.
//!
//! Positive roots of `SL_m` are `e_i - e_j` for `i < j`, so every pairing
//! needed below is a difference of weight coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{quantum_int, LaurentPoly};
use crate::powers::decompose_effective_from_dims;
use crate::ring::VerObj;

/// Dominant weight `λ_1 >= ... >= λ_(m-1) >= 0` of `SL_m` (`λ_m = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWeight")]
pub struct WeightA {
    m: usize,
    parts: Vec<i64>,
}

#[derive(Deserialize)]
struct RawWeight {
    m: usize,
    parts: Vec<i64>,
}

impl TryFrom<RawWeight> for WeightA {
    type Error = Error;
    fn try_from(raw: RawWeight) -> Result<Self> {
        WeightA::new(raw.m, raw.parts)
    }
}

impl WeightA {
    /// Shorter `parts` are padded with zeros up to length `m - 1`.
    pub fn new(m: usize, mut parts: Vec<i64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::OutOfRange(format!("SL_m needs m >= 2, got {m}")));
        }
        while parts.len() > m - 1 && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > m - 1 {
            return Err(Error::OutOfRange(format!("a weight of SL_{m} has at most {} parts, got {parts:?}", m - 1)));
        }
        parts.resize(m - 1, 0);
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange(format!(
                "{parts:?} is not a dominant weight (parts must be weakly decreasing and nonnegative)"
            )));
        }
        Ok(Self { m, parts })
    }

    /// Parses `"3,1,0"`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("weight part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, parts)
    }

    pub fn zero(m: usize) -> Result<Self> {
        Self::new(m, vec![])
    }

    /// `i ω_1`, the highest weight of `S^i V`.
    pub fn sym(m: usize, i: i64) -> Result<Self> {
        Self::new(m, vec![i])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// `λ_k` for `1 <= k <= m`, with `λ_m = 0`.
    fn coord(&self, k: usize) -> i64 {
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    fn positive_roots(&self) -> impl Iterator<Item = (usize, usize)> {
        let m = self.m;
        (1..=m).flat_map(move |i| (i + 1..=m).map(move |j| (i, j)))
    }

    /// `(λ + ρ, θ) < p`, which in type A reads `λ_1 + m - 1 < p`.
    pub fn alcove_check(&self, p: u32) -> bool {
        self.coord(1) + (self.m as i64 - 1) < p as i64
    }

    /// `Π_{α>0} [(λ+ρ, α)]_z / [(ρ, α)]_z`.
    pub fn qweyl_dim(&self) -> Result<LaurentPoly> {
        let mut num = LaurentPoly::one();
        let mut den = LaurentPoly::one();
        for (i, j) in self.positive_roots() {
            let gap = (j - i) as i64;
            num = &num * &quantum_int(self.coord(i) - self.coord(j) + gap);
            den = &den * &quantum_int(gap);
        }
        let q = num.div_exact(&den)?;
        if !q.is_integral() {
            return Err(Error::NonIntegral(format!("q-dimension of {self} is {q}")));
        }
        Ok(q)
    }

    /// `(-1)^{Σ_{α>0} ⟨λ, α^∨⟩}`.
    pub fn super_sign(&self) -> i64 {
        let total: i64 = self.positive_roots().map(|(i, j)| self.coord(i) - self.coord(j)).sum();
        if total.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Image of `V_λ` under the Verlinde fiber functor to `Ver_p`.
    pub fn decompose(&self, p: u32) -> Result<VerObj> {
        if !self.alcove_check(p) {
            return Err(Error::OutOfRange(format!("{self} is outside the alcove for p = {p} (need λ_1 + m - 1 < p)")));
        }
        let fp = self.qweyl_dim()?;
        let sfp = fp.scale_int(self.super_sign());
        decompose_effective_from_dims(&fp, &sfp, p)
    }
}

impl fmt::Display for WeightA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(i64::to_string).collect();
        write!(f, "SL_{}({})", self.m, parts.join(","))
    }
}
