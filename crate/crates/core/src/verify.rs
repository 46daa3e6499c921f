//! The verification sweep: every closed formula checked against the
//! Jordan-block oracle or an independent identity, one cell at a time.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::galois;
use crate::error::Result;
use crate::laurent::{tau, LaurentPoly};
use crate::oracle::{
    ext_dimension, jordan_ext, jordan_ext_via_tensor, jordan_sym, jordan_sym_via_tensor, jordan_tensor,
    negligible_quotient, sym_dimension,
};
use crate::powers::{
    decompose_from_dims, ext_power_simple, invariant_dim, length_identity_check, padic_dims, sfpdim_via_adams,
    sym_power_simple,
};
use crate::primes::check_odd_prime;
use crate::ring::VerObj;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub primes: Vec<u32>,
    /// Largest module dimension handed to the Jordan oracle.
    pub max_dim: usize,
    /// Also run the slow tensor-power (anti)symmetrizer oracle.
    pub tensor_oracle: bool,
    /// Random objects per prime for the round-trip and length checks.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { primes: vec![3, 5, 7, 11], max_dim: 3000, tensor_oracle: false, samples: 200, seed: 0x5eed }
    }
}

/// Outcome of one cell of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellResult {
    pub check: &'static str,
    pub p: u32,
    pub cell: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub cells: Vec<CellResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| !c.pass)
    }

    /// Per-check `(name, passed, total)` in first-seen order.
    pub fn summary(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out: Vec<(&'static str, usize, usize)> = Vec::new();
        for c in &self.cells {
            let slot = match out.iter().position(|(n, _, _)| *n == c.check) {
                Some(k) => k,
                None => {
                    out.push((c.check, 0, 0));
                    out.len() - 1
                }
            };
            out[slot].2 += 1;
            if c.pass {
                out[slot].1 += 1;
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let summary: Vec<serde_json::Value> = self
            .summary()
            .into_iter()
            .map(|(n, ok, total)| serde_json::json!({"check": n, "passed": ok, "total": total}))
            .collect();
        serde_json::json!({
            "pass": self.passed(),
            "summary": summary,
            "cells": serde_json::to_value(&self.cells).expect("cells serialize"),
        })
    }
}

#[derive(Clone, Copy, Debug)]
enum Cell {
    Fusion { p: u32, r: usize, s: usize },
    Sym { p: u32, i: usize, m: usize },
    SymVanishing { p: u32, i: usize, m: usize },
    Ext { p: u32, i: usize, r: usize },
    ExtVanishing { p: u32, i: usize, r: usize },
    SymTensor { p: u32, i: usize, m: usize },
    ExtTensor { p: u32, i: usize, r: usize },
    Characters { p: u32 },
    Adams { p: u32 },
    Trace { p: u32 },
    Invariants { p: u32, i: usize, m: usize },
    GeneratingFunction { p: u32, m: usize },
    RoundTrip { p: u32, seed: u64, count: usize },
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Cell::Fusion { r, s, .. } => write!(f, "L{r}*L{s}"),
            Cell::Sym { i, m, .. } | Cell::SymVanishing { i, m, .. } | Cell::SymTensor { i, m, .. } => {
                write!(f, "S^{i} L{m}")
            }
            Cell::Ext { i, r, .. } | Cell::ExtVanishing { i, r, .. } | Cell::ExtTensor { i, r, .. } => {
                write!(f, "Λ^{i} L{r}")
            }
            Cell::Characters { .. } | Cell::Adams { .. } => write!(f, "all simples"),
            Cell::Trace { p } => write!(f, "r <= {}", 4 * p),
            Cell::Invariants { i, m, .. } => write!(f, "(S^{i} L{m})^inv"),
            Cell::GeneratingFunction { m, .. } => write!(f, "L{m}"),
            Cell::RoundTrip { count, .. } => write!(f, "{count} random objects"),
        }
    }
}

impl Cell {
    fn p(&self) -> u32 {
        match *self {
            Cell::Fusion { p, .. }
            | Cell::Sym { p, .. }
            | Cell::SymVanishing { p, .. }
            | Cell::Ext { p, .. }
            | Cell::ExtVanishing { p, .. }
            | Cell::SymTensor { p, .. }
            | Cell::ExtTensor { p, .. }
            | Cell::Characters { p }
            | Cell::Adams { p }
            | Cell::Trace { p }
            | Cell::Invariants { p, .. }
            | Cell::GeneratingFunction { p, .. }
            | Cell::RoundTrip { p, .. } => p,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Cell::Fusion { .. } => "fusion-oracle",
            Cell::Sym { .. } => "sym-oracle",
            Cell::SymVanishing { .. } => "sym-vanishing",
            Cell::Ext { .. } => "ext-oracle",
            Cell::ExtVanishing { .. } => "ext-vanishing",
            Cell::SymTensor { .. } => "sym-tensor-oracle",
            Cell::ExtTensor { .. } => "ext-tensor-oracle",
            Cell::Characters { .. } => "characters",
            Cell::Adams { .. } => "adams-galois",
            Cell::Trace { .. } => "trace-identity",
            Cell::Invariants { .. } => "invariants",
            Cell::GeneratingFunction { .. } => "generating-function",
            Cell::RoundTrip { .. } => "round-trip",
        }
    }

    /// `Ok(None)` on success, `Ok(Some(why))` on a mismatch.
    fn run(&self) -> Result<Option<String>> {
        let mismatch = |want: &dyn fmt::Display, got: &dyn fmt::Display| Some(format!("expected {want}, got {got}"));
        Ok(match *self {
            Cell::Fusion { p, r, s } => {
                let oracle = negligible_quotient(&jordan_tensor(r, s, p)?)?;
                let fused = VerObj::simple(p, r)?.fuse(&VerObj::simple(p, s)?)?;
                (oracle != fused).then(|| mismatch(&oracle, &fused)).flatten()
            }
            Cell::Sym { p, i, m } => {
                let oracle = negligible_quotient(&jordan_sym(i, m, p)?)?;
                let formula = sym_power_simple(i, m, p)?;
                (oracle != formula).then(|| mismatch(&oracle, &formula)).flatten()
            }
            Cell::SymVanishing { p, i, m } => {
                let formula = sym_power_simple(i, m, p)?;
                (!formula.is_zero()).then(|| mismatch(&"0", &formula)).flatten()
            }
            Cell::Ext { p, i, r } => {
                let oracle = negligible_quotient(&jordan_ext(i, r, p)?)?;
                let formula = ext_power_simple(i, r, p)?;
                (oracle != formula).then(|| mismatch(&oracle, &formula)).flatten()
            }
            Cell::ExtVanishing { p, i, r } => {
                let formula = ext_power_simple(i, r, p)?;
                (!formula.is_zero()).then(|| mismatch(&"0", &formula)).flatten()
            }
            Cell::SymTensor { p, i, m } => {
                let slow = jordan_sym_via_tensor(i, m, p)?;
                let fast = jordan_sym(i, m, p)?;
                (slow != fast).then(|| mismatch(&slow, &fast)).flatten()
            }
            Cell::ExtTensor { p, i, r } => {
                let slow = jordan_ext_via_tensor(i, r, p)?;
                let fast = jordan_ext(i, r, p)?;
                (slow != fast).then(|| mismatch(&slow, &fast)).flatten()
            }
            Cell::Characters { p } => check_characters(p)?,
            Cell::Adams { p } => {
                let mut bad = None;
                for r in 1..p as usize {
                    let x = VerObj::simple(p, r)?;
                    if sfpdim_via_adams(&x)? != x.sfpdim()? {
                        bad = Some(format!("L{r}"));
                        break;
                    }
                }
                bad.map(|b| format!("SFPdim via Adams differs on {b}"))
            }
            Cell::Trace { p } => {
                let pi = p as i64;
                (1..=4 * pi).filter(|r| r % pi != 0).find_map(|r| {
                    let f = &LaurentPoly::z_pow(r) + &LaurentPoly::z_pow(-r);
                    let want = if r % 2 == 1 { 2 } else { -2 };
                    let got = tau(&f, p).ok()?;
                    (got != num_rational::BigRational::from_integer(want.into()))
                        .then(|| format!("τ(z^{r}+z^-{r}) = {got}, expected {want}"))
                })
            }
            Cell::Invariants { p, i, m } => {
                let inv = invariant_dim(i, m, p)?;
                let a1 = sym_power_simple(i, m, p)?.mult(1);
                (inv != a1).then(|| mismatch(&a1, &inv)).flatten()
            }
            Cell::GeneratingFunction { p, m } => check_generating_function(p, m)?,
            Cell::RoundTrip { p, seed, count } => {
                let mut rng = StdRng::seed_from_u64(seed);
                let mut bad = None;
                for _ in 0..count {
                    let x = random_object(&mut rng, p)?;
                    let back = decompose_from_dims(&x.fpdim_rep(), &x.sfpdim_rep(), p)?;
                    if back != x {
                        bad = mismatch(&x, &back);
                        break;
                    }
                    if !length_identity_check(&x)? {
                        bad = Some(format!("length identity fails on {x}"));
                        break;
                    }
                }
                bad
            }
        })
    }
}

/// Random actual object with multiplicities in `0..=4`.
pub fn random_object<R: Rng>(rng: &mut R, p: u32) -> Result<VerObj> {
    VerObj::new(p, (1..p).map(|_| rng.gen_range(0..=4)).collect())
}

fn check_characters(p: u32) -> Result<Option<String>> {
    let pu = p as usize;
    let simples: Vec<VerObj> = (1..pu).map(|r| VerObj::simple(p, r)).collect::<Result<_>>()?;
    for j in 1..pu {
        for x in &simples {
            for y in &simples {
                let lhs = x.fuse(y)?.char_chi(j)?;
                let rhs = &x.char_chi(j)? * &y.char_chi(j)?;
                if lhs != rhs {
                    return Ok(Some(format!("χ_{j} not multiplicative on {x} ⊗ {y}")));
                }
            }
        }
    }
    for x in &simples {
        let (chi1, chi_top) = (x.char_chi(1)?, x.char_chi(pu - 1)?);
        for s in 0..=(pu - 3) / 2 {
            let k = 2 * s + 1;
            if x.char_chi(k)? != galois(&chi1, k as i64)? {
                return Ok(Some(format!("χ_{k} != g_{s} ∘ χ_1 on {x}")));
            }
            if x.char_chi(pu - k)? != galois(&chi_top, k as i64)? {
                return Ok(Some(format!("χ_{} != g_{s} ∘ χ_{} on {x}", pu - k, pu - 1)));
            }
        }
    }
    Ok(None)
}

/// Coefficients of `(1 + s z)^e` truncated to degree `< len`, over `F_p`,
/// for any integer `e` (negative exponents use the binomial series).
pub fn binomial_series_mod_p(e: i64, s: i64, len: usize, p: u32) -> Vec<u32> {
    let pi = p as i64;
    let mut out = Vec::with_capacity(len);
    // generalized binomial coefficient C(e, k) as an exact rational is an
    // integer; track it with big integers and reduce at the end
    let mut c = num_bigint::BigInt::from(1);
    let mut sk = num_bigint::BigInt::from(1);
    for k in 0..len as i64 {
        let v = (&c * &sk) % pi;
        let v: i64 = v.try_into().expect("reduced mod p");
        out.push(v.rem_euclid(pi) as u32);
        c = c * (e - k) / (k + 1);
        sk *= s;
    }
    out
}

fn check_generating_function(p: u32, m: usize) -> Result<Option<String>> {
    let pu = p as usize;
    let x = VerObj::simple(p, m)?;
    let (dim_plus, dim_minus) = padic_dims(&x)?;
    // Σ_i dim S^i L_m z^i = (1 - z)^{-Dim_+}
    let len = 2 * pu;
    let want = binomial_series_mod_p(-dim_plus, -1, len, p);
    for (i, &w) in want.iter().enumerate() {
        let got = sym_power_simple(i, m, p)?.dim_modp()?;
        if got != w {
            return Ok(Some(format!("dim S^{i} L{m} = {got}, series gives {w}")));
        }
    }
    // Σ_i dim ∧^i L_m z^i = (1 + z)^{Dim_-}
    let want = binomial_series_mod_p(dim_minus, 1, len, p);
    for (i, &w) in want.iter().enumerate() {
        let got = ext_power_simple(i, m, p)?.dim_modp()?;
        if got != w {
            return Ok(Some(format!("dim Λ^{i} L{m} = {got}, series gives {w}")));
        }
    }
    Ok(None)
}

fn cells(opts: &VerifyOptions) -> Vec<Cell> {
    let mut out = Vec::new();
    for &p in &opts.primes {
        let pu = p as usize;
        for r in 1..pu {
            for s in 1..pu {
                out.push(Cell::Fusion { p, r, s });
            }
        }
        for m in 2..pu {
            for i in 0..=pu {
                if i < pu && sym_dimension(i, m) <= opts.max_dim {
                    out.push(Cell::Sym { p, i, m });
                }
                if i > pu - m {
                    out.push(Cell::SymVanishing { p, i, m });
                }
                if opts.tensor_oracle && i < pu && m.checked_pow(i as u32).is_some_and(|d| d <= opts.max_dim) {
                    out.push(Cell::SymTensor { p, i, m });
                }
            }
            for i in 0..=pu - m {
                out.push(Cell::Invariants { p, i, m });
            }
        }
        for r in 1..pu {
            for i in 0..=r.min(pu - 1) {
                if ext_dimension(i, r) <= opts.max_dim {
                    out.push(Cell::Ext { p, i, r });
                }
                if opts.tensor_oracle && r.checked_pow(i as u32).is_some_and(|d| d <= opts.max_dim) {
                    out.push(Cell::ExtTensor { p, i, r });
                }
            }
            if r < pu - 1 {
                for i in r + 1..=pu {
                    out.push(Cell::ExtVanishing { p, i, r });
                }
            }
            out.push(Cell::GeneratingFunction { p, m: r });
        }
        out.push(Cell::Characters { p });
        out.push(Cell::Adams { p });
        out.push(Cell::Trace { p });
        if opts.samples > 0 {
            out.push(Cell::RoundTrip { p, seed: opts.seed ^ p as u64, count: opts.samples });
        }
    }
    out
}

/// Runs every cell (in parallel on the current rayon pool).
pub fn run(opts: &VerifyOptions) -> Result<VerifyReport> {
    for &p in &opts.primes {
        check_odd_prime(p, "verify")?;
    }
    let cells = cells(opts)
        .into_par_iter()
        .map(|cell| {
            let outcome = cell.run();
            let (pass, detail) = match outcome {
                Ok(None) => (true, None),
                Ok(Some(why)) => (false, Some(why)),
                Err(e) => (false, Some(format!("error: {e}"))),
            };
            CellResult { check: cell.name(), p: cell.p(), cell: cell.to_string(), pass, detail }
        })
        .collect();
    Ok(VerifyReport { cells })
}
