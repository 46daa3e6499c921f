//! Symmetric and exterior powers in `Gr(Ver_p)` and the invariants that can
//! be read off from them.
//!
//! The workhorse is [`decompose_from_dims`]: given symmetric Laurent
//! representatives of `FPdim(X)` and `SFPdim(X)`, it recovers every
//! multiplicity `a_r` of `X` through the combinatorial trace functional
//! [`tau`], so no Galois conjugates are ever summed here.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cyclotomic::{galois, Cyclotomic};
use crate::error::{Error, Result};
use crate::laurent::{gauss_binom, tau, LaurentPoly};
use crate::primes::check_odd_prime;
use crate::ring::VerObj;

/// `z - z^-1`.
fn z_minus_zinv() -> LaurentPoly {
    &LaurentPoly::z_pow(1) - &LaurentPoly::z_pow(-1)
}

/// `(z^-r - z^r)(z - z^-1)`, the symmetric weight that isolates `a_r`.
fn weight(r: i64) -> LaurentPoly {
    let w = &LaurentPoly::z_pow(-r) - &LaurentPoly::z_pow(r);
    &w * &z_minus_zinv()
}

fn to_i64(n: &BigInt, what: &str) -> Result<i64> {
    i64::try_from(n.clone()).map_err(|_| Error::OutOfRange(format!("{what} = {n} exceeds 64 bits")))
}

/// Recovers the multiplicity vector of an object of `Ver_p` from symmetric
/// representatives of its Frobenius–Perron and super Frobenius–Perron
/// dimensions:
///
/// `a_r = τ((z^-r - z^r)(z - z^-1)(P_fp - (-1)^r P_sfp)) / 4p`.
///
/// The result may be virtual. Fails if either input is not symmetric or if
/// some `a_r` is not an integer, which means the two representatives do not
/// come from the same class.
pub fn decompose_from_dims(fp: &LaurentPoly, sfp: &LaurentPoly, p: u32) -> Result<VerObj> {
    check_odd_prime(p, "decompose_from_dims")?;
    if !fp.is_symmetric() || !sfp.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let denom = BigRational::from_integer(BigInt::from(4 * p as i64));
    let mut mults = Vec::with_capacity(p as usize - 1);
    for r in 1..p as i64 {
        let graded = if r % 2 == 0 { fp - sfp } else { fp + sfp };
        let a = tau(&(&weight(r) * &graded), p)? / &denom;
        if !a.is_integer() {
            return Err(Error::NonIntegral(format!(
                "multiplicity of L_{r} came out as {a}; FPdim {fp} and SFPdim {sfp} are inconsistent"
            )));
        }
        mults.push(to_i64(&a.to_integer(), "multiplicity")?);
    }
    VerObj::new(p, mults)
}

/// [`decompose_from_dims`] for inputs known to come from an actual object;
/// a negative multiplicity is reported as an integrality failure.
pub fn decompose_effective_from_dims(fp: &LaurentPoly, sfp: &LaurentPoly, p: u32) -> Result<VerObj> {
    let x = decompose_from_dims(fp, sfp, p)?;
    if !x.is_effective() {
        return Err(Error::NonIntegral(format!("expected an actual object, decomposition gave the virtual class {x}")));
    }
    Ok(x)
}

fn check_simple_index(what: &str, m: usize, p: u32) -> Result<()> {
    if m == 0 || m >= p as usize {
        return Err(Error::OutOfRange(format!("{what} = {m} outside 1..{}", p - 1)));
    }
    Ok(())
}

fn sign(even: bool) -> i64 {
    if even {
        1
    } else {
        -1
    }
}

/// `S^i L_m`.
///
/// `S^i L_1 = L_1`; for `m >= 2` the power vanishes once `i > p - m`, and
/// otherwise it is decomposed from `FPdim = binom(i+m-1, m-1)_q` and
/// `SFPdim = (-1)^(i(m-1)) FPdim`.
pub fn sym_power_simple(i: usize, m: usize, p: u32) -> Result<VerObj> {
    check_odd_prime(p, "sym_power_simple")?;
    check_simple_index("m", m, p)?;
    if m == 1 || i == 0 {
        return VerObj::unit(p);
    }
    if i + m > p as usize {
        return VerObj::zero(p);
    }
    let g = gauss_binom((i + m - 1) as i64, (m - 1) as i64)?;
    let sfp = g.scale_int(sign((i * (m - 1)).is_multiple_of(2)));
    decompose_effective_from_dims(&g, &sfp, p)
}

/// `∧^i L_r = L_(p-1)^{⊗i} ⊗ S^i L_(p-r)`.
pub fn ext_power_simple(i: usize, r: usize, p: u32) -> Result<VerObj> {
    check_odd_prime(p, "ext_power_simple")?;
    check_simple_index("r", r, p)?;
    let top = p as usize - 1;
    let odd_line = if i % 2 == 1 { VerObj::simple(p, top)? } else { VerObj::unit(p)? };
    if r == top {
        return Ok(odd_line);
    }
    odd_line.fuse(&sym_power_simple(i, p as usize - r, p)?)
}

/// Power operation of one simple, used by the direct-sum expansion.
type SimplePower = fn(usize, usize, u32) -> Result<VerObj>;

/// Expands `P^n(X ⊕ Y) = ⊕_i P^i X ⊗ P^(n-i) Y` for `P = S` or `∧`,
/// memoized on `(degree, simple, copies)` within one evaluation.
struct PowerExpansion {
    p: u32,
    simple: SimplePower,
    memo: HashMap<(usize, usize, i64), VerObj>,
}

impl PowerExpansion {
    fn new(p: u32, simple: SimplePower) -> Self {
        Self { p, simple, memo: HashMap::new() }
    }

    /// `P^n(copies · L_r)`.
    fn isotypic(&mut self, n: usize, r: usize, copies: i64) -> Result<VerObj> {
        if n == 0 {
            return VerObj::unit(self.p);
        }
        if copies == 0 {
            return VerObj::zero(self.p);
        }
        if copies == 1 {
            return (self.simple)(n, r, self.p);
        }
        if let Some(hit) = self.memo.get(&(n, r, copies)) {
            return Ok(hit.clone());
        }
        let mut acc = VerObj::zero(self.p)?;
        for i in 0..=n {
            let one = (self.simple)(i, r, self.p)?;
            if one.is_zero() {
                continue;
            }
            let rest = self.isotypic(n - i, r, copies - 1)?;
            acc = acc.try_add(&one.fuse(&rest)?)?;
        }
        self.memo.insert((n, r, copies), acc.clone());
        Ok(acc)
    }

    fn power(&mut self, n: usize, x: &VerObj) -> Result<VerObj> {
        x.require_effective()?;
        // graded pieces P^k of the part processed so far, k = 0..=n
        let mut acc: Vec<VerObj> =
            (0..=n).map(|k| if k == 0 { VerObj::unit(self.p) } else { VerObj::zero(self.p) }).collect::<Result<_>>()?;
        for (r, a) in x.support() {
            let pieces: Vec<VerObj> = (0..=n).map(|k| self.isotypic(k, r, a)).collect::<Result<_>>()?;
            let mut next = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut sum = VerObj::zero(self.p)?;
                for j in 0..=k {
                    if acc[j].is_zero() || pieces[k - j].is_zero() {
                        continue;
                    }
                    sum = sum.try_add(&acc[j].fuse(&pieces[k - j])?)?;
                }
                next.push(sum);
            }
            acc = next;
        }
        Ok(acc.swap_remove(n))
    }
}

/// `S^n X` for an actual object `X`.
pub fn sym_power(n: usize, x: &VerObj) -> Result<VerObj> {
    check_odd_prime(x.p(), "sym_power")?;
    PowerExpansion::new(x.p(), sym_power_simple).power(n, x)
}

/// `∧^n X` for an actual object `X`.
pub fn ext_power(n: usize, x: &VerObj) -> Result<VerObj> {
    check_odd_prime(x.p(), "ext_power")?;
    PowerExpansion::new(x.p(), ext_power_simple).power(n, x)
}

/// The second Adams operation `Ψ²(X) = S²X - ∧²X`, a virtual class.
pub fn adams2(x: &VerObj) -> Result<VerObj> {
    check_odd_prime(x.p(), "adams2")?;
    sym_power(2, x)?.try_sub(&ext_power(2, x)?)
}

/// `SFPdim(X) = g(FPdim(Ψ² X))` with `g: q^2 -> -q`, i.e. the Galois
/// automorphism `q -> q^k` where `2k ≡ p + 1 (mod 2p)`.
pub fn sfpdim_via_adams(x: &VerObj) -> Result<Cyclotomic> {
    let p = x.p();
    check_odd_prime(p, "sfpdim_via_adams")?;
    let half = (p as i64 + 1) / 2;
    let k = if half % 2 == 1 { half } else { half + p as i64 };
    galois(&adams2(x)?.fpdim()?, k)
}

/// Alternating sum `Σ_j (-1)^j b_{pj}` over coefficients at multiples of `p`.
fn alternating_multiples(f: &LaurentPoly, p: i64) -> BigRational {
    f.terms().filter(|(e, _)| e % p == 0).map(|(e, c)| if (e / p) % 2 == 0 { c.clone() } else { -c }).sum()
}

/// `-½ (z - z^-1)^2 binom(i+d-1, d-1)_z`.
fn invariant_kernel(i: usize, d: usize) -> Result<LaurentPoly> {
    let g = gauss_binom((i + d - 1) as i64, (d - 1) as i64)?;
    let sq = &z_minus_zinv() * &z_minus_zinv();
    Ok((&sq * &g).scale(&BigRational::new((-1).into(), 2.into())))
}

/// `dim (S^i L_m)^inv`, the multiplicity of the unit in `S^i L_m`, for
/// `2 <= m <= p-1` and `0 <= i <= p-m`.
///
/// Computed as `Σ_j (-1)^j b_{pj}` with `Σ b_j z^j = -½(z-z^-1)² binom`. When
/// `i(m-1)` is odd the power lies in the odd part of the grading, where the
/// unit cannot occur, and the answer is 0.
pub fn invariant_dim(i: usize, m: usize, p: u32) -> Result<i64> {
    check_odd_prime(p, "invariant_dim")?;
    if m < 2 || m >= p as usize || i + m > p as usize {
        return Err(Error::OutOfRange(format!(
            "invariant_dim needs 2 <= m <= p-1 and 0 <= i <= p-m, got i = {i}, m = {m}, p = {p}"
        )));
    }
    if i * (m - 1) % 2 == 1 {
        return Ok(0);
    }
    let b = alternating_multiples(&invariant_kernel(i, m)?, p as i64);
    if !b.is_integer() || b.is_negative() {
        return Err(Error::NonIntegral(format!("invariant count {b} for S^{i} L_{m}, p = {p}")));
    }
    to_i64(&b.to_integer(), "invariant count")
}

/// The classical count of degree-`i` invariants of `SL_2` acting on `S^i` of
/// its `d`-dimensional irreducible (binary forms of degree `d - 1`): the
/// constant coefficient of `-½(z-z^-1)² binom(i+d-1, d-1)_z`.
pub fn classical_invariant_count(i: usize, d: usize) -> i64 {
    if d == 0 {
        return i64::from(i == 0);
    }
    let b0 = invariant_kernel(i, d).expect("gauss binomial in range").coeff(0);
    assert!(b0.is_integer(), "constant term {b0} is not an integer");
    to_i64(&b0.to_integer(), "invariant count").expect("count fits in 64 bits")
}

/// Transcendence degrees `(Trd_+, Trd_-) = (a_1, a_(p-1))`.
pub fn trd(x: &VerObj) -> Result<(i64, i64)> {
    check_odd_prime(x.p(), "trd")?;
    x.require_effective()?;
    Ok((x.mult(1), x.mult(x.p() as usize - 1)))
}

/// Symmetric and exterior `p`-adic dimensions `(Dim_+, Dim_-)`:
/// `Dim_+ = a_1 + Σ_{r>1} (r-p) a_r`, `Dim_- = Σ_{r<p-1} r a_r - a_(p-1)`.
pub fn padic_dims(x: &VerObj) -> Result<(i64, i64)> {
    let p = x.p() as i64;
    check_odd_prime(x.p(), "padic_dims")?;
    x.require_effective()?;
    let mut plus = 0;
    let mut minus = 0;
    for (r, a) in x.support() {
        let r = r as i64;
        plus += a * if r == 1 { 1 } else { r - p };
        minus += a * if r == p - 1 { -1 } else { r };
    }
    Ok((plus, minus))
}

/// Checks `length = Trd_+ + Trd_- + (Dim_- - Dim_+)/p`.
pub fn length_identity_check(x: &VerObj) -> Result<bool> {
    let (tp, tm) = trd(x)?;
    let (dp, dm) = padic_dims(x)?;
    let p = x.p() as i64;
    let diff = dm - dp;
    Ok(diff % p == 0 && x.length() == tp + tm + diff / p)
}

/// The intermediate trace terms behind each `a_r` of [`decompose_from_dims`].
pub fn multiplicity_terms(fp: &LaurentPoly, sfp: &LaurentPoly, p: u32) -> Result<Vec<MultiplicityTerm>> {
    check_odd_prime(p, "multiplicity_terms")?;
    let mut out = Vec::new();
    for r in 1..p as i64 {
        let graded = if r % 2 == 0 { fp - sfp } else { fp + sfp };
        let h = &weight(r) * &graded;
        let tau_value = tau(&h, p)?;
        out.push(MultiplicityTerm {
            r: r as usize,
            alternating_sum: alternating_multiples(&h, p as i64),
            value_at_minus_one: h.eval_at_minus_one(),
            tau: tau_value.clone(),
            multiplicity: tau_value / BigRational::from_integer(BigInt::from(4 * p as i64)),
        });
    }
    Ok(out)
}

/// One line of the trace computation behind `a_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTerm {
    pub r: usize,
    /// `Σ_j (-1)^j h_{pj}` for `h = (z^-r - z^r)(z - z^-1)(P_fp ∓ P_sfp)`.
    pub alternating_sum: BigRational,
    /// `h(-1)`.
    pub value_at_minus_one: BigRational,
    /// `τ(h) = p · alternating_sum - h(-1)`.
    pub tau: BigRational,
    /// `τ(h) / 4p`.
    pub multiplicity: BigRational,
}

impl MultiplicityTerm {
    pub fn is_integral(&self) -> bool {
        self.multiplicity.is_integer()
    }
}
