//! Ground truth from modular representation theory of `Z/pZ`.
//!
//! A representation is a unipotent matrix over `F_p`; its Jordan type is
//! read off from the ranks of powers of `u - 1`. Tensor, symmetric and
//! exterior powers are built as explicit matrices, and the negligible
//! quotient discards blocks of size `p`. Nothing here uses the fusion rule
//! or any dimension formula, so it can check them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::primes::check_prime;
use crate::ring::VerObj;

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFp {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixFp {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(Self { p, rows, cols, data: vec![0; rows * cols] })
    }

    pub fn identity(p: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Entries are reduced mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::OutOfRange("ragged matrix rows".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v.rem_euclid(p as i64) as u32);
            }
        }
        Ok(m)
    }

    /// The unipotent Jordan block `J_r`: ones on the diagonal and the
    /// superdiagonal, so `u e_k = e_k + e_(k-1)`.
    pub fn jordan_block(p: u32, r: usize) -> Result<Self> {
        let mut m = Self::identity(p, r)?;
        for k in 1..r {
            m.set(k - 1, k, 1);
        }
        Ok(m)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let mut m = Self {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            data: vec![0; (self.rows + other.rows) * (self.cols + other.cols)],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    fn add_to(&mut self, i: usize, j: usize, v: u32) {
        let k = i * self.cols + j;
        self.data[k] = ((self.data[k] as u64 + v as u64) % self.p as u64) as u32;
    }

    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut data = vec![0u32; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j) as u64;
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = a * other.get(k, l) as u64 % p;
                        data[(i * other.rows + k) * cols + j * other.cols + l] = v as u32;
                    }
                }
            }
        }
        Self { p: self.p, rows, cols, data }
    }

    /// Product; skips zero entries of `self`, which is usually sparse here.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.p as u64;
        let mut acc = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut acc[i * other.cols..(i + 1) * other.cols];
            for l in 0..self.cols {
                let a = self.get(i, l) as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[l * other.cols..(l + 1) * other.cols];
                for (o, &b) in out.iter_mut().zip(row) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Self { p: self.p, rows: self.rows, cols: other.cols, data: acc.into_iter().map(|v| v as u32).collect() }
    }

    /// `self - I` for a square matrix.
    pub fn minus_identity(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, i, (self.get(i, i) + self.p - 1) % self.p);
        }
        m
    }

    fn inv(&self, a: u32) -> u32 {
        let (p, mut base, mut e, mut acc) = (self.p as u64, a as u64, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let p = self.p as u64;
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(piv) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(piv * m.cols + j, rank * m.cols + j);
            }
            let inv = m.inv(m.get(rank, col)) as u64;
            for r in rank + 1..m.rows {
                let f = m.get(r, col) as u64 * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let sub = f * m.get(rank, j) as u64 % p;
                    let v = (m.get(r, j) as u64 + p - sub) % p;
                    m.data[r * m.cols + j] = v as u32;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Columns spanning the column space, as a matrix of full column rank.
    pub fn column_basis(&self) -> Self {
        let t = self.transpose();
        let mut m = t.clone();
        let p = self.p as u64;
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(piv) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(piv * m.cols + j, rank * m.cols + j);
            }
            let inv = m.inv(m.get(rank, col)) as u64;
            for r in rank + 1..m.rows {
                let f = m.get(r, col) as u64 * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let sub = f * m.get(rank, j) as u64 % p;
                    let v = (m.get(r, j) as u64 + p - sub) % p;
                    m.data[r * m.cols + j] = v as u32;
                }
            }
            rank += 1;
        }
        Self { p: self.p, rows: rank, cols: m.cols, data: m.data[..rank * m.cols].to_vec() }.transpose()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self { p: self.p, rows: self.cols, cols: self.rows, data: vec![0; self.data.len()] };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }
}

/// Multiset of Jordan block sizes, each in `1..=p`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanType {
    p: u32,
    blocks: Vec<usize>,
}

impl JordanType {
    pub fn new(p: u32, mut blocks: Vec<usize>) -> Result<Self> {
        check_prime(p)?;
        if let Some(&b) = blocks.iter().find(|&&b| b == 0 || b > p as usize) {
            return Err(Error::OutOfRange(format!("Jordan block of size {b} for p = {p}")));
        }
        blocks.sort_unstable();
        Ok(Self { p, blocks })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        blocks.sort_unstable();
        Self { p: self.p, blocks }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Jordan type from the rank sequence `r_k = rank(N^k)`:
/// the number of blocks of size at least `k` is `r_(k-1) - r_k`.
fn jordan_from_ranks(p: u32, ranks: &[usize]) -> Result<JordanType> {
    let mut blocks = Vec::new();
    for k in 1..ranks.len() {
        let at_least_k = ranks[k - 1] - ranks[k];
        let at_least_next = ranks[k] - ranks.get(k + 1).copied().unwrap_or(0);
        blocks.extend(std::iter::repeat_n(k, at_least_k - at_least_next));
    }
    JordanType::new(p, blocks)
}

/// Ranks of `N^k B` for `k = 0, 1, ...` until zero; errors if `N^p B != 0`.
fn nilpotent_ranks(n: &MatrixFp, basis: &MatrixFp) -> Result<Vec<usize>> {
    let mut ranks = vec![basis.rank()];
    let mut cur = basis.clone();
    for _ in 0..n.p() {
        if *ranks.last().unwrap() == 0 {
            break;
        }
        cur = n.mul(&cur);
        ranks.push(cur.rank());
    }
    if *ranks.last().unwrap() != 0 {
        return Err(Error::NotUnipotent);
    }
    Ok(ranks)
}

/// Jordan type of a unipotent `u` with `(u - 1)^p = 0`.
pub fn jordan_type_of(u: &MatrixFp) -> Result<JordanType> {
    if u.rows() != u.cols() {
        return Err(Error::OutOfRange("Jordan type needs a square matrix".into()));
    }
    let id = MatrixFp::identity(u.p(), u.rows())?;
    jordan_type_on_subspace(u, &id)
}

/// Jordan type of `u` restricted to the invariant subspace spanned by the
/// columns of `basis` (which must have full column rank).
pub fn jordan_type_on_subspace(u: &MatrixFp, basis: &MatrixFp) -> Result<JordanType> {
    let ranks = nilpotent_ranks(&u.minus_identity(), basis)?;
    jordan_from_ranks(u.p(), &ranks)
}

fn check_block(p: u32, r: usize) -> Result<()> {
    check_prime(p)?;
    if r == 0 || r > p as usize {
        return Err(Error::OutOfRange(format!("block size {r} outside 1..{p}")));
    }
    Ok(())
}

/// Jordan type of `J_r ⊗ J_s`.
pub fn jordan_tensor(r: usize, s: usize, p: u32) -> Result<JordanType> {
    check_block(p, r)?;
    check_block(p, s)?;
    let u = MatrixFp::jordan_block(p, r)?.kron(&MatrixFp::jordan_block(p, s)?);
    jordan_type_of(&u)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of `S^i` of an `m`-dimensional space.
pub fn sym_dimension(i: usize, m: usize) -> usize {
    if m == 0 {
        return usize::from(i == 0);
    }
    binomial(m + i - 1, i)
}

/// Dimension of `∧^i` of an `m`-dimensional space.
pub fn ext_dimension(i: usize, m: usize) -> usize {
    binomial(m, i)
}

fn multisets(m: usize, i: usize) -> Vec<Vec<u8>> {
    fn rec(m: usize, i: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k as u8);
            rec(m, i, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, i, 0, &mut Vec::with_capacity(i), &mut out);
    out
}

fn subsets(m: usize, i: usize) -> Vec<Vec<u8>> {
    multisets(m, i).into_iter().filter(|v| v.windows(2).all(|w| w[0] < w[1])).collect()
}

/// Images `u e_k = Σ_l u[l][k] e_l` of the basis vectors, as sparse columns.
fn columns(u: &MatrixFp) -> Vec<Vec<(u8, u32)>> {
    (0..u.cols())
        .map(|k| (0..u.rows()).filter(|&l| u.get(l, k) != 0).map(|l| (l as u8, u.get(l, k))).collect())
        .collect()
}

/// Matrix of the action induced by a square `u` on `S^i`, basis the
/// degree-`i` monomials in `e_1..e_n` (nondecreasing index tuples).
pub fn sym_power_matrix(u: &MatrixFp, i: usize) -> Result<MatrixFp> {
    let p = u.p();
    let cols = columns(u);
    let basis = multisets(u.rows(), i);
    let index: HashMap<&[u8], usize> = basis.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();
    let mut out = MatrixFp::zeros(p, basis.len(), basis.len())?;
    for (col, mono) in basis.iter().enumerate() {
        let mut poly: HashMap<Vec<u8>, u32> = HashMap::from([(Vec::new(), 1)]);
        for &k in mono {
            let mut next: HashMap<Vec<u8>, u32> = HashMap::new();
            for (m0, c) in poly {
                for &(img, a) in &cols[k as usize] {
                    let mut m1 = m0.clone();
                    let pos = m1.partition_point(|&x| x <= img);
                    m1.insert(pos, img);
                    let slot = next.entry(m1).or_insert(0);
                    *slot = ((*slot as u64 + c as u64 * a as u64) % p as u64) as u32;
                }
            }
            poly = next;
        }
        for (mono, c) in poly {
            if c != 0 {
                out.add_to(index[mono.as_slice()], col, c);
            }
        }
    }
    Ok(out)
}

/// Matrix of the action induced by a square `u` on `∧^i`, basis
/// `e_a1 ∧ ... ∧ e_ai` with `a1 < ... < ai`.
pub fn ext_power_matrix(u: &MatrixFp, i: usize) -> Result<MatrixFp> {
    let p = u.p();
    let cols = columns(u);
    let basis = subsets(u.rows(), i);
    let index: HashMap<&[u8], usize> = basis.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();
    let mut out = MatrixFp::zeros(p, basis.len(), basis.len())?;
    for (col, wedge) in basis.iter().enumerate() {
        let mut poly: BTreeMap<Vec<u8>, u32> = BTreeMap::from([(Vec::new(), 1)]);
        for &k in wedge {
            let mut next: BTreeMap<Vec<u8>, u32> = BTreeMap::new();
            for (w0, c) in poly {
                for &(img, a) in &cols[k as usize] {
                    if w0.contains(&img) {
                        continue;
                    }
                    // moving e_img past the larger indices already present
                    let larger = w0.iter().filter(|&&x| x > img).count();
                    let mut v = c as u64 * a as u64 % p as u64;
                    if larger % 2 == 1 {
                        v = (p as u64 - v) % p as u64;
                    }
                    let mut w1 = w0.clone();
                    let pos = w1.partition_point(|&x| x < img);
                    w1.insert(pos, img);
                    let slot = next.entry(w1).or_insert(0);
                    *slot = ((*slot as u64 + v) % p as u64) as u32;
                }
            }
            poly = next;
        }
        for (w, c) in poly {
            if c != 0 {
                out.add_to(index[w.as_slice()], col, c);
            }
        }
    }
    Ok(out)
}

/// Action of `J_m` on `S^i`: each factor `e_k` goes to `e_k + e_(k-1)`.
pub fn sym_action(i: usize, m: usize, p: u32) -> Result<MatrixFp> {
    sym_power_matrix(&MatrixFp::jordan_block(p, m)?, i)
}

/// Action of `J_m` on `∧^i`.
pub fn ext_action(i: usize, m: usize, p: u32) -> Result<MatrixFp> {
    ext_power_matrix(&MatrixFp::jordan_block(p, m)?, i)
}

/// Jordan type of `S^i(J_m)`, `0 <= i < p`.
pub fn jordan_sym(i: usize, m: usize, p: u32) -> Result<JordanType> {
    check_block(p, m)?;
    if i >= p as usize {
        return Err(Error::OutOfRange(format!(
            "symmetric power S^{i} needs i < p = {p} (the symmetrizer divides by i!)"
        )));
    }
    jordan_type_of(&sym_action(i, m, p)?)
}

/// Jordan type of `∧^i(J_m)`, `0 <= i <= m`.
pub fn jordan_ext(i: usize, m: usize, p: u32) -> Result<JordanType> {
    check_block(p, m)?;
    if i > m {
        return Err(Error::OutOfRange(format!("exterior power ∧^{i} of a {m}-dimensional block")));
    }
    jordan_type_of(&ext_action(i, m, p)?)
}

fn permutations(i: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        if cur.len() == used.len() {
            let inversions = (0..cur.len())
                .flat_map(|a| (a + 1..cur.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| cur[a] > cur[b])
                .count();
            out.push((cur.clone(), inversions % 2 == 1));
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; i], &mut out);
    out
}

/// Slow second-level oracle: `J_m^{⊗i}` on the full tensor power (dimension
/// `m^i`) restricted to the image of the (anti)symmetrizer.
fn jordan_via_tensor_power(i: usize, m: usize, p: u32, alternating: bool) -> Result<JordanType> {
    check_block(p, m)?;
    if i >= p as usize {
        return Err(Error::OutOfRange(format!("tensor-power oracle needs i < p = {p}")));
    }
    let jm = MatrixFp::jordan_block(p, m)?;
    let mut u = MatrixFp::identity(p, 1)?;
    for _ in 0..i {
        u = u.kron(&jm);
    }
    let dim = u.rows();
    let perms = permutations(i);
    let mut proj = MatrixFp::zeros(p, dim, dim)?;
    let mut digits = vec![0usize; i];
    for col in 0..dim {
        let mut c = col;
        for d in digits.iter_mut().rev() {
            *d = c % m;
            c /= m;
        }
        for (perm, odd) in &perms {
            let row = perm.iter().fold(0, |acc, &k| acc * m + digits[k]);
            let v = if alternating && *odd { p - 1 } else { 1 };
            proj.add_to(row, col, v);
        }
    }
    jordan_type_on_subspace(&u, &proj.column_basis())
}

/// `S^i(J_m)` through the symmetrizer on `V^{⊗i}`.
pub fn jordan_sym_via_tensor(i: usize, m: usize, p: u32) -> Result<JordanType> {
    jordan_via_tensor_power(i, m, p, false)
}

/// `∧^i(J_m)` through the antisymmetrizer on `V^{⊗i}`.
pub fn jordan_ext_via_tensor(i: usize, m: usize, p: u32) -> Result<JordanType> {
    jordan_via_tensor_power(i, m, p, true)
}

/// Image in `Ver_p`: blocks of size `p` vanish, a block of size `r < p`
/// becomes `L_r`.
pub fn negligible_quotient(t: &JordanType) -> Result<VerObj> {
    let p = t.p();
    let mut mults = vec![0i64; (p - 1) as usize];
    for &b in t.blocks() {
        if b < p as usize {
            mults[b - 1] += 1;
        }
    }
    VerObj::new(p, mults)
}

#[cfg(test)]
mod tests;
