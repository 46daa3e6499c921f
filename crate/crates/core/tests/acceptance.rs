//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails. All checks are exact.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use verlinde_core::cyclotomic::{galois, to_cyclotomic, Cyclotomic};
use verlinde_core::oracle::{ext_dimension, jordan_ext, jordan_sym, jordan_tensor, negligible_quotient, sym_dimension};
use verlinde_core::powers::{
    adams2, classical_invariant_count, decompose_from_dims, ext_power_simple, invariant_dim, length_identity_check,
    padic_dims, sfpdim_via_adams, sym_power_simple,
};
use verlinde_core::verify::binomial_series_mod_p;
use verlinde_core::{quantum_int, tau, LaurentPoly, VerObj, WeightA};

const PRIMES: [u32; 4] = [3, 5, 7, 11];
const ORACLE_MAX_DIM: usize = 3000;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// Outcome of one criterion: failure messages (empty = pass).
struct Outcome {
    failures: Vec<String>,
    checked: usize,
}

impl Outcome {
    fn new() -> Self {
        Self { failures: Vec::new(), checked: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, started: Instant, budget: Duration) {
        let took = started.elapsed();
        self.check(took <= budget, || format!("runtime {took:?} exceeds {budget:?}"));
    }
}

fn simple(p: u32, r: usize) -> VerObj {
    VerObj::simple(p, r).unwrap()
}

fn random_effective(rng: &mut StdRng, p: u32, max: i64) -> VerObj {
    VerObj::new(p, (1..p).map(|_| rng.gen_range(0..=max)).collect()).unwrap()
}

/// 1. Fusion rule against `J_r ⊗ J_s` modulo negligible blocks.
fn fusion_oracle() -> Outcome {
    let mut out = Outcome::new();
    let t0 = Instant::now();
    for p in PRIMES {
        for r in 1..p as usize {
            for s in 1..p as usize {
                let oracle = negligible_quotient(&jordan_tensor(r, s, p).unwrap()).unwrap();
                let fused = simple(p, r).fuse(&simple(p, s)).unwrap();
                out.check(oracle == fused, || format!("p={p} L{r}⊗L{s}: oracle {oracle}, rule {fused}"));
            }
        }
    }
    out.within(t0, Duration::from_secs(60));
    out
}

/// 2. Symmetric powers of simples against the oracle, plus vanishing.
fn symmetric_powers() -> Outcome {
    let mut out = Outcome::new();
    let t0 = Instant::now();
    for p in PRIMES {
        let pu = p as usize;
        for m in 2..pu {
            for i in 0..=pu - m {
                let oracle = negligible_quotient(&jordan_sym(i, m, p).unwrap()).unwrap();
                let formula = sym_power_simple(i, m, p).unwrap();
                out.check(oracle == formula, || format!("p={p} S^{i}L{m}: oracle {oracle}, formula {formula}"));
            }
            for i in pu - m + 1..=pu {
                let formula = sym_power_simple(i, m, p).unwrap();
                out.check(formula.is_zero(), || format!("p={p} S^{i}L{m} = {formula}, expected 0"));
                if i < pu && sym_dimension(i, m) <= ORACLE_MAX_DIM {
                    let oracle = negligible_quotient(&jordan_sym(i, m, p).unwrap()).unwrap();
                    out.check(oracle.is_zero(), || format!("p={p} oracle S^{i}L{m} = {oracle}"));
                }
            }
        }
    }
    out.within(t0, Duration::from_secs(180));
    out
}

/// 3. Exterior powers against the oracle, plus vanishing for `r < p-1`.
fn exterior_powers() -> Outcome {
    let mut out = Outcome::new();
    for p in PRIMES {
        let pu = p as usize;
        for r in 1..pu {
            for i in 0..=r.min(pu - 1) {
                if ext_dimension(i, r) > ORACLE_MAX_DIM {
                    continue;
                }
                let oracle = negligible_quotient(&jordan_ext(i, r, p).unwrap()).unwrap();
                let formula = ext_power_simple(i, r, p).unwrap();
                out.check(oracle == formula, || format!("p={p} Λ^{i}L{r}: oracle {oracle}, formula {formula}"));
            }
            if r < pu - 1 {
                for i in r + 1..=2 * pu {
                    let formula = ext_power_simple(i, r, p).unwrap();
                    out.check(formula.is_zero(), || format!("p={p} Λ^{i}L{r} = {formula}, expected 0"));
                }
            }
        }
    }
    out
}

/// Random objects shared by criteria 4 and 7.
fn round_trip_objects() -> Vec<VerObj> {
    let mut rng = StdRng::seed_from_u64(4);
    [3u32, 5, 7, 11, 13]
        .into_iter()
        .flat_map(|p| (0..1000).map(move |_| p))
        .map(|p| random_effective(&mut rng, p, 6))
        .collect()
}

/// 4. Decomposition from the two dimensions reproduces the object.
fn round_trip(objects: &[VerObj]) -> Outcome {
    let mut out = Outcome::new();
    for x in objects {
        let back = decompose_from_dims(&x.fpdim_rep(), &x.sfpdim_rep(), x.p());
        out.check(back.as_ref() == Ok(x), || format!("p={} {x} came back as {back:?}", x.p()));
    }
    out
}

/// 5. `SFPdim = g(FPdim(Ψ²))` and the worked values.
fn adams_galois() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = StdRng::seed_from_u64(5);
    for p in PRIMES {
        let mut objects: Vec<VerObj> = (1..p as usize).map(|r| simple(p, r)).collect();
        objects.extend((0..200).map(|_| random_effective(&mut rng, p, 3)));
        for x in &objects {
            let lhs = sfpdim_via_adams(x).unwrap();
            let rhs = x.sfpdim().unwrap();
            out.check(lhs == rhs, || format!("p={p} {x}: via Adams {lhs}, direct {rhs}"));
        }
    }
    for p in [5u32, 7, 11] {
        let psi = adams2(&simple(p, 2)).unwrap();
        out.check(psi == &simple(p, 3) - &simple(p, 1), || format!("p={p} Ψ²(L2) = {psi}"));
    }
    let q2 = to_cyclotomic(&quantum_int(2), 5).unwrap();
    out.check(sfpdim_via_adams(&simple(5, 2)).unwrap() == -&q2, || "p=5 g([3]_q - 1) != -q-q^-1".into());
    let v = sfpdim_via_adams(&simple(3, 2)).unwrap();
    out.check(v == Cyclotomic::from_int(3, -1).unwrap(), || format!("p=3 SFPdim(L2) via Adams = {v}"));
    out
}

/// 6. `τ(z^r + z^-r) = 2(-1)^(r-1)` for `p ∤ r`, `r <= 4p`.
fn trace_identity() -> Outcome {
    let mut out = Outcome::new();
    for p in [3u32, 5, 7, 11, 13] {
        let pi = p as i64;
        for r in (1..=4 * pi).filter(|r| r % pi != 0) {
            let f = &LaurentPoly::z_pow(r) + &LaurentPoly::z_pow(-r);
            let want = BigRational::from_integer(if r % 2 == 1 { 2 } else { -2 }.into());
            let got = tau(&f, p).unwrap();
            out.check(got == want, || format!("p={p} r={r}: τ = {got}, expected {want}"));
        }
    }
    out
}

/// 7. p-adic dimensions of simples, generating-function law, length corollary.
fn padic_dimensions(objects: &[VerObj]) -> Outcome {
    let mut out = Outcome::new();
    for p in [3u32, 5, 7, 11, 13] {
        let pi = p as i64;
        for r in 1..p as usize {
            let (plus, minus) = padic_dims(&simple(p, r)).unwrap();
            let ri = r as i64;
            let want_plus = if r == 1 { 1 } else { ri - pi };
            let want_minus = if r < p as usize - 1 { ri } else { -1 };
            out.check((plus, minus) == (want_plus, want_minus), || {
                format!("p={p} L{r}: (Dim+, Dim-) = ({plus}, {minus})")
            });
        }
        for m in 2..p as usize {
            // (1 - z)^(p - m) in F_p[z], compared coefficient by coefficient
            let series = binomial_series_mod_p(pi - m as i64, -1, 2 * p as usize, p);
            for (i, &w) in series.iter().enumerate() {
                let got = sym_power_simple(i, m, p).unwrap().dim_modp().unwrap();
                out.check(got == w, || format!("p={p} dim S^{i}L{m} = {got}, (1-z)^(p-m) gives {w}"));
            }
        }
    }
    for x in objects {
        out.check(length_identity_check(x).unwrap(), || format!("length corollary fails on {x} (p={})", x.p()));
    }
    out
}

/// 8. Cayley–Sylvester limit.
fn cayley_sylvester() -> Outcome {
    let mut out = Outcome::new();
    out.check(classical_invariant_count(2, 5) == 1, || "N(2,5) != 1".into());
    out.check(classical_invariant_count(3, 5) == 1, || "N(3,5) != 1".into());
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23] {
        for m in 2..=12usize {
            for i in 0..=12 - m {
                if (p as usize) <= i + m + 1 {
                    continue;
                }
                let ours = invariant_dim(i, m, p).unwrap();
                let classical = classical_invariant_count(i, m);
                out.check(ours == classical, || {
                    format!("p={p} i={i} m={m}: invariant_dim {ours}, classical {classical}")
                });
            }
        }
    }
    out
}

/// 9. `F(V_{iω_1}) = S^i L_m` and `F(V) = L_m`.
fn weyl_consistency() -> Outcome {
    let mut out = Outcome::new();
    for p in [5u32, 7, 11] {
        for m in 2..=4usize {
            let v = WeightA::sym(m, 1).unwrap().decompose(p).unwrap();
            out.check(v == simple(p, m), || format!("p={p} F(V) for SL_{m} = {v}"));
            for i in 0..=(p as usize - m) {
                let w = WeightA::sym(m, i as i64).unwrap();
                if !w.alcove_check(p) {
                    continue;
                }
                let lhs = w.decompose(p).unwrap();
                let rhs = sym_power_simple(i, m, p).unwrap();
                out.check(lhs == rhs, || format!("p={p} SL_{m} iω_1, i={i}: {lhs} vs {rhs}"));
            }
        }
    }
    out
}

/// 10. Characters are ring homomorphisms with the Galois relations.
fn characters() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = StdRng::seed_from_u64(10);
    for p in PRIMES {
        let pu = p as usize;
        let mut pairs: Vec<(VerObj, VerObj)> = Vec::new();
        for r in 1..pu {
            for s in 1..pu {
                pairs.push((simple(p, r), simple(p, s)));
            }
        }
        for _ in 0..50 {
            let x = VerObj::new(p, (1..p).map(|_| rng.gen_range(-3..=3)).collect()).unwrap();
            let y = VerObj::new(p, (1..p).map(|_| rng.gen_range(-3..=3)).collect()).unwrap();
            pairs.push((x, y));
        }
        for j in 1..pu {
            for (x, y) in &pairs {
                let lhs = x.fuse(y).unwrap().char_chi(j).unwrap();
                let rhs = &x.char_chi(j).unwrap() * &y.char_chi(j).unwrap();
                out.check(lhs == rhs, || format!("p={p} χ_{j} on {x} ⊗ {y}"));
            }
        }
        for r in 1..pu {
            let x = simple(p, r);
            let chi1 = x.char_chi(1).unwrap();
            let chi_top = x.char_chi(pu - 1).unwrap();
            for s in 0..=(pu - 3) / 2 {
                let k = 2 * s + 1;
                out.check(x.char_chi(k).unwrap() == galois(&chi1, k as i64).unwrap(), || {
                    format!("p={p} χ_{k}(L{r}) != g_{s}(χ_1(L{r}))")
                });
                out.check(x.char_chi(pu - k).unwrap() == galois(&chi_top, k as i64).unwrap(), || {
                    format!("p={p} χ_{}(L{r}) != g_{s}(χ_{}(L{r}))", pu - k, pu - 1)
                });
            }
        }
    }
    out
}

fn main() {
    let objects = round_trip_objects();
    let criteria: Vec<Criterion> = vec![
        ("C1 fusion rule = Jordan tensor oracle", Box::new(fusion_oracle)),
        ("C2 symmetric powers = Jordan oracle, vanishing", Box::new(symmetric_powers)),
        ("C3 exterior powers = Jordan oracle, vanishing", Box::new(exterior_powers)),
        ("C4 decomposition round trip", Box::new(|| round_trip(&objects))),
        ("C5 SFPdim through Adams and Galois", Box::new(adams_galois)),
        ("C6 trace identity", Box::new(trace_identity)),
        ("C7 p-adic dimensions, generating function, length", Box::new(|| padic_dimensions(&objects))),
        ("C8 Cayley-Sylvester limit", Box::new(cayley_sylvester)),
        ("C9 Weyl consistency", Box::new(weyl_consistency)),
        ("C10 characters and Galois relations", Box::new(characters)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t0 = Instant::now();
        let outcome = run();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{status} {name} ({} checks, {} failed, {:.1?})",
            outcome.checked,
            outcome.failures.len(),
            t0.elapsed()
        );
        for f in &outcome.failures {
            println!("     - {f}");
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
