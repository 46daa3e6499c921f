use verlinde_core::oracle::{jordan_ext, jordan_sym, jordan_tensor, negligible_quotient, sym_dimension};
use verlinde_core::powers::{ext_power, ext_power_simple, sym_power, sym_power_simple};
use verlinde_core::VerObj;

const PRIMES: [u32; 4] = [3, 5, 7, 11];

#[test]
fn fusion_matches_jordan_tensor() {
    for p in PRIMES {
        for r in 1..p as usize {
            for s in 1..p as usize {
                let oracle = negligible_quotient(&jordan_tensor(r, s, p).unwrap()).unwrap();
                let fused = VerObj::simple(p, r).unwrap().fuse(&VerObj::simple(p, s).unwrap()).unwrap();
                assert_eq!(oracle, fused, "p={p} L{r}*L{s}");
            }
        }
    }
}

#[test]
fn symmetric_powers_match_jordan_oracle() {
    for p in PRIMES {
        for m in 2..p as usize {
            for i in 0..p as usize {
                if sym_dimension(i, m) > 2000 {
                    continue;
                }
                let oracle = negligible_quotient(&jordan_sym(i, m, p).unwrap()).unwrap();
                assert_eq!(sym_power_simple(i, m, p).unwrap(), oracle, "p={p} S^{i} L{m}");
            }
        }
    }
}

#[test]
fn exterior_powers_match_jordan_oracle() {
    for p in PRIMES {
        for r in 1..p as usize {
            for i in 0..=r.min(p as usize - 1) {
                let oracle = negligible_quotient(&jordan_ext(i, r, p).unwrap()).unwrap();
                assert_eq!(ext_power_simple(i, r, p).unwrap(), oracle, "p={p} Λ^{i} L{r}");
            }
        }
    }
}

/// `S^2(J_2 ⊕ J_2)` over F_5 computed on the 4-dimensional module itself.
#[test]
fn symmetric_square_of_a_sum() {
    use verlinde_core::oracle::{jordan_type_of, MatrixFp};
    let u = MatrixFp::jordan_block(5, 2).unwrap().direct_sum(&MatrixFp::jordan_block(5, 2).unwrap());
    assert_eq!(jordan_type_of(&u).unwrap().blocks(), &[2, 2]);
    let x = VerObj::new(5, vec![0, 2, 0, 0]).unwrap();
    assert_eq!(sym_power(2, &x).unwrap(), VerObj::new(5, vec![1, 0, 3, 0]).unwrap());

    // S^2 of V = V1 ⊕ V2 splits as S^2 V1 ⊕ V1⊗V2 ⊕ S^2 V2, each checked by the oracle
    let s2 = negligible_quotient(&jordan_sym(2, 2, 5).unwrap()).unwrap();
    let cross = negligible_quotient(&jordan_tensor(2, 2, 5).unwrap()).unwrap();
    assert_eq!(&(&s2 + &s2) + &cross, sym_power(2, &x).unwrap());
}

/// Powers of `X = L_1 + L_2 + L_3` against the module `J_1 ⊕ J_2 ⊕ J_3`
/// itself: no direct-sum expansion on the oracle side.
#[test]
fn powers_of_sums_follow_the_oracle() {
    use verlinde_core::oracle::{ext_power_matrix, jordan_type_of, sym_power_matrix, MatrixFp};
    for (p, blocks) in [(7u32, vec![1usize, 2, 3]), (5, vec![2, 3]), (7, vec![2, 2, 6]), (11, vec![4, 5])] {
        let mut u = MatrixFp::identity(p, 0).unwrap();
        let mut mults = vec![0i64; p as usize - 1];
        for &b in &blocks {
            u = u.direct_sum(&MatrixFp::jordan_block(p, b).unwrap());
            mults[b - 1] += 1;
        }
        let x = VerObj::new(p, mults).unwrap();
        let n = u.rows();
        for i in 0..p as usize {
            if sym_dimension(i, n) > 1500 {
                break;
            }
            let oracle = negligible_quotient(&jordan_type_of(&sym_power_matrix(&u, i).unwrap()).unwrap()).unwrap();
            assert_eq!(sym_power(i, &x).unwrap(), oracle, "p={p} S^{i} of {blocks:?}");
        }
        for i in 0..=n.min(p as usize - 1) {
            let oracle = negligible_quotient(&jordan_type_of(&ext_power_matrix(&u, i).unwrap()).unwrap()).unwrap();
            assert_eq!(ext_power(i, &x).unwrap(), oracle, "p={p} Λ^{i} of {blocks:?}");
        }
    }
}
