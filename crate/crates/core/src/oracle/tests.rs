use super::*;

fn jt(p: u32, blocks: &[usize]) -> JordanType {
    JordanType::new(p, blocks.to_vec()).unwrap()
}

#[test]
fn type_of_examples() {
    let id = MatrixFp::identity(5, 4).unwrap();
    assert_eq!(jordan_type_of(&id).unwrap(), jt(5, &[1, 1, 1, 1]));
    for r in 1..=5 {
        assert_eq!(jordan_type_of(&MatrixFp::jordan_block(5, r).unwrap()).unwrap(), jt(5, &[r]));
    }
    let u = MatrixFp::jordan_block(5, 2).unwrap().direct_sum(&MatrixFp::jordan_block(5, 3).unwrap());
    assert_eq!(jordan_type_of(&u).unwrap(), jt(5, &[2, 3]));
}

#[test]
fn type_of_rejects_non_unipotent() {
    let d = MatrixFp::from_rows(5, &[vec![2, 0], vec![0, 1]]).unwrap();
    assert_eq!(jordan_type_of(&d), Err(Error::NotUnipotent));
    let rect = MatrixFp::zeros(5, 2, 3).unwrap();
    assert!(jordan_type_of(&rect).is_err());
}

#[test]
fn conjugation_does_not_change_the_type() {
    // u = g J g^-1 with g = [[1,2,0],[0,1,3],[0,0,1]] over F_7
    let g = MatrixFp::from_rows(7, &[vec![1, 2, 0], vec![0, 1, 3], vec![0, 0, 1]]).unwrap();
    let g_inv = MatrixFp::from_rows(7, &[vec![1, -2, 6], vec![0, 1, -3], vec![0, 0, 1]]).unwrap();
    assert_eq!(g.mul(&g_inv), MatrixFp::identity(7, 3).unwrap());
    let j = MatrixFp::jordan_block(7, 2).unwrap().direct_sum(&MatrixFp::identity(7, 1).unwrap());
    let u = g.mul(&j).mul(&g_inv);
    assert_eq!(jordan_type_of(&u).unwrap(), jt(7, &[1, 2]));
}

#[test]
fn tensor_examples() {
    for s in 1..=5 {
        assert_eq!(jordan_tensor(1, s, 5).unwrap(), jt(5, &[s]));
    }
    assert_eq!(jordan_tensor(2, 2, 5).unwrap(), jt(5, &[1, 3]));
    assert_eq!(jordan_tensor(4, 4, 5).unwrap(), jt(5, &[1, 5, 5, 5]));
    assert!(jordan_tensor(0, 2, 5).is_err());
    assert!(jordan_tensor(6, 2, 5).is_err());
}

#[test]
fn power_examples() {
    for m in 1..=5 {
        assert_eq!(jordan_sym(1, m, 5).unwrap(), jt(5, &[m]));
        assert_eq!(jordan_ext(m, m, 5).unwrap(), jt(5, &[1]));
        assert_eq!(jordan_sym(0, m, 5).unwrap(), jt(5, &[1]));
    }
    assert_eq!(jordan_sym(2, 2, 5).unwrap(), jt(5, &[3]));
    assert!(jordan_sym(5, 2, 5).is_err());
    assert!(jordan_ext(3, 2, 5).is_err());
}

#[test]
fn negligible_quotient_examples() {
    assert!(negligible_quotient(&jt(5, &[5])).unwrap().is_zero());
    assert_eq!(negligible_quotient(&jt(5, &[1, 3])).unwrap(), VerObj::new(5, vec![1, 0, 1, 0]).unwrap());
    assert_eq!(negligible_quotient(&jt(5, &[1, 5, 5, 5])).unwrap(), VerObj::unit(5).unwrap());
}

#[test]
fn dimensions_are_consistent() {
    for p in [3u32, 5, 7] {
        let pu = p as usize;
        for r in 1..=pu {
            for s in 1..=pu {
                assert_eq!(jordan_tensor(r, s, p).unwrap().dimension(), r * s);
            }
            for i in 0..pu {
                assert_eq!(jordan_sym(i, r, p).unwrap().dimension(), sym_dimension(i, r));
            }
            for i in 0..=r {
                assert_eq!(jordan_ext(i, r, p).unwrap().dimension(), ext_dimension(i, r));
            }
        }
    }
}

#[test]
fn square_splits_into_symmetric_and_exterior() {
    for p in [3u32, 5, 7, 11] {
        let one = jordan_sym(2, 1, p).unwrap();
        assert_eq!(one, jordan_tensor(1, 1, p).unwrap());
        for m in 2..p as usize {
            let both = jordan_sym(2, m, p).unwrap().union(&jordan_ext(2, m, p).unwrap());
            assert_eq!(both, jordan_tensor(m, m, p).unwrap(), "p={p} m={m}");
        }
    }
}

#[test]
fn dim_modp_matches_block_dimension() {
    for p in [3u32, 5, 7] {
        for r in 1..=p as usize {
            for s in 1..=p as usize {
                let t = jordan_tensor(r, s, p).unwrap();
                let x = negligible_quotient(&t).unwrap();
                assert_eq!(x.dim_modp().unwrap() as usize, t.dimension() % p as usize);
            }
        }
    }
}

#[test]
fn monomial_path_agrees_with_tensor_power_path() {
    for p in [3u32, 5, 7] {
        for m in 1..=p as usize {
            for i in 0..p as usize {
                if m.pow(i as u32) > 800 {
                    continue;
                }
                assert_eq!(jordan_sym(i, m, p).unwrap(), jordan_sym_via_tensor(i, m, p).unwrap(), "S^{i} J_{m} p={p}");
                if i <= m {
                    assert_eq!(
                        jordan_ext(i, m, p).unwrap(),
                        jordan_ext_via_tensor(i, m, p).unwrap(),
                        "∧^{i} J_{m} p={p}"
                    );
                }
            }
        }
    }
}

#[test]
fn rank_and_basis() {
    let m = MatrixFp::from_rows(5, &[vec![1, 2, 3], vec![0, 1, 1], vec![1, 3, 4]]).unwrap();
    // third row = first + second mod 5
    assert_eq!(m.rank(), 2);
    assert_eq!(m.column_basis().cols(), 2);
    assert_eq!(m.column_basis().rank(), 2);
    assert_eq!(MatrixFp::zeros(5, 3, 3).unwrap().rank(), 0);
}
