use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use salvetti::homology::is_one_free;
use salvetti::linalg::{invariant_factors, rational_rank, smith_normal_form, Matrix};
use salvetti::Int;

mod common;
use common::naive_invariant_factors;

fn to_int(rows: &[Vec<i64>]) -> Matrix<Int> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = choose(n - 1, k - 1).into_iter().map(|mut v| {
        v.push(n - 1);
        v
    }).collect();
    with.extend(choose(n - 1, k));
    with
}

/// `d_k = D_k / D_{k-1}` with `D_k` the gcd of the `k x k` minors.
fn determinantal_factors(a: &[Vec<i128>]) -> Vec<i128> {
    let rows = a.len();
    let cols = a[0].len();
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut g = 0;
        for rs in choose(rows, k) {
            for cs in choose(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c]).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

fn as_i128(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect()
}

fn factors_i128(m: &Matrix<Int>) -> Vec<i128> {
    invariant_factors(m).iter().map(|v| v.to_string().parse().unwrap()).collect()
}

#[test]
fn agrees_with_naive_elimination_on_small_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1e);
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let bound = if rng.gen_bool(0.5) { 3 } else { 9 };
        let m = random_matrix(&mut rng, rows, cols, bound);
        assert_eq!(factors_i128(&to_int(&m)), naive_invariant_factors(as_i128(&m)), "{m:?}");
    }
}

#[test]
fn agrees_with_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m = random_matrix(&mut rng, rows, cols, 6);
        assert_eq!(factors_i128(&to_int(&m)), determinantal_factors(&as_i128(&m)), "{m:?}");
    }
}

#[test]
fn known_forms() {
    let m = to_int(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    assert_eq!(factors_i128(&m), vec![2, 6, 12]);
    let m = to_int(&[vec![0, 0], vec![0, 0]]);
    assert!(invariant_factors(&m).is_empty());
}

#[test]
fn machine_integers_match_big_integers() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let m = random_matrix(&mut rng, 5, 6, 5);
        let small: Vec<i64> = invariant_factors(&Matrix::from_rows(m.clone())).into_iter().map(|v: i64| v.abs()).collect();
        let big: Vec<i64> = factors_i128(&to_int(&m)).into_iter().map(|v| v as i64).collect();
        assert_eq!(small, big);
    }
}

#[test]
fn one_free_examples() {
    assert!(is_one_free(&to_int(&[vec![1, 0], vec![0, 0]])));
    assert!(is_one_free(&to_int(&[vec![2, 3]])));
    assert!(!is_one_free(&to_int(&[vec![2, 0], vec![0, 1]])));
    assert!(!is_one_free(&to_int(&[vec![1, 1], vec![1, -1]])));
    assert!(is_one_free(&Matrix::<Int>::zeros(3, 2)));
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn unimodular(n: usize, seed: u64) -> Matrix<Int> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::<Int>::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let k = Int::from(rng.gen_range(-2i64..=2));
        for c in 0..n {
            let v = m[(j, c)].clone() * &k;
            m[(i, c)] += v;
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decomposition_postconditions(rows in matrix_strategy(60)) {
        let a = to_int(&rows);
        let snf = smith_normal_form(&a);
        let (u, ui, v, vi) = (snf.u.clone().unwrap(), snf.u_inv.clone().unwrap(), snf.v.clone().unwrap(), snf.v_inv.clone().unwrap());
        prop_assert_eq!(&(&u * &a) * &v, snf.d.clone());
        prop_assert_eq!(&u * &ui, Matrix::identity(a.rows()));
        prop_assert_eq!(&v * &vi, Matrix::identity(a.cols()));
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    prop_assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
        let f = snf.invariant_factors();
        prop_assert!(f.iter().all(|d| d.is_positive()));
        prop_assert!(f.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        prop_assert_eq!(snf.rank(), rational_rank(&a));
    }

    #[test]
    fn one_free_is_unimodular_invariant(rows in matrix_strategy(7), seed in any::<u64>()) {
        let a = to_int(&rows);
        let p = unimodular(a.rows(), seed);
        let q = unimodular(a.cols(), seed.wrapping_add(1));
        prop_assert_eq!(is_one_free(&a), is_one_free(&(&(&p * &a) * &q)));
        prop_assert_eq!(invariant_factors(&a), invariant_factors(&(&(&p * &a) * &q)));
    }

    #[test]
    fn identity_block_is_one_free(n in 1usize..6, extra in 0usize..4) {
        let mut m = Matrix::<Int>::zeros(n + extra, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        prop_assert!(is_one_free(&m));
    }
}
