use std::sync::Arc;

use num_traits::{One, Zero};
use salvetti::complex::{build_complex, build_salvetti_complex, build_toric_complex, Cell, ChainComplex, ChainMap, MuConvention};
use salvetti::homology::{betti_numbers, homology, homology_all, homology_basis, induced_map};
use salvetti::linalg::{rational_rank_sparse, SparseMatrix};
use salvetti::weyl::{GenSet, WeylContext};
use salvetti::Int;

fn ctx(tag: &str) -> WeylContext {
    WeylContext::new(tag.parse().unwrap()).unwrap()
}

/// Poincare polynomial of a reflection arrangement complement: `prod (1 + e_i t)` over the exponents.
fn poincare(exponents: &[usize]) -> Vec<usize> {
    exponents.iter().fold(vec![1], |p, &e| {
        let mut q = vec![0; p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            q[i] += c;
            q[i + 1] += e * c;
        }
        q
    })
}

#[test]
fn finite_betti_numbers() {
    let table: [(&str, &[usize]); 6] =
        [("A1", &[1]), ("A2", &[1, 2]), ("B2", &[1, 3]), ("G2", &[1, 5]), ("A3", &[1, 2, 3]), ("B3", &[1, 3, 5])];
    for (tag, exps) in table {
        let c = build_salvetti_complex(&ctx(tag), MuConvention::Index).unwrap();
        let h = homology_all(&c);
        assert!(h.iter().all(|g| g.is_torsion_free()), "{tag}");
        assert_eq!(betti_numbers(&h), poincare(exps), "{tag}");
    }
}

#[test]
fn anchors() {
    let betti = |tag: &str| betti_numbers(&homology_all(&build_salvetti_complex(&ctx(tag), MuConvention::Index).unwrap()));
    assert_eq!(betti("A2"), [1, 3, 2]);
    assert_eq!(betti("B2"), [1, 4, 3]);
    assert_eq!(betti("G2"), [1, 6, 5]);
    assert_eq!(betti("A3"), [1, 6, 11, 6]);
    let t = build_toric_complex(&ctx("A~1"), MuConvention::Index).unwrap();
    assert_eq!(betti_numbers(&homology_all(&t)), [1, 3]);
}

#[test]
fn toric_homology_is_torsion_free() {
    for tag in ["A~1", "A~2", "B~2", "C~2", "G~2", "A~3"] {
        let ctx = ctx(tag);
        let t = build_toric_complex(&ctx, MuConvention::Index).unwrap();
        let h = homology_all(&t);
        assert!(h.iter().all(|g| g.is_torsion_free()), "{tag}: {h:?}");
        let m = ctx.kind.rank as u32;
        let euler: i64 = h.iter().map(|g| (-1i64).pow(g.degree as u32) * g.betti as i64).sum();
        assert_eq!(euler, (-1i64).pow(m) * ctx.group.order() as i64, "{tag}");
        assert_eq!(euler, t.euler_characteristic());
    }
}

#[test]
fn betti_numbers_agree_with_rational_ranks() {
    for tag in ["B3", "G~2", "A~2"] {
        let ctx = ctx(tag);
        let c = build_complex(&ctx, ctx.generators(), GenSet::EMPTY, MuConvention::Index).unwrap();
        for (k, g) in homology_all(&c).iter().enumerate() {
            let expected = c.dim(k) - rational_rank_sparse(&c.boundary(k)) - rational_rank_sparse(&c.boundary(k + 1));
            assert_eq!(g.betti, expected, "{tag} degree {k}");
        }
    }
}

fn projective_plane() -> ChainComplex {
    let cell = |k: usize| vec![Cell::new(0, GenSet::range(1, k as isize))];
    let two = Int::from(2);
    ChainComplex::new(
        None,
        vec![cell(0), cell(1), cell(2)],
        vec![
            SparseMatrix::zeros(0, 1),
            SparseMatrix::zeros(1, 1),
            SparseMatrix::from_triplets(1, 1, [(0, 0, two)]),
        ],
    )
    .unwrap()
}

#[test]
fn torsion_is_detected() {
    let c = projective_plane();
    let h1 = homology(&c, 1);
    assert_eq!(h1.betti, 0);
    assert_eq!(h1.torsion, vec![Int::from(2)]);
    assert_eq!(h1.to_string(), "Z/2");
    assert!(homology(&c, 2).is_zero());
    assert_eq!(homology(&c, 0).to_string(), "Z");
}

#[test]
fn basis_reduction() {
    let ctx = ctx("A2");
    let c = build_salvetti_complex(&ctx, MuConvention::Index).unwrap();
    let b = homology_basis(&c, 1);
    assert_eq!(b.betti(), 3);
    for (i, z) in b.free.iter().enumerate() {
        let class = b.reduce(z).unwrap();
        let mut expected = vec![Int::zero(); 3];
        expected[i] = Int::one();
        assert_eq!(class.free, expected);
    }
    let top: Vec<Int> = (0..c.dim(2)).map(|i| if i == 0 { Int::one() } else { Int::zero() }).collect();
    let boundary = c.boundary(2).mul_vec(&top);
    assert!(b.reduce(&boundary).unwrap().is_zero());
    let mut edge = vec![Int::zero(); c.dim(1)];
    edge[0] = Int::one();
    assert!(b.reduce(&edge).is_err());
}

#[test]
fn identity_induces_identity() {
    let c = Arc::new(build_toric_complex(&ctx("B~2"), MuConvention::Index).unwrap());
    let id = ChainMap::identity(Arc::clone(&c));
    for d in 0..c.num_degrees() {
        let f = induced_map(&id, d).unwrap();
        assert_eq!(f.free, salvetti::linalg::Matrix::identity(homology(&c, d).betti));
    }
}
