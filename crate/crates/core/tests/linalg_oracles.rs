use std::sync::Arc;

use hopflab::catalog::{sigma_t, sweedler_h4};
use hopflab::linalg::{FieldSpec, Matrix, Scalar, Tensor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn int_matrix(rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_rows(Q, rows.iter().map(|r| r.iter().map(|&x| Q.int(x)).collect()).collect()).unwrap()
}

/// Fraction-free elimination over `i128`, independent of the library.
fn bareiss_rank(mut a: Vec<Vec<i128>>) -> usize {
    let (rows, cols) = (a.len(), a[0].len());
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

#[test]
fn rank_of_trivial_matrices() {
    assert_eq!(Matrix::identity(Q, 2).rank(), 2);
    assert_eq!(Matrix::zeros(Q, 3, 3).rank(), 0);
}

#[test]
fn rank_of_sigma_one_agrees_with_permuted_fraction_free_elimination() {
    let h = Arc::new(sweedler_h4(Q).unwrap());
    let s = sigma_t(&h, &Q.one()).unwrap();
    let m = s.sigma();
    let two = Q.int(2);
    let mut scaled: Vec<Vec<i128>> = (0..4)
        .map(|i| (0..4).map(|j| (&two * m.get(i, j)).to_string().parse().unwrap()).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in (1..4).rev() {
        scaled.swap(i, rng.gen_range(0..=i));
    }
    assert_eq!(m.rank(), bareiss_rank(scaled));
    // Rows 1,g agree and rows h,gh agree.
    assert_eq!(m.rank(), 2);
}

#[test]
fn kernel_of_trivial_matrices() {
    assert_eq!(Matrix::identity(Q, 3).kernel_basis().cols(), 0);
    let k = Matrix::zeros(Q, 3, 3).kernel_basis();
    assert_eq!(k.cols(), 3);
    assert_eq!(k.rank(), 3);
}

#[test]
fn random_rank_three_kernel_is_annihilated() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut rand_mat = |r: usize, c: usize| {
        int_matrix(&(0..r).map(|_| (0..c).map(|_| rng.gen_range(-4..=4)).collect()).collect::<Vec<_>>())
    };
    let (a, b) = loop {
        let a = rand_mat(4, 3);
        let b = rand_mat(3, 6);
        if a.rank() == 3 && b.rank() == 3 {
            break (a, b);
        }
    };
    let m = a.try_mul(&b).unwrap();
    assert_eq!(m.rank(), 3);
    let k = m.kernel_basis();
    assert_eq!(k.cols(), 3);
    assert!(m.try_mul(&k).unwrap().is_zero());
    assert_eq!(k.rank(), 3);
}

#[test]
fn solve_identity_singular_and_antipode() {
    let b = int_matrix(&[vec![3], vec![-1]]);
    assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b));

    let singular = int_matrix(&[vec![1, 2], vec![2, 4]]);
    let outside = int_matrix(&[vec![2], vec![-1]]);
    assert_eq!(singular.solve(&outside).unwrap(), None);

    let h = sweedler_h4(Q).unwrap();
    let unit = Matrix::column_vector(Q, &h.basis(0));
    let x = h.antipode().solve(&unit).unwrap().unwrap();
    assert_eq!(h.antipode().try_mul(&x).unwrap(), unit);
}

#[test]
fn contraction_cases() {
    let m = int_matrix(&[vec![1, 2], vec![3, 4]]);
    let v = Tensor::from_vec(Q, &[2], vec![Q.int(5), Q.int(6)]).unwrap();
    let mv = Tensor::from_matrix(&m).contract(&v, &[(1, 0)]).unwrap();
    assert_eq!(mv.entries(), &[Q.int(17), Q.int(39)]);

    let h = sweedler_h4(Q).unwrap();
    let eps = Tensor::from_vec(Q, &[4], h.counit().to_vec()).unwrap();
    let right = h.comult().contract(&eps, &[(2, 0)]).unwrap();
    assert_eq!(right.to_matrix(1), Matrix::identity(Q, 4));

    let outer = v.contract(&v, &[]).unwrap();
    assert_eq!(outer.shape(), &[2, 2]);
    assert_eq!(outer.get(&[0, 1]), &Q.int(30));
}

#[test]
fn prime_field_arithmetic_is_exact() {
    let f5 = FieldSpec::prime(5).unwrap();
    let half = f5.ratio(1, 2).unwrap();
    assert_eq!(half, Scalar::Fp(3, 5));
    assert_eq!(f5.parse("7/3").unwrap(), Scalar::Fp(4, 5));
    assert!(FieldSpec::prime(6).is_err());
}
