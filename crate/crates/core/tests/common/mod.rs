//! Generators shared by the integration tests.

#![allow(dead_code)]

use antiassoc::{int, DendriformStructure, Matrix, StructureAlgebra, Tensor3};
use proptest::prelude::*;

/// Products of the first `n - 1` basis vectors land on `e_n`, which
/// annihilates everything: every such product is antiassociative.
pub fn top_heavy(n: usize, coeffs: &[i64]) -> Tensor3 {
    let mut c = Tensor3::cube(n);
    let mut k = 0;
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            c[(i, j, n - 1)] = int(coeffs[k]);
            k += 1;
        }
    }
    c
}

pub fn rebase(c: &Tensor3, p: &Matrix) -> Tensor3 {
    StructureAlgebra::new(int(-1), c.clone()).unwrap().change_basis(p).unwrap().tensor().clone()
}

pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-1i64..=1, n * n)
        .prop_map(move |xs| Matrix::from_row_major(n, n, xs.into_iter().map(int).collect()).unwrap())
        .prop_filter("invertible", |m| m.invert().is_ok())
}

pub fn antiassociative(n: usize) -> impl Strategy<Value = StructureAlgebra> {
    (proptest::collection::vec(-1i64..=1, (n - 1) * (n - 1)), invertible(n))
        .prop_map(move |(cs, p)| StructureAlgebra::new(int(-1), rebase(&top_heavy(n, &cs), &p)).unwrap())
}

/// Antidendriform structures of the same top-heavy shape, in a random basis.
pub fn antidendriform(n: usize) -> impl Strategy<Value = DendriformStructure> {
    let k = (n - 1) * (n - 1);
    (proptest::collection::vec(-1i64..=1, 2 * k), invertible(n)).prop_map(move |(cs, p)| {
        let prec = rebase(&top_heavy(n, &cs[..k]), &p);
        let succ = rebase(&top_heavy(n, &cs[k..]), &p);
        DendriformStructure::new(int(-1), prec, succ).unwrap()
    })
}

/// Add `delta` to one entry of the `≺` tensor.
pub fn perturb(d: &DendriformStructure, idx: (usize, usize, usize), delta: i64) -> DendriformStructure {
    let mut prec = d.prec_tensor().clone();
    prec[idx] += &int(delta);
    DendriformStructure::new(int(-1), prec, d.succ_tensor().clone()).unwrap()
}
