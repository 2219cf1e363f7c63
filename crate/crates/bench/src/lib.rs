//! Deterministic inputs for the benchmarks.

use antiassoc::{int, DendriformStructure, Matrix, Rational, StructureAlgebra, Tensor3};

/// Products of `e_1..e_{n-1}` land on `e_n` with coefficients cycling
/// through {1, -1, 2}, then the whole thing is rewritten in the basis
/// `e_i + e_{i+1}` so that the tensor is dense.
pub fn dense_antiassociative(n: usize) -> StructureAlgebra {
    let coeffs = [int(1), int(-1), int(2)];
    let mut c = Tensor3::cube(n);
    let mut k = 0;
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            c[(i, j, n - 1)] = coeffs[k % 3].clone();
            k += 1;
        }
    }
    StructureAlgebra::new(int(-1), c).unwrap().change_basis(&shear(n)).unwrap()
}

/// Both halves shaped like [`dense_antiassociative`].
pub fn dense_antidendriform(n: usize) -> DendriformStructure {
    let a = dense_antiassociative(n);
    let half = a.tensor().scale(&Rational::new(1, 2));
    DendriformStructure::new(int(-1), half.clone(), half).unwrap()
}

fn shear(n: usize) -> Matrix {
    let mut p = Matrix::identity(n);
    for i in 0..n - 1 {
        p[(i + 1, i)] = int(1);
    }
    p
}
