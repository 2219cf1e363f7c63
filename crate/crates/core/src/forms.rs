//! Bilinear forms `β(u, v) = uᵀ·G·v`: invariant symmetric and cyclic
//! antisymmetric checks, and the natural pairings on `A ⊕ A*`.

use serde::{Deserialize, Serialize};

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix};
use crate::rational::Rational;
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Antisymmetric,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    kind: FormKind,
}

impl BilinearForm {
    /// Fails if `gram` is not square or contradicts `kind`.
    pub fn new(gram: Matrix, kind: FormKind) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::dimension("Gram matrix must be square"));
        }
        let t = gram.transpose();
        let ok = match kind {
            FormKind::Symmetric => t == gram,
            FormKind::Antisymmetric => t == gram.scale(&-Rational::one()),
            FormKind::General => true,
        };
        if !ok {
            return Err(Error::InvalidParameter(format!("Gram matrix is not {kind:?}").to_lowercase()));
        }
        Ok(BilinearForm { gram, kind })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        dot(u, &self.gram.mul_vec(v))
    }

    /// `β(e_i, e_j)` (0-indexed).
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[(i, j)]
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }
}

fn check_dims(a: &StructureAlgebra, f: &BilinearForm) -> Result<()> {
    if a.dim() != f.dim() {
        return Err(Error::dimension(format!("form of dimension {} on a {}-dimensional algebra", f.dim(), a.dim())));
    }
    Ok(())
}

/// `B(xy, z) = B(x, yz)` on basis triples, plus symmetry and nondegeneracy.
pub fn check_invariant_symmetric(a: &StructureAlgebra, b: &BilinearForm) -> Result<CheckReport> {
    check_dims(a, b)?;
    let n = a.dim();
    let mut report = CheckReport::new("instances");
    report.require("symmetric", b.gram.transpose() == b.gram);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // B(e_i e_j, e_k) = Σ_m c[i][j][m] G[m][k]
                let lhs: Rational = (0..n).map(|m| &a.basis_product(i, j)[m] * b.entry(m, k)).sum();
                let rhs: Rational = (0..n).map(|m| b.entry(i, m) * &a.basis_product(j, k)[m]).sum();
                report.check("invariant", &[i + 1, j + 1, k + 1], vec![lhs - rhs]);
            }
        }
    }
    report.require("nondegeneracy", b.is_nondegenerate());
    Ok(report)
}

/// `ω(xy, z) + ω(yz, x) + ω(zx, y) = 0` on basis triples, plus
/// antisymmetry and nondegeneracy.
pub fn check_symplectic(a: &StructureAlgebra, w: &BilinearForm) -> Result<CheckReport> {
    check_dims(a, w)?;
    let n = a.dim();
    let mut report = CheckReport::new("instances");
    let antisym = w.gram.transpose() == w.gram.scale(&-Rational::one());
    report.require("antisymmetric", antisym);
    let pair =
        |i: usize, j: usize, k: usize| -> Rational { (0..n).map(|m| &a.basis_product(i, j)[m] * w.entry(m, k)).sum() };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = pair(i, j, k) + pair(j, k, i) + pair(k, i, j);
                report.check("cyclic", &[i + 1, j + 1, k + 1], vec![s]);
            }
        }
    }
    report.require("nondegeneracy", w.is_nondegenerate());
    Ok(report)
}

/// On `A ⊕ A*` with coordinates `(A-block, A*-block)`:
/// `B = [[0, I], [I, 0]]` and `ω = [[0, −I], [I, 0]]`.
pub fn natural_forms(n: usize) -> (BilinearForm, BilinearForm) {
    let mut b = Matrix::zeros(2 * n, 2 * n);
    let mut w = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        b[(i, n + i)] = Rational::one();
        b[(n + i, i)] = Rational::one();
        w[(i, n + i)] = -Rational::one();
        w[(n + i, i)] = Rational::one();
    }
    (
        BilinearForm::new(b, FormKind::Symmetric).expect("symmetric"),
        BilinearForm::new(w, FormKind::Antisymmetric).expect("antisymmetric"),
    )
}
