//! Structure-constant algebras and the q-associativity verifier.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, basis_vector, is_zero_vector, scale_vector, sub_vectors, zero_vector, Matrix, Tensor3, Vector,
};
use crate::rational::Rational;
use crate::report::CheckReport;

/// A finite-dimensional algebra `e_i·e_j = Σ_k c[i][j][k] e_k` together with
/// the scalar `q` of its intended law `(xy)z = q·x(yz)`.
///
/// The law itself is not enforced; see [`StructureAlgebra::check_q_associative`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureAlgebra {
    dim: usize,
    q: Rational,
    c: Tensor3,
}

impl StructureAlgebra {
    pub fn new(q: Rational, c: Tensor3) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidParameter("q must be nonzero".into()));
        }
        let (d1, d2, d3) = c.dims();
        if d1 != d2 || d2 != d3 {
            return Err(Error::dimension(format!("structure tensor must be cubic, got {d1}x{d2}x{d3}")));
        }
        Ok(StructureAlgebra { dim: d1, q, c })
    }

    pub fn zero(dim: usize, q: Rational) -> Self {
        StructureAlgebra::new(q, Tensor3::cube(dim)).expect("zero algebra")
    }

    /// Build from products `(i, j, k, coeff)` meaning `e_i·e_j += coeff·e_k`,
    /// with 1-indexed labels.
    pub fn from_products(dim: usize, q: Rational, products: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut c = Tensor3::cube(dim);
        for (i, j, k, x) in products {
            if [*i, *j, *k].iter().any(|&t| t == 0 || t > dim) {
                return Err(Error::dimension(format!("product label e{i}·e{j} -> e{k} outside 1..={dim}")));
            }
            c[(i - 1, j - 1, k - 1)] += x;
        }
        StructureAlgebra::new(q, c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.c
    }

    pub fn with_q(&self, q: Rational) -> Result<Self> {
        StructureAlgebra::new(q, self.c.clone())
    }

    /// `e_i·e_j` (0-indexed).
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        self.c.fiber(i, j)
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::dimension(format!(
                "operands of length {} and {} for a {}-dimensional algebra",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        Ok(self.mul(x, y))
    }

    /// Bilinear product; panics on a length mismatch.
    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "operand length mismatch");
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.c.fiber(i, j));
            }
        }
        out
    }

    fn basis_triple_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let ek = basis_vector(self.dim, k);
        let ei = basis_vector(self.dim, i);
        let left = self.mul(self.c.fiber(i, j), &ek);
        let right = self.mul(&ei, self.c.fiber(j, k));
        sub_vectors(&left, &scale_vector(&self.q, &right))
    }

    /// `(e_i e_j) e_k − q·e_i (e_j e_k) = 0` on all basis triples.
    pub fn check_q_associative(&self) -> CheckReport {
        let mut report = CheckReport::new("triples");
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    report.check("q-assoc", &[i + 1, j + 1, k + 1], self.basis_triple_residual(i, j, k));
                }
            }
        }
        report
    }

    /// Left and right multiplication operators: `L[i]·v = e_i·v`, `R[i]·v = v·e_i`.
    pub fn mult_operators(&self) -> (Vec<Matrix>, Vec<Matrix>) {
        let n = self.dim;
        let mut left = vec![Matrix::zeros(n, n); n];
        let mut right = vec![Matrix::zeros(n, n); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let x = &self.c[(i, j, k)];
                    if !x.is_zero() {
                        left[i][(k, j)] = x.clone();
                        right[j][(k, i)] = x.clone();
                    }
                }
            }
        }
        (left, right)
    }

    /// Symmetrized product `(xy + yx)/2`. The output's `q` is −1 by convention.
    pub fn anticommutator_algebra(&self) -> StructureAlgebra {
        let n = self.dim;
        let half = Rational::new(1, 2);
        let mut c = Tensor3::cube(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i, j, k)] = &(&self.c[(i, j, k)] + &self.c[(j, i, k)]) * &half;
                }
            }
        }
        StructureAlgebra::new(-Rational::one(), c).expect("same shape")
    }

    /// Commutativity plus the Jacobi identity for this product.
    pub fn check_mock_lie(&self) -> CheckReport {
        let n = self.dim;
        let mut report = CheckReport::new("instances");
        for i in 0..n {
            for j in 0..n {
                report.check("commutative", &[i + 1, j + 1], sub_vectors(self.c.fiber(i, j), self.c.fiber(j, i)));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let e = |t| basis_vector(n, t);
                    let mut sum = self.mul(self.c.fiber(i, j), &e(k));
                    axpy(&mut sum, &Rational::one(), &self.mul(self.c.fiber(k, i), &e(j)));
                    axpy(&mut sum, &Rational::one(), &self.mul(self.c.fiber(j, k), &e(i)));
                    report.check("jacobi", &[i + 1, j + 1, k + 1], sum);
                }
            }
        }
        report
    }

    /// Every parenthesization of a product of four basis vectors vanishes.
    pub fn check_quartic_vanishing(&self) -> CheckReport {
        let n = self.dim;
        let mut report = CheckReport::new("products");
        let e: Vec<Vector> = (0..n).map(|t| basis_vector(n, t)).collect();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let idx = [a + 1, b + 1, c + 1, d + 1];
                        let ab = self.c.fiber(a, b);
                        let bc = self.c.fiber(b, c);
                        let cd = self.c.fiber(c, d);
                        let abc_l = self.mul(ab, &e[c]);
                        let abc_r = self.mul(&e[a], bc);
                        let bcd_l = self.mul(bc, &e[d]);
                        let bcd_r = self.mul(&e[b], cd);
                        report.check("((ab)c)d", &idx, self.mul(&abc_l, &e[d]));
                        report.check("(a(bc))d", &idx, self.mul(&abc_r, &e[d]));
                        report.check("(ab)(cd)", &idx, self.mul(ab, cd));
                        report.check("a((bc)d)", &idx, self.mul(&e[a], &bcd_l));
                        report.check("a(b(cd))", &idx, self.mul(&e[a], &bcd_r));
                    }
                }
            }
        }
        report
    }

    /// Nonzero `x` with coordinates in `grid` and `x·x = x`.
    pub fn find_idempotents_grid(&self, grid: &[Rational]) -> Vec<Vector> {
        grid_vectors(grid, self.dim).into_iter().filter(|x| !is_zero_vector(x) && self.mul(x, x) == *x).collect()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let n = self.dim;
        let products: Vec<Vector> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.c.fiber(i, j).to_vec()).collect();
        let dim_square = Matrix::from_columns(n, &products).expect("square shape").rank();
        let (left, right) = self.mult_operators();
        let ann = |ops: &[Matrix]| {
            if n == 0 {
                0
            } else {
                Matrix::vstack(ops).expect("equal widths").nullity()
            }
        };
        let commutative = (0..n).all(|i| (0..n).all(|j| self.c.fiber(i, j) == self.c.fiber(j, i)));
        Fingerprint { dim: n, dim_square, dim_left_ann: ann(&right), dim_right_ann: ann(&left), commutative }
    }

    /// The same algebra written in the basis formed by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureAlgebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::dimension("change of basis must be dim x dim"));
        }
        let inv = p.invert()?;
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| p.column(j)).collect();
        let mut c = Tensor3::cube(n);
        for i in 0..n {
            for j in 0..n {
                let v = inv.mul_vec(&self.mul(&cols[i], &cols[j]));
                for (k, x) in v.into_iter().enumerate() {
                    c[(i, j, k)] = x;
                }
            }
        }
        StructureAlgebra::new(self.q.clone(), c)
    }

    pub fn direct_product(&self, other: &StructureAlgebra) -> StructureAlgebra {
        let (n, m) = (self.dim, other.dim);
        let mut c = Tensor3::cube(n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i, j, k)] = self.c[(i, j, k)].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[(n + i, n + j, n + k)] = other.c[(i, j, k)].clone();
                }
            }
        }
        StructureAlgebra::new(self.q.clone(), c).expect("cubic")
    }

    /// Nonzero basis products as `(i, j, e_i·e_j)`, 0-indexed.
    pub fn nonzero_products(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.c.fiber(i, j);
                if !is_zero_vector(v) {
                    out.push((i, j, v.to_vec()));
                }
            }
        }
        out
    }
}

/// Checks `φ(e_i·e_j) = φ(e_i)∗φ(e_j)` for `φ: A1 → A2` given as a matrix.
pub fn check_homomorphism(a1: &StructureAlgebra, a2: &StructureAlgebra, phi: &Matrix) -> Result<CheckReport> {
    if phi.rows() != a2.dim() || phi.cols() != a1.dim() {
        return Err(Error::dimension("homomorphism shape must be dim(A2) x dim(A1)"));
    }
    let mut report = CheckReport::new("pairs");
    let n = a1.dim();
    let images: Vec<Vector> = (0..n).map(|j| phi.column(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.mul_vec(a1.basis_product(i, j));
            let rhs = a2.mul(&images[i], &images[j]);
            report.check("multiplicative", &[i + 1, j + 1], sub_vectors(&lhs, &rhs));
        }
    }
    Ok(report)
}

/// All vectors of length `n` with coordinates from `grid`, in lexicographic
/// order of grid positions.
pub fn grid_vectors(grid: &[Rational], n: usize) -> Vec<Vector> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vector| {
                grid.iter().map(move |g| {
                    let mut v = prefix.clone();
                    v.push(g.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Basis-independent numeric summary; equal algebras up to isomorphism have
/// equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_square: usize,
    pub dim_left_ann: usize,
    pub dim_right_ann: usize,
    pub commutative: bool,
}

impl Fingerprint {
    /// Names of the fields in which two fingerprints differ.
    pub fn differing_fields(&self, other: &Fingerprint) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.dim != other.dim {
            out.push("dim");
        }
        if self.dim_square != other.dim_square {
            out.push("dim_square");
        }
        if self.dim_left_ann != other.dim_left_ann {
            out.push("dim_left_ann");
        }
        if self.dim_right_ann != other.dim_right_ann {
            out.push("dim_right_ann");
        }
        if self.commutative != other.commutative {
            out.push("commutative");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn m1() -> Rational {
        int(-1)
    }

    fn e1e1_e2() -> StructureAlgebra {
        StructureAlgebra::from_products(2, m1(), &[(1, 1, 2, int(1))]).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rejects_zero_q() {
        assert!(matches!(StructureAlgebra::new(int(0), Tensor3::cube(2)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn multiply_examples() {
        let a = e1e1_e2();
        assert_eq!(a.multiply(&v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[0, 1]));
        assert_eq!(a.multiply(&v(&[0, 0]), &v(&[3, 5])).unwrap(), v(&[0, 0]));
        let b = StructureAlgebra::from_products(2, m1(), &[(2, 2, 1, int(1))]).unwrap();
        assert_eq!(b.multiply(&v(&[1, 1]), &v(&[0, 1])).unwrap(), v(&[1, 0]));
        assert!(a.multiply(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn q_associative_examples() {
        assert!(e1e1_e2().check_q_associative().passed());
        for q in [int(-1), int(1), int(2)] {
            assert!(StructureAlgebra::zero(3, q).check_q_associative().passed());
        }
        let bad = StructureAlgebra::from_products(2, m1(), &[(2, 1, 2, int(1))]).unwrap();
        let r = bad.check_q_associative();
        assert_eq!(r.violations().len(), 1);
        assert_eq!(r.violations()[0].indices, vec![2, 1, 1]);
        assert_eq!(r.violations()[0].residual, v(&[0, 1]));
        assert_eq!(r.summary(), "FAIL (7/8 triples)");
    }

    #[test]
    fn mult_operator_examples() {
        let (l, r) = e1e1_e2().mult_operators();
        assert_eq!(l[0], Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        assert!(l[1].is_zero());
        assert_eq!(r[0], Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        let b = StructureAlgebra::from_products(2, m1(), &[(2, 2, 1, int(1))]).unwrap();
        let (_, rb) = b.mult_operators();
        assert_eq!(rb[1], Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        let (lz, rz) = StructureAlgebra::zero(2, m1()).mult_operators();
        assert!(lz.iter().chain(&rz).all(Matrix::is_zero));
    }

    #[test]
    fn anticommutator_examples() {
        assert_eq!(e1e1_e2().anticommutator_algebra().tensor(), e1e1_e2().tensor());
        let anti = StructureAlgebra::from_products(2, m1(), &[(1, 2, 1, int(1)), (2, 1, 1, int(-1))]).unwrap();
        assert!(anti.anticommutator_algebra().tensor().is_zero());
        assert!(StructureAlgebra::zero(2, m1()).anticommutator_algebra().tensor().is_zero());
    }

    #[test]
    fn mock_lie_examples() {
        assert!(e1e1_e2().anticommutator_algebra().check_mock_lie().passed());
        assert!(StructureAlgebra::zero(2, m1()).check_mock_lie().passed());
        let idem = StructureAlgebra::from_products(1, int(1), &[(1, 1, 1, int(1))]).unwrap();
        let r = idem.check_mock_lie();
        let jac: Vec<_> = r.violations_of("jacobi").collect();
        assert_eq!(jac.len(), 1);
        assert_eq!(jac[0].indices, vec![1, 1, 1]);
        assert_eq!(jac[0].residual, v(&[3]));
    }

    #[test]
    fn quartic_examples() {
        assert!(e1e1_e2().check_quartic_vanishing().passed());
        assert!(StructureAlgebra::zero(2, m1()).check_quartic_vanishing().passed());
        let idem = StructureAlgebra::from_products(1, int(1), &[(1, 1, 1, int(1))]).unwrap();
        let r = idem.check_quartic_vanishing();
        assert_eq!(r.violations().len(), 5);
        assert_eq!(r.violations()[0].identity, "((ab)c)d");
        assert_eq!(r.violations()[0].residual, v(&[1]));
    }

    #[test]
    fn idempotent_examples() {
        let grid = [int(-1), int(0), int(1)];
        assert!(e1e1_e2().find_idempotents_grid(&grid).is_empty());
        assert!(StructureAlgebra::zero(2, m1()).find_idempotents_grid(&grid).is_empty());
        let idem = StructureAlgebra::from_products(2, int(1), &[(1, 1, 1, int(1))]).unwrap();
        assert_eq!(idem.find_idempotents_grid(&[int(0), int(1)]), vec![v(&[1, 0])]);
    }

    #[test]
    fn fingerprint_examples() {
        let z = StructureAlgebra::zero(2, m1()).fingerprint();
        assert_eq!(z, Fingerprint { dim: 2, dim_square: 0, dim_left_ann: 2, dim_right_ann: 2, commutative: true });
        let f = e1e1_e2().fingerprint();
        assert_eq!(f, Fingerprint { dim: 2, dim_square: 1, dim_left_ann: 1, dim_right_ann: 1, commutative: true });
        let b = StructureAlgebra::from_products(2, m1(), &[(2, 2, 1, int(1))]).unwrap();
        assert_eq!(b.fingerprint(), f);
        assert_eq!(z.differing_fields(&f), vec!["dim_square", "dim_left_ann", "dim_right_ann"]);
    }

    #[test]
    fn swap_is_a_homomorphism() {
        let b = StructureAlgebra::from_products(2, m1(), &[(2, 2, 1, int(1))]).unwrap();
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(check_homomorphism(&e1e1_e2(), &b, &swap).unwrap().passed());
        assert!(!check_homomorphism(&e1e1_e2(), &b, &Matrix::identity(2)).unwrap().passed());
        assert_eq!(e1e1_e2().change_basis(&swap).unwrap(), b);
    }

    #[test]
    fn grid_vectors_count() {
        assert_eq!(grid_vectors(&[int(0), rat(1, 2)], 3).len(), 8);
        assert_eq!(grid_vectors(&[int(0)], 0), vec![Vec::<Rational>::new()]);
    }

    fn small_algebra(n: usize) -> impl Strategy<Value = StructureAlgebra> {
        proptest::collection::vec(-2i64..=2, n * n * n).prop_map(move |xs| {
            let c = Tensor3::from_flat(n, n, n, xs.into_iter().map(int).collect()).unwrap();
            StructureAlgebra::new(int(-1), c).unwrap()
        })
    }

    fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, n * n)
            .prop_map(move |xs| Matrix::from_row_major(n, n, xs.into_iter().map(int).collect()).unwrap())
            .prop_filter("invertible", |m| m.rank() == m.rows())
    }

    proptest! {
        #[test]
        fn multiply_is_bilinear(
            a in small_algebra(2),
            x in proptest::collection::vec(-3i64..=3, 2),
            x2 in proptest::collection::vec(-3i64..=3, 2),
            y in proptest::collection::vec(-3i64..=3, 2),
            s in -3i64..=3, t in 1i64..=4,
        ) {
            let (x, x2, y) = (v(&x), v(&x2), v(&y));
            let (s, t) = (int(s), rat(1, t));
            let combo: Vector = x.iter().zip(&x2).map(|(p, r)| &s * p + &t * r).collect();
            let lhs = a.mul(&combo, &y);
            let mut rhs = scale_vector(&s, &a.mul(&x, &y));
            axpy(&mut rhs, &t, &a.mul(&x2, &y));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn fingerprint_is_basis_invariant(a in small_algebra(2), p in invertible(2)) {
            let b = a.change_basis(&p).unwrap();
            prop_assert_eq!(a.fingerprint(), b.fingerprint());
            prop_assert_eq!(a.check_q_associative().passed(), b.check_q_associative().passed());
            prop_assert!(check_homomorphism(&b, &a, &p).unwrap().passed());
        }

        #[test]
        fn fingerprint_is_basis_invariant_dim3(a in small_algebra(3), p in invertible(3)) {
            prop_assert_eq!(a.fingerprint(), a.change_basis(&p).unwrap().fingerprint());
        }
    }
}
