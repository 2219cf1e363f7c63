//! O-operators and Rota–Baxter operators, and the three ways of producing an
//! antidendriform structure: from an O-operator on a module, from an
//! invertible O-operator on the algebra, and from a symplectic form.

use serde::{Deserialize, Serialize};

use crate::algebra::StructureAlgebra;
use crate::dendriform::DendriformStructure;
use crate::error::{Error, Result};
use crate::forms::{check_symplectic, BilinearForm};
use crate::linalg::{basis_vector, sub_vectors, Matrix, Tensor3, Vector};
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::representations::{act, Bimodule};

/// A linear map `src → dst` stored as a `dst_dim × src_dim` matrix acting on
/// coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    src_dim: usize,
    dst_dim: usize,
    m: Matrix,
}

impl LinearMap {
    pub fn new(m: Matrix) -> Self {
        LinearMap { src_dim: m.cols(), dst_dim: m.rows(), m }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn zero(src_dim: usize, dst_dim: usize) -> Self {
        LinearMap::new(Matrix::zeros(dst_dim, src_dim))
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn dst_dim(&self) -> usize {
        self.dst_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.m.mul_vec(v)
    }

    pub fn is_square(&self) -> bool {
        self.src_dim == self.dst_dim
    }
}

fn check_t_shape(a: &StructureAlgebra, m: &Bimodule, t: &LinearMap) -> Result<()> {
    if m.algebra_dim() != a.dim() {
        return Err(Error::dimension("bimodule is over an algebra of a different dimension"));
    }
    if t.src_dim != m.module_dim() || t.dst_dim != a.dim() {
        return Err(Error::dimension(format!(
            "T must map the {}-dimensional module to the {}-dimensional algebra, got {}x{}",
            m.module_dim(),
            a.dim(),
            t.dst_dim,
            t.src_dim
        )));
    }
    Ok(())
}

/// `T(u)·T(v) = T(l(Tu)v + r(Tv)u)` on all module basis pairs.
pub fn check_o_operator(a: &StructureAlgebra, m: &Bimodule, t: &LinearMap) -> Result<CheckReport> {
    check_t_shape(a, m, t)?;
    let d = m.module_dim();
    let mut report = CheckReport::new("pairs");
    for u in 0..d {
        let tu = t.m.column(u);
        for v in 0..d {
            let tv = t.m.column(v);
            let lhs = a.mul(&tu, &tv);
            let mut inner = act(m.l(), &tu, &basis_vector(d, v));
            crate::linalg::axpy(&mut inner, &Rational::one(), &act(m.r(), &tv, &basis_vector(d, u)));
            report.check("o-operator", &[u + 1, v + 1], sub_vectors(&lhs, &t.apply(&inner)));
        }
    }
    Ok(report)
}

/// Weight-zero Rota–Baxter identity `τ(x)·τ(y) = τ(τ(x)·y + x·τ(y))`,
/// evaluated with the product directly rather than through `(L, R)`.
pub fn check_rota_baxter(a: &StructureAlgebra, tau: &LinearMap) -> Result<CheckReport> {
    let n = a.dim();
    if tau.src_dim != n || tau.dst_dim != n {
        return Err(Error::dimension(format!("τ must be {n}x{n}, got {}x{}", tau.dst_dim, tau.src_dim)));
    }
    let mut report = CheckReport::new("pairs");
    for i in 0..n {
        let (x, tx) = (basis_vector(n, i), tau.m.column(i));
        for j in 0..n {
            let (y, ty) = (basis_vector(n, j), tau.m.column(j));
            let lhs = a.mul(&tx, &ty);
            let inner = crate::linalg::add_vectors(&a.mul(&tx, &y), &a.mul(&x, &ty));
            report.check("rota-baxter", &[i + 1, j + 1], sub_vectors(&lhs, &tau.apply(&inner)));
        }
    }
    Ok(report)
}

fn require_o_operator(a: &StructureAlgebra, m: &Bimodule, t: &LinearMap) -> Result<()> {
    let report = check_o_operator(a, m, t)?;
    if !report.passed() {
        return Err(Error::NotAnOOperator { violations: report.failed() });
    }
    Ok(())
}

/// `u ≻ v = l(Tu)v`, `u ≺ v = r(Tv)u` on the module space, with the
/// algebra's `q`. Refuses when `T` is not an O-operator.
pub fn induced_dendriform_on_module(a: &StructureAlgebra, m: &Bimodule, t: &LinearMap) -> Result<DendriformStructure> {
    require_o_operator(a, m, t)?;
    induced_dendriform_on_module_unchecked(a, m, t)
}

/// As [`induced_dendriform_on_module`] without the O-operator check.
pub fn induced_dendriform_on_module_unchecked(
    a: &StructureAlgebra,
    m: &Bimodule,
    t: &LinearMap,
) -> Result<DendriformStructure> {
    check_t_shape(a, m, t)?;
    let d = m.module_dim();
    let mut prec = Tensor3::cube(d);
    let mut succ = Tensor3::cube(d);
    for u in 0..d {
        for v in 0..d {
            let s = act(m.l(), &t.m.column(u), &basis_vector(d, v));
            let p = act(m.r(), &t.m.column(v), &basis_vector(d, u));
            for k in 0..d {
                succ[(u, v, k)] = s[k].clone();
                prec[(u, v, k)] = p[k].clone();
            }
        }
    }
    DendriformStructure::new(a.q().clone(), prec, succ)
}

/// `T(u ∗ v) = T(u)·T(v)` for the associated product of `d` on the module.
pub fn check_t_homomorphism(a: &StructureAlgebra, d: &DendriformStructure, t: &LinearMap) -> Result<CheckReport> {
    if t.src_dim != d.dim() || t.dst_dim != a.dim() {
        return Err(Error::dimension("T does not map the structure's space into the algebra"));
    }
    let n = d.dim();
    let mut report = CheckReport::new("pairs");
    for u in 0..n {
        for v in 0..n {
            let lhs = t.apply(&d.star(&basis_vector(n, u), &basis_vector(n, v)));
            let rhs = a.mul(&t.m.column(u), &t.m.column(v));
            report.check("homomorphism", &[u + 1, v + 1], sub_vectors(&lhs, &rhs));
        }
    }
    Ok(report)
}

/// `x ≻ y = T(l(x)T⁻¹y)`, `x ≺ y = T(r(y)T⁻¹x)` on the algebra itself.
pub fn compatible_dendriform_from_o_operator(
    a: &StructureAlgebra,
    m: &Bimodule,
    t: &LinearMap,
) -> Result<DendriformStructure> {
    check_t_shape(a, m, t)?;
    t.m.invert()?;
    require_o_operator(a, m, t)?;
    compatible_dendriform_from_o_operator_unchecked(a, m, t)
}

/// As [`compatible_dendriform_from_o_operator`] without the O-operator
/// check. `T` must still be invertible.
pub fn compatible_dendriform_from_o_operator_unchecked(
    a: &StructureAlgebra,
    m: &Bimodule,
    t: &LinearMap,
) -> Result<DendriformStructure> {
    check_t_shape(a, m, t)?;
    let tinv = t.m.invert()?;
    let n = a.dim();
    let mut prec = Tensor3::cube(n);
    let mut succ = Tensor3::cube(n);
    for i in 0..n {
        let x = basis_vector(n, i);
        for j in 0..n {
            let y = basis_vector(n, j);
            let s = t.apply(&act(m.l(), &x, &tinv.mul_vec(&y)));
            let p = t.apply(&act(m.r(), &y, &tinv.mul_vec(&x)));
            for k in 0..n {
                succ[(i, j, k)] = s[k].clone();
                prec[(i, j, k)] = p[k].clone();
            }
        }
    }
    DendriformStructure::new(a.q().clone(), prec, succ)
}

/// `T` with `(Tx)_i = ω(x, e_i)`, i.e. the transpose of the Gram matrix.
pub fn omega_map(w: &BilinearForm) -> LinearMap {
    LinearMap::new(w.gram().transpose())
}

/// `x ≻ y = T⁻¹(R(x)ᵀ·Ty)`, `x ≺ y = T⁻¹(L(y)ᵀ·Tx)` with `T` from
/// [`omega_map`]. Then `ω(x≻y, z) = ω(y, z∗x)` and `ω(x≺y, z) = ω(x, y∗z)`.
pub fn dendriform_from_symplectic(a: &StructureAlgebra, w: &BilinearForm) -> Result<DendriformStructure> {
    let report = check_symplectic(a, w)?;
    if !w.is_nondegenerate() {
        return Err(Error::Singular { rank: w.gram().rank(), dim: w.dim() });
    }
    if !report.passed() {
        return Err(Error::NotSymplectic { violations: report.failed() });
    }
    dendriform_from_symplectic_unchecked(a, w)
}

/// As [`dendriform_from_symplectic`] without the cyclic and antisymmetry
/// checks. The form must still be nondegenerate.
pub fn dendriform_from_symplectic_unchecked(a: &StructureAlgebra, w: &BilinearForm) -> Result<DendriformStructure> {
    if a.dim() != w.dim() {
        return Err(Error::dimension("form and algebra dimensions differ"));
    }
    let t = omega_map(w);
    let tinv = t.m.invert()?;
    let (l, r) = a.mult_operators();
    let n = a.dim();
    let mut prec = Tensor3::cube(n);
    let mut succ = Tensor3::cube(n);
    for i in 0..n {
        for j in 0..n {
            let s = tinv.mul_vec(&r[i].transpose().mul_vec(&t.m.column(j)));
            let p = tinv.mul_vec(&l[j].transpose().mul_vec(&t.m.column(i)));
            for k in 0..n {
                succ[(i, j, k)] = s[k].clone();
                prec[(i, j, k)] = p[k].clone();
            }
        }
    }
    DendriformStructure::new(a.q().clone(), prec, succ)
}

/// Both identities linking `ω` and the structure, on all basis triples:
/// `ω(x≻y, z) = ω(y, z∗x)` (`succ`) and `ω(x≺y, z) = ω(x, y∗z)` (`prec`).
pub fn check_omega_compatibility(
    a: &StructureAlgebra,
    w: &BilinearForm,
    d: &DendriformStructure,
) -> Result<CheckReport> {
    if a.dim() != w.dim() || a.dim() != d.dim() {
        return Err(Error::dimension("algebra, form and structure dimensions differ"));
    }
    let n = a.dim();
    let e = |i| basis_vector(n, i);
    let mut report = CheckReport::new("triples");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let idx = [i + 1, j + 1, k + 1];
                let lhs = w.eval(&d.succ(&e(i), &e(j)), &e(k));
                let rhs = w.eval(&e(j), a.basis_product(k, i));
                report.check("succ", &idx, vec![lhs - rhs]);
                let lhs = w.eval(&d.prec(&e(i), &e(j)), &e(k));
                let rhs = w.eval(&e(i), a.basis_product(j, k));
                report.check("prec", &idx, vec![lhs - rhs]);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dendriform::{associated_algebra, check_q_dendriform};
    use crate::forms::FormKind;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn e1e1_e2() -> StructureAlgebra {
        StructureAlgebra::from_products(2, int(-1), &[(1, 1, 2, int(1))]).unwrap()
    }

    fn tau_half() -> LinearMap {
        LinearMap::new(Matrix::diagonal(&[int(1), rat(1, 2)]))
    }

    #[test]
    fn identity_is_an_o_operator_for_one_sided_modules() {
        let a = e1e1_e2();
        let reg = Bimodule::regular(&a);
        let id = LinearMap::identity(2);
        assert!(check_o_operator(&a, &reg.left_only(), &id).unwrap().passed());
        assert!(check_o_operator(&a, &reg.right_only(), &id).unwrap().passed());
        assert!(check_o_operator(&a, &reg, &LinearMap::zero(2, 2)).unwrap().passed());
    }

    #[test]
    fn identity_with_both_actions_fails() {
        let a = e1e1_e2();
        let r = check_o_operator(&a, &Bimodule::regular(&a), &LinearMap::identity(2)).unwrap();
        assert_eq!(r.failed(), 1);
        let v = &r.violations()[0];
        // e2 − T(2e2)
        assert_eq!(v.indices, vec![1, 1]);
        assert_eq!(v.residual, vec![int(0), int(-1)]);
    }

    #[test]
    fn rota_baxter_examples() {
        let a = e1e1_e2();
        assert!(check_rota_baxter(&a, &tau_half()).unwrap().passed());
        assert!(check_rota_baxter(&a, &LinearMap::zero(2, 2)).unwrap().passed());
        let r = check_rota_baxter(&a, &LinearMap::identity(2)).unwrap();
        assert_eq!(r.failed(), 1);
        assert_eq!(r.violations()[0].indices, vec![1, 1]);
        assert!(check_rota_baxter(&a, &LinearMap::identity(3)).is_err());
    }

    #[test]
    fn induced_structure_from_rota_baxter() {
        let a = e1e1_e2();
        let reg = Bimodule::regular(&a);
        let d = induced_dendriform_on_module(&a, &reg, &tau_half()).unwrap();
        let expected =
            DendriformStructure::from_products(2, int(-1), &[(1, 1, 2, int(1))], &[(1, 1, 2, int(1))]).unwrap();
        assert_eq!(d, expected);
        assert!(check_q_dendriform(&d).passed());
        assert!(check_t_homomorphism(&a, &d, &tau_half()).unwrap().passed());

        let z = induced_dendriform_on_module(&a, &reg, &LinearMap::zero(2, 2)).unwrap();
        assert!(z.is_zero());

        let left = induced_dendriform_on_module(&a, &reg.left_only(), &LinearMap::identity(2)).unwrap();
        assert_eq!(left.succ_tensor(), a.tensor());
        assert!(left.prec_tensor().is_zero());
    }

    #[test]
    fn constructions_refuse_bad_inputs() {
        let a = e1e1_e2();
        let reg = Bimodule::regular(&a);
        let id = LinearMap::identity(2);
        assert!(matches!(induced_dendriform_on_module(&a, &reg, &id), Err(Error::NotAnOOperator { violations: 1 })));
        assert!(induced_dendriform_on_module_unchecked(&a, &reg, &id).is_ok());
        let singular = LinearMap::new(Matrix::diagonal(&[int(1), int(0)]));
        assert!(matches!(compatible_dendriform_from_o_operator(&a, &reg, &singular), Err(Error::Singular { .. })));
        assert!(matches!(compatible_dendriform_from_o_operator(&a, &reg, &id), Err(Error::NotAnOOperator { .. })));
        assert!(check_o_operator(&a, &reg, &LinearMap::zero(3, 2)).is_err());
    }

    #[test]
    fn compatible_structure_examples() {
        let a = e1e1_e2();
        let reg = Bimodule::regular(&a);
        let d = compatible_dendriform_from_o_operator(&a, &reg.left_only(), &LinearMap::identity(2)).unwrap();
        assert_eq!(d.succ_tensor(), a.tensor());
        assert!(d.prec_tensor().is_zero());

        // τ(L(x)τ⁻¹y): e1≻e1 = τ(e2) = e2/2, same for ≺
        let d = compatible_dendriform_from_o_operator(&a, &reg, &tau_half()).unwrap();
        let half = [(1, 1, 2, rat(1, 2))];
        assert_eq!(d, DendriformStructure::from_products(2, int(-1), &half, &half).unwrap());
        assert_eq!(&associated_algebra(&d), &a);
        assert!(check_q_dendriform(&d).passed());

        let z = StructureAlgebra::zero(2, int(-1));
        let d = compatible_dendriform_from_o_operator(&z, &Bimodule::regular(&z), &LinearMap::identity(2)).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn omega_map_convention() {
        let w = BilinearForm::new(Matrix::from_i64(&[&[0, 1], &[-1, 0]]), FormKind::Antisymmetric).unwrap();
        let t = omega_map(&w);
        for i in 0..2 {
            for j in 0..2 {
                let x = basis_vector(2, i);
                assert_eq!(t.apply(&x)[j], w.eval(&x, &basis_vector(2, j)));
            }
        }
    }

    #[test]
    fn symplectic_on_zero_algebra() {
        let w = BilinearForm::new(Matrix::from_i64(&[&[0, 1], &[-1, 0]]), FormKind::Antisymmetric).unwrap();
        let z = StructureAlgebra::zero(2, int(-1));
        assert!(dendriform_from_symplectic(&z, &w).unwrap().is_zero());
        // e1·e1 = e2 breaks the cyclic identity for this ω
        assert!(matches!(dendriform_from_symplectic(&e1e1_e2(), &w), Err(Error::NotSymplectic { .. })));
        let degenerate = BilinearForm::new(Matrix::zeros(2, 2), FormKind::Antisymmetric).unwrap();
        assert!(matches!(dendriform_from_symplectic(&z, &degenerate), Err(Error::Singular { .. })));
    }

    fn random_tensor(n: usize) -> impl Strategy<Value = Tensor3> {
        proptest::collection::vec(-1i64..=1, n * n * n)
            .prop_map(move |xs| Tensor3::from_flat(n, n, n, xs.into_iter().map(int).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn rota_baxter_is_o_operator_for_regular(
            c in random_tensor(2),
            m in proptest::collection::vec(-2i64..=2, 4),
        ) {
            let a = StructureAlgebra::new(int(-1), c).unwrap();
            let tau = LinearMap::new(Matrix::from_row_major(2, 2, m.into_iter().map(int).collect()).unwrap());
            let rb = check_rota_baxter(&a, &tau).unwrap().passed();
            prop_assert_eq!(rb, check_o_operator(&a, &Bimodule::regular(&a), &tau).unwrap().passed());
        }

        #[test]
        fn passing_o_operators_induce_dendriform_homomorphisms(
            m in proptest::collection::vec(-2i64..=2, 4),
            side in 0usize..3,
        ) {
            let a = e1e1_e2();
            let reg = Bimodule::regular(&a);
            let module = [reg.clone(), reg.left_only(), reg.right_only()][side].clone();
            let t = LinearMap::new(Matrix::from_row_major(2, 2, m.into_iter().map(int).collect()).unwrap());
            if check_o_operator(&a, &module, &t).unwrap().passed() {
                let d = induced_dendriform_on_module(&a, &module, &t).unwrap();
                prop_assert!(check_q_dendriform(&d).passed());
                prop_assert!(check_t_homomorphism(&a, &d, &t).unwrap().passed());
                if t.matrix().invert().is_ok() {
                    let c = compatible_dendriform_from_o_operator(&a, &module, &t).unwrap();
                    prop_assert_eq!(&associated_algebra(&c), &a);
                }
            }
        }
    }
}
