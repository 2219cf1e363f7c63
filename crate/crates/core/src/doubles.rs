//! Quadratic and symplectic double constructions on `A ⊕ A*`, the criteria
//! that decide when they exist, and isomorphisms between doubles.
//!
//! Coordinates on `A ⊕ A*` are `(e_1..e_n, e_1*..e_n*)`. Dual actions are
//! transposes of multiplication operators in the dual basis.

use serde::{Deserialize, Serialize};

use crate::algebra::{check_homomorphism, StructureAlgebra};
use crate::dendriform::{
    associated_algebra, check_q_dendriform, DendriformBimodule, DendriformMatchedPairData, DendriformStructure,
};
use crate::error::{Error, Result};
use crate::forms::{check_invariant_symmetric, check_symplectic, natural_forms, BilinearForm};
use crate::linalg::{add_vectors, basis_vector, zero_vector, Matrix, Tensor3, Vector};
use crate::matched_pairs::{bowtie, matched_pair_equations, MatchedPairData};
use crate::operators::LinearMap;
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::representations::check_bimodule_ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoubleKind {
    Quadratic,
    Symplectic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleConstruction {
    pub total: StructureAlgebra,
    pub form: BilinearForm,
    pub half_dim: usize,
    pub kind: DoubleKind,
    /// The matched pair the total algebra was assembled from.
    pub data: MatchedPairData,
    pub report: CheckReport,
}

impl DoubleConstruction {
    /// The matched-pair verdict alone (halves, actions and the six equations),
    /// ignoring the form and closure conditions.
    pub fn matched_pair_passed(&self) -> bool {
        const PARTS: [&str; 6] = ["dendriform-A:", "dendriform-A*:", "A:", "A*:", "bimodule-", "matched-pair:"];
        !self.report.violations().iter().any(|v| PARTS.iter().any(|p| v.identity.starts_with(p)))
    }
}

fn check_halves(a: &StructureAlgebra, b: &StructureAlgebra) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::dimension(format!("A has dimension {} but A* has {}", a.dim(), b.dim())));
    }
    let minus_one = -Rational::one();
    if *a.q() != minus_one || *b.q() != minus_one {
        return Err(Error::InvalidParameter("double constructions need q = -1 on both halves".into()));
    }
    Ok(())
}

fn transposed(ops: &[Matrix]) -> Vec<Matrix> {
    ops.iter().map(Matrix::transpose).collect()
}

/// Both halves closed under the total product.
fn closure_report(total: &StructureAlgebra, n: usize) -> CheckReport {
    let mut report = CheckReport::new("pairs");
    for i in 0..n {
        for j in 0..n {
            let uv = total.basis_product(i, j);
            report.check("A", &[i + 1, j + 1], uv[n..].to_vec());
            let ab = total.basis_product(n + i, n + j);
            report.check("A*", &[i + 1, j + 1], ab[..n].to_vec());
        }
    }
    report
}

fn matched_pair_parts(report: &mut CheckReport, data: &MatchedPairData) {
    let n = data.a.dim();
    report.absorb("A", data.a.check_q_associative());
    report.absorb("A*", data.b.check_q_associative());
    report.absorb("bimodule-A", check_bimodule_ops(&data.a, &data.l_a, &data.r_a, n));
    report.absorb("bimodule-A*", check_bimodule_ops(&data.b, &data.l_b, &data.r_b, n));
    report.absorb("matched-pair", matched_pair_equations(data));
}

/// `(A, A*, R*·, L*·, R*∘, L*∘)` assembled into `A ⋈ A*` with the natural
/// symmetric form. Never refuses on mathematical grounds: every failed
/// condition is listed in the report.
pub fn build_quadratic_double(a: &StructureAlgebra, astar: &StructureAlgebra) -> Result<DoubleConstruction> {
    check_halves(a, astar)?;
    let n = a.dim();
    let (la, ra) = a.mult_operators();
    let (lb, rb) = astar.mult_operators();
    let data = MatchedPairData::new(
        a.clone(),
        astar.clone(),
        transposed(&ra),
        transposed(&la),
        transposed(&rb),
        transposed(&lb),
    )?;
    let total = bowtie(&data);
    let form = natural_forms(n).0;
    let mut report = CheckReport::new("instances");
    matched_pair_parts(&mut report, &data);
    report.absorb("total", total.check_q_associative());
    report.absorb("form", check_invariant_symmetric(&total, &form)?);
    report.absorb("closure", closure_report(&total, n));
    Ok(DoubleConstruction { total, form, half_dim: n, kind: DoubleKind::Quadratic, data, report })
}

// Contractions against structure constants. For a product tensor `c` on a
// space W acting on its dual through the pairing:
//   right_dual: (R*(x)v)_t = Σ c[t][i][s] x_i v_s   from ⟨R*(x)v, y⟩ = ⟨yx, v⟩
//   left_dual:  (L*(x)v)_t = Σ c[i][t][s] x_i v_s   from ⟨L*(x)v, y⟩ = ⟨xy, v⟩

fn right_dual(c: &Tensor3, x: &[Rational], v: &[Rational]) -> Vector {
    let n = x.len();
    let mut out = zero_vector(n);
    for (t, o) in out.iter_mut().enumerate() {
        for i in 0..n {
            for s in 0..n {
                if !x[i].is_zero() && !v[s].is_zero() {
                    *o += &(&c[(t, i, s)] * &x[i]) * &v[s];
                }
            }
        }
    }
    out
}

fn left_dual(c: &Tensor3, x: &[Rational], v: &[Rational]) -> Vector {
    let n = x.len();
    let mut out = zero_vector(n);
    for (t, o) in out.iter_mut().enumerate() {
        for i in 0..n {
            for s in 0..n {
                if !x[i].is_zero() && !v[s].is_zero() {
                    *o += &(&c[(i, t, s)] * &x[i]) * &v[s];
                }
            }
        }
    }
    out
}

fn product(c: &Tensor3, x: &[Rational], y: &[Rational]) -> Vector {
    let n = x.len();
    let mut out = zero_vector(n);
    for (k, o) in out.iter_mut().enumerate() {
        for i in 0..n {
            for j in 0..n {
                if !x[i].is_zero() && !y[j].is_zero() {
                    *o += &(&c[(i, j, k)] * &x[i]) * &y[j];
                }
            }
        }
    }
    out
}

fn sum(terms: &[Vector]) -> Vector {
    terms.iter().skip(1).fold(terms[0].clone(), |acc, t| add_vectors(&acc, t))
}

/// The dual matched-pair criterion on all `(x, a*, b*)` basis triples, with
/// antiassociativity of both halves as preconditions:
///
/// `dual1`: `R*(x)(a*∘b*) + R*(L*∘(a*)x)b* + (R*(x)a*)∘b* = 0`
///
/// `dual2`: `R*(R*∘(a*)x)b* + (L*(x)a*)∘b* + L*(L*∘(b*)x)a* + a*∘(R*(x)b*) = 0`
pub fn check_dual_matched_pair_criterion(a: &StructureAlgebra, astar: &StructureAlgebra) -> Result<CheckReport> {
    check_halves(a, astar)?;
    let n = a.dim();
    let (ca, cb) = (a.tensor(), astar.tensor());
    let mut report = CheckReport::new("instances");
    report.absorb("pre:A", a.check_q_associative());
    report.absorb("pre:A*", astar.check_q_associative());
    let e = |i| basis_vector(n, i);
    for i in 0..n {
        let x = e(i);
        for s in 0..n {
            let a_ = e(s);
            for t in 0..n {
                let b = e(t);
                let idx = [i + 1, s + 1, t + 1];
                let r1 = sum(&[
                    right_dual(ca, &x, &product(cb, &a_, &b)),
                    right_dual(ca, &left_dual(cb, &a_, &x), &b),
                    product(cb, &right_dual(ca, &x, &a_), &b),
                ]);
                report.check("dual1", &idx, r1);
                let r2 = sum(&[
                    right_dual(ca, &right_dual(cb, &a_, &x), &b),
                    product(cb, &left_dual(ca, &x, &a_), &b),
                    left_dual(ca, &left_dual(cb, &b, &x), &a_),
                    product(cb, &a_, &right_dual(ca, &x, &b)),
                ]);
                report.check("dual2", &idx, r2);
            }
        }
    }
    Ok(report)
}

fn check_dendriform_halves(da: &DendriformStructure, db: &DendriformStructure) -> Result<()> {
    check_halves(&associated_algebra(da), &associated_algebra(db))
}

/// `(A, A*, R*≺_A, L*≻_A, R*≺_A*, L*≻_A*)` assembled into `A ⋈ A*` with the
/// natural symplectic form. Audit mode, like the quadratic builder.
pub fn build_symplectic_double(da: &DendriformStructure, dastar: &DendriformStructure) -> Result<DoubleConstruction> {
    check_dendriform_halves(da, dastar)?;
    let n = da.dim();
    let (_, rp_a) = da.prec_algebra().mult_operators();
    let (ls_a, _) = da.succ_algebra().mult_operators();
    let (_, rp_b) = dastar.prec_algebra().mult_operators();
    let (ls_b, _) = dastar.succ_algebra().mult_operators();
    let data = MatchedPairData::new(
        associated_algebra(da),
        associated_algebra(dastar),
        transposed(&rp_a),
        transposed(&ls_a),
        transposed(&rp_b),
        transposed(&ls_b),
    )?;
    let total = bowtie(&data);
    let form = natural_forms(n).1;
    let mut report = CheckReport::new("instances");
    report.absorb("dendriform-A", check_q_dendriform(da));
    report.absorb("dendriform-A*", check_q_dendriform(dastar));
    matched_pair_parts(&mut report, &data);
    report.absorb("total", total.check_q_associative());
    report.absorb("form", check_symplectic(&total, &form)?);
    report.absorb("closure", closure_report(&total, n));
    Ok(DoubleConstruction { total, form, half_dim: n, kind: DoubleKind::Symplectic, data, report })
}

/// The six matched-pair conditions for the symplectic data written out
/// over basis triples from the `≺`/`≻` structure constants, with both
/// dendriform structures' axioms as preconditions. With
/// `R*≺_A` = rp_a, `L*≻_A` = ls_a, `R*≺_A*` = rp_b, `L*≻_A*` = ls_b:
///
/// - `sym1` (x,a*,b*): `rp_a(x)(a*∗b*) + rp_a(ls_b(a*)x)b* + (rp_a(x)a*)∗b*`
/// - `sym2` (x,a*,b*): `ls_a(x)(a*∗b*) + ls_a(rp_b(b*)x)a* + a*∗(ls_a(x)b*)`
/// - `sym3` (a*,x,y): `rp_b(a*)(x∗y) + rp_b(ls_a(x)a*)y + (rp_b(a*)x)∗y`
/// - `sym4` (a*,x,y): `ls_b(a*)(x∗y) + ls_b(rp_a(y)a*)x + x∗(ls_b(a*)y)`
/// - `sym5` (x,a*,b*): `rp_a(rp_b(a*)x)b* + (ls_a(x)a*)∗b* + ls_a(ls_b(b*)x)a* + a*∗(rp_a(x)b*)`
/// - `sym6` (a*,x,y): `rp_b(rp_a(x)a*)y + (ls_b(a*)x)∗y + ls_b(ls_a(y)a*)x + x∗(rp_b(a*)y)`
///
/// each required to vanish.
pub fn check_symplectic_criterion(da: &DendriformStructure, dastar: &DendriformStructure) -> Result<CheckReport> {
    check_dendriform_halves(da, dastar)?;
    let n = da.dim();
    let (pa, sa) = (da.prec_tensor(), da.succ_tensor());
    let (pb, sb) = (dastar.prec_tensor(), dastar.succ_tensor());
    let (ca, cb) = (pa.add(sa), pb.add(sb));
    let rp_a = |x: &[Rational], v: &[Rational]| right_dual(pa, x, v);
    let ls_a = |x: &[Rational], v: &[Rational]| left_dual(sa, x, v);
    let rp_b = |a: &[Rational], y: &[Rational]| right_dual(pb, a, y);
    let ls_b = |a: &[Rational], y: &[Rational]| left_dual(sb, a, y);
    let mul_a = |x: &[Rational], y: &[Rational]| product(&ca, x, y);
    let mul_b = |x: &[Rational], y: &[Rational]| product(&cb, x, y);

    let mut report = CheckReport::new("instances");
    report.absorb("pre:dendriform-A", check_q_dendriform(da));
    report.absorb("pre:dendriform-A*", check_q_dendriform(dastar));
    let e = |i| basis_vector(n, i);
    for p in 0..n {
        for s in 0..n {
            for t in 0..n {
                let idx = [p + 1, s + 1, t + 1];
                // (x, a*, b*)
                let (x, a, b) = (e(p), e(s), e(t));
                let ab = mul_b(&a, &b);
                report.check("sym1", &idx, sum(&[rp_a(&x, &ab), rp_a(&ls_b(&a, &x), &b), mul_b(&rp_a(&x, &a), &b)]));
                report.check("sym2", &idx, sum(&[ls_a(&x, &ab), ls_a(&rp_b(&b, &x), &a), mul_b(&a, &ls_a(&x, &b))]));
                report.check(
                    "sym5",
                    &idx,
                    sum(&[
                        rp_a(&rp_b(&a, &x), &b),
                        mul_b(&ls_a(&x, &a), &b),
                        ls_a(&ls_b(&b, &x), &a),
                        mul_b(&a, &rp_a(&x, &b)),
                    ]),
                );
                // (a*, x, y)
                let (a, x, y) = (e(p), e(s), e(t));
                let xy = mul_a(&x, &y);
                report.check("sym3", &idx, sum(&[rp_b(&a, &xy), rp_b(&ls_a(&x, &a), &y), mul_a(&rp_b(&a, &x), &y)]));
                report.check("sym4", &idx, sum(&[ls_b(&a, &xy), ls_b(&rp_a(&y, &a), &x), mul_a(&x, &ls_b(&a, &y))]));
                report.check(
                    "sym6",
                    &idx,
                    sum(&[
                        rp_b(&rp_a(&x, &a), &y),
                        mul_a(&ls_b(&a, &x), &y),
                        ls_b(&ls_a(&y, &a), &x),
                        mul_a(&x, &rp_b(&a, &y)),
                    ]),
                );
            }
        }
    }
    Ok(report)
}

/// `(R*≻ + R*≺, −L*≺, −R*≻, L*≻ + L*≺)` of one side acting on the other.
fn octuple_side(d: &DendriformStructure) -> DendriformBimodule {
    let (ls, rs) = d.succ_algebra().mult_operators();
    let (lp, rp) = d.prec_algebra().mult_operators();
    let neg = -Rational::one();
    let n = d.dim();
    let t_sum = |a: &[Matrix], b: &[Matrix]| a.iter().zip(b).map(|(x, y)| x.add(y).transpose()).collect::<Vec<_>>();
    let t_neg = |a: &[Matrix]| a.iter().map(|x| x.transpose().scale(&neg)).collect::<Vec<_>>();
    DendriformBimodule::new(n, n, t_sum(&rs, &rp), t_neg(&lp), t_neg(&rs), t_sum(&ls, &lp)).expect("square actions")
}

/// The dendriform matched pair of `A` and `A*` whose bowtie carries the
/// structure induced by the natural symplectic form.
pub fn octuple_from_symplectic_pair(
    da: &DendriformStructure,
    dastar: &DendriformStructure,
) -> Result<DendriformMatchedPairData> {
    check_dendriform_halves(da, dastar)?;
    DendriformMatchedPairData::new(da.clone(), dastar.clone(), octuple_side(da), octuple_side(dastar))
}

/// Invertible, multiplicative, maps `A₁ → A₂` and `A₁* → A₂*`, and pulls
/// `ω₂` (or `B₂`) back to the first form: `φᵀ·G₂·φ = G₁`.
pub fn verify_double_isomorphism(
    t1: &DoubleConstruction,
    t2: &DoubleConstruction,
    phi: &LinearMap,
) -> Result<CheckReport> {
    let n = t1.half_dim;
    if t2.half_dim != n || phi.src_dim() != 2 * n || phi.dst_dim() != 2 * n {
        return Err(Error::dimension(format!("φ must be a {0}x{0} map between doubles of the same size", 2 * n)));
    }
    let m = phi.matrix();
    let mut report = CheckReport::new("instances");
    report.require("invertible", m.invert().is_ok());
    report.absorb("", check_homomorphism(&t1.total, &t2.total, m)?);
    for i in 0..n {
        report.check("preserves-A", &[i + 1], m.column(i)[n..].to_vec());
        report.check("preserves-A*", &[i + 1], m.column(n + i)[..n].to_vec());
    }
    let pulled = m.transpose().mul(t2.form.gram()).mul(m);
    for i in 0..2 * n {
        for j in 0..2 * n {
            let r = &pulled[(i, j)] - t1.form.entry(i, j);
            report.check("form-pullback", &[i + 1, j + 1], vec![r]);
        }
    }
    Ok(report)
}
