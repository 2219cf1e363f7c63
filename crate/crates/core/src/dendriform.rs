//! q-generalized dendriform algebras `(A, ≺, ≻)`: axioms, bimodules,
//! semidirect products, matched pairs and the bowtie structure.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, axpy, basis_vector, scale_vector, sub_vectors, Matrix, Tensor3, Vector};
use crate::matched_pairs::MatchedPairData;
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::representations::{act, check_action_shapes, Bimodule};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DendriformStructure {
    dim: usize,
    q: Rational,
    prec: Tensor3,
    succ: Tensor3,
}

impl DendriformStructure {
    pub fn new(q: Rational, prec: Tensor3, succ: Tensor3) -> Result<Self> {
        let pa = StructureAlgebra::new(q.clone(), prec)?;
        let sa = StructureAlgebra::new(q.clone(), succ)?;
        if pa.dim() != sa.dim() {
            return Err(Error::dimension("≺ and ≻ tensors differ in size"));
        }
        Ok(DendriformStructure { dim: pa.dim(), q, prec: pa.tensor().clone(), succ: sa.tensor().clone() })
    }

    pub fn zero(dim: usize, q: Rational) -> Self {
        DendriformStructure { dim, q, prec: Tensor3::cube(dim), succ: Tensor3::cube(dim) }
    }

    /// 1-indexed `(i, j, k, coeff)` entries for each product.
    pub fn from_products(
        dim: usize,
        q: Rational,
        prec: &[(usize, usize, usize, Rational)],
        succ: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let p = StructureAlgebra::from_products(dim, q.clone(), prec)?;
        let s = StructureAlgebra::from_products(dim, q.clone(), succ)?;
        DendriformStructure::new(q, p.tensor().clone(), s.tensor().clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn prec_tensor(&self) -> &Tensor3 {
        &self.prec
    }

    pub fn succ_tensor(&self) -> &Tensor3 {
        &self.succ
    }

    /// `≺` viewed as a bare product (its `q` is irrelevant).
    pub fn prec_algebra(&self) -> StructureAlgebra {
        StructureAlgebra::new(self.q.clone(), self.prec.clone()).expect("valid shape")
    }

    pub fn succ_algebra(&self) -> StructureAlgebra {
        StructureAlgebra::new(self.q.clone(), self.succ.clone()).expect("valid shape")
    }

    pub fn prec(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.prec_algebra().mul(x, y)
    }

    pub fn succ(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.succ_algebra().mul(x, y)
    }

    pub fn star(&self, x: &[Rational], y: &[Rational]) -> Vector {
        add_vectors(&self.prec(x, y), &self.succ(x, y))
    }

    pub fn is_zero(&self) -> bool {
        self.prec.is_zero() && self.succ.is_zero()
    }
}

/// `x ∗ y = x ≺ y + x ≻ y`, same `q`.
pub fn associated_algebra(d: &DendriformStructure) -> StructureAlgebra {
    StructureAlgebra::new(d.q.clone(), d.prec.add(&d.succ)).expect("valid shape")
}

/// The three axioms on all basis triples:
/// `(x≺y)≺z = q x≺(y∗z)`, `(x≻y)≺z = q x≻(y≺z)`, `x≻(y≻z) = q⁻¹ (x∗y)≻z`.
pub fn check_q_dendriform(d: &DendriformStructure) -> CheckReport {
    let n = d.dim;
    let (pa, sa, aa) = (d.prec_algebra(), d.succ_algebra(), associated_algebra(d));
    let q = &d.q;
    let qi = q.recip();
    let mut report = CheckReport::new("axiom instances");
    for i in 0..n {
        let x = basis_vector(n, i);
        for j in 0..n {
            for k in 0..n {
                let z = basis_vector(n, k);
                let idx = [i + 1, j + 1, k + 1];

                let lhs = pa.mul(pa.basis_product(i, j), &z);
                let rhs = pa.mul(&x, aa.basis_product(j, k));
                report.check("axiom1", &idx, sub_vectors(&lhs, &scale_vector(q, &rhs)));

                let lhs = pa.mul(sa.basis_product(i, j), &z);
                let rhs = sa.mul(&x, pa.basis_product(j, k));
                report.check("axiom2", &idx, sub_vectors(&lhs, &scale_vector(q, &rhs)));

                let lhs = sa.mul(&x, sa.basis_product(j, k));
                let rhs = sa.mul(aa.basis_product(i, j), &z);
                report.check("axiom3", &idx, sub_vectors(&lhs, &scale_vector(&qi, &rhs)));
            }
        }
    }
    report
}

/// Actions `(l≻, r≻, l≺, r≺)` of an `algebra_dim`-dimensional dendriform
/// algebra on a `module_dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformBimodule {
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub l_succ: Vec<Matrix>,
    pub r_succ: Vec<Matrix>,
    pub l_prec: Vec<Matrix>,
    pub r_prec: Vec<Matrix>,
}

impl DendriformBimodule {
    pub fn new(
        algebra_dim: usize,
        module_dim: usize,
        l_succ: Vec<Matrix>,
        r_succ: Vec<Matrix>,
        l_prec: Vec<Matrix>,
        r_prec: Vec<Matrix>,
    ) -> Result<Self> {
        for (ops, name) in [(&l_succ, "l≻"), (&r_succ, "r≻"), (&l_prec, "l≺"), (&r_prec, "r≺")] {
            check_action_shapes(ops, algebra_dim, module_dim, name)?;
        }
        Ok(DendriformBimodule { algebra_dim, module_dim, l_succ, r_succ, l_prec, r_prec })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(module_dim, module_dim); algebra_dim];
        DendriformBimodule {
            algebra_dim,
            module_dim,
            l_succ: z.clone(),
            r_succ: z.clone(),
            l_prec: z.clone(),
            r_prec: z,
        }
    }

    /// `(L≻, R≻, L≺, R≺)` acting on the structure itself.
    pub fn regular(d: &DendriformStructure) -> Self {
        let (ls, rs) = d.succ_algebra().mult_operators();
        let (lp, rp) = d.prec_algebra().mult_operators();
        DendriformBimodule { algebra_dim: d.dim, module_dim: d.dim, l_succ: ls, r_succ: rs, l_prec: lp, r_prec: rp }
    }

    pub fn l_star(&self) -> Vec<Matrix> {
        self.l_succ.iter().zip(&self.l_prec).map(|(a, b)| a.add(b)).collect()
    }

    pub fn r_star(&self) -> Vec<Matrix> {
        self.r_succ.iter().zip(&self.r_prec).map(|(a, b)| a.add(b)).collect()
    }

    /// `(l∗, r∗)` as an ordinary bimodule of the associated algebra.
    pub fn summed(&self) -> Bimodule {
        Bimodule::new(self.algebra_dim, self.module_dim, self.l_star(), self.r_star()).expect("shapes")
    }
}

/// `(l, 0, 0, r)`.
pub fn lift_assoc_bimodule(m: &Bimodule) -> DendriformBimodule {
    let z = vec![Matrix::zeros(m.module_dim(), m.module_dim()); m.algebra_dim()];
    DendriformBimodule {
        algebra_dim: m.algebra_dim(),
        module_dim: m.module_dim(),
        l_succ: m.l().to_vec(),
        r_succ: z.clone(),
        l_prec: z,
        r_prec: m.r().to_vec(),
    }
}

fn mat_residual(lhs: Matrix, rhs: Matrix) -> Vector {
    lhs.sub(&rhs).entries().to_vec()
}

/// The nine bimodule laws `dbm1`..`dbm9` on all basis pairs `(x, y) = (e_i, e_j)`.
pub fn check_dendriform_bimodule(d: &DendriformStructure, m: &DendriformBimodule) -> Result<CheckReport> {
    if m.algebra_dim != d.dim {
        return Err(Error::dimension("dendriform bimodule is over a different dimension"));
    }
    Ok(dendriform_bimodule_laws(d, m))
}

fn dendriform_bimodule_laws(d: &DendriformStructure, m: &DendriformBimodule) -> CheckReport {
    let n = d.dim;
    let md = m.module_dim;
    let q = &d.q;
    let (pa, sa, aa) = (d.prec_algebra(), d.succ_algebra(), associated_algebra(d));
    let (ls, rs, lp, rp) = (&m.l_succ, &m.r_succ, &m.l_prec, &m.r_prec);
    let (lt, rt) = (m.l_star(), m.r_star());
    let of = |ops: &[Matrix], v: &[Rational]| crate::linalg::combine(v, ops, md, md);
    let mut report = CheckReport::new("law instances");
    for x in 0..n {
        for y in 0..n {
            let idx = [x + 1, y + 1];
            let laws = [
                ("dbm1", of(lp, pa.basis_product(x, y)), lp[x].mul(&lt[y])),
                ("dbm2", rp[x].mul(&lp[y]), lp[y].mul(&rt[x])),
                ("dbm3", rp[x].mul(&rp[y]), of(rp, aa.basis_product(y, x))),
                ("dbm4", of(lp, sa.basis_product(x, y)), ls[x].mul(&lp[y])),
                ("dbm5", rp[x].mul(&ls[y]), ls[y].mul(&rp[x])),
                ("dbm6", rp[x].mul(&rs[y]), of(rs, pa.basis_product(y, x))),
                ("dbm7", of(ls, aa.basis_product(x, y)), ls[x].mul(&ls[y])),
                ("dbm8", rs[x].mul(&lt[y]), ls[y].mul(&rs[x])),
                ("dbm9", rs[x].mul(&rt[y]), of(rs, sa.basis_product(y, x))),
            ];
            for (id, lhs, rhs) in laws {
                report.check(id, &idx, mat_residual(lhs, rhs.scale(q)));
            }
        }
    }
    report
}

/// `(q⁻²(r≻ᵀ + r≺ᵀ), −q² l≺ᵀ, −q⁻² r≻ᵀ, q²(l≻ᵀ + l≺ᵀ))` on the dual space.
pub fn dual_dendriform_bimodule(m: &DendriformBimodule, q: &Rational) -> DendriformBimodule {
    let q2 = q.pow(2);
    let qm2 = q2.recip();
    let t = |ops: &[Matrix], s: &Rational| -> Vec<Matrix> { ops.iter().map(|a| a.transpose().scale(s)).collect() };
    DendriformBimodule {
        algebra_dim: m.algebra_dim,
        module_dim: m.module_dim,
        l_succ: t(&m.r_star(), &qm2),
        r_succ: t(&m.l_prec, &-&q2),
        l_prec: t(&m.r_succ, &-&qm2),
        r_prec: t(&m.l_star(), &q2),
    }
}

/// `(x + u) ≻ (y + v) = x≻y + l≻(x)v + r≻(y)u`, and likewise for `≺`.
pub fn dendriform_semidirect(d: &DendriformStructure, m: &DendriformBimodule) -> Result<DendriformStructure> {
    if m.algebra_dim != d.dim {
        return Err(Error::dimension("dendriform bimodule is over a different dimension"));
    }
    let (n, k) = (d.dim, m.module_dim);
    let build = |base: &Tensor3, l: &[Matrix], r: &[Matrix]| {
        let mut c = Tensor3::cube(n + k);
        for i in 0..n {
            for j in 0..n {
                for t in 0..n {
                    c[(i, j, t)] = base[(i, j, t)].clone();
                }
            }
            for u in 0..k {
                for t in 0..k {
                    c[(i, n + u, n + t)] = l[i][(t, u)].clone();
                    c[(n + u, i, n + t)] = r[i][(t, u)].clone();
                }
            }
        }
        c
    };
    DendriformStructure::new(d.q.clone(), build(&d.prec, &m.l_prec, &m.r_prec), build(&d.succ, &m.l_succ, &m.r_succ))
}

/// Two dendriform structures acting on each other. `act_a` holds the four
/// actions of A (indexed by A's basis) on B's space; `act_b` the reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformMatchedPairData {
    pub da: DendriformStructure,
    pub db: DendriformStructure,
    pub act_a: DendriformBimodule,
    pub act_b: DendriformBimodule,
}

impl DendriformMatchedPairData {
    pub fn new(
        da: DendriformStructure,
        db: DendriformStructure,
        act_a: DendriformBimodule,
        act_b: DendriformBimodule,
    ) -> Result<Self> {
        if da.q != db.q {
            return Err(Error::InvalidParameter("dendriform structures have different q".into()));
        }
        if act_a.algebra_dim != da.dim || act_a.module_dim != db.dim {
            return Err(Error::dimension("actions of A must be indexed by A and act on B"));
        }
        if act_b.algebra_dim != db.dim || act_b.module_dim != da.dim {
            return Err(Error::dimension("actions of B must be indexed by B and act on A"));
        }
        Ok(DendriformMatchedPairData { da, db, act_a, act_b })
    }

    /// The associated matched pair `(A∗, B∗, l∗_A, r∗_A, l∗_B, r∗_B)`.
    pub fn summed(&self) -> MatchedPairData {
        MatchedPairData::new(
            associated_algebra(&self.da),
            associated_algebra(&self.db),
            self.act_a.l_star(),
            self.act_a.r_star(),
            self.act_b.l_star(),
            self.act_b.r_star(),
        )
        .expect("shapes validated at construction")
    }
}

/// Conditions with home `h` (holding a, b) and actor `x`. `on_h` are the
/// actions of the actor on h's space, `on_x` those of h on the actor's space.
/// Identity ids are `dmp{first}`..`dmp{first+8}`.
fn matched_pair_family(
    h: &DendriformStructure,
    xdim: usize,
    on_h: &DendriformBimodule,
    on_x: &DendriformBimodule,
    first: usize,
    report: &mut CheckReport,
) {
    let m = h.dim;
    let q = &h.q;
    let qi = q.recip();
    let one = Rational::one();
    let (hp, hs) = (h.prec_algebra(), h.succ_algebra());
    let (xl_star, xr_star) = (on_h.l_star(), on_h.r_star());
    let (hl_star, hr_star) = (on_x.l_star(), on_x.r_star());
    let id = |k: usize| format!("dmp{}", first + k);

    for xi in 0..xdim {
        let x = basis_vector(xdim, xi);
        for s in 0..m {
            let a = basis_vector(m, s);
            for t in 0..m {
                let b = basis_vector(m, t);
                let a_prec_b = hp.basis_product(s, t);
                let a_succ_b = hs.basis_product(s, t);
                let a_star_b = add_vectors(a_prec_b, a_succ_b);

                // (a, b, x)
                let idx = [s + 1, t + 1, xi + 1];
                let mut r = on_h.r_prec[xi].mul_vec(a_prec_b);
                let mut rhs = hp.mul(&a, &xr_star[xi].mul_vec(&b));
                axpy(&mut rhs, &one, &act(&on_h.r_prec, &hl_star[t].mul_vec(&x), &a));
                axpy(&mut r, &-q, &rhs);
                report.check(&id(0), &idx, r);

                let mut r = on_h.r_prec[xi].mul_vec(a_succ_b);
                let mut rhs = hs.mul(&a, &on_h.r_prec[xi].mul_vec(&b));
                axpy(&mut rhs, &one, &act(&on_h.r_succ, &on_x.l_prec[t].mul_vec(&x), &a));
                axpy(&mut r, &-q, &rhs);
                report.check(&id(3), &idx, r);

                let mut r = hs.mul(&a, &on_h.r_succ[xi].mul_vec(&b));
                axpy(&mut r, &one, &act(&on_h.r_succ, &on_x.l_succ[t].mul_vec(&x), &a));
                axpy(&mut r, &-&qi, &on_h.r_succ[xi].mul_vec(&a_star_b));
                report.check(&id(6), &idx, r);

                // (a, x, b)
                let idx = [s + 1, xi + 1, t + 1];
                let mut r = hp.mul(&on_h.r_prec[xi].mul_vec(&a), &b);
                axpy(&mut r, &one, &act(&on_h.l_prec, &on_x.l_prec[s].mul_vec(&x), &b));
                let mut rhs = hp.mul(&a, &xl_star[xi].mul_vec(&b));
                axpy(&mut rhs, &one, &act(&on_h.r_prec, &hr_star[t].mul_vec(&x), &a));
                axpy(&mut r, &-q, &rhs);
                report.check(&id(1), &idx, r);

                let mut r = hp.mul(&on_h.r_succ[xi].mul_vec(&a), &b);
                axpy(&mut r, &one, &act(&on_h.l_prec, &on_x.l_succ[s].mul_vec(&x), &b));
                let mut rhs = hs.mul(&a, &on_h.l_prec[xi].mul_vec(&b));
                axpy(&mut rhs, &one, &act(&on_h.r_succ, &on_x.r_prec[t].mul_vec(&x), &a));
                axpy(&mut r, &-q, &rhs);
                report.check(&id(4), &idx, r);

                let mut r = hs.mul(&a, &on_h.l_succ[xi].mul_vec(&b));
                axpy(&mut r, &one, &act(&on_h.r_succ, &on_x.r_succ[t].mul_vec(&x), &a));
                let mut rhs = hs.mul(&xr_star[xi].mul_vec(&a), &b);
                axpy(&mut rhs, &one, &act(&on_h.l_succ, &hl_star[s].mul_vec(&x), &b));
                axpy(&mut r, &-&qi, &rhs);
                report.check(&id(7), &idx, r);

                // (x, a, b)
                let idx = [xi + 1, s + 1, t + 1];
                let mut r = hp.mul(&on_h.l_prec[xi].mul_vec(&a), &b);
                axpy(&mut r, &one, &act(&on_h.l_prec, &on_x.r_prec[s].mul_vec(&x), &b));
                axpy(&mut r, &-q, &on_h.l_prec[xi].mul_vec(&a_star_b));
                report.check(&id(2), &idx, r);

                let mut r = hp.mul(&on_h.l_succ[xi].mul_vec(&a), &b);
                axpy(&mut r, &one, &act(&on_h.l_prec, &on_x.r_succ[s].mul_vec(&x), &b));
                axpy(&mut r, &-q, &on_h.l_succ[xi].mul_vec(a_prec_b));
                report.check(&id(5), &idx, r);

                let mut r = on_h.l_succ[xi].mul_vec(a_succ_b);
                let mut rhs = hs.mul(&xl_star[xi].mul_vec(&a), &b);
                axpy(&mut rhs, &one, &act(&on_h.l_succ, &hr_star[s].mul_vec(&x), &b));
                axpy(&mut r, &-&qi, &rhs);
                report.check(&id(8), &idx, r);
            }
        }
    }
}

/// Only the eighteen compatibility conditions `dmp1`..`dmp18`.
pub fn dendriform_matched_pair_equations(p: &DendriformMatchedPairData) -> CheckReport {
    let mut report = CheckReport::new("triples");
    matched_pair_family(&p.db, p.da.dim, &p.act_a, &p.act_b, 1, &mut report);
    matched_pair_family(&p.da, p.db.dim, &p.act_b, &p.act_a, 10, &mut report);
    report
}

/// Preconditions (both structures dendriform, both action families
/// dendriform bimodules) plus `dmp1`..`dmp18`.
pub fn check_dendriform_matched_pair(p: &DendriformMatchedPairData) -> CheckReport {
    let mut report = CheckReport::new("instances");
    report.absorb("pre:A", check_q_dendriform(&p.da));
    report.absorb("pre:B", check_q_dendriform(&p.db));
    report.absorb("pre:bimodule-A", dendriform_bimodule_laws(&p.da, &p.act_a));
    report.absorb("pre:bimodule-B", dendriform_bimodule_laws(&p.db, &p.act_b));
    report.absorb("", dendriform_matched_pair_equations(p));
    report
}

/// Both products on `A ⊕ B`, basis `(e_1..e_n, f_1..f_m)`.
pub fn dendriform_bowtie(p: &DendriformMatchedPairData) -> DendriformStructure {
    let (n, m) = (p.da.dim, p.db.dim);
    let build = |ta: &Tensor3, tb: &Tensor3, la: &[Matrix], ra: &[Matrix], lb: &[Matrix], rb: &[Matrix]| {
        let mut c = Tensor3::cube(n + m);
        let mut put = |i: usize, j: usize, off: usize, v: &[Rational]| {
            for (k, x) in v.iter().enumerate() {
                c[(i, j, off + k)] += x;
            }
        };
        for i in 0..n {
            for j in 0..n {
                put(i, j, 0, ta.fiber(i, j));
            }
            for t in 0..m {
                put(i, n + t, 0, &rb[t].column(i));
                put(i, n + t, n, &la[i].column(t));
                put(n + t, i, 0, &lb[t].column(i));
                put(n + t, i, n, &ra[i].column(t));
            }
        }
        for s in 0..m {
            for t in 0..m {
                put(n + s, n + t, n, tb.fiber(s, t));
            }
        }
        c
    };
    let (aa, ab) = (&p.act_a, &p.act_b);
    let prec = build(&p.da.prec, &p.db.prec, &aa.l_prec, &aa.r_prec, &ab.l_prec, &ab.r_prec);
    let succ = build(&p.da.succ, &p.db.succ, &aa.l_succ, &aa.r_succ, &ab.l_succ, &ab.r_succ);
    DendriformStructure::new(p.da.q.clone(), prec, succ).expect("cubic")
}
