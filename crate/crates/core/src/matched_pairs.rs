//! Matched pairs `(A, B, l_A, r_A, l_B, r_B)` and the bowtie product on `A ⊕ B`.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, axpy, basis_vector, scale_vector, sub_vectors, Matrix, Tensor3, Vector};
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::representations::{act, check_action_shapes, check_bimodule_ops, Bimodule};

/// `l_a`, `r_a` are indexed by A's basis and act on B; `l_b`, `r_b` the reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: StructureAlgebra,
    pub b: StructureAlgebra,
    pub l_a: Vec<Matrix>,
    pub r_a: Vec<Matrix>,
    pub l_b: Vec<Matrix>,
    pub r_b: Vec<Matrix>,
}

impl MatchedPairData {
    pub fn new(
        a: StructureAlgebra,
        b: StructureAlgebra,
        l_a: Vec<Matrix>,
        r_a: Vec<Matrix>,
        l_b: Vec<Matrix>,
        r_b: Vec<Matrix>,
    ) -> Result<Self> {
        if a.q() != b.q() {
            return Err(Error::InvalidParameter(format!(
                "matched pair algebras have different q ({} and {})",
                a.q(),
                b.q()
            )));
        }
        check_action_shapes(&l_a, a.dim(), b.dim(), "l_A")?;
        check_action_shapes(&r_a, a.dim(), b.dim(), "r_A")?;
        check_action_shapes(&l_b, b.dim(), a.dim(), "l_B")?;
        check_action_shapes(&r_b, b.dim(), a.dim(), "r_B")?;
        Ok(MatchedPairData { a, b, l_a, r_a, l_b, r_b })
    }

    /// B carries the zero product and acts trivially: the semidirect case.
    pub fn from_bimodule(a: StructureAlgebra, m: &Bimodule) -> Result<Self> {
        let d = m.module_dim();
        let b = StructureAlgebra::zero(d, a.q().clone());
        let z = vec![Matrix::zeros(a.dim(), a.dim()); d];
        MatchedPairData::new(a, b, m.l().to_vec(), m.r().to_vec(), z.clone(), z)
    }
}

/// Preconditions (both algebras q-associative, both action pairs bimodules)
/// followed by the six compatibility equations `eq1`..`eq6` on basis elements.
/// The verdict covers everything; precondition failures carry a `pre:` prefix.
pub fn check_matched_pair(p: &MatchedPairData) -> CheckReport {
    let mut report = CheckReport::new("instances");
    report.absorb("pre:A", p.a.check_q_associative());
    report.absorb("pre:B", p.b.check_q_associative());
    report.absorb("pre:bimodule-A", check_bimodule_ops(&p.a, &p.l_a, &p.r_a, p.b.dim()));
    report.absorb("pre:bimodule-B", check_bimodule_ops(&p.b, &p.l_b, &p.r_b, p.a.dim()));
    report.absorb("", matched_pair_equations(p));
    report
}

/// Only the six compatibility equations, without preconditions.
pub fn matched_pair_equations(p: &MatchedPairData) -> CheckReport {
    let (n, m) = (p.a.dim(), p.b.dim());
    let q = p.a.q();
    let qi = q.recip();
    let one = Rational::one();
    let ea = |i| basis_vector(n, i);
    let eb = |i| basis_vector(m, i);
    let mut report = CheckReport::new("triples");

    // x in A, a, b in B: results in B
    for i in 0..n {
        let x = ea(i);
        for s in 0..m {
            let a = eb(s);
            for t in 0..m {
                let b = eb(t);
                let idx = [i + 1, s + 1, t + 1];
                let ab = p.b.basis_product(s, t);

                // l_A(x)(a∘b) = q⁻¹ l_A(r_B(a)x)b + q⁻¹ (l_A(x)a)∘b
                let lhs = p.l_a[i].mul_vec(ab);
                let mut rhs = act(&p.l_a, &p.r_b[s].mul_vec(&x), &b);
                rhs = add_vectors(&rhs, &p.b.mul(&p.l_a[i].mul_vec(&a), &b));
                report.check("mp1", &idx, sub_vectors(&lhs, &scale_vector(&qi, &rhs)));

                // r_A(x)(a∘b) = q r_A(l_B(b)x)a + q a∘(r_A(x)b)
                let lhs = p.r_a[i].mul_vec(ab);
                let mut rhs = act(&p.r_a, &p.l_b[t].mul_vec(&x), &a);
                rhs = add_vectors(&rhs, &p.b.mul(&a, &p.r_a[i].mul_vec(&b)));
                report.check("mp2", &idx, sub_vectors(&lhs, &scale_vector(q, &rhs)));

                // l_A(l_B(a)x)b + (r_A(x)a)∘b = q r_A(r_B(b)x)a + q a∘(l_A(x)b)
                let mut lhs = act(&p.l_a, &p.l_b[s].mul_vec(&x), &b);
                axpy(&mut lhs, &one, &p.b.mul(&p.r_a[i].mul_vec(&a), &b));
                let mut rhs = act(&p.r_a, &p.r_b[t].mul_vec(&x), &a);
                rhs = add_vectors(&rhs, &p.b.mul(&a, &p.l_a[i].mul_vec(&b)));
                report.check("mp5", &idx, sub_vectors(&lhs, &scale_vector(q, &rhs)));
            }
        }
    }

    // a in B, x, y in A: results in A
    for s in 0..m {
        let a = eb(s);
        for i in 0..n {
            let x = ea(i);
            for j in 0..n {
                let y = ea(j);
                let idx = [s + 1, i + 1, j + 1];
                let xy = p.a.basis_product(i, j);

                // l_B(a)(x·y) = q⁻¹ l_B(r_A(x)a)y + q⁻¹ (l_B(a)x)·y
                let lhs = p.l_b[s].mul_vec(xy);
                let mut rhs = act(&p.l_b, &p.r_a[i].mul_vec(&a), &y);
                rhs = add_vectors(&rhs, &p.a.mul(&p.l_b[s].mul_vec(&x), &y));
                report.check("mp3", &idx, sub_vectors(&lhs, &scale_vector(&qi, &rhs)));

                // r_B(a)(x·y) = q r_B(l_A(y)a)x + q x·(r_B(a)y)
                let lhs = p.r_b[s].mul_vec(xy);
                let mut rhs = act(&p.r_b, &p.l_a[j].mul_vec(&a), &x);
                rhs = add_vectors(&rhs, &p.a.mul(&x, &p.r_b[s].mul_vec(&y)));
                report.check("mp4", &idx, sub_vectors(&lhs, &scale_vector(q, &rhs)));

                // l_B(l_A(x)a)y + (r_B(a)x)·y = q r_B(r_A(y)a)x + q x·(l_B(a)y)
                let mut lhs = act(&p.l_b, &p.l_a[i].mul_vec(&a), &y);
                axpy(&mut lhs, &one, &p.a.mul(&p.r_b[s].mul_vec(&x), &y));
                let mut rhs = act(&p.r_b, &p.r_a[j].mul_vec(&a), &x);
                rhs = add_vectors(&rhs, &p.a.mul(&x, &p.l_b[s].mul_vec(&y)));
                report.check("mp6", &idx, sub_vectors(&lhs, &scale_vector(q, &rhs)));
            }
        }
    }
    report
}

/// `(x + a)(y + b) = (xy + l_B(a)y + r_B(b)x) + (a∘b + l_A(x)b + r_A(y)a)`,
/// basis `(e_1..e_n, f_1..f_m)`. Built unconditionally.
pub fn bowtie(p: &MatchedPairData) -> StructureAlgebra {
    let (n, m) = (p.a.dim(), p.b.dim());
    let mut c = Tensor3::cube(n + m);
    let put = |c: &mut Tensor3, i: usize, j: usize, offset: usize, v: &[Rational]| {
        for (k, x) in v.iter().enumerate() {
            c[(i, j, offset + k)] += x;
        }
    };
    for i in 0..n {
        for j in 0..n {
            put(&mut c, i, j, 0, p.a.basis_product(i, j));
        }
        for t in 0..m {
            // e_i * f_t = r_B(f_t)e_i + l_A(e_i)f_t
            put(&mut c, i, n + t, 0, &p.r_b[t].column(i));
            put(&mut c, i, n + t, n, &p.l_a[i].column(t));
            // f_t * e_i = l_B(f_t)e_i + r_A(e_i)f_t
            put(&mut c, n + t, i, 0, &p.l_b[t].column(i));
            put(&mut c, n + t, i, n, &p.r_a[i].column(t));
        }
    }
    for s in 0..m {
        for t in 0..m {
            put(&mut c, n + s, n + t, n, p.b.basis_product(s, t));
        }
    }
    StructureAlgebra::new(p.a.q().clone(), c).expect("cubic")
}

/// Bowtie product of two general elements, computed from the formula rather
/// than the assembled tensor.
pub fn bowtie_multiply(p: &MatchedPairData, u: &[Rational], v: &[Rational]) -> Vector {
    let n = p.a.dim();
    let (x, a) = u.split_at(n);
    let (y, b) = v.split_at(n);
    let mut left = p.a.mul(x, y);
    axpy(&mut left, &Rational::one(), &act(&p.l_b, a, y));
    axpy(&mut left, &Rational::one(), &act(&p.r_b, b, x));
    let mut right = p.b.mul(a, b);
    axpy(&mut right, &Rational::one(), &act(&p.l_a, x, b));
    axpy(&mut right, &Rational::one(), &act(&p.r_a, y, a));
    left.extend(right);
    left
}
