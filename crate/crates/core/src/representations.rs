//! Bimodules `(l, r, V)`, their duals, and semidirect products.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, Tensor3, Vector};
use crate::rational::Rational;
use crate::report::CheckReport;

/// Left and right actions of an `algebra_dim`-dimensional algebra on a
/// `module_dim`-dimensional space, one matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    algebra_dim: usize,
    module_dim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

pub(crate) fn check_action_shapes(ops: &[Matrix], count: usize, size: usize, what: &str) -> Result<()> {
    if ops.len() != count {
        return Err(Error::dimension(format!("{what}: expected {count} matrices, got {}", ops.len())));
    }
    if let Some(m) = ops.iter().find(|m| m.rows() != size || m.cols() != size) {
        return Err(Error::dimension(format!(
            "{what}: expected {size}x{size} matrices, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `Σ_i x_i · ops[i]` applied to `v`.
pub(crate) fn act(ops: &[Matrix], x: &[Rational], v: &[Rational]) -> Vector {
    let mut out = vec![Rational::zero(); v.len()];
    for (xi, m) in x.iter().zip(ops) {
        if !xi.is_zero() {
            crate::linalg::axpy(&mut out, xi, &m.mul_vec(v));
        }
    }
    out
}

pub(crate) fn transposes(ops: &[Matrix], s: &Rational) -> Vec<Matrix> {
    ops.iter().map(|m| m.transpose().scale(s)).collect()
}

impl Bimodule {
    pub fn new(algebra_dim: usize, module_dim: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        check_action_shapes(&l, algebra_dim, module_dim, "l")?;
        check_action_shapes(&r, algebra_dim, module_dim, "r")?;
        Ok(Bimodule { algebra_dim, module_dim, l, r })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(module_dim, module_dim); algebra_dim];
        Bimodule { algebra_dim, module_dim, l: z.clone(), r: z }
    }

    /// `(L, R)` acting on the algebra itself.
    pub fn regular(a: &StructureAlgebra) -> Self {
        let (l, r) = a.mult_operators();
        Bimodule { algebra_dim: a.dim(), module_dim: a.dim(), l, r }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn l(&self) -> &[Matrix] {
        &self.l
    }

    pub fn r(&self) -> &[Matrix] {
        &self.r
    }

    /// Keep `l`, zero out `r`.
    pub fn left_only(&self) -> Self {
        Bimodule { r: vec![Matrix::zeros(self.module_dim, self.module_dim); self.algebra_dim], ..self.clone() }
    }

    /// Keep `r`, zero out `l`.
    pub fn right_only(&self) -> Self {
        Bimodule { l: vec![Matrix::zeros(self.module_dim, self.module_dim); self.algebra_dim], ..self.clone() }
    }

    /// `l(x)` for a general algebra element.
    pub fn l_of(&self, x: &[Rational]) -> Matrix {
        combine(x, &self.l, self.module_dim, self.module_dim)
    }

    pub fn r_of(&self, x: &[Rational]) -> Matrix {
        combine(x, &self.r, self.module_dim, self.module_dim)
    }

    /// `(q⁻² rᵀ, q² lᵀ)` on the dual space, in the dual basis.
    pub fn dual(&self, q: &Rational) -> Bimodule {
        let q2 = q.pow(2);
        Bimodule {
            algebra_dim: self.algebra_dim,
            module_dim: self.module_dim,
            l: transposes(&self.r, &q2.recip()),
            r: transposes(&self.l, &q2),
        }
    }
}

/// The three bimodule laws on every pair of basis elements `(e_i, e_j)`:
/// `l(xy) = q l(x)l(y)`, `r(xy) = q⁻¹ r(y)r(x)`, `l(x)r(y) = q⁻¹ r(y)l(x)`.
pub fn check_bimodule(a: &StructureAlgebra, m: &Bimodule) -> Result<CheckReport> {
    if m.algebra_dim != a.dim() {
        return Err(Error::dimension(format!(
            "bimodule is over a {}-dimensional algebra, got {}",
            m.algebra_dim,
            a.dim()
        )));
    }
    Ok(check_bimodule_ops(a, &m.l, &m.r, m.module_dim))
}

pub(crate) fn check_bimodule_ops(a: &StructureAlgebra, l: &[Matrix], r: &[Matrix], module_dim: usize) -> CheckReport {
    let n = a.dim();
    let q = a.q();
    let qinv = q.recip();
    let mut report = CheckReport::new("law instances");
    for i in 0..n {
        for j in 0..n {
            let xy = a.basis_product(i, j);
            let idx = [i + 1, j + 1];

            let lhs = combine(xy, l, module_dim, module_dim);
            let rhs = l[i].mul(&l[j]).scale(q);
            report.check("l(xy)", &idx, lhs.sub(&rhs).entries().to_vec());

            let lhs = combine(xy, r, module_dim, module_dim);
            let rhs = r[j].mul(&r[i]).scale(&qinv);
            report.check("r(xy)", &idx, lhs.sub(&rhs).entries().to_vec());

            let lhs = l[i].mul(&r[j]);
            let rhs = r[j].mul(&l[i]).scale(&qinv);
            report.check("l(x)r(y)", &idx, lhs.sub(&rhs).entries().to_vec());
        }
    }
    report
}

pub fn dual_bimodule(a: &StructureAlgebra, m: &Bimodule) -> Bimodule {
    m.dual(a.q())
}

/// `A ⊕ V` with `(x + u)(y + v) = xy + l(x)v + r(y)u`; basis `(e_1..e_n, v_1..v_m)`.
pub fn semidirect_product(a: &StructureAlgebra, m: &Bimodule) -> Result<StructureAlgebra> {
    if m.algebra_dim != a.dim() {
        return Err(Error::dimension("bimodule and algebra dimensions differ"));
    }
    let (n, d) = (a.dim(), m.module_dim);
    let mut c = Tensor3::cube(n + d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[(i, j, k)] = a.tensor()[(i, j, k)].clone();
            }
        }
        for u in 0..d {
            for k in 0..d {
                // e_i * v_u = l(e_i) v_u,  v_u * e_i = r(e_i) v_u
                c[(i, n + u, n + k)] = m.l[i][(k, u)].clone();
                c[(n + u, i, n + k)] = m.r[i][(k, u)].clone();
            }
        }
    }
    StructureAlgebra::new(a.q().clone(), c)
}
