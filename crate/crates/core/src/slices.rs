//! Graded sl(2)-triples, Slodowy slices in degree one and slice induction.

use serde::{Deserialize, Serialize};

use crate::centralizers::{centralizer, centralizer_in, Subalgebra};
use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::jordan::{is_nilpotent, jordan_decompose};
use crate::kernel::{Field, Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct Sl2SliceData<F> {
    pub m: Subalgebra<F>,
    pub e: Vec<F>,
    pub h: Vec<F>,
    pub f: Vec<F>,
    /// Basis of 𝔪^f_1.
    pub slice_basis: Vec<Vec<F>>,
}

impl<F: Field> Sl2SliceData<F> {
    /// `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn relations_hold(&self, g: &GradedAlgebra) -> bool {
        let alg = &g.algebra;
        let two = F::from_i64(2);
        let scaled = |v: &[F], c: &F| -> Vec<F> { v.iter().map(|x| x.times(c)).collect() };
        alg.bracket(&self.h, &self.e) == scaled(&self.e, &two)
            && alg.bracket(&self.h, &self.f) == scaled(&self.f, &two.negated())
            && alg.bracket(&self.e, &self.f) == self.h
    }

    /// `dim [𝔪_0, e] + dim 𝔪^f_1 = dim 𝔪_1`.
    pub fn transversal(&self, g: &GradedAlgebra) -> bool {
        orbit_dim_in(g, &self.m, &self.e) + self.slice_basis.len() == self.m.part(1).len()
    }
}

/// `dim [𝔪_0, x]`.
pub fn orbit_dim_in<F: Field>(g: &GradedAlgebra, m: &Subalgebra<F>, x: &[F]) -> usize {
    let imgs: Vec<Vec<F>> = m.part(0).iter().map(|b| g.algebra.bracket(b, x)).collect();
    Subspace::span(g.dim(), &imgs).dim()
}

fn combine<F: Field>(n: usize, coeffs: &[F], vecs: &[Vec<F>]) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (c, v) in coeffs.iter().zip(vecs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                o.add_assign(&c.times(x));
            }
        }
    }
    out
}

/// Solves `Σ c_j cols_j = rhs` (columns given as vectors).
fn solve_columns<F: Field>(cols: &[Vec<F>], rhs: &[F]) -> Result<Option<Vec<F>>> {
    if cols.is_empty() {
        return Ok(rhs.iter().all(F::is_zero).then(Vec::new));
    }
    Matrix::from_columns(rhs.len(), cols).solve(rhs)
}

/// A graded sl(2)-triple `(e, h, f)` in `𝔪` with `h ∈ 𝔪_0`, `f ∈ 𝔪_{-1}`,
/// together with `𝔪^f_1`.
pub fn graded_sl2_triple<F: Field>(g: &GradedAlgebra, m: &Subalgebra<F>, e: &[F]) -> Result<Sl2SliceData<F>> {
    let n = g.dim();
    let alg = &g.algebra;
    if !m.is_graded() {
        return Err(Error::NotNilpotentOrDegenerate("the subalgebra must be graded".into()));
    }
    if !g.is_homogeneous_of(e, 1) || !m.contains(n, e) {
        return Err(Error::NotNilpotentOrDegenerate("e must lie in m_1".into()));
    }
    let m1 = m.part(1);
    if e.iter().all(F::is_zero) {
        let zero = vec![F::zero(); n];
        return Ok(Sl2SliceData { m: m.clone(), e: e.to_vec(), h: zero.clone(), f: zero, slice_basis: m1 });
    }
    if !is_nilpotent(g, e) {
        return Err(Error::NotNilpotentOrDegenerate("e is not nilpotent".into()));
    }
    let fm = m.part(g.m - 1);
    let ef: Vec<Vec<F>> = fm.iter().map(|b| alg.bracket(e, b)).collect();
    // h = Σ a_j [e, F_j] with [h, e] = 2e
    let cols: Vec<Vec<F>> = ef.iter().map(|v| alg.bracket(v, e)).collect();
    let two_e: Vec<F> = e.iter().map(|x| x.times_i64(2)).collect();
    let a = solve_columns(&cols, &two_e)?.ok_or_else(|| Error::NotNilpotentOrDegenerate("no neutral element in [e, m_-1]".into()))?;
    let h = combine(n, &a, &ef);
    // f = Σ b_j F_j with [e, f] = h and [h, f] + 2f = 0
    let cols: Vec<Vec<F>> = fm
        .iter()
        .zip(&ef)
        .map(|(b, eb)| {
            let mut c = eb.clone();
            let hb = alg.bracket(&h, b);
            c.extend(hb.iter().zip(b).map(|(x, y)| x.plus(&y.times_i64(2))));
            c
        })
        .collect();
    let mut rhs = h.clone();
    rhs.extend(std::iter::repeat_n(F::zero(), n));
    let b = solve_columns(&cols, &rhs)?.ok_or_else(|| Error::NotNilpotentOrDegenerate("no f completing the triple".into()))?;
    let f = combine(n, &b, &fm);
    let deg1 = Subalgebra { basis: m1.clone(), degrees: Some(vec![1 % g.m; m1.len()]), m: g.m };
    let slice_basis = centralizer_in(g, std::slice::from_ref(&f), &deg1).basis;
    Ok(Sl2SliceData { m: m.clone(), e: e.to_vec(), h, f, slice_basis })
}

/// `x ∈ e + 𝔪^f_1`.
pub fn slice_membership<F: Field>(s: &Sl2SliceData<F>, x: &[F]) -> bool {
    let d: Vec<F> = x.iter().zip(&s.e).map(|(a, b)| a.minus(b)).collect();
    Subspace::span(x.len(), &s.slice_basis).contains(&d)
}

/// `z ∈ U_𝔪`, tested as `𝔤^{z_s} ⊆ 𝔪`.
pub fn u_m_membership<F: Field>(g: &GradedAlgebra, m: &Subalgebra<F>, z: &[F]) -> Result<bool> {
    let n = g.dim();
    if !g.is_homogeneous_of(z, 1) || !m.contains(n, z) {
        return Err(Error::NotHomogeneous(1));
    }
    let zs = jordan_decompose(g, z)?.x_s;
    Ok(m.contains_subalgebra(n, &centralizer(g, &zs)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceDims {
    pub m: usize,
    pub m_graded: Vec<usize>,
    pub centralizer_x_s: usize,
    pub slice: usize,
    pub orbit_m0_x: usize,
    pub orbit_m0_y_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceInductionReport {
    pub witnessed: bool,
    pub containment: bool,
    pub slice_member: bool,
    pub dim_condition: bool,
    pub dims: SliceDims,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Checks the supplied representatives `x`, `y` for the slice-induction
/// witness: `𝔤^{x_s} ⊆ 𝔪 = 𝔤^{y_s}` and `x ∈ y_n + 𝔪^f_1`.
pub fn verify_slice_induction<F: Field>(g: &GradedAlgebra, x: &[F], y: &[F]) -> Result<SliceInductionReport> {
    let n = g.dim();
    if !g.is_homogeneous_of(x, 1) || !g.is_homogeneous_of(y, 1) {
        return Err(Error::NotHomogeneous(1));
    }
    let py = jordan_decompose(g, y)?;
    let px = jordan_decompose(g, x)?;
    let m = centralizer(g, &py.x_s);
    let cxs = centralizer(g, &px.x_s);
    let containment = m.contains_subalgebra(n, &cxs);
    let triple = graded_sl2_triple(g, &m, &py.x_n)?;
    let slice_member = slice_membership(&triple, x);
    let orbit_x = orbit_dim_in(g, &m, x);
    let orbit_yn = orbit_dim_in(g, &m, &py.x_n);
    let witnessed = containment && slice_member;
    Ok(SliceInductionReport {
        witnessed,
        containment,
        slice_member,
        dim_condition: orbit_x == orbit_yn,
        dims: SliceDims {
            m: m.dim(),
            m_graded: m.graded_dims().unwrap_or_default(),
            centralizer_x_s: cxs.dim(),
            slice: triple.slice_basis.len(),
            orbit_m0_x: orbit_x,
            orbit_m0_y_n: orbit_yn,
        },
        note: (!witnessed).then(|| "the supplied representatives are not a witness; this does not decide the closure relation".into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{graded_from_labels, KacLabels};
    use crate::kernel::Rational;

    #[test]
    fn sl2_standard_triple() {
        let g = graded_from_labels(&"A1: s=[1,0]".parse::<KacLabels>().unwrap()).unwrap();
        let full = Subalgebra::<Rational>::full(&g);
        let q = Rational::from_i64;
        let e = vec![q(0), q(1), q(0)];
        let t = graded_sl2_triple(&g, &full, &e).unwrap();
        assert!(t.relations_hold(&g));
        assert_eq!(t.h, vec![q(1), q(0), q(0)]);
        assert_eq!(t.f, vec![q(0), q(0), q(1)]);
        assert!(t.transversal(&g));
        assert!(slice_membership(&t, &e));
        let zero = vec![q(0); 3];
        let t0 = graded_sl2_triple(&g, &full, &zero).unwrap();
        assert_eq!(t0.slice_basis.len(), 3);
    }
}
