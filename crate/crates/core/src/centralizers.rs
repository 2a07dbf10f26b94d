//! Centralizers, centers and derived algebras inside a graded algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::kernel::elim::tall_nullspace;
use crate::kernel::{Field, Subspace};

/// A subspace of 𝔤 given by a basis of dense coordinate vectors. When the
/// subspace is graded, each basis vector is homogeneous and `degrees` records
/// its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra<F> {
    pub basis: Vec<Vec<F>>,
    pub degrees: Option<Vec<usize>>,
    pub m: usize,
}

impl<F: Field> Subalgebra<F> {
    pub fn zero(m: usize) -> Self {
        Subalgebra { basis: Vec::new(), degrees: Some(Vec::new()), m }
    }

    /// The whole algebra with its standard basis.
    pub fn full(g: &GradedAlgebra) -> Self {
        let n = g.dim();
        let basis = (0..n).map(|i| unit(n, i)).collect();
        Subalgebra { basis, degrees: Some(g.degrees().to_vec()), m: g.m }
    }

    /// Echelonizes homogeneous vectors degree by degree.
    pub fn from_homogeneous(g: &GradedAlgebra, vecs: &[Vec<F>]) -> Self {
        let mut parts: Vec<Vec<Vec<F>>> = vec![Vec::new(); g.m];
        for v in vecs {
            if let Some(d) = g.homogeneous_degree(v) {
                if v.iter().any(|x| !x.is_zero()) {
                    parts[d].push(v.clone());
                }
            } else {
                for l in 0..g.m {
                    let c = g.homogeneous_component(v, l);
                    if c.iter().any(|x| !x.is_zero()) {
                        parts[l].push(c);
                    }
                }
            }
        }
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        for (l, p) in parts.into_iter().enumerate() {
            for v in echelon_in_block(g, l, &p) {
                basis.push(v);
                degrees.push(l);
            }
        }
        Subalgebra { basis, degrees: Some(degrees), m: g.m }
    }

    /// An ungraded subspace spanned by arbitrary vectors.
    pub fn from_vectors(g: &GradedAlgebra, vecs: &[Vec<F>]) -> Self {
        let s = Subspace::span(g.dim(), vecs);
        let mut basis = s.basis().to_vec();
        basis.iter_mut().for_each(|v| F::normalize_vector(v));
        Subalgebra { basis, degrees: None, m: g.m }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.is_some()
    }

    pub fn graded_dims(&self) -> Option<Vec<usize>> {
        self.degrees.as_ref().map(|ds| {
            let mut out = vec![0; self.m];
            for &d in ds {
                out[d] += 1;
            }
            out
        })
    }

    /// Basis vectors of degree `l` (empty for ungraded subspaces).
    pub fn part(&self, l: usize) -> Vec<Vec<F>> {
        match &self.degrees {
            Some(ds) => self.basis.iter().zip(ds).filter(|(_, &d)| d == l % self.m).map(|(v, _)| v.clone()).collect(),
            None => Vec::new(),
        }
    }

    pub fn span(&self, n: usize) -> Subspace<F> {
        Subspace::span(n, &self.basis)
    }

    pub fn contains(&self, n: usize, v: &[F]) -> bool {
        self.span(n).contains(v)
    }

    pub fn contains_subalgebra(&self, n: usize, o: &Subalgebra<F>) -> bool {
        let s = self.span(n);
        o.basis.iter().all(|v| s.contains(v))
    }

    pub fn same_span(&self, n: usize, o: &Subalgebra<F>) -> bool {
        self.dim() == o.dim() && self.contains_subalgebra(n, o)
    }

    /// Checks closure under the bracket on all basis pairs.
    pub fn is_closed(&self, g: &GradedAlgebra) -> bool {
        let s = self.span(g.dim());
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !s.contains(&g.algebra.bracket(&self.basis[i], &self.basis[j])) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self, g: &GradedAlgebra) -> bool {
        (0..self.dim()).all(|i| (i + 1..self.dim()).all(|j| g.algebra.bracket(&self.basis[i], &self.basis[j]).iter().all(F::is_zero)))
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Echelon basis of vectors supported in 𝔤_l, computed in block coordinates.
fn echelon_in_block<F: Field>(g: &GradedAlgebra, l: usize, vecs: &[Vec<F>]) -> Vec<Vec<F>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let block = g.block(l);
    let local: Vec<Vec<F>> = vecs.iter().map(|v| block.iter().map(|&i| v[i].clone()).collect()).collect();
    let r = F::rref(&local, block.len());
    r.rows
        .iter()
        .map(|row| {
            let mut v = embed(g.dim(), block, row);
            F::normalize_vector(&mut v);
            v
        })
        .collect()
}

pub fn embed<F: Field>(n: usize, block: &[usize], local: &[F]) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    for (&i, x) in block.iter().zip(local) {
        v[i] = x.clone();
    }
    v
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

/// 𝔤^x = ker ad x. Graded when `x` is homogeneous.
pub fn centralizer<F: Field>(g: &GradedAlgebra, x: &[F]) -> Subalgebra<F> {
    let n = g.dim();
    match g.homogeneous_degree(x) {
        Some(d) => {
            let mut basis = Vec::new();
            let mut degrees = Vec::new();
            for l in 0..g.m {
                let dom = g.block(l);
                let cod = g.block(l + d);
                if dom.is_empty() {
                    continue;
                }
                let a = g.algebra.ad_block(x, dom, cod);
                for k in F::nullspace(&a, dom.len()) {
                    let mut v = embed(n, dom, &k);
                    F::normalize_vector(&mut v);
                    basis.push(v);
                    degrees.push(l);
                }
            }
            Subalgebra { basis, degrees: Some(degrees), m: g.m }
        }
        None => {
            let all: Vec<usize> = (0..n).collect();
            let a = g.algebra.ad_block(x, &all, &all);
            let mut basis = F::nullspace(&a, n);
            basis.iter_mut().for_each(|v| F::normalize_vector(v));
            Subalgebra { basis, degrees: None, m: g.m }
        }
    }
}

/// Vectors `z` in the span of `cand` with `[r, z] = 0`.
fn restrict<F: Field>(g: &GradedAlgebra, cand: &[Vec<F>], r: &[F]) -> Vec<Vec<F>> {
    if cand.is_empty() {
        return Vec::new();
    }
    let n = g.dim();
    let brs: Vec<Vec<F>> = cand.iter().map(|b| g.algebra.bracket(r, b)).collect();
    if brs.iter().all(|b| b.iter().all(F::is_zero)) {
        return cand.to_vec();
    }
    let rows: Vec<Vec<F>> = (0..n).map(|t| brs.iter().map(|v| v[t].clone()).collect()).collect();
    tall_nullspace(&rows, cand.len())
        .iter()
        .map(|c| {
            let mut v = combine(n, c, cand);
            F::normalize_vector(&mut v);
            v
        })
        .collect()
}

fn parts_of<F: Field>(g: &GradedAlgebra, s: &Subalgebra<F>) -> Vec<Vec<Vec<F>>> {
    match &s.degrees {
        Some(_) => (0..g.m).map(|l| s.part(l)).collect(),
        None => vec![s.basis.clone()],
    }
}

fn assemble<F: Field>(g: &GradedAlgebra, graded: bool, parts: Vec<Vec<Vec<F>>>) -> Subalgebra<F> {
    if graded {
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        for (l, p) in parts.into_iter().enumerate() {
            for v in p {
                basis.push(v);
                degrees.push(l);
            }
        }
        Subalgebra { basis, degrees: Some(degrees), m: g.m }
    } else {
        Subalgebra { basis: parts.into_iter().flatten().collect(), degrees: None, m: g.m }
    }
}

/// Elements of `s` commuting with every vector in `xs`.
pub fn centralizer_in<F: Field>(g: &GradedAlgebra, xs: &[Vec<F>], s: &Subalgebra<F>) -> Subalgebra<F> {
    let mut parts = parts_of(g, s);
    for x in xs {
        for p in parts.iter_mut() {
            *p = restrict(g, p, x);
        }
    }
    assemble(g, s.is_graded(), parts)
}

/// 𝔠_𝔤(X): the common centralizer of a list of vectors.
pub fn common_centralizer<F: Field>(g: &GradedAlgebra, xs: &[Vec<F>]) -> Subalgebra<F> {
    let n = g.dim();
    if xs.iter().all(|x| g.homogeneous_degree(x).is_some()) {
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        for l in 0..g.m {
            let dom = g.block(l);
            if dom.is_empty() {
                continue;
            }
            let mut rows = Vec::new();
            for x in xs {
                let d = g.homogeneous_degree(x).unwrap();
                rows.extend(g.algebra.ad_block(x, dom, g.block(l + d)));
            }
            for k in tall_nullspace(&rows, dom.len()) {
                let mut v = embed(n, dom, &k);
                F::normalize_vector(&mut v);
                basis.push(v);
                degrees.push(l);
            }
        }
        Subalgebra { basis, degrees: Some(degrees), m: g.m }
    } else {
        centralizer_in(g, xs, &Subalgebra::full(g))
    }
}

/// 𝔷(s) = {z ∈ s : [z, s] = 0}.
///
/// The candidate space is first cut down by a few pseudo-random elements of
/// `s`, then checked against every basis vector; any basis vector that fails
/// the check is used to cut further. The result is exact.
pub fn center_of<F: Field>(g: &GradedAlgebra, s: &Subalgebra<F>) -> Subalgebra<F> {
    let n = g.dim();
    let mut parts = parts_of(g, s);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    for _ in 0..2 {
        if s.dim() == 0 {
            break;
        }
        let mut r = vec![F::zero(); n];
        for b in &s.basis {
            let c = F::from_i64(rng.gen_range(-3..=3));
            if c.is_zero() {
                continue;
            }
            for (ri, bi) in r.iter_mut().zip(b) {
                if !bi.is_zero() {
                    ri.add_assign(&c.times(bi));
                }
            }
        }
        for p in parts.iter_mut() {
            *p = restrict(g, p, &r);
        }
    }
    loop {
        let mut violated = None;
        'search: for t in &s.basis {
            for p in &parts {
                for z in p {
                    if g.algebra.bracket(t, z).iter().any(|c| !c.is_zero()) {
                        violated = Some(t.clone());
                        break 'search;
                    }
                }
            }
        }
        let Some(t) = violated else { break };
        for p in parts.iter_mut() {
            *p = restrict(g, p, &t);
        }
    }
    assemble(g, s.is_graded(), parts)
}

/// [s, s].
pub fn derived<F: Field>(g: &GradedAlgebra, s: &Subalgebra<F>) -> Subalgebra<F> {
    let mut vecs = Vec::new();
    for i in 0..s.dim() {
        for j in i + 1..s.dim() {
            let b = g.algebra.bracket(&s.basis[i], &s.basis[j]);
            if b.iter().any(|x| !x.is_zero()) {
                vecs.push(b);
            }
        }
    }
    match s.degrees {
        Some(_) => Subalgebra::from_homogeneous(g, &vecs),
        None => Subalgebra::from_vectors(g, &vecs),
    }
}

/// Image `[𝔤, x]` as a subspace of 𝔤.
pub fn image_of_ad<F: Field>(g: &GradedAlgebra, x: &[F]) -> Subspace<F> {
    let n = g.dim();
    let vecs: Vec<Vec<F>> = (0..n).map(|j| g.algebra.bracket_basis(x, j)).collect();
    Subspace::span(n, &vecs)
}

/// (dim 𝔤^x_l)_l for homogeneous x.
pub fn graded_centralizer_dims<F: Field>(g: &GradedAlgebra, x: &[F]) -> Result<Vec<usize>> {
    let d = g.homogeneous_degree(x).ok_or(Error::NotHomogeneous(1))?;
    let mut out = Vec::with_capacity(g.m);
    for l in 0..g.m {
        let dom = g.block(l);
        let a = g.algebra.ad_block(x, dom, g.block(l + d));
        out.push(dom.len() - rank_of_rows(&a, dom.len()));
    }
    Ok(out)
}

pub fn rank_of_rows<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    if ncols == 0 {
        return 0;
    }
    ncols - F::nullspace(rows, ncols).len()
}

/// dim [𝔤_0, x] for x ∈ 𝔤_1.
pub fn orbit_dim_g0<F: Field>(g: &GradedAlgebra, x: &[F]) -> Result<usize> {
    if !g.is_homogeneous_of(x, 1) {
        return Err(Error::NotHomogeneous(1));
    }
    let dom = g.block(0);
    let a = g.algebra.ad_block(x, dom, g.block(1));
    Ok(rank_of_rows(&a, dom.len()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerReport {
    pub graded_dims: Vec<usize>,
    pub dim: usize,
    pub center_dim: usize,
    pub center_graded_dims: Option<Vec<usize>>,
    pub orbit_dim_g0: Option<usize>,
}

pub fn centralizer_report<F: Field>(g: &GradedAlgebra, x: &[F]) -> CentralizerReport {
    let c = centralizer(g, x);
    let z = center_of(g, &c);
    let graded_dims = c.graded_dims().unwrap_or_else(|| vec![c.dim()]);
    let orbit = g.is_homogeneous_of(x, 1).then(|| g.block(0).len() - graded_dims[0]);
    CentralizerReport { dim: c.dim(), graded_dims, center_dim: z.dim(), center_graded_dims: z.graded_dims(), orbit_dim_g0: orbit }
}

/// The four conditions of the double-centralizer equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCentralizerReport {
    pub y_in_center: bool,
    pub centralizer_contained: bool,
    pub image_contained: bool,
    pub centers_contained: bool,
}

impl DoubleCentralizerReport {
    pub fn agree(&self) -> bool {
        let v = self.y_in_center;
        self.centralizer_contained == v && self.image_contained == v && self.centers_contained == v
    }
}

/// Evaluates (i) y ∈ 𝔷(𝔤^x), (ii) 𝔤^x ⊆ 𝔤^y, (iii) [𝔤,y] ⊆ [𝔤,x],
/// (iv) 𝔷(𝔤^y) ⊆ 𝔷(𝔤^x).
pub fn double_centralizer_equivalences<F: Field>(g: &GradedAlgebra, x: &[F], y: &[F]) -> DoubleCentralizerReport {
    let n = g.dim();
    let cx = centralizer(g, x);
    let cy = centralizer(g, y);
    let zx = center_of(g, &cx);
    let zy = center_of(g, &cy);
    DoubleCentralizerReport {
        y_in_center: zx.contains(n, y),
        centralizer_contained: cy.contains_subalgebra(n, &cx),
        image_contained: image_of_ad(g, x).contains_space(&image_of_ad(g, y)),
        centers_contained: zx.contains_subalgebra(n, &zy),
    }
}

/// dim 𝔤_l − dim 𝔤^x_l = dim 𝔤_{−l−1} − dim 𝔤^x_{−l−1} for all l (x ∈ 𝔤_1).
pub fn dimensions_identity(g: &GradedAlgebra, dims_x: &[usize]) -> bool {
    let dg = g.graded_dims();
    let m = g.m;
    (0..m).all(|l| {
        let k = (2 * m - l - 1) % m;
        dg[l] as i64 - dims_x[l] as i64 == dg[k] as i64 - dims_x[k] as i64
    })
}

/// dim O^G_x = 2 dim O^{G_0}_x + Σ_{l ≠ 0, −1} (dim 𝔤_l − dim 𝔤^x_l).
pub fn orbit_dimension_formula(g: &GradedAlgebra, dims_x: &[usize]) -> bool {
    let dg = g.graded_dims();
    let m = g.m;
    let total: usize = dg.iter().sum::<usize>() - dims_x.iter().sum::<usize>();
    let o0 = dg[0] - dims_x[0];
    let minus_one = (m - 1) % m;
    let rest: usize = (0..m).filter(|&l| l != 0 && l != minus_one).map(|l| dg[l] - dims_x[l]).sum();
    if m == 1 {
        // 𝔤_0 = 𝔤_{−1}: the formula reads dim O = 2 dim O − … only for m ≥ 2
        return true;
    }
    total == 2 * o0 + rest
}
