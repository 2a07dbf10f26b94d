//! The E8 model `sl₉ ⊕ Λ³ℂ⁹ ⊕ Λ³(ℂ⁹)*` with its ℤ_3-grading.
//!
//! Basis order: `E{a}{b}` for `a ≠ b` (row-major), `H1..H8` with
//! `H_k = E_kk − E_{k+1,k+1}`, then `e{ijk}` and `e^{ijk}` for `i < j < k`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::centralizers::{center_of, centralizer, derived, graded_centralizer_dims, Subalgebra};
use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::jordan::{check_graded_automorphism, is_nilpotent, is_semisimple, verify_cartan_subspace, CartanChecks};
use crate::kernel::{Cyclotomic, Field, Matrix, Rational, Subspace};
use crate::lie::{LieAlgebra, StructureConstants};
use crate::modes::{adapted_cartan_from_c, check_obstruction, Obstruction};
use crate::slices::{graded_sl2_triple, verify_slice_induction, SliceInductionReport};

pub const SL_DIM: usize = 80;
pub const TRI_DIM: usize = 84;
pub const DIM: usize = SL_DIM + 2 * TRI_DIM;

/// Scalars of the wedge maps `Λ³ × Λ³ → Λ³*` and `Λ³* × Λ³* → Λ³`.
const WEDGE: i64 = 1;
const DUAL_WEDGE: i64 = -1;

fn triples() -> &'static [[u8; 3]] {
    static T: OnceLock<Vec<[u8; 3]>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = Vec::with_capacity(TRI_DIM);
        for i in 1..=9u8 {
            for j in i + 1..=9 {
                for k in j + 1..=9 {
                    v.push([i, j, k]);
                }
            }
        }
        v
    })
}

fn triple_pos(t: [u8; 3]) -> usize {
    triples().binary_search(&t).expect("sorted triple")
}

/// Sorts distinct indices, returning the permutation sign; `None` on repeats.
fn sort_signed(v: &mut [u8]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

pub fn sl_index(a: usize, b: usize) -> usize {
    assert!(a != b && (1..=9).contains(&a) && (1..=9).contains(&b));
    let (a, b) = (a - 1, b - 1);
    a * 8 + if b < a { b } else { b - 1 }
}

pub fn h_index(k: usize) -> usize {
    72 + k - 1
}

pub fn tri_index(t: [u8; 3]) -> usize {
    SL_DIM + triple_pos(t)
}

pub fn dual_index(t: [u8; 3]) -> usize {
    SL_DIM + TRI_DIM + triple_pos(t)
}

/// 9×9 matrix of an sl₉ basis vector.
fn sl_matrix(i: usize) -> [[i64; 9]; 9] {
    let mut m = [[0; 9]; 9];
    if i < 72 {
        let a = i / 8;
        let r = i % 8;
        let b = if r < a { r } else { r + 1 };
        m[a][b] = 1;
    } else {
        let k = i - 72;
        m[k][k] = 1;
        m[k + 1][k + 1] = -1;
    }
    m
}

/// Coordinates of a traceless 9×9 matrix (entries over 3).
fn sl_coords(m: &[[i64; 9]; 9], out: &mut BTreeMap<usize, i64>) {
    for a in 0..9 {
        for b in 0..9 {
            if a != b && m[a][b] != 0 {
                *out.entry(sl_index(a + 1, b + 1)).or_insert(0) += m[a][b];
            }
        }
    }
    let tr: i64 = (0..9).map(|a| m[a][a]).sum();
    debug_assert_eq!(tr, 0);
    let mut acc = 0;
    for k in 0..8 {
        acc += m[k][k];
        if acc != 0 {
            *out.entry(h_index(k + 1)).or_insert(0) += acc;
        }
    }
}

/// `A · e_t` on Λ³ (or on Λ³* when `dual`), as (triple, coefficient) pairs.
fn act(m: &[[i64; 9]; 9], t: [u8; 3], dual: bool) -> Vec<([u8; 3], i64)> {
    let mut out = Vec::new();
    for slot in 0..3 {
        let i = t[slot] as usize - 1;
        for p in 0..9 {
            let c = if dual { -m[i][p] } else { m[p][i] };
            if c == 0 {
                continue;
            }
            let mut s = t;
            s[slot] = p as u8 + 1;
            if let Some(sign) = sort_signed(&mut s) {
                out.push((s, sign * c));
            }
        }
    }
    out
}

/// Complement of two disjoint triples with the sign of `(s, t, complement)`.
fn complement(s: [u8; 3], t: [u8; 3]) -> Option<([u8; 3], i64)> {
    let mut all: Vec<u8> = s.iter().chain(&t).copied().collect();
    let rest: Vec<u8> = (1..=9u8).filter(|x| !all.contains(x)).collect();
    if rest.len() != 3 {
        return None;
    }
    all.extend(&rest);
    let sign = sort_signed(&mut all)?;
    Some(([rest[0], rest[1], rest[2]], sign))
}

/// `[e_s, e^t]`: the gl₉ element `Σ_{a,b} ⟨e^t, e_b ∧ ι_{e^a} e_s⟩ E_ab`
/// projected to sl₉, scaled by 3.
fn moment(s: [u8; 3], t: [u8; 3]) -> [[i64; 9]; 9] {
    let mut m = [[0i64; 9]; 9];
    for slot in 0..3 {
        let a = s[slot];
        let rest: Vec<u8> = (0..3).filter(|&q| q != slot).map(|q| s[q]).collect();
        let sign_i = if slot == 1 { -1 } else { 1 };
        for b in 1..=9u8 {
            let mut w = [b, rest[0], rest[1]];
            if let Some(sign) = sort_signed(&mut w) {
                if w == t {
                    m[a as usize - 1][b as usize - 1] += 3 * sign * sign_i;
                }
            }
        }
    }
    let tr: i64 = (0..9).map(|a| m[a][a]).sum();
    for (a, row) in m.iter_mut().enumerate() {
        row[a] -= tr / 9;
    }
    m
}

fn structure_constants(wedge: i64, dual_wedge: i64) -> StructureConstants {
    let tri = triples();
    let mut brackets = Vec::new();
    let push = |brackets: &mut Vec<((usize, usize), Vec<(usize, i64)>)>, i: usize, j: usize, t: BTreeMap<usize, i64>| {
        let terms: Vec<(usize, i64)> = t.into_iter().filter(|(_, c)| *c != 0).collect();
        if !terms.is_empty() {
            brackets.push(((i, j), terms));
        }
    };
    let mats: Vec<[[i64; 9]; 9]> = (0..SL_DIM).map(sl_matrix).collect();
    for i in 0..SL_DIM {
        for j in i + 1..SL_DIM {
            let (a, b) = (&mats[i], &mats[j]);
            let mut c = [[0i64; 9]; 9];
            for r in 0..9 {
                for s in 0..9 {
                    let mut v = 0;
                    for k in 0..9 {
                        v += a[r][k] * b[k][s] - b[r][k] * a[k][s];
                    }
                    c[r][s] = 3 * v;
                }
            }
            let mut t = BTreeMap::new();
            sl_coords(&c, &mut t);
            push(&mut brackets, i, j, t);
        }
        for (p, &s) in tri.iter().enumerate() {
            for (dual, base) in [(false, SL_DIM), (true, SL_DIM + TRI_DIM)] {
                let mut t = BTreeMap::new();
                for (u, c) in act(&mats[i], s, dual) {
                    *t.entry(base + triple_pos(u)).or_insert(0) += 3 * c;
                }
                push(&mut brackets, i, base + p, t);
            }
        }
    }
    for (p, &s) in tri.iter().enumerate() {
        for (q, &u) in tri.iter().enumerate() {
            if q > p {
                if let Some((c, sign)) = complement(s, u) {
                    let mut t = BTreeMap::new();
                    t.insert(SL_DIM + TRI_DIM + triple_pos(c), 3 * wedge * sign);
                    push(&mut brackets, SL_DIM + p, SL_DIM + q, t);
                    let mut t = BTreeMap::new();
                    t.insert(SL_DIM + triple_pos(c), 3 * dual_wedge * sign);
                    push(&mut brackets, SL_DIM + TRI_DIM + p, SL_DIM + TRI_DIM + q, t);
                }
            }
            let m = moment(s, u);
            if m.iter().flatten().any(|&x| x != 0) {
                let mut t = BTreeMap::new();
                sl_coords(&m, &mut t);
                push(&mut brackets, SL_DIM + p, SL_DIM + TRI_DIM + q, t);
            }
        }
    }
    StructureConstants { denom: 3, brackets }
}

fn names() -> Vec<String> {
    let mut v = Vec::with_capacity(DIM);
    for a in 1..=9 {
        for b in 1..=9 {
            if a != b {
                v.push(format!("E{a}{b}"));
            }
        }
    }
    for k in 1..=8 {
        v.push(format!("H{k}"));
    }
    for t in triples() {
        v.push(format!("e{}{}{}", t[0], t[1], t[2]));
    }
    for t in triples() {
        v.push(format!("e^{}{}{}", t[0], t[1], t[2]));
    }
    v
}

/// Builds the model with explicit wedge scalars; used to check that the
/// chosen scalars are the ones satisfying Jacobi.
pub fn build_with_wedges(wedge: i64, dual_wedge: i64) -> LieAlgebra {
    LieAlgebra::new("E8(sl9+L3+L3*)", names(), structure_constants(wedge, dual_wedge))
}

/// The model as a graded algebra with `m = 3`.
#[derive(Clone, Debug)]
pub struct E8Model {
    pub graded: GradedAlgebra,
}

pub fn build_e8_model() -> E8Model {
    let alg = Arc::new(build_with_wedges(WEDGE, DUAL_WEDGE));
    let mut deg = vec![0; SL_DIM];
    deg.extend(std::iter::repeat_n(1, TRI_DIM));
    deg.extend(std::iter::repeat_n(2, TRI_DIM));
    E8Model { graded: GradedAlgebra::from_degrees(alg, 3, deg).unwrap() }
}

/// Shared instance.
pub fn e8_model() -> &'static E8Model {
    static M: OnceLock<E8Model> = OnceLock::new();
    M.get_or_init(build_e8_model)
}

/// A sparse trivector; serialized as `[[i, j, k, "num/den"], ...]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trivector {
    pub terms: BTreeMap<[u8; 3], Rational>,
}

impl Trivector {
    /// Sums `c · e_{ijk}`; indices in any order (sign adjusted), repeats drop.
    pub fn from_terms(terms: &[([u8; 3], Rational)]) -> Result<Self> {
        let mut out: BTreeMap<[u8; 3], Rational> = BTreeMap::new();
        for (t, c) in terms {
            if t.iter().any(|&x| !(1..=9).contains(&x)) {
                return Err(Error::Parse(format!("index out of range in {t:?}")));
            }
            let mut s = *t;
            let Some(sign) = sort_signed(&mut s) else { continue };
            let e = out.entry(s).or_insert_with(Rational::zero);
            *e += &(c * &Rational::from_i64(sign));
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Trivector { terms: out })
    }

    /// Parses `"e123+e456-2e789"`-style sums of unit coefficients.
    pub fn basis_sum(ts: &[[u8; 3]]) -> Self {
        Self::from_terms(&ts.iter().map(|&t| (t, Rational::one())).collect::<Vec<_>>()).unwrap()
    }

    pub fn add(&self, o: &Trivector) -> Trivector {
        let mut t: Vec<([u8; 3], Rational)> = self.terms.iter().map(|(k, v)| (*k, v.clone())).collect();
        t.extend(o.terms.iter().map(|(k, v)| (*k, v.clone())));
        Self::from_terms(&t).unwrap()
    }

    /// Coordinates in the model, in `𝔤_1` or (for `dual`) in `𝔤_{-1}`.
    pub fn to_vector<F: Field>(&self, dual: bool) -> Vec<F> {
        let mut v = vec![F::zero(); DIM];
        for (t, c) in &self.terms {
            let i = if dual { dual_index(*t) } else { tri_index(*t) };
            v[i] = F::from_rational(c);
        }
        v
    }
}

impl Serialize for Trivector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (t, c) in &self.terms {
            seq.serialize_element(&(t[0], t[1], t[2], c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Trivector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(u8, u8, u8, Rational)> = Vec::deserialize(d)?;
        let terms: Vec<([u8; 3], Rational)> = raw.into_iter().map(|(i, j, k, c)| ([i, j, k], c)).collect();
        Trivector::from_terms(&terms).map_err(serde::de::Error::custom)
    }
}

/// A trivector file: `{"dual": false, "terms": [[1,2,3,"1"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivectorJson {
    #[serde(default)]
    pub dual: bool,
    pub terms: Trivector,
}

/// `u + i v` in the model over ℚ(i).
pub fn complex_trivector(u: &Trivector, v: &Trivector) -> Vec<Cyclotomic> {
    let i = Cyclotomic::i();
    let a: Vec<Cyclotomic> = u.to_vector(false);
    let b: Vec<Cyclotomic> = v.to_vector(false);
    a.iter().zip(&b).map(|(x, y)| x.add(&y.mul(&i))).collect()
}

/// `d_{ijk} = [e_{ijk}, e^{ijk}]`.
pub fn d_element<F: Field>(t: [u8; 3]) -> Vec<F> {
    let g = &e8_model().graded;
    let mut a = vec![F::zero(); DIM];
    a[tri_index(t)] = F::one();
    let mut b = vec![F::zero(); DIM];
    b[dual_index(t)] = F::one();
    g.algebra.bracket(&a, &b)
}

/// Rank of `v* ↦ ι_{v*} t` from `(ℂ⁹)*` to `Λ²ℂ⁹`: the dimension of the
/// support of `t`.
pub fn support_rank(t: &Trivector) -> usize {
    let pairs: Vec<(u8, u8)> = (1..=9u8).flat_map(|i| (i + 1..=9).map(move |j| (i, j))).collect();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(9);
    for a in 1..=9u8 {
        let mut col = vec![Rational::zero(); pairs.len()];
        for (s, c) in &t.terms {
            if let Some(slot) = s.iter().position(|&x| x == a) {
                let rest: Vec<u8> = (0..3).filter(|&q| q != slot).map(|q| s[q]).collect();
                let sign = if slot == 1 { -1 } else { 1 };
                let p = pairs.iter().position(|&(i, j)| i == rest[0] && j == rest[1]).unwrap();
                col[p] += &(c * &Rational::from_i64(sign));
            }
        }
        cols.push(col);
    }
    Subspace::span(pairs.len(), &cols).dim()
}

pub fn x_s_family_vi() -> Trivector {
    Trivector::basis_sum(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]])
}

/// Nilpotent parts of classes 7, 8 and 9 over `x_s = e123 + e456 + e789`.
pub fn family_vi_nilpotent(class: u8) -> Result<Trivector> {
    let t: &[[u8; 3]] = match class {
        7 => &[[1, 4, 9], [1, 5, 8], [1, 6, 7], [2, 4, 8], [3, 5, 7]],
        8 => &[[1, 4, 9], [1, 6, 7], [2, 5, 8], [3, 4, 7]],
        9 => &[[1, 4, 7], [1, 5, 8], [2, 5, 8], [2, 6, 9]],
        _ => return Err(Error::Parse(format!("no fixture for class {class}"))),
    };
    Ok(Trivector::basis_sum(t))
}

/// The four trivectors spanning the classical Cartan subspace.
pub fn classical_cartan() -> Vec<Trivector> {
    vec![
        Trivector::basis_sum(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]),
        Trivector::basis_sum(&[[1, 4, 7], [2, 5, 8], [3, 6, 9]]),
        Trivector::basis_sum(&[[1, 5, 9], [2, 6, 7], [3, 4, 8]]),
        Trivector::basis_sum(&[[1, 6, 8], [2, 4, 9], [3, 5, 7]]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDims {
    pub class: u8,
    /// (dim 𝔤^x_0, dim 𝔤^x_1, dim 𝔤^x_{-1}).
    pub dims: [usize; 3],
    pub degree_one_by_wedge: usize,
    pub orbit_dim_g0: usize,
    pub dimensions_identity: bool,
}

/// `{y ∈ 𝔤^{x_s}_1 : y ∧ x_n = 0}`, via the wedge `Λ³ × Λ³ → Λ⁶`.
pub fn wedge_kernel_dim(x_s: &Trivector, x_n: &Trivector) -> usize {
    let g = &e8_model().graded;
    let xs: Vec<Rational> = x_s.to_vector(false);
    let c1: Vec<Vec<Rational>> = centralizer(g, &xs).part(1);
    // the wedge with x_n, in coordinates of Λ⁶ indexed by complementary triples
    let cols: Vec<Vec<Rational>> = c1
        .iter()
        .map(|y| {
            let mut out = vec![Rational::zero(); TRI_DIM];
            for (p, s) in triples().iter().enumerate() {
                let cy = &y[SL_DIM + p];
                if cy.is_zero() {
                    continue;
                }
                for (t, cn) in &x_n.terms {
                    if let Some((c, sign)) = complement(*s, *t) {
                        out[triple_pos(c)] += &(&(cy * cn) * &Rational::from_i64(sign));
                    }
                }
            }
            out
        })
        .collect();
    let rows: Vec<Vec<Rational>> = (0..TRI_DIM).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    Rational::nullspace_of(&rows, cols.len())
}

trait NullityExt {
    fn nullspace_of(rows: &[Vec<Rational>], ncols: usize) -> usize;
}

impl NullityExt for Rational {
    fn nullspace_of(rows: &[Vec<Rational>], ncols: usize) -> usize {
        if ncols == 0 {
            return 0;
        }
        <Rational as Field>::nullspace(rows, ncols).len()
    }
}

/// Graded centralizer dimensions of `x_s + x_n` for classes 7, 8, 9.
pub fn example_class_dims() -> Result<Vec<ClassDims>> {
    let g = &e8_model().graded;
    let xs = x_s_family_vi();
    let mut out = Vec::new();
    for class in [7, 8, 9] {
        let xn = family_vi_nilpotent(class)?;
        let x: Vec<Rational> = xs.add(&xn).to_vector(false);
        let d = graded_centralizer_dims(g, &x)?;
        let dims = [d[0], d[1], d[2]];
        out.push(ClassDims {
            class,
            dims,
            degree_one_by_wedge: wedge_kernel_dim(&xs, &xn),
            orbit_dim_g0: g.block(0).len() - d[0],
            dimensions_identity: crate::centralizers::dimensions_identity(g, &d),
        });
    }
    Ok(out)
}

/// `y_s = (e123 + e456 + e789) + i (e147 + e258 + e369)`.
pub fn y_s_family_iii() -> Vec<Cyclotomic> {
    complex_trivector(&x_s_family_vi(), &Trivector::basis_sum(&[[1, 4, 7], [2, 5, 8], [3, 6, 9]]))
}

pub fn y_n_family_iii() -> Vec<Cyclotomic> {
    Trivector::basis_sum(&[[1, 5, 9]]).to_vector(false)
}

/// Representative `x = x_s + x_n` of II.1, II.2 or II.3.
pub fn family_ii_representative(variant: u8) -> Result<Vec<Cyclotomic>> {
    let extra: Vec<Cyclotomic> = Trivector::basis_sum(&[[1, 5, 9], [2, 6, 7], [3, 4, 8]]).to_vector(false);
    let xn: &[[u8; 3]] = match variant {
        1 => &[[1, 6, 8], [2, 4, 9]],
        2 => &[[1, 6, 8]],
        3 => &[],
        _ => return Err(Error::Parse(format!("no variant II.{variant}"))),
    };
    let xn: Vec<Cyclotomic> = Trivector::basis_sum(xn).to_vector(false);
    Ok(y_s_family_iii().iter().zip(&extra).zip(&xn).map(|((a, b), c)| a.add(b).add(c)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyIIIReport {
    pub dim: usize,
    pub graded_dims: Vec<usize>,
    pub center_graded_dims: Vec<usize>,
    pub semisimple_graded_dims: Vec<usize>,
    pub r1_matches_listed_span: bool,
    pub r0_matches_listed_span: bool,
    pub r_minus1_matches_listed_span: bool,
    /// The two listed summands are 8-dimensional subalgebras that commute
    /// and together span `[𝔪, 𝔪]`.
    pub summands_split: bool,
    pub center_contains_y_s_parts: bool,
}

fn span_of<F: Field>(vecs: &[Vec<F>]) -> Subspace<F> {
    Subspace::span(DIM, vecs)
}

fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let (x, y) = (span_of(a), span_of(b));
    x.dim() == y.dim() && x.contains_space(&y)
}

fn closed<F: Field>(alg: &LieAlgebra, vecs: &[Vec<F>]) -> bool {
    let s = span_of(vecs);
    vecs.iter().all(|a| vecs.iter().all(|b| s.contains(&alg.bracket(a, b))))
}

/// `𝔪 = 𝔤^{y_s}` for the III family.
pub fn family_iii_centralizer() -> FamilyIIIReport {
    let g = &e8_model().graded;
    let alg = &g.algebra;
    let ys = y_s_family_iii();
    let m = centralizer(g, &ys);
    let z = center_of(g, &m);
    let r = derived(g, &m);
    let unit = |t: [u8; 3], dual: bool| -> Vec<Cyclotomic> { Trivector::basis_sum(&[t]).to_vector(dual) };
    let a_tri = [[1, 5, 9], [2, 6, 7], [3, 4, 8]];
    let b_tri = [[1, 6, 8], [2, 4, 9], [3, 5, 7]];
    let listed = |ts: &[[u8; 3]], dual: bool| -> Vec<Vec<Cyclotomic>> { ts.iter().map(|&t| unit(t, dual)).collect() };
    let r1: Vec<_> = listed(&a_tri, false).into_iter().chain(listed(&b_tri, false)).collect();
    let rm1: Vec<_> = listed(&a_tri, true).into_iter().chain(listed(&b_tri, true)).collect();
    let da: Vec<Vec<Cyclotomic>> = a_tri.iter().map(|&t| d_element(t)).collect();
    let db: Vec<Vec<Cyclotomic>> = b_tri.iter().map(|&t| d_element(t)).collect();
    let r0: Vec<_> = da.iter().chain(&db).cloned().collect();
    let sa: Vec<_> = listed(&a_tri, false).into_iter().chain(da.clone()).chain(listed(&a_tri, true)).collect();
    let sb: Vec<_> = listed(&b_tri, false).into_iter().chain(db.clone()).chain(listed(&b_tri, true)).collect();
    let commute = sa.iter().all(|a| sb.iter().all(|b| alg.bracket(a, b).iter().all(Cyclotomic::is_zero)));
    let both: Vec<_> = sa.iter().chain(&sb).cloned().collect();
    let summands_split =
        span_of(&sa).dim() == 8 && span_of(&sb).dim() == 8 && closed(alg, &sa) && closed(alg, &sb) && commute && same_span(&both, &r.basis);
    let u: Vec<Cyclotomic> = x_s_family_vi().to_vector(false);
    let v: Vec<Cyclotomic> = Trivector::basis_sum(&[[1, 4, 7], [2, 5, 8], [3, 6, 9]]).to_vector(false);
    let zs = span_of(&z.basis);
    let gd = m.graded_dims().unwrap();
    let zd = z.graded_dims().unwrap();
    FamilyIIIReport {
        dim: m.dim(),
        semisimple_graded_dims: gd.iter().zip(&zd).map(|(a, b)| a - b).collect(),
        graded_dims: gd,
        center_graded_dims: zd,
        r1_matches_listed_span: same_span(&r.part(1), &r1),
        r0_matches_listed_span: same_span(&r.part(0), &r0),
        r_minus1_matches_listed_span: same_span(&r.part(2), &rm1),
        summands_split,
        center_contains_y_s_parts: zs.contains(&u) && zs.contains(&v),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceExampleReport {
    pub variant: String,
    pub triple_relations: bool,
    pub h_is_d159: bool,
    pub f_is_dual_e159: bool,
    pub slice_dim: usize,
    pub induction: SliceInductionReport,
}

/// Slice induction from II.k to III.7.
pub fn e8_slice_example(variant: u8) -> Result<SliceExampleReport> {
    let g = &e8_model().graded;
    let x = family_ii_representative(variant)?;
    let y: Vec<Cyclotomic> = y_s_family_iii().iter().zip(&y_n_family_iii()).map(|(a, b)| a.add(b)).collect();
    let induction = verify_slice_induction(g, &x, &y)?;
    let m = centralizer(g, &y_s_family_iii());
    let triple = graded_sl2_triple(g, &m, &y_n_family_iii())?;
    let d159: Vec<Cyclotomic> = d_element([1, 5, 9]);
    let f159: Vec<Cyclotomic> = Trivector::basis_sum(&[[1, 5, 9]]).to_vector(true);
    Ok(SliceExampleReport {
        variant: format!("II.{variant}"),
        triple_relations: triple.relations_hold(g),
        h_is_d159: triple.h == d159,
        f_is_dual_e159: triple.f == f159,
        slice_dim: triple.slice_basis.len(),
        induction,
    })
}

/// The permutation matrix `g = −(Id ⊕ swap of the last two 3-blocks)`.
pub fn block_swap_matrix() -> [[i64; 9]; 9] {
    let mut g = [[0i64; 9]; 9];
    let perm = [0, 1, 2, 6, 7, 8, 3, 4, 5];
    for (i, &p) in perm.iter().enumerate() {
        g[p][i] = -1;
    }
    g
}

fn det9(m: &[[i64; 9]; 9]) -> Rational {
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect();
    let mut a = rows;
    let mut det = Rational::one();
    for c in 0..9 {
        let Some(p) = (c..9).find(|&r| !a[r][c].is_zero()) else { return Rational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c].clone();
        let inv = a[c][c].inv().unwrap();
        for r in c + 1..9 {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..9 {
                let t = &f * &a[c][k];
                a[r][k] -= &t;
            }
        }
    }
    det
}

/// The automorphism of the model induced by an invertible integer matrix
/// with inverse given (conjugation on sl₉, `Λ³g` and `Λ³g^{-T}`).
pub fn induced_automorphism(gm: &[[i64; 9]; 9], ginv: &[[i64; 9]; 9]) -> Matrix<Rational> {
    let mut w = Matrix::zeros(DIM, DIM);
    for j in 0..SL_DIM {
        let a = sl_matrix(j);
        // g a g^{-1}
        let mut c = [[0i64; 9]; 9];
        for r in 0..9 {
            for s in 0..9 {
                let mut v = 0;
                for p in 0..9 {
                    for q in 0..9 {
                        v += gm[r][p] * a[p][q] * ginv[q][s];
                    }
                }
                c[r][s] = v;
            }
        }
        let mut t = BTreeMap::new();
        sl_coords(&c, &mut t);
        for (k, v) in t {
            w.set(k, j, Rational::from_i64(v));
        }
    }
    for (p, &s) in triples().iter().enumerate() {
        // Λ³g e_s and Λ³g^{-T} e^s
        for (dual, base) in [(false, SL_DIM), (true, SL_DIM + TRI_DIM)] {
            let img = |i: usize, q: usize| if dual { ginv[i][q] } else { gm[q][i] };
            let mut acc: BTreeMap<[u8; 3], i64> = BTreeMap::new();
            for a in 0..9 {
                for b in 0..9 {
                    for c in 0..9 {
                        let v = img(s[0] as usize - 1, a) * img(s[1] as usize - 1, b) * img(s[2] as usize - 1, c);
                        if v == 0 {
                            continue;
                        }
                        let mut t = [a as u8 + 1, b as u8 + 1, c as u8 + 1];
                        if let Some(sign) = sort_signed(&mut t) {
                            *acc.entry(t).or_insert(0) += sign * v;
                        }
                    }
                }
            }
            for (t, v) in acc {
                if v != 0 {
                    w.set(base + triple_pos(t), base + p, Rational::from_i64(v));
                }
            }
        }
    }
    w
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankVerdict {
    pub pair: String,
    pub ranks: [usize; 2],
    pub separated: bool,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueReport {
    pub g_determinant: String,
    pub g_in_sl9: bool,
    pub automorphism: bool,
    pub normalizes_c: bool,
    pub normalizes_centralizer_y_s: bool,
    pub rank_verdicts: Vec<RankVerdict>,
    pub not_checked: Vec<String>,
}

/// Support-rank verdict for a pair of nilpotent parts.
pub fn rank_verdict(name: &str, a: &Trivector, b: &Trivector) -> RankVerdict {
    let ranks = [support_rank(a), support_rank(b)];
    let separated = ranks[0] != ranks[1];
    RankVerdict {
        pair: name.into(),
        ranks,
        separated,
        verdict: if separated { "not G0-related".into() } else { "not separated by rank".into() },
    }
}

/// Subspace `w · S` for a list of vectors.
fn image_span<F: Field>(w: &Matrix<F>, vecs: &[Vec<F>]) -> Result<Subspace<F>> {
    let moved: Vec<Vec<F>> = vecs.iter().map(|v| w.mul_vec(v)).collect::<Result<_>>()?;
    Ok(span_of(&moved))
}

pub fn glueing_invariants() -> Result<GlueReport> {
    let g = &e8_model().graded;
    let gm = block_swap_matrix();
    // g is an involution up to sign: g² = Id
    let det = det9(&gm);
    let w = induced_automorphism(&gm, &gm);
    let automorphism = check_graded_automorphism(g, &w).is_ok();
    let c: Vec<Vec<Rational>> = classical_cartan().iter().map(|t| t.to_vector(false)).collect();
    let cs = span_of(&c);
    let wc = image_span(&w, &c)?;
    let normalizes_c = wc.dim() == cs.dim() && wc.contains_space(&cs);
    let wz: Matrix<Cyclotomic> =
        Matrix::from_rows(w.rows().iter().map(|r| r.iter().map(|x| Cyclotomic::from_rational(x.clone())).collect()).collect())?;
    let m = centralizer(g, &y_s_family_iii());
    let wm = image_span(&wz, &m.basis)?;
    let ms = span_of(&m.basis);
    let normalizes_m = wm.dim() == ms.dim() && wm.contains_space(&ms);
    let rank_verdicts = vec![rank_verdict("VI.8-VI.9", &family_vi_nilpotent(8)?, &family_vi_nilpotent(9)?)];
    Ok(GlueReport {
        g_in_sl9: det.is_one(),
        g_determinant: det.to_string(),
        automorphism,
        normalizes_c,
        normalizes_centralizer_y_s: normalizes_m,
        rank_verdicts,
        not_checked: vec![
            "V family classes 7-8: representatives not encoded".into(),
            "order of the group acting on the III.5 class".into(),
            "total number of Jordan classes".into(),
        ],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DRelations {
    pub d159_d267_d348: bool,
    pub d168_d249_d357: bool,
    /// The variant with `d348` in place of `d357`.
    pub d168_d249_d348: bool,
}

pub fn d_relations() -> DRelations {
    let sum = |ts: &[[u8; 3]]| -> bool {
        let mut acc = vec![Rational::zero(); DIM];
        for &t in ts {
            for (a, b) in acc.iter_mut().zip(d_element::<Rational>(t)) {
                *a += &b;
            }
        }
        acc.iter().all(Rational::is_zero)
    };
    DRelations {
        d159_d267_d348: sum(&[[1, 5, 9], [2, 6, 7], [3, 4, 8]]),
        d168_d249_d357: sum(&[[1, 6, 8], [2, 4, 9], [3, 5, 7]]),
        d168_d249_d348: sum(&[[1, 6, 8], [2, 4, 9], [3, 4, 8]]),
    }
}

/// Runs the Cartan-subspace checks on the classical span.
pub fn classical_cartan_checks() -> (CartanChecks, Vec<usize>) {
    let g = &e8_model().graded;
    let c: Vec<Vec<Rational>> = classical_cartan().iter().map(|t| t.to_vector(false)).collect();
    let data = verify_cartan_subspace(g, &c);
    let dims = data.centralizer.graded_dims().unwrap();
    (data.checks, dims)
}

/// Semisimplicity of the listed semisimple parts and nilpotency of the
/// listed nilpotent parts.
pub fn representative_types() -> Result<Vec<(String, bool)>> {
    let g = &e8_model().graded;
    let mut out = Vec::new();
    let xs: Vec<Rational> = x_s_family_vi().to_vector(false);
    out.push(("VI x_s semisimple".to_string(), is_semisimple(g, &xs)));
    out.push(("III y_s semisimple".to_string(), is_semisimple(g, &y_s_family_iii())));
    let x2 = family_ii_representative(3)?;
    out.push(("II x_s semisimple".to_string(), is_semisimple(g, &x2)));
    for class in [7, 8, 9] {
        let v: Vec<Rational> = family_vi_nilpotent(class)?.to_vector(false);
        out.push((format!("VI.{class} x_n nilpotent"), is_nilpotent(g, &v)));
    }
    let yn = y_n_family_iii();
    out.push(("III.7 y_n nilpotent".to_string(), is_nilpotent(g, &yn)));
    Ok(out)
}

/// Restricts a subalgebra to its degree-`l` part as a subspace.
pub fn part_span<F: Field>(s: &Subalgebra<F>, l: usize) -> Subspace<F> {
    span_of(&s.part(l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdaptedCartanReport {
    pub abelian: bool,
    pub graded_dims: Vec<usize>,
    pub verdict: Obstruction,
}

/// `𝔠_𝔤(𝔠)` of the classical Cartan subspace and the `h₀ = 0` verdict.
pub fn e8_adapted_cartan() -> AdaptedCartanReport {
    let g = &e8_model().graded;
    let c: Vec<Vec<Rational>> = classical_cartan().iter().map(|t| t.to_vector(false)).collect();
    let data = verify_cartan_subspace(g, &c);
    match adapted_cartan_from_c(g, &data) {
        Some(h) => {
            let dims = h.graded_dims().unwrap();
            AdaptedCartanReport { abelian: true, verdict: check_obstruction(&dims), graded_dims: dims }
        }
        None => {
            AdaptedCartanReport { abelian: false, graded_dims: data.centralizer.graded_dims().unwrap(), verdict: Obstruction::Inconclusive }
        }
    }
}

/// Graded dimensions of `𝔤^{x_s}` for `x_s = e123 + e456 + e789`.
pub fn family_vi_semisimple_centralizer() -> Result<Vec<usize>> {
    let g = &e8_model().graded;
    graded_centralizer_dims(g, &x_s_family_vi().to_vector::<Rational>(false))
}
