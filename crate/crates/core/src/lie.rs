//! Lie algebras given by structure constants on a named basis, and their
//! elements.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{Field, Matrix, Rational};

/// Structure constants `[b_i, b_j] = (1/denom) Σ_k c_ijk b_k` with integer
/// `c_ijk`.
pub struct LieAlgebra {
    id: String,
    names: Vec<String>,
    index: HashMap<String, usize>,
    denom: i64,
    table: Vec<Vec<Vec<(u32, i64)>>>,
    killing: OnceLock<Vec<Vec<(usize, Rational)>>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.id, self.dim())
    }
}

/// Builder input: the bracket of each ordered basis pair with `i < j`.
pub struct StructureConstants {
    pub denom: i64,
    pub brackets: Vec<((usize, usize), Vec<(usize, i64)>)>,
}

impl LieAlgebra {
    /// Assembles the algebra from brackets of pairs `i < j`; the rest follows
    /// from antisymmetry.
    pub fn new(id: impl Into<String>, names: Vec<String>, sc: StructureConstants) -> Self {
        let n = names.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for ((i, j), terms) in sc.brackets {
            assert!(i < j && j < n);
            let mut t: Vec<(u32, i64)> = terms.into_iter().filter(|(_, c)| *c != 0).map(|(k, c)| (k as u32, c)).collect();
            t.sort_unstable();
            table[j][i] = t.iter().map(|&(k, c)| (k, -c)).collect();
            table[i][j] = t;
        }
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        LieAlgebra { id: id.into(), names, index, denom: sc.denom, table, killing: OnceLock::new() }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Scaled bracket of two basis vectors: entries are `denom` times the
    /// true coefficients.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.table[i][j]
    }

    fn unscale<F: Field>(&self, v: &mut [F]) {
        if self.denom != 1 {
            let d = Rational::ratio(1, self.denom);
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = x.times_rational(&d);
                }
            }
        }
    }

    /// Bracket of dense coefficient vectors.
    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        let sy: Vec<usize> = (0..n).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &sy {
                let t = &self.table[i][j];
                if t.is_empty() {
                    continue;
                }
                let p = xi.times(&y[j]);
                for &(k, c) in t {
                    out[k as usize].add_assign(&p.times_i64(c));
                }
            }
        }
        self.unscale(&mut out);
        out
    }

    /// `[x, b_j]` for a basis vector.
    pub fn bracket_basis<F: Field>(&self, x: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &(k, c) in &self.table[i][j] {
                out[k as usize].add_assign(&xi.times_i64(c));
            }
        }
        self.unscale(&mut out);
        out
    }

    /// Matrix of `ad x` restricted to the span of `domain`, with rows indexed by
    /// `codomain`. Components of `[x, b_d]` outside `codomain` are dropped, so
    /// callers pass a codomain that contains the image.
    pub fn ad_block<F: Field>(&self, x: &[F], domain: &[usize], codomain: &[usize]) -> Vec<Vec<F>> {
        let mut pos = vec![usize::MAX; self.dim()];
        for (r, &c) in codomain.iter().enumerate() {
            pos[c] = r;
        }
        let mut m = vec![vec![F::zero(); domain.len()]; codomain.len()];
        let support: Vec<usize> = (0..self.dim()).filter(|&i| !x[i].is_zero()).collect();
        for (col, &d) in domain.iter().enumerate() {
            for &i in &support {
                for &(k, c) in &self.table[i][d] {
                    let r = pos[k as usize];
                    if r != usize::MAX {
                        m[r][col].add_assign(&x[i].times_i64(c));
                    }
                }
            }
        }
        if self.denom != 1 {
            for row in m.iter_mut() {
                self.unscale(row);
            }
        }
        m
    }

    /// Full matrix of `ad x` in the standard basis.
    pub fn ad<F: Field>(&self, x: &[F]) -> Matrix<F> {
        let all: Vec<usize> = (0..self.dim()).collect();
        Matrix::from_rows(self.ad_block(x, &all, &all)).unwrap()
    }

    /// Killing form entries `κ(b_i, b_j)`, stored sparsely by row.
    pub fn killing_rows(&self) -> &[Vec<(usize, Rational)>] {
        self.killing.get_or_init(|| self.compute_killing())
    }

    fn compute_killing(&self) -> Vec<Vec<(usize, Rational)>> {
        let n = self.dim();
        // κ_ij = Σ_k Σ_l c_ik^l c_jl^k
        let mut rows = Vec::with_capacity(n);
        let mut dense: Vec<HashMap<usize, i64>> = Vec::with_capacity(n);
        for i in 0..n {
            // ad b_i as a sparse map k -> [(l, c)]
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for j in 0..n {
                let mut s: i64 = 0;
                for k in 0..n {
                    for &(l, c1) in &self.table[i][k] {
                        for &(kk, c2) in &self.table[j][l as usize] {
                            if kk as usize == k {
                                s += c1 * c2;
                            }
                        }
                    }
                }
                if s != 0 {
                    acc.insert(j, s);
                }
            }
            dense.push(acc);
        }
        let d2 = Rational::from_i64(self.denom * self.denom);
        for acc in dense {
            let mut r: Vec<(usize, Rational)> = acc.into_iter().map(|(j, s)| (j, &Rational::from_i64(s) / &d2)).collect();
            r.sort_by_key(|(j, _)| *j);
            rows.push(r);
        }
        rows
    }

    pub fn killing_matrix(&self) -> Matrix<Rational> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, r) in self.killing_rows().iter().enumerate() {
            for (j, v) in r {
                m.set(i, *j, v.clone());
            }
        }
        m
    }

    /// κ(x, y).
    pub fn killing<F: Field>(&self, x: &[F], y: &[F]) -> F {
        let mut s = F::zero();
        for (i, row) in self.killing_rows().iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            for (j, k) in row {
                if !y[*j].is_zero() {
                    s.add_assign(&x[i].times(&y[*j]).times_rational(k));
                }
            }
        }
        s
    }

    /// Counts basis triples violating Jacobi among the given index triples.
    pub fn jacobi_failures(&self, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> usize {
        let mut acc = vec![0i64; self.dim()];
        let mut bad = 0;
        for (a, b, c) in triples {
            // [[a,b],c] + [[b,c],a] + [[c,a],b], all scaled by denom²
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                for &(k, c1) in &self.table[x][y] {
                    for &(l, c2) in &self.table[k as usize][z] {
                        acc[l as usize] += c1 * c2;
                    }
                }
            }
            if acc.iter().any(|&v| v != 0) {
                bad += 1;
                acc.iter_mut().for_each(|v| *v = 0);
            }
        }
        bad
    }
}

/// A sparse element of a named algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<F> {
    pub algebra: String,
    pub coeffs: BTreeMap<usize, F>,
}

impl<F: Field> Element<F> {
    pub fn zero(alg: &LieAlgebra) -> Self {
        Element { algebra: alg.id().to_string(), coeffs: BTreeMap::new() }
    }

    pub fn from_dense(alg: &LieAlgebra, v: &[F]) -> Self {
        let coeffs = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
        Element { algebra: alg.id().to_string(), coeffs }
    }

    pub fn basis(alg: &LieAlgebra, i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, F::one());
        Element { algebra: alg.id().to_string(), coeffs }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<F> {
        let mut v = vec![F::zero(); dim];
        for (i, x) in &self.coeffs {
            v[*i] = x.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn check_algebra(&self, alg: &LieAlgebra) -> Result<()> {
        if self.algebra != alg.id() {
            return Err(Error::AlgebraMismatch(self.algebra.clone(), alg.id().to_string()));
        }
        if let Some((&i, _)) = self.coeffs.iter().next_back() {
            if i >= alg.dim() {
                return Err(Error::Dimension(format!("basis index {i} out of range")));
            }
        }
        Ok(())
    }

    pub fn bracket(&self, o: &Element<F>, alg: &LieAlgebra) -> Result<Element<F>> {
        self.check_algebra(alg)?;
        o.check_algebra(alg)?;
        let n = alg.dim();
        Ok(Element::from_dense(alg, &alg.bracket(&self.to_dense(n), &o.to_dense(n))))
    }

    pub fn add(&self, o: &Element<F>) -> Element<F> {
        let mut c = self.coeffs.clone();
        for (i, x) in &o.coeffs {
            let e = c.entry(*i).or_insert_with(F::zero);
            *e = e.plus(x);
            if e.is_zero() {
                c.remove(i);
            }
        }
        Element { algebra: self.algebra.clone(), coeffs: c }
    }

    pub fn scale(&self, s: &F) -> Element<F> {
        if s.is_zero() {
            return Element { algebra: self.algebra.clone(), coeffs: BTreeMap::new() };
        }
        Element { algebra: self.algebra.clone(), coeffs: self.coeffs.iter().map(|(i, x)| (*i, x.times(s))).collect() }
    }

    pub fn sub(&self, o: &Element<F>) -> Element<F> {
        self.add(&o.scale(&F::one().negated()))
    }

    pub fn display(&self, alg: &LieAlgebra) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(i, x)| format!("({x})*{}", alg.name(*i))).collect();
        parts.join(" + ")
    }
}

impl<F: Field> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.algebra, self.coeffs)
    }
}

/// JSON form: `{"algebra": "A2", "coeffs": [["e[1,1]", "1/1"], ["h1", "-2/1"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: String,
    pub coeffs: Vec<(String, Rational)>,
}

impl Element<Rational> {
    pub fn to_json(&self, alg: &LieAlgebra) -> ElementJson {
        ElementJson {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|(i, x)| (alg.name(*i).to_string(), x.clone())).collect(),
        }
    }

    pub fn from_json(j: &ElementJson, alg: &LieAlgebra) -> Result<Self> {
        if j.algebra != alg.id() {
            return Err(Error::AlgebraMismatch(j.algebra.clone(), alg.id().to_string()));
        }
        let mut e = Element::zero(alg);
        for (name, x) in &j.coeffs {
            let i = alg.index_of(name).ok_or_else(|| Error::Parse(format!("unknown basis element '{name}'")))?;
            e = e.add(&Element::basis(alg, i).scale(x));
        }
        Ok(e)
    }
}
