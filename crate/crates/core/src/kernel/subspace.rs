use super::field::{Field, Rref};

/// A linear subspace of F^n, held in reduced row-echelon form with a fixed
/// column order. Two subspaces are equal iff their echelon bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    rref: Rref<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(n: usize) -> Self {
        Subspace { rref: Rref { rows: Vec::new(), pivots: Vec::new(), ncols: n } }
    }

    pub fn full(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![F::zero(); n];
                v[i] = F::one();
                v
            })
            .collect();
        Subspace { rref: Rref { rows, pivots: (0..n).collect(), ncols: n } }
    }

    pub fn span(n: usize, vecs: &[Vec<F>]) -> Self {
        Subspace { rref: F::rref(vecs, n) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.rref.ncols
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rref.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.rref.pivots
    }

    /// Remainder of `v` after reduction by the echelon basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (row, &p) in self.rref.rows.iter().zip(&self.rref.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        w
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rref.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn contains_space(&self, o: &Subspace<F>) -> bool {
        o.dim() <= self.dim() && o.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace<F>) -> Subspace<F> {
        let mut v = self.rref.rows.clone();
        v.extend(o.rref.rows.iter().cloned());
        Subspace::span(self.ambient_dim(), &v)
    }

    pub fn intersection(&self, o: &Subspace<F>) -> Subspace<F> {
        let (a, b) = (self.basis(), o.basis());
        if a.is_empty() || b.is_empty() {
            return Subspace::zero(self.ambient_dim());
        }
        let n = self.ambient_dim();
        // columns: a_1..a_k, b_1..b_l; solve Σ c_i a_i − Σ d_j b_j = 0
        let k = a.len();
        let rows: Vec<Vec<F>> = (0..n).map(|t| a.iter().map(|v| v[t].clone()).chain(b.iter().map(|v| v[t].negated())).collect()).collect();
        let ker = F::nullspace(&rows, k + b.len());
        let vecs: Vec<Vec<F>> = ker
            .iter()
            .map(|c| {
                let mut w = vec![F::zero(); n];
                for (ci, v) in c[..k].iter().zip(a) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (x, y) in w.iter_mut().zip(v) {
                        if !y.is_zero() {
                            x.add_assign(&ci.times(y));
                        }
                    }
                }
                w
            })
            .collect();
        Subspace::span(n, &vecs)
    }
}
