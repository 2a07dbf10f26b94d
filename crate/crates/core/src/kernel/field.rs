//! The scalar abstraction shared by all linear algebra.

use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::elim;
use super::rational::Rational;

/// Reduced row-echelon form: every pivot is 1 and pivot columns are zero in
/// all other rows. Rows are sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical nullspace basis: one vector per free column, with a 1 there
    /// and zeros at the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.ncols];
                v[f] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = row[f].negated();
                    }
                }
                v
            })
            .collect()
    }
}

pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_i64(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn times_rational(&self, q: &Rational) -> Self {
        self.times(&Self::from_rational(q))
    }

    fn times_i64(&self, c: i64) -> Self {
        self.times_rational(&Rational::from_i64(c))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.plus(o);
    }

    /// Rescales a vector to a convenient representative of its line. The
    /// default leaves it alone; rationals become primitive integer vectors.
    fn normalize_vector(_v: &mut [Self]) {}

    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;

    /// Reduced row-echelon form of the row span.
    fn rref(rows: &[Vec<Self>], ncols: usize) -> Rref<Self> {
        elim::field_rref(rows, ncols)
    }

    /// Canonical basis of `{v : A v = 0}` for `A` given by rows.
    fn nullspace(rows: &[Vec<Self>], ncols: usize) -> Vec<Vec<Self>> {
        Self::rref(rows, ncols).nullspace()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn times_i64(&self, c: i64) -> Self {
        if self.is_integer() {
            Rational::from_integer(self.numer() * c)
        } else {
            Rational::new(self.numer() * c, self.denom().clone())
        }
    }
    fn normalize_vector(v: &mut [Self]) {
        if v.iter().all(|x| x.is_zero()) {
            return;
        }
        let ints = elim::primitive_integer_row(v);
        for (x, n) in v.iter_mut().zip(ints) {
            *x = Rational::from_integer(n);
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn rref(rows: &[Vec<Self>], ncols: usize) -> Rref<Self> {
        elim::rational_rref(rows, ncols)
    }
    fn nullspace(rows: &[Vec<Self>], ncols: usize) -> Vec<Vec<Self>> {
        elim::rational_nullspace(rows, ncols)
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational(q.clone())
    }
    fn times_rational(&self, q: &Rational) -> Self {
        self.scale(q)
    }
    fn to_rational(&self) -> Option<Rational> {
        self.as_rational()
    }
}

/// Solves a square-or-tall augmented rational system `[A | b]` with `k`
/// unknowns, returning the unique solution when it exists.
pub(crate) fn solve_dense_augmented(rows: &mut [Vec<Rational>], k: usize) -> Option<Vec<Rational>> {
    let r = elim::field_rref(rows, k + 1);
    if r.pivots.contains(&k) || r.rank() < k {
        return None;
    }
    Some(r.rows.iter().map(|row| row[k].clone()).collect())
}
