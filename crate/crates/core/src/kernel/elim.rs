//! Row reduction engines.
//!
//! Rationals are eliminated fraction-free: rows are cleared to primitive
//! integer vectors and combined as `a·v − b·w` followed by content removal,
//! so no rational arithmetic happens inside the loop. Large nullspace
//! problems switch to the multimodular solver.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rref};
use super::modular;
use super::rational::{big_gcd, Rational};

/// Entry count above which rational nullspaces go multimodular.
const MODULAR_THRESHOLD: usize = 900;

/// Generic Gauss–Jordan by incremental insertion.
pub fn field_rref<F: Field>(rows: &[Vec<F>], ncols: usize) -> Rref<F> {
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new();
    for r in rows {
        debug_assert_eq!(r.len(), ncols);
        let mut v = r.clone();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b).skip(*p) {
                    if !y.is_zero() {
                        *x = x.minus(&f.times(y));
                    }
                }
            }
        }
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = v[q].inverse().unwrap();
        for x in v.iter_mut().skip(q) {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        for (_, b) in basis.iter_mut() {
            if !b[q].is_zero() {
                let f = b[q].clone();
                for (x, y) in b.iter_mut().zip(&v).skip(q) {
                    if !y.is_zero() {
                        *x = x.minus(&f.times(y));
                    }
                }
            }
        }
        let pos = basis.partition_point(|(p, _)| *p < q);
        basis.insert(pos, (q, v));
    }
    let (pivots, rows) = basis.into_iter().unzip();
    Rref { rows, pivots, ncols }
}

/// Scales a rational vector to a primitive integer vector with the same span.
pub fn primitive_integer_row(r: &[Rational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for q in r {
        if !q.is_integer() {
            den = den.lcm(q.denom());
        }
    }
    let mut v: Vec<BigInt> = r.iter().map(|q| if den.is_one() { q.numer().clone() } else { q.numer() * (&den / q.denom()) }).collect();
    make_primitive(&mut v);
    v
}

/// Divides out the gcd of the entries.
pub fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if x.is_zero() {
            continue;
        }
        g = big_gcd(&g, x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

/// Fully reduced echelon basis over ℤ. Each row is primitive with a positive
/// pivot, and every pivot column is zero in the other rows.
#[derive(Clone, Debug, Default)]
pub struct IntBasis {
    pub ncols: usize,
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

/// `v ← a·v − b·w`, where only columns from `start` on can be nonzero in `w`.
fn combine(v: &mut [BigInt], a: &BigInt, b: &BigInt, w: &[BigInt], start: usize) {
    let a_one = a.is_one();
    for (j, x) in v.iter_mut().enumerate() {
        let y = if j >= start { &w[j] } else { &BigInt::ZERO };
        if x.is_zero() {
            if !y.is_zero() {
                *x = -(b * y);
            }
        } else {
            if !a_one {
                *x *= a;
            }
            if !y.is_zero() {
                *x -= b * y;
            }
        }
    }
}

impl IntBasis {
    pub fn new(ncols: usize) -> Self {
        IntBasis { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis in place; the result is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &mut Vec<BigInt>) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let g = big_gcd(&row[p], &v[p]);
            let a = &row[p] / &g;
            let b = &v[p] / &g;
            combine(v, &a, &b, row, p);
            make_primitive(v);
        }
    }

    /// Inserts a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        self.reduce(&mut v);
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        if v[q].is_negative() {
            for x in v.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        for (row, &p) in self.rows.iter_mut().zip(&self.pivots) {
            if row[q].is_zero() {
                continue;
            }
            let g = big_gcd(&v[q], &row[q]);
            let a = &v[q] / &g;
            let b = &row[q] / &g;
            combine(row, &a, &b, &v, q);
            make_primitive(row);
            debug_assert!(row[p].is_positive());
        }
        let pos = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(pos, q);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    pub fn to_rref(&self) -> Rref<Rational> {
        let rows = self
            .rows
            .iter()
            .zip(&self.pivots)
            .map(|(r, &p)| {
                let d = &r[p];
                r.iter().map(|x| Rational::new(x.clone(), d.clone())).collect()
            })
            .collect();
        Rref { rows, pivots: self.pivots.clone(), ncols: self.ncols }
    }
}

pub fn rational_rref(rows: &[Vec<Rational>], ncols: usize) -> Rref<Rational> {
    let mut b = IntBasis::new(ncols);
    for r in rows {
        if b.rank() == ncols {
            break;
        }
        b.insert(primitive_integer_row(r));
    }
    b.to_rref()
}

pub fn rational_nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    if rows.len() * ncols < MODULAR_THRESHOLD {
        return rational_rref(rows, ncols).nullspace();
    }
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer_row(r)).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if int_rows.is_empty() {
        return Rref::<Rational> { rows: vec![], pivots: vec![], ncols }.nullspace();
    }
    modular::nullspace_multimodular(&int_rows, ncols)
}

/// Nullspace of a matrix with many more rows than columns. A subset of rows
/// is eliminated first; rows violated by the candidate kernel are added until
/// none remain, so the result is exact.
pub fn tall_nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let live: Vec<&Vec<F>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let start = 2 * ncols + 4;
    if live.len() <= start {
        let owned: Vec<Vec<F>> = live.into_iter().cloned().collect();
        return F::nullspace(&owned, ncols);
    }
    let stride = live.len() / start;
    let mut chosen: Vec<Vec<F>> = (0..start).map(|i| live[i * stride].clone()).collect();
    loop {
        let ker = F::nullspace(&chosen, ncols);
        if ker.is_empty() {
            return ker;
        }
        let mut added = 0;
        for r in &live {
            if ker.iter().any(|k| !super::matrix::dot(r, k).is_zero()) {
                chosen.push((*r).clone());
                added += 1;
                if added == ncols {
                    break;
                }
            }
        }
        if added == 0 {
            return ker;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn integer_basis_reduces_fully() {
        let rows = vec![vec![q(2), q(4), q(6)], vec![q(1), q(3), q(5)], vec![q(3), q(7), q(11)]];
        let r = rational_rref(&rows, 3);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rows[0], vec![q(1), q(0), q(-1)]);
        assert_eq!(r.rows[1], vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn generic_and_fraction_free_agree() {
        let rows = vec![
            vec![Rational::ratio(1, 2), q(3), q(0), q(-1)],
            vec![q(2), Rational::ratio(-2, 3), q(5), q(1)],
            vec![q(0), q(0), q(7), Rational::ratio(1, 7)],
        ];
        assert_eq!(field_rref(&rows, 4), rational_rref(&rows, 4));
    }

    #[test]
    fn modular_matches_fraction_free() {
        let n = 40;
        let rows: Vec<Vec<Rational>> =
            (0..n - 3).map(|i| (0..n).map(|j| q(((i * 7 + j * 13 + i * j) % 19) as i64 - 9)).collect()).collect();
        let a = rational_rref(&rows, n).nullspace();
        let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer_row(r)).collect();
        let b = modular::nullspace_multimodular(&int_rows, n);
        assert_eq!(a, b);
    }
}
