//! Elements of the cyclotomic field ℚ(ω_m), stored as residues modulo the
//! m-th cyclotomic polynomial.
//!
//! Values with different periods are combined by embedding both into
//! ℚ(ω_lcm). Rationals live in period 1.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::Rational;

/// Integer coefficients of Φ_m, lowest degree first (monic).
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    let mut p = Poly::from_i64(&num);
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi = cyclotomic_poly(d);
            p = p.div_rem(&Poly::from_i64(&phi)).0;
        }
    }
    let coeffs: Vec<i64> = p
        .coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer());
            c.numer().try_into().expect("small cyclotomic coefficient")
        })
        .collect();
    let arc = Arc::new(coeffs);
    cache.write().unwrap().insert(m, arc.clone());
    arc
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

#[derive(Clone, Serialize, Deserialize)]
pub struct Cyclotomic {
    m: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { m: 1, coeffs: vec![q] }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// Reduces an arbitrary coefficient list (in powers of ω_m) modulo Φ_m.
    pub fn from_coeffs(m: u32, coeffs: Vec<Rational>) -> Self {
        assert!(m >= 1);
        let phi = cyclotomic_poly(m);
        let d = phi.len() - 1;
        let mut c = coeffs;
        for k in (d..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let lead = std::mem::take(&mut c[k]);
            for (j, &pj) in phi.iter().enumerate().take(d) {
                if pj != 0 {
                    c[k - d + j] -= &lead.scale(pj, 1);
                }
            }
        }
        c.resize(d, Rational::zero());
        Cyclotomic { m, coeffs: c }
    }

    /// ω_m^k.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_coeffs(m, c)
    }

    /// The imaginary unit, as ω_4.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    pub fn period(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        let s = self.shrink();
        (s.m == 1).then(|| s.coeffs[0].clone())
    }

    /// Image in ℚ(ω_n) for a multiple n of the period.
    pub fn embed(&self, n: u32) -> Self {
        if n == self.m {
            return self.clone();
        }
        assert!(n.is_multiple_of(self.m), "cannot embed period {} into {}", self.m, n);
        let step = (n / self.m) as usize;
        let mut c = vec![Rational::zero(); step * self.coeffs.len().max(1)];
        for (j, a) in self.coeffs.iter().enumerate() {
            c[j * step] = a.clone();
        }
        Self::from_coeffs(n, c)
    }

    /// Rewrites the element in the smallest period among the divisors of
    /// its current one.
    pub fn shrink(&self) -> Self {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            return Self::from_rational(self.coeffs[0].clone());
        }
        for d in 2..self.m {
            if !self.m.is_multiple_of(d) {
                continue;
            }
            let step = (self.m / d) as usize;
            // try to lift each ω_d^j, comparing embeddings
            let cand = self.try_descend(d, step);
            if let Some(c) = cand {
                return c;
            }
        }
        self.clone()
    }

    fn try_descend(&self, d: u32, step: usize) -> Option<Self> {
        // Solve for coefficients in ℚ(ω_d) by matching the embedding image.
        let k = euler_phi(d);
        let n = self.coeffs.len();
        let cols: Vec<Vec<Rational>> = (0..k)
            .map(|j| {
                let mut c = vec![Rational::zero(); j * step + 1];
                c[j * step] = Rational::one();
                Self::from_coeffs(self.m, c).coeffs
            })
            .collect();
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let sol = super::field::solve_dense_augmented(&mut rows, k)?;
        Some(Cyclotomic { m: d, coeffs: sol })
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.m == b.m {
            return (a.clone(), b.clone());
        }
        let l = a.m.lcm(&b.m);
        (a.embed(l), b.embed(l))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.m == o.m {
            let c = self.coeffs.iter().zip(&o.coeffs).map(|(x, y)| x + y).collect();
            return Cyclotomic { m: self.m, coeffs: c };
        }
        let (a, b) = Self::common(self, o);
        a.add(&b)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if o.m == 1 {
            return Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|x| x * &o.coeffs[0]).collect() };
        }
        if self.m == 1 {
            return o.mul(self);
        }
        if self.m != o.m {
            let (a, b) = Self::common(self, o);
            return a.mul(&b);
        }
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        Self::from_coeffs(self.m, prod)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic { m: self.m, coeffs: self.coeffs.iter().map(|x| x * q).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_m.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.m == 1 {
            return self.coeffs[0].inv().map(Self::from_rational);
        }
        let a = Poly::new(self.coeffs.clone());
        let phi = Poly::from_i64(&cyclotomic_poly(self.m));
        let (g, s, _) = a.xgcd(&phi);
        debug_assert_eq!(g, Poly::one());
        Some(Self::from_coeffs(self.m, s.coeffs().to_vec()))
    }

    /// Complex conjugate: ω ↦ ω^{-1}.
    pub fn conj(&self) -> Self {
        let m = self.m as usize;
        let mut c = vec![Rational::zero(); m];
        for (j, a) in self.coeffs.iter().enumerate() {
            c[(m - j) % m] += a;
        }
        Self::from_coeffs(self.m, c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        if self.m == o.m {
            return self.coeffs == o.coeffs;
        }
        let (a, b) = Self::common(self, o);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shrink();
        if s.m == 1 {
            return write!(f, "{}", s.coeffs[0]);
        }
        let mut first = true;
        for (j, c) in s.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*w{}", s.m)?,
                _ => write!(f, "({c})*w{}^{j}", s.m)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
