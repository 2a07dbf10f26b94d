//! Arithmetic modulo word-size primes: modular rank bounds and a
//! multimodular nullspace solver with exact verification.
//!
//! Reduction mod p can only lower the rank of a rational matrix, so
//! `rank_p(A) <= rank_Q(A)` holds for every prime and gives rigorous
//! lower bounds without any big-integer elimination.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// The i-th prime below 2^62, in decreasing order.
pub fn prime(i: usize) -> u64 {
    static PRIMES: OnceLock<std::sync::Mutex<Vec<u64>>> = OnceLock::new();
    let lock = PRIMES.get_or_init(|| std::sync::Mutex::new(Vec::new()));
    let mut v = lock.lock().unwrap();
    while v.len() <= i {
        let mut c = v.last().map(|&p| p - 2).unwrap_or((1u64 << 62) - 1);
        while !is_prime_u64(c) {
            c -= 2;
        }
        v.push(c);
    }
    v[i]
}

pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let mut r: u128 = 0;
    for d in x.magnitude().iter_u64_digits().rev() {
        r = ((r << 64) | d as u128) % p as u128;
    }
    let r = r as u64;
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

/// `q mod p`, or `None` when p divides the denominator.
pub fn rational_mod(q: &Rational, p: u64) -> Option<u64> {
    let d = bigint_mod(q.denom(), p);
    if d == 0 {
        return None;
    }
    let n = bigint_mod(q.numer(), p);
    Some(if d == 1 { n } else { mul_mod(n, inv_mod(d, p), p) })
}

/// In-place reduced row-echelon form over F_p; returns pivot columns.
/// Rows of the result are the first `pivots.len()` rows of `a`.
pub fn rref_mod(a: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(k) = (r..a.len()).find(|&k| a[k][c] != 0) else {
            continue;
        };
        a.swap(r, k);
        let inv = inv_mod(a[r][c], p);
        if inv != 1 {
            for x in a[r][c..].iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
        }
        let (head, tail) = a.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().unwrap();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                if y != 0 {
                    *x = sub_mod(*x, mul_mod(f, y, p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over F_p of an integer matrix.
pub fn rank_mod(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| bigint_mod(x, p)).collect()).collect();
    rref_mod(&mut a, ncols, p).len()
}

/// Rank over F_p of a rational matrix, or `None` if p divides a denominator.
pub fn rank_mod_rational(rows: &[Vec<Rational>], ncols: usize, p: u64) -> Option<usize> {
    let mut a = Vec::with_capacity(rows.len());
    for r in rows {
        let mut v = Vec::with_capacity(ncols);
        for x in r {
            v.push(rational_mod(x, p)?);
        }
        a.push(v);
    }
    Some(rref_mod(&mut a, ncols, p).len())
}

/// Lower bound for the rational rank, using the first prime not dividing
/// any denominator.
pub fn rank_lower_bound(rows: &[Vec<Rational>], ncols: usize) -> usize {
    (0..).find_map(|i| rank_mod_rational(rows, ncols, prime(i))).unwrap()
}

/// Rational reconstruction of `a mod m`: finds n/d ≡ a with |n|, d ≤ bound.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound {
        return None;
    }
    let q = Rational::new(r1, t1);
    // confirm the congruence (guards against non-coprime denominators)
    let lhs = (q.numer() - a * q.denom()).mod_floor(m);
    lhs.is_zero().then_some(q)
}

/// Symmetric residue of `a` modulo `m`, or `None` when it is not small.
fn small_symmetric(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<BigInt> {
    let r = a.mod_floor(m);
    if &r <= bound {
        return Some(r);
    }
    let s = r - m;
    (&(-&s) <= bound).then_some(s)
}

struct Accum {
    pivots: Vec<usize>,
    free: Vec<usize>,
    /// residues[v][i]: entry of kernel vector v at pivot i, mod `modulus`
    residues: Vec<Vec<BigInt>>,
    modulus: BigInt,
}

/// Canonical nullspace of an integer matrix (same normalization as
/// [`super::field::Rref::nullspace`]), by CRT over word-size primes and
/// rational reconstruction. Every returned vector is checked exactly, and the
/// count matches `ncols - rank_p`, which bounds the true nullity from above.
pub fn nullspace_multimodular(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut acc: Option<Accum> = None;
    let mut candidate: Option<Vec<Vec<Rational>>> = None;
    for pi in 0.. {
        let p = prime(pi);
        let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| bigint_mod(x, p)).collect()).collect();
        let pivots = rref_mod(&mut a, ncols, p);
        let rank = pivots.len();
        if let Some(ac) = &acc {
            if rank < ac.pivots.len() || (rank == ac.pivots.len() && pivots > ac.pivots) {
                continue;
            }
            if pivots != ac.pivots {
                acc = None;
                candidate = None;
            }
        }
        let mut is_pivot = vec![false; ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
        if free.is_empty() {
            return Vec::new();
        }
        // kernel entries mod p: v_f[pivot_i] = -a[i][f]
        let res_p: Vec<Vec<u64>> = free.iter().map(|&f| (0..rank).map(|i| if a[i][f] == 0 { 0 } else { p - a[i][f] }).collect()).collect();

        if let Some(cand) = &candidate {
            let consistent = cand
                .iter()
                .zip(&res_p)
                .all(|(v, rp)| acc.as_ref().unwrap().pivots.iter().zip(rp).all(|(&c, &r)| rational_mod(&v[c], p) == Some(r)));
            if consistent && verify_nullspace(rows, cand) {
                return candidate.unwrap();
            }
        }

        match &mut acc {
            None => {
                acc = Some(Accum {
                    pivots: pivots.clone(),
                    free,
                    residues: res_p.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect(),
                    modulus: BigInt::from(p),
                });
            }
            Some(ac) => {
                let m_inv = inv_mod(bigint_mod(&ac.modulus, p), p);
                for (vr, rp) in ac.residues.iter_mut().zip(&res_p) {
                    for (x, &r) in vr.iter_mut().zip(rp) {
                        let xm = bigint_mod(x, p);
                        let t = mul_mod(sub_mod(r, xm, p), m_inv, p);
                        if t != 0 {
                            *x += &ac.modulus * t;
                        }
                    }
                }
                ac.modulus *= p;
            }
        }
        let ac = acc.as_ref().unwrap();
        candidate = reconstruct(ac, ncols);
    }
    unreachable!()
}

fn reconstruct(ac: &Accum, ncols: usize) -> Option<Vec<Vec<Rational>>> {
    let bound = (&ac.modulus >> 1u32).sqrt();
    let mut den = BigInt::one();
    let mut out = Vec::with_capacity(ac.free.len());
    for (vr, &f) in ac.residues.iter().zip(&ac.free) {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (x, &c) in vr.iter().zip(&ac.pivots) {
            if x.is_zero() {
                continue;
            }
            let scaled = (x * &den).mod_floor(&ac.modulus);
            let q = match small_symmetric(&scaled, &ac.modulus, &bound) {
                Some(n) => Rational::new(n, den.clone()),
                None => {
                    let q = rational_reconstruct(x, &ac.modulus, &bound)?;
                    den = den.lcm(q.denom());
                    q
                }
            };
            v[c] = q;
        }
        out.push(v);
    }
    Some(out)
}

/// Exact check that `A v = 0` for every candidate vector.
fn verify_nullspace(rows: &[Vec<BigInt>], vecs: &[Vec<Rational>]) -> bool {
    for v in vecs {
        let den = v.iter().fold(BigInt::one(), |d, q| if q.is_integer() { d } else { d.lcm(q.denom()) });
        let w: Vec<BigInt> = v.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        for row in rows {
            let mut s = BigInt::zero();
            for (a, b) in row.iter().zip(&w) {
                if !a.is_zero() && !b.is_zero() {
                    s += a * b;
                }
            }
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}
