#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vinberg::centralizers::{center_of, centralizer, centralizer_in, derived};
use vinberg::graded::{graded_from_labels, GradedAlgebra, KacLabels};
use vinberg::jordan::jordan_decompose;
use vinberg::kernel::poly::Poly;
use vinberg::kernel::{Field, Rational};
use vinberg::lie::LieAlgebra;
use vinberg::rootsys::chevalley_of;

pub type Mat = Vec<Vec<Rational>>;

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn grading(text: &str) -> GradedAlgebra {
    graded_from_labels(&text.parse::<KacLabels>().unwrap()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random element with small integer coordinates on the given basis indices.
pub fn random_on(n: usize, idx: &[usize], bound: i64, r: &mut ChaCha8Rng) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for &i in idx {
        v[i] = q(r.gen_range(-bound..=bound));
    }
    v
}

pub fn random_degree_one(g: &GradedAlgebra, bound: i64, r: &mut ChaCha8Rng) -> Vec<Rational> {
    random_on(g.dim(), g.block(1), bound, r)
}

/// Sparse degree-one element: each coordinate nonzero with probability 1/3.
pub fn sparse_degree_one(g: &GradedAlgebra, r: &mut ChaCha8Rng) -> Vec<Rational> {
    let idx: Vec<usize> = g.block(1).iter().copied().filter(|_| r.gen_range(0..3) == 0).collect();
    random_on(g.dim(), &idx, 3, r)
}

// ---- textbook dense linear algebra over ℚ ----

pub fn gauss_rank(mut a: Mat) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for k in c..cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= &t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !brow[j].is_zero() {
                    let t = &a[i][l] * &brow[j];
                    c[i][j] += &t;
                }
            }
        }
    }
    c
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| q((i == j) as i64)).collect()).collect()
}

pub fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, r)| p - r).collect()).collect()
}

pub fn is_zero_mat(a: &Mat) -> bool {
    a.iter().flatten().all(Rational::is_zero)
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut m: Mat = a.iter().zip(identity(n)).map(|(r, e)| r.iter().cloned().chain(e).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].inv().unwrap();
        for k in 0..2 * n {
            m[c][k] = &m[c][k] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..2 * n {
                    let t = &f * &m[c][k];
                    m[i][k] -= &t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `A y = b` by Gauss–Jordan on the augmented matrix.
pub fn solve(a: &Mat, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a[0].len();
    let mut m: Mat = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for k in 0..=cols {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= &t;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut y = vec![Rational::zero(); cols];
    for (i, &c) in piv.iter().enumerate() {
        y[c] = m[i][cols].clone();
    }
    Some(y)
}

/// Dense `ad x` with `(ad x)_{kj}` = coefficient of basis k in `[x, b_j]`.
pub fn dense_ad(alg: &LieAlgebra, x: &[Rational]) -> Mat {
    let n = alg.dim();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            alg.bracket(x, &e)
        })
        .collect();
    (0..n).map(|k| cols.iter().map(|c| c[k].clone()).collect()).collect()
}

/// `dim 𝔤^x_l` by restricting ad x to `𝔤_l → 𝔤_{l+d}`.
pub fn oracle_graded_centralizer(g: &GradedAlgebra, x: &[Rational], d: usize) -> Vec<usize> {
    let ad = dense_ad(&g.algebra, x);
    (0..g.m)
        .map(|l| {
            let src = g.block(l);
            let dst = g.block(l + d);
            let block: Mat = dst.iter().map(|&r| src.iter().map(|&c| ad[r][c].clone()).collect()).collect();
            src.len() - if dst.is_empty() { 0 } else { gauss_rank(block) }
        })
        .collect()
}

// ---- dense Jordan–Chevalley by Newton iteration ----

fn eval_poly(p: &Poly, a: &Mat) -> Mat {
    let n = a.len();
    let mut acc = vec![vec![Rational::zero(); n]; n];
    for c in p.coeffs().iter().rev() {
        acc = mat_mul(&acc, a);
        for i in 0..n {
            acc[i][i] += c;
        }
    }
    acc
}

/// Minimal polynomial by finding the first dependency among `I, A, A², …`.
pub fn dense_min_poly(a: &Mat) -> Poly {
    let n = a.len();
    let flat = |m: &Mat| -> Vec<Rational> { m.iter().flatten().cloned().collect() };
    let mut powers = vec![flat(&identity(n))];
    let mut cur = identity(n);
    loop {
        cur = mat_mul(&cur, a);
        let target = flat(&cur);
        let cols: Mat = (0..n * n).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect();
        if let Some(c) = solve(&cols, &target) {
            let mut coeffs: Vec<Rational> = c.iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        powers.push(target);
    }
}

/// `(S, N)` with `A = S + N`, `S` semisimple, `N` nilpotent, `[S, N] = 0`.
pub fn newton_jordan(a: &Mat) -> (Mat, Mat) {
    let p = dense_min_poly(a);
    let sq = {
        let g = p.gcd(&p.derivative());
        p.div_rem(&g).0
    };
    let dsq = sq.derivative();
    let mut s = a.clone();
    loop {
        let v = eval_poly(&sq, &s);
        if is_zero_mat(&v) {
            break;
        }
        let d = inverse(&eval_poly(&dsq, &s)).expect("p'(S) invertible");
        s = mat_sub(&s, &mat_mul(&v, &d));
    }
    let nmat = mat_sub(a, &s);
    (s, nmat)
}

/// Recovers `y` with `ad y = S`.
pub fn ad_preimage(alg: &LieAlgebra, s: &Mat) -> Option<Vec<Rational>> {
    let n = alg.dim();
    // columns of the linear map y ↦ ad y, flattened
    let basis_ads: Vec<Mat> = (0..n)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            dense_ad(alg, &e)
        })
        .collect();
    let rows: Mat = (0..n * n).map(|r| basis_ads.iter().map(|m| m[r / n][r % n].clone()).collect()).collect();
    let target: Vec<Rational> = s.iter().flatten().cloned().collect();
    solve(&rows, &target)
}

pub fn oracle_jordan(alg: &LieAlgebra, x: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (s, _) = newton_jordan(&dense_ad(alg, x));
    let xs = ad_preimage(alg, &s).expect("ad x_s lies in ad 𝔤");
    let xn = x.iter().zip(&xs).map(|(a, b)| a - b).collect();
    (xs, xn)
}

pub fn is_nilpotent_mat(a: &Mat) -> bool {
    let mut p = a.clone();
    for _ in 0..a.len() {
        p = mat_mul(&p, a);
    }
    is_zero_mat(&p)
}

pub fn squarefree_min_poly(a: &Mat) -> bool {
    let p = dense_min_poly(a);
    p.gcd(&p.derivative()).degree() == Some(0)
}

pub fn minus(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}

/// Degree-one elements whose semisimple and nilpotent parts are both nonzero.
pub fn mixed_elements(g: &GradedAlgebra, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 200 * count {
        tries += 1;
        let x = sparse_degree_one(g, &mut r);
        let p = jordan_decompose(g, &x).unwrap();
        if !is_zero_vec(&p.x_s) && !is_zero_vec(&p.x_n) {
            out.push(x);
        }
    }
    out
}

/// `h + n` in an ungraded algebra: `h` in the Cartan subalgebra killed by a
/// positive root `α`, `n` a combination of positive root vectors killed by
/// `h` including `e_α`.
pub fn cartan_plus_nilpotent(t: &str, count: usize, seed: u64) -> (GradedAlgebra, Vec<Vec<Rational>>) {
    let c = chevalley_of(t).unwrap();
    let g = GradedAlgebra::ungraded(c.algebra.clone());
    let (n, rk) = (c.dim(), c.rank());
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };
    // root value on h_i
    let val = |a: usize, i: usize| c.algebra.bracket(&unit(i), &unit(a))[a].clone();
    let pos: Vec<usize> = (rk..n).filter(|&i| c.root_of(i).unwrap().iter().all(|&a| a >= 0)).collect();
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let a = pos[r.gen_range(0..pos.len())];
        let Some(k) = (0..rk).find(|&i| !val(a, i).is_zero()) else { continue };
        let mut h = vec![Rational::zero(); n];
        for i in (0..rk).filter(|&i| i != k) {
            h[i] = q(r.gen_range(-3..=3));
        }
        let s = (0..rk).fold(Rational::zero(), |acc, i| &acc + &(&h[i] * &val(a, i)));
        h[k] = -&(&s / &val(a, k));
        if is_zero_vec(&h) {
            continue;
        }
        let hv = |b: usize| (0..rk).fold(Rational::zero(), |acc, i| &acc + &(&h[i] * &val(b, i)));
        let mut x = h.clone();
        for &b in &pos {
            if hv(b).is_zero() && (b == a || r.gen_range(0..2) == 0) {
                x[b] = q(r.gen_range(1..=3));
            }
        }
        out.push(x);
    }
    (g, out)
}

/// Degree-wise `dim 𝔷(𝔤^x) = dim 𝔷(𝔤^{x_s}) + dim 𝔷(𝔤^{x_n} ∩ [𝔤^{x_s}, 𝔤^{x_s}])`.
pub fn additivity_holds(g: &GradedAlgebra, x: &[Rational]) -> bool {
    let p = jordan_decompose(g, x).unwrap();
    if is_zero_vec(&p.x_s) || is_zero_vec(&p.x_n) {
        return false;
    }
    let zx = center_of(g, &centralizer(g, x)).graded_dims().unwrap();
    let cs = centralizer(g, &p.x_s);
    let zs = center_of(g, &cs).graded_dims().unwrap();
    let r = derived(g, &cs);
    let rn = centralizer_in(g, std::slice::from_ref(&p.x_n), &r);
    let zn = center_of(g, &rn).graded_dims().unwrap();
    let sum: Vec<usize> = zs.iter().zip(&zn).map(|(a, b)| a + b).collect();
    zx == sum
}
