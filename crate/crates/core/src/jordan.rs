//! Jordan decomposition, Cartan subspaces, rank and Jordan-class data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::centralizers::{center_of, centralizer, common_centralizer, embed, Subalgebra};
use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::kernel::modular::rank_lower_bound;
use crate::kernel::{Field, Matrix, Poly, Rational, Subspace};
use crate::lie::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair<F> {
    pub x_s: Vec<F>,
    pub x_n: Vec<F>,
}

/// Block layout used by the kernel and image chains: `x` maps block `l`
/// into block `l + shift`.
struct Blocks<'a> {
    blocks: Vec<&'a [usize]>,
    shift: usize,
}

impl<'a> Blocks<'a> {
    fn of(g: &'a GradedAlgebra, all: &'a [usize], x: &[impl Field]) -> Self {
        match g.homogeneous_degree(x) {
            Some(d) => Blocks { blocks: (0..g.m).map(|l| g.block(l)).collect(), shift: d },
            None => Blocks { blocks: vec![all], shift: 0 },
        }
    }

    fn target(&self, l: usize) -> usize {
        (l + self.shift) % self.blocks.len()
    }
}

fn mat_vec<F: Field>(a: &[Vec<F>], v: &[F]) -> Vec<F> {
    a.iter().map(|row| crate::kernel::dot(row, v)).collect()
}

/// The generalized null space of `ad x`, i.e. `𝔤^{x_s}`. Graded when `x` is
/// homogeneous.
pub fn generalized_kernel<F: Field>(g: &GradedAlgebra, x: &[F]) -> Subalgebra<F> {
    let n = g.dim();
    let all: Vec<usize> = (0..n).collect();
    let bl = Blocks::of(g, &all, x);
    let k = bl.blocks.len();
    let ads: Vec<Vec<Vec<F>>> = (0..k).map(|l| g.algebra.ad_block(x, bl.blocks[l], bl.blocks[bl.target(l)])).collect();
    // kernel vectors in local coordinates, per block
    let mut ker: Vec<Vec<Vec<F>>> = (0..k).map(|l| F::nullspace(&ads[l], bl.blocks[l].len())).collect();
    for v in ker.iter_mut().flatten() {
        F::normalize_vector(v);
    }
    let mut total: usize = ker.iter().map(Vec::len).sum();
    loop {
        let mut next = Vec::with_capacity(k);
        for l in 0..k {
            let dom = bl.blocks[l].len();
            let t = bl.target(l);
            let b = &ker[t];
            if dom == 0 {
                next.push(Vec::new());
                continue;
            }
            let rows: Vec<Vec<F>> = ads[l]
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    let mut out = row.clone();
                    out.extend(b.iter().map(|v| v[r].negated()));
                    out
                })
                .collect();
            let sols = F::nullspace(&rows, dom + b.len());
            let mut part: Vec<Vec<F>> = sols.into_iter().map(|s| s[..dom].to_vec()).collect();
            part = F::rref(&part, dom).rows;
            for v in part.iter_mut() {
                F::normalize_vector(v);
            }
            next.push(part);
        }
        let t: usize = next.iter().map(Vec::len).sum();
        ker = next;
        if t == total {
            break;
        }
        total = t;
    }
    let graded = bl.blocks.len() == g.m && g.homogeneous_degree(x).is_some();
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for (l, part) in ker.iter().enumerate() {
        for v in part {
            basis.push(embed(n, bl.blocks[l], v));
            degrees.push(l);
        }
    }
    Subalgebra { basis, degrees: graded.then_some(degrees), m: g.m }
}

/// `ad x` is nilpotent. Decided by iterating images of `ad x` until they
/// vanish or stop shrinking.
pub fn is_nilpotent<F: Field>(g: &GradedAlgebra, x: &[F]) -> bool {
    let n = g.dim();
    let all: Vec<usize> = (0..n).collect();
    let bl = Blocks::of(g, &all, x);
    let k = bl.blocks.len();
    let ads: Vec<Vec<Vec<F>>> = (0..k).map(|l| g.algebra.ad_block(x, bl.blocks[l], bl.blocks[bl.target(l)])).collect();
    let mut img: Vec<Vec<Vec<F>>> = (0..k)
        .map(|l| {
            let d = bl.blocks[l].len();
            let cols: Vec<Vec<F>> = (0..d).map(|j| ads[l].iter().map(|r| r[j].clone()).collect()).collect();
            F::rref(&cols, bl.blocks[bl.target(l)].len()).rows
        })
        .collect();
    // img[l] lives in block target(l); re-index so that img[t] is inside block t
    let mut cur: Vec<Vec<Vec<F>>> = vec![Vec::new(); k];
    for (l, v) in img.drain(..).enumerate() {
        cur[bl.target(l)] = v;
    }
    let mut total: usize = cur.iter().map(Vec::len).sum();
    while total > 0 {
        let mut next: Vec<Vec<Vec<F>>> = vec![Vec::new(); k];
        for l in 0..k {
            if cur[l].is_empty() {
                continue;
            }
            let t = bl.target(l);
            let mut imgs: Vec<Vec<F>> = cur[l].iter().map(|v| mat_vec(&ads[l], v)).collect();
            imgs.retain(|v| v.iter().any(|c| !c.is_zero()));
            let mut rows = F::rref(&imgs, bl.blocks[t].len()).rows;
            for v in rows.iter_mut() {
                F::normalize_vector(v);
            }
            next[t] = rows;
        }
        let t: usize = next.iter().map(Vec::len).sum();
        if t == total {
            return false;
        }
        total = t;
        cur = next;
    }
    true
}

/// `x` is semisimple, tested as `ker ad x = ker (ad x)²`. In a semisimple
/// Lie algebra this is equivalent to `x_n = 0`: a nonzero `x_n` acts as a
/// nonzero nilpotent map on `𝔤^{x_s}`.
pub fn is_semisimple<F: Field>(g: &GradedAlgebra, x: &[F]) -> bool {
    let n = g.dim();
    let all: Vec<usize> = (0..n).collect();
    let bl = Blocks::of(g, &all, x);
    let k = bl.blocks.len();
    let ads: Vec<Vec<Vec<F>>> = (0..k).map(|l| g.algebra.ad_block(x, bl.blocks[l], bl.blocks[bl.target(l)])).collect();
    let ker: Vec<Vec<Vec<F>>> = (0..k).map(|l| F::nullspace(&ads[l], bl.blocks[l].len())).collect();
    for l in 0..k {
        let dom = bl.blocks[l].len();
        if dom == 0 {
            continue;
        }
        let b = &ker[bl.target(l)];
        let rows: Vec<Vec<F>> = ads[l]
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut out = row.clone();
                out.extend(b.iter().map(|v| v[r].negated()));
                out
            })
            .collect();
        let second = dom + b.len() - crate::centralizers::rank_of_rows(&rows, dom + b.len());
        // the solution space projects injectively onto its first `dom`
        // coordinates, so its dimension is dim ker (ad x)² on this block
        if second != ker[l].len() {
            return false;
        }
    }
    true
}

/// Jordan decomposition `x = x_s + x_n` in a semisimple algebra.
///
/// `𝔪 = 𝔤^{x_s}` is the generalized kernel of `ad x`; `x_s` lies in the center
/// of `𝔪` and `x_n` in `[𝔪, 𝔪]`, which is the Killing-orthogonal of `𝔷(𝔪)`
/// inside `𝔪`. So `x_s` is the Killing projection of `x` onto `𝔷(𝔪)`.
pub fn jordan_decompose<F: Field>(g: &GradedAlgebra, x: &[F]) -> Result<JordanPair<F>> {
    let n = g.dim();
    if x.len() != n {
        return Err(Error::Dimension(format!("element has {} coordinates, algebra has {n}", x.len())));
    }
    let m = generalized_kernel(g, x);
    if m.dim() == n {
        // x_s is central in a semisimple algebra
        return Ok(JordanPair { x_s: vec![F::zero(); n], x_n: x.to_vec() });
    }
    let z = center_of(g, &m);
    let x_s = killing_projection(g, x, &z)?;
    let x_n: Vec<F> = x.iter().zip(&x_s).map(|(a, b)| a.minus(b)).collect();
    Ok(JordanPair { x_s, x_n })
}

fn killing_projection<F: Field>(g: &GradedAlgebra, x: &[F], z: &Subalgebra<F>) -> Result<Vec<F>> {
    let n = g.dim();
    let (zs, ws) = match (g.homogeneous_degree(x), z.is_graded()) {
        (Some(d), true) => (z.part(d), z.part((g.m - d) % g.m)),
        _ => (z.basis.clone(), z.basis.clone()),
    };
    if zs.is_empty() {
        return Ok(vec![F::zero(); n]);
    }
    let alg = &g.algebra;
    let gram: Vec<Vec<F>> = ws.iter().map(|w| zs.iter().map(|zi| alg.killing(zi, w)).collect()).collect();
    let rhs: Vec<F> = ws.iter().map(|w| alg.killing(x, w)).collect();
    let c = Matrix::from_rows(gram)?.solve(&rhs)?.ok_or_else(|| Error::Internal("Killing form degenerate on the center".into()))?;
    let mut out = vec![F::zero(); n];
    for (ci, zi) in c.iter().zip(&zs) {
        for (o, v) in out.iter_mut().zip(zi) {
            if !v.is_zero() {
                o.add_assign(&ci.times(v));
            }
        }
    }
    Ok(out)
}

/// Minimal polynomial of `ad x`, as the lcm of the Krylov minimal
/// polynomials of the basis vectors.
pub fn ad_minimal_polynomial(alg: &LieAlgebra, x: &[Rational]) -> Poly {
    let n = alg.dim();
    let a = alg.ad(x);
    let sparse: Vec<Vec<(usize, Rational)>> =
        a.rows().iter().map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()).collect();
    let apply = |v: &[Rational]| -> Vec<Rational> {
        sparse
            .iter()
            .map(|r| {
                let mut s = Rational::zero();
                for (j, c) in r {
                    if !v[*j].is_zero() {
                        s += &(c * &v[*j]);
                    }
                }
                s
            })
            .collect()
    };
    let eval = |p: &Poly, v: &[Rational]| -> Vec<Rational> {
        // Horner: p(A) v
        let cs = p.coeffs();
        let mut acc = vec![Rational::zero(); n];
        for c in cs.iter().rev() {
            acc = apply(&acc);
            for (a, vi) in acc.iter_mut().zip(v) {
                if !vi.is_zero() && !c.is_zero() {
                    *a += &(c * vi);
                }
            }
        }
        acc
    };
    let mut result = Poly::one();
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        if eval(&result, &e).iter().all(Rational::is_zero) {
            continue;
        }
        let p = krylov_min_poly(&e, &apply);
        result = result.lcm(&p);
    }
    result
}

/// Minimal polynomial of `v` under a linear map.
fn krylov_min_poly(v: &[Rational], apply: &dyn Fn(&[Rational]) -> Vec<Rational>) -> Poly {
    // rows: (reduced vector, combination of A^i v producing it), pivot
    let mut basis: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut cur = v.to_vec();
    let mut k = 0;
    loop {
        let mut w = cur.clone();
        let mut comb = vec![Rational::zero(); k + 1];
        comb[k] = Rational::one();
        for (p, b, c) in &basis {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (i, y) in c.iter().enumerate() {
                if !y.is_zero() {
                    comb[i] -= &(&f * y);
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => return Poly::new(comb),
            Some(p) => {
                let inv = w[p].inv().unwrap();
                for x in w.iter_mut() {
                    *x *= &inv;
                }
                for x in comb.iter_mut() {
                    *x *= &inv;
                }
                basis.push((p, w, comb));
            }
        }
        cur = apply(&cur);
        k += 1;
        for (_, _, c) in basis.iter_mut() {
            c.resize(k + 1, Rational::zero());
        }
    }
}

/// Semisimplicity through the minimal polynomial of `ad x` being squarefree.
pub fn has_squarefree_ad_minpoly(alg: &LieAlgebra, x: &[Rational]) -> bool {
    let p = ad_minimal_polynomial(alg, x);
    p.gcd(&p.derivative()).degree() == Some(0)
}

/// Randomized-search parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingConfig {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: i64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig { seed: 0, trials: 5, coeff_bound: 1000 }
    }
}

/// A random element of `𝔤_l` with integer coordinates in `[-bound, bound]`.
pub fn random_homogeneous(g: &GradedAlgebra, l: usize, bound: i64, rng: &mut impl Rng) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); g.dim()];
    for &i in g.block(l) {
        v[i] = Rational::from_i64(rng.gen_range(-bound..=bound));
    }
    v
}

/// `cfg.trials` seeded random elements of `𝔤_1`.
pub fn random_degree_one(g: &GradedAlgebra, cfg: &SamplingConfig) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials.max(1)).map(|_| random_homogeneous(g, 1, cfg.coeff_bound, &mut rng)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanChecks {
    pub abelian: bool,
    pub semisimple: bool,
    pub center_degree_one_is_c: bool,
    pub derived_degree_one_nilpotent: bool,
}

impl CartanChecks {
    pub fn all(&self) -> bool {
        self.abelian && self.semisimple && self.center_degree_one_is_c && self.derived_degree_one_nilpotent
    }
}

#[derive(Clone, Debug)]
pub struct CartanSubspaceData<F> {
    pub basis: Vec<Vec<F>>,
    /// 𝔠_𝔤(𝔠).
    pub centralizer: Subalgebra<F>,
    pub checks: CartanChecks,
}

impl<F: Field> CartanSubspaceData<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn combination<F: Field>(n: usize, vecs: &[Vec<F>], rng: &mut impl Rng) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for v in vecs {
        let c = F::from_i64(rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 });
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                o.add_assign(&c.times(x));
            }
        }
    }
    out
}

/// Runs every Cartan-subspace check on a candidate basis of degree-1 vectors.
pub fn verify_cartan_subspace<F: Field>(g: &GradedAlgebra, basis: &[Vec<F>]) -> CartanSubspaceData<F> {
    let n = g.dim();
    let alg = &g.algebra;
    let mut rng = ChaCha8Rng::seed_from_u64(0xca57a);
    let in_degree_one = basis.iter().all(|c| g.is_homogeneous_of(c, 1));
    let abelian =
        in_degree_one && (0..basis.len()).all(|i| (i + 1..basis.len()).all(|j| alg.bracket(&basis[i], &basis[j]).iter().all(F::is_zero)));
    let mut probes: Vec<Vec<F>> = basis.to_vec();
    if basis.len() > 1 {
        probes.push(combination(n, basis, &mut rng));
    }
    let semisimple = probes.iter().all(|c| is_semisimple(g, c));
    let cent = common_centralizer(g, basis);
    let z = center_of(g, &cent);
    let z1 = Subspace::span(n, &z.part(1));
    let c_span = Subspace::span(n, basis);
    let center_degree_one_is_c = z1.dim() == c_span.dim() && z1.contains_space(&c_span);
    // [C, C]_1 is the Killing-orthogonal of 𝔷(C)_{-1} inside C_1
    let zm = z.part(g.m - 1);
    let c1 = cent.part(1);
    let derived1: Vec<Vec<F>> = if zm.is_empty() {
        c1.clone()
    } else {
        let rows: Vec<Vec<F>> = zm.iter().map(|w| c1.iter().map(|v| alg.killing(v, w)).collect()).collect();
        F::nullspace(&rows, c1.len())
            .iter()
            .map(|co| {
                let mut out = vec![F::zero(); n];
                for (c, v) in co.iter().zip(&c1) {
                    for (o, x) in out.iter_mut().zip(v) {
                        if !x.is_zero() && !c.is_zero() {
                            o.add_assign(&c.times(x));
                        }
                    }
                }
                F::normalize_vector(&mut out);
                out
            })
            .collect()
    };
    let mut nil_probes = derived1.clone();
    if derived1.len() > 1 {
        nil_probes.push(combination(n, &derived1, &mut rng));
    }
    let derived_degree_one_nilpotent = nil_probes.iter().all(|y| is_nilpotent(g, y));
    CartanSubspaceData {
        basis: basis.to_vec(),
        centralizer: cent,
        checks: CartanChecks { abelian, semisimple, center_degree_one_is_c, derived_degree_one_nilpotent },
    }
}

/// One sampled element of `𝔤_1` with its (lower-bound) orbit dimension.
struct Sample {
    x: Vec<Rational>,
    orbit_dim: usize,
}

fn sample_elements(g: &GradedAlgebra, cfg: &SamplingConfig) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let dom = g.block(0);
    (0..cfg.trials.max(1))
        .map(|_| {
            let x = random_homogeneous(g, 1, cfg.coeff_bound, &mut rng);
            let a = g.algebra.ad_block(&x, dom, g.block(1));
            let orbit_dim = if dom.is_empty() || g.block(1).is_empty() { 0 } else { rank_lower_bound(&a, dom.len()) };
            Sample { x, orbit_dim }
        })
        .collect()
}

/// Finds a Cartan subspace `𝔠 = 𝔷(𝔤^{x_s})_1` from a sampled element of
/// maximal orbit dimension and verifies it.
pub fn cartan_subspace(g: &GradedAlgebra, cfg: &SamplingConfig) -> Result<CartanSubspaceData<Rational>> {
    let mut samples = sample_elements(g, cfg);
    samples.sort_by(|a, b| b.orbit_dim.cmp(&a.orbit_dim));
    let v = g.block(1).len();
    let mut last = String::new();
    for s in &samples {
        let m = generalized_kernel(g, &s.x);
        let z = center_of(g, &m);
        let c = z.part(1);
        let exact_orbit = g.block(0).len() - centralizer_dim_in_degree(g, &s.x, 0);
        if c.len() + exact_orbit != v {
            last = format!("dim c = {} but dim V - dim [g0,x] = {}", c.len(), v - exact_orbit);
            continue;
        }
        let data = verify_cartan_subspace(g, &c);
        if data.checks.all() {
            return Ok(data);
        }
        last = format!("verification failed: {:?}", data.checks);
    }
    Err(Error::UnluckySampling { trials: samples.len(), reason: last })
}

fn centralizer_dim_in_degree<F: Field>(g: &GradedAlgebra, x: &[F], l: usize) -> usize {
    let dom = g.block(l);
    if dom.is_empty() {
        return 0;
    }
    let d = g.homogeneous_degree(x).unwrap_or(0);
    let a = g.algebra.ad_block(x, dom, g.block(l + d));
    F::nullspace(&a, dom.len()).len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub rank: usize,
    /// dim 𝔷(𝔤^{x_s})_1 for the chosen sample.
    pub from_center: usize,
    /// dim V − max dim [𝔤_0, x] over the samples.
    pub from_orbits: usize,
    pub agree: bool,
}

/// Rank of the grading, computed twice: as `dim 𝔠` and as the codimension of
/// the largest sampled `G_0`-orbit.
pub fn rank_of_grading(g: &GradedAlgebra, cfg: &SamplingConfig) -> Result<RankReport> {
    let c = cartan_subspace(g, cfg)?;
    let samples = sample_elements(g, cfg);
    let best = samples.iter().map(|s| s.orbit_dim).max().unwrap_or(0);
    let from_orbits = g.block(1).len() - best;
    let report = RankReport { rank: c.dim(), from_center: c.dim(), from_orbits, agree: c.dim() == from_orbits };
    if !report.agree {
        return Err(Error::UnluckySampling {
            trials: cfg.trials,
            reason: format!("dim c = {} but orbit codimension = {from_orbits}", c.dim()),
        });
    }
    Ok(report)
}

pub fn nilcone_dim(g: &GradedAlgebra, cfg: &SamplingConfig) -> Result<usize> {
    Ok(g.block(1).len() - rank_of_grading(g, cfg)?.rank)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityEntry {
    pub dim_centralizer: usize,
    pub dim_centralizer_0: usize,
    pub regular: bool,
    pub bullet: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub entries: Vec<RegularityEntry>,
    /// The relatively regular elements are all relatively •-regular.
    pub regular_within_bullet: bool,
}

/// Flags the elements of a finite set minimizing `dim 𝔤^x` (regular) and
/// minimizing `dim 𝔤^x_0` (•-regular).
pub fn classify_regularity<F: Field>(g: &GradedAlgebra, xs: &[Vec<F>]) -> Result<RegularityReport> {
    let mut dims = Vec::with_capacity(xs.len());
    for x in xs {
        if !g.is_homogeneous_of(x, 1) {
            return Err(Error::NotHomogeneous(1));
        }
        let c = centralizer(g, x);
        let d0 = c.graded_dims().map(|d| d[0]).unwrap_or(0);
        dims.push((c.dim(), d0));
    }
    let min_all = dims.iter().map(|d| d.0).min().unwrap_or(0);
    let min_0 = dims.iter().map(|d| d.1).min().unwrap_or(0);
    let entries: Vec<RegularityEntry> = dims
        .iter()
        .map(|&(a, b)| RegularityEntry { dim_centralizer: a, dim_centralizer_0: b, regular: a == min_all, bullet: b == min_0 })
        .collect();
    let regular_within_bullet = entries.iter().all(|e| !e.regular || e.bullet);
    Ok(RegularityReport { entries, regular_within_bullet })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanClassData<F> {
    pub x: Vec<F>,
    pub pair: JordanPair<F>,
    pub dim_class: usize,
    pub centralizer_dims: Vec<usize>,
    pub semisimple_centralizer_dims: Vec<usize>,
    pub center_dim_1: usize,
}

/// `dim J_{G_0}(x) = dim 𝔤_0 − dim 𝔤^x_0 + dim 𝔷(𝔤^{x_s})_1`.
pub fn jordan_class_data<F: Field>(g: &GradedAlgebra, x: &[F]) -> Result<JordanClassData<F>> {
    if !g.is_homogeneous_of(x, 1) {
        return Err(Error::NotHomogeneous(1));
    }
    let pair = jordan_decompose(g, x)?;
    let cx = centralizer(g, x);
    let cs = centralizer(g, &pair.x_s);
    let z = center_of(g, &cs);
    let centralizer_dims = cx.graded_dims().unwrap();
    let semisimple_centralizer_dims = cs.graded_dims().unwrap();
    let center_dim_1 = z.part(1).len();
    let dim_class = g.block(0).len() - centralizer_dims[0] + center_dim_1;
    Ok(JordanClassData { x: x.to_vec(), pair, dim_class, centralizer_dims, semisimple_centralizer_dims, center_dim_1 })
}

/// Checks that `w` is a grading-preserving automorphism: `w[a,b] = [wa,wb]`
/// on basis pairs and `w 𝔤_l ⊆ 𝔤_l`.
pub fn check_graded_automorphism<F: Field>(g: &GradedAlgebra, w: &Matrix<F>) -> Result<()> {
    let n = g.dim();
    if w.nrows() != n || w.ncols() != n {
        return Err(Error::NotAutomorphism(format!("expected a {n}x{n} matrix")));
    }
    let cols: Vec<Vec<F>> = (0..n).map(|j| (0..n).map(|i| w.get(i, j).clone()).collect()).collect();
    for (j, c) in cols.iter().enumerate() {
        if !g.is_homogeneous_of(c, g.degree(j)) {
            return Err(Error::NotAutomorphism(format!("column {j} leaves its degree")));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut lhs = vec![F::zero(); n];
            for &(k, c) in g.algebra.basis_bracket(i, j) {
                for (o, x) in lhs.iter_mut().zip(&cols[k as usize]) {
                    if !x.is_zero() {
                        o.add_assign(&x.times_i64(c));
                    }
                }
            }
            if g.algebra.denom() != 1 {
                let d = Rational::ratio(1, g.algebra.denom());
                lhs.iter_mut().for_each(|x| *x = x.times_rational(&d));
            }
            if lhs != g.algebra.bracket(&cols[i], &cols[j]) {
                return Err(Error::NotAutomorphism(format!("bracket of {} and {} not preserved", g.algebra.name(i), g.algebra.name(j))));
            }
        }
    }
    Ok(())
}

/// True iff `w 𝔤^{x_s} = 𝔤^{y_s}` and `w x_n = y_n`.
pub fn jordan_equiv_witness<F: Field>(g: &GradedAlgebra, x: &[F], y: &[F], w: &Matrix<F>) -> Result<bool> {
    check_graded_automorphism(g, w)?;
    let n = g.dim();
    let px = jordan_decompose(g, x)?;
    let py = jordan_decompose(g, y)?;
    if w.mul_vec(&px.x_n)? != py.x_n {
        return Ok(false);
    }
    let cx = centralizer(g, &px.x_s);
    let cy = centralizer(g, &py.x_s);
    let moved: Vec<Vec<F>> = cx.basis.iter().map(|v| w.mul_vec(v)).collect::<Result<_>>()?;
    let a = Subspace::span(n, &moved);
    let b = Subspace::span(n, &cy.basis);
    Ok(a.dim() == b.dim() && a.contains_space(&b))
}
