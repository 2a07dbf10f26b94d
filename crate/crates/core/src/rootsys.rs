//! Root systems of the simple types and Chevalley bases.
//!
//! Simple roots follow Bourbaki numbering. Structure constants come from the
//! extraspecial-pair construction: positive roots are ordered by height and
//! then lexicographically, `N_{α,β} = p + 1` on every extraspecial pair, and
//! everything else is forced by the standard identities.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, StructureConstants};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple type together with its rank, e.g. `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub kind: SimpleType,
    pub rank: usize,
}

impl CartanType {
    pub fn new(kind: SimpleType, rank: usize) -> Result<Self> {
        let ok = match kind {
            SimpleType::A => rank >= 1,
            SimpleType::B | SimpleType::C => rank >= 2,
            SimpleType::D => rank >= 4,
            SimpleType::E => (6..=8).contains(&rank),
            SimpleType::F => rank == 4,
            SimpleType::G => rank == 2,
        };
        let t = CartanType { kind, rank };
        if ok {
            Ok(t)
        } else {
            Err(Error::UnsupportedType(t.to_string()))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => SimpleType::A,
            Some('B') => SimpleType::B,
            Some('C') => SimpleType::C,
            Some('D') => SimpleType::D,
            Some('E') => SimpleType::E,
            Some('F') => SimpleType::F,
            Some('G') => SimpleType::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(kind, rank)
    }
}

/// Integer Gram matrix of the simple roots, scaled so short roots have
/// squared length 2.
fn gram(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut b = vec![vec![0i64; n]; n];
    let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    match t.kind {
        SimpleType::A => {
            for i in 1..=n {
                b[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                link(&mut b, i, i + 1, -1);
            }
        }
        SimpleType::B => {
            for i in 1..n {
                b[i - 1][i - 1] = 4;
                link(&mut b, i, i + 1, -2);
            }
            b[n - 1][n - 1] = 2;
        }
        SimpleType::C => {
            for i in 1..n {
                b[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
            b[n - 1][n - 1] = 4;
            link(&mut b, n - 1, n, -2);
        }
        SimpleType::D => {
            for i in 1..=n {
                b[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                link(&mut b, i, i + 1, -1);
            }
            link(&mut b, n - 2, n, -1);
        }
        SimpleType::E => {
            for i in 1..=n {
                b[i - 1][i - 1] = 2;
            }
            for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)] {
                if i <= n && j <= n {
                    link(&mut b, i, j, -1);
                }
            }
        }
        SimpleType::F => {
            b[0][0] = 4;
            b[1][1] = 4;
            b[2][2] = 2;
            b[3][3] = 2;
            link(&mut b, 1, 2, -2);
            link(&mut b, 2, 3, -2);
            link(&mut b, 3, 4, -1);
        }
        SimpleType::G => {
            b[0][0] = 2;
            b[1][1] = 6;
            link(&mut b, 1, 2, -3);
        }
    }
    b
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = α_j(h_i) = 2 (α_i, α_j) / (α_i, α_i)`.
    pub cartan: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    /// Positive roots first (height, then lexicographic), then their negatives
    /// in the same order. Coordinates are in the simple-root basis.
    pub roots: Vec<Vec<i64>>,
    /// Affine marks `a_0 = 1, a_1, …, a_n` (coefficients of the highest root).
    pub marks: Vec<i64>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.roots[self.num_positive() - 1]
    }

    /// Coordinates of the coroot of `r` in the basis of simple coroots.
    pub fn coroot(&self, r: &[i64]) -> Vec<i64> {
        let rr = self.inner(r, r);
        (0..self.rank())
            .map(|i| {
                let v = r[i] * self.gram[i][i];
                debug_assert_eq!(v % rr, 0);
                v / rr
            })
            .collect()
    }

    /// `α(h_i)` for the simple coroot `h_i`.
    pub fn pairing(&self, r: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| r[j] * self.cartan[i][j]).sum()
    }
}

/// Root system of the given type, generated by reflection closure.
pub fn build_root_system(t: CartanType) -> RootSystem {
    let n = t.rank;
    let b = gram(t);
    let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * b[i][j] / b[i][i]).collect()).collect();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier = simple.clone();
    while let Some(r) = frontier.pop() {
        for i in 0..n {
            let c: i64 = (0..n).map(|j| r[j] * cartan[i][j]).sum();
            if c == 0 {
                continue;
            }
            let mut s = r.clone();
            s[i] -= c;
            if seen.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|a, b| RootSystem::height(a).cmp(&RootSystem::height(b)).then_with(|| a.cmp(b)));
    let neg: Vec<Vec<i64>> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let mut marks = vec![1];
    marks.extend(pos.last().unwrap().iter().copied());
    let mut roots = pos;
    roots.extend(neg);
    RootSystem { cartan_type: t, cartan, gram: b, roots, marks }
}

/// A Chevalley basis: `h_1..h_n`, then `e_α` for positive roots, then `e_α`
/// for negative roots, in the root system's order.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub root_system: RootSystem,
    pub algebra: Arc<LieAlgebra>,
    root_index: HashMap<Vec<i64>, usize>,
}

pub fn root_name(r: &[i64]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("e[{}]", parts.join(","))
}

impl ChevalleyAlgebra {
    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis index of `e_α`.
    pub fn root_basis_index(&self, r: &[i64]) -> Option<usize> {
        self.root_index.get(r).map(|k| k + self.rank())
    }

    /// The root of a basis element, or `None` for Cartan generators.
    pub fn root_of(&self, i: usize) -> Option<&[i64]> {
        i.checked_sub(self.rank()).map(|k| self.root_system.roots[k].as_slice())
    }
}

/// Signs and constants `N_{α,β}` for all root pairs, keyed by root indices.
struct NTable<'a> {
    rs: &'a RootSystem,
    index: &'a HashMap<Vec<i64>, usize>,
    npos: usize,
    /// N for ordered pairs of positive roots whose sum is a root
    pos: HashMap<(usize, usize), i64>,
}

impl NTable<'_> {
    fn idx(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    fn is_pos(&self, i: usize) -> bool {
        i < self.npos
    }

    fn len2(&self, i: usize) -> i64 {
        let r = &self.rs.roots[i];
        self.rs.inner(r, r)
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.rs.roots[a].iter().zip(&self.rs.roots[b]).map(|(x, y)| x + y).collect();
        self.idx(&s)
    }

    /// `N_{a,b}`; zero when `a + b` is not a root.
    fn n(&self, a: usize, b: usize) -> i64 {
        let Some(s) = self.sum(a, b) else {
            return 0;
        };
        match (self.is_pos(a), self.is_pos(b)) {
            (true, true) => self.pos[&(a, b)],
            (false, false) => -self.pos[&(self.neg(a), self.neg(b))],
            _ => {
                // a + b + c = 0; rotate to the same-sign pair among (b, c) or (c, a)
                let c = self.neg(s);
                if self.is_pos(b) == self.is_pos(c) {
                    // N_{a,b} / (c,c) = N_{b,c} / (a,a)
                    let v = self.n(b, c) * self.len2(c);
                    debug_assert_eq!(v % self.len2(a), 0);
                    v / self.len2(a)
                } else {
                    // N_{a,b} / (c,c) = N_{c,a} / (b,b)
                    let v = self.n(c, a) * self.len2(c);
                    debug_assert_eq!(v % self.len2(b), 0);
                    v / self.len2(b)
                }
            }
        }
    }
}

/// Builds the Chevalley basis structure constants.
pub fn chevalley(rs: &RootSystem) -> ChevalleyAlgebra {
    let n = rs.rank();
    let npos = rs.num_positive();
    let index: HashMap<Vec<i64>, usize> = rs.roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let mut nt = NTable { rs, index: &index, npos, pos: HashMap::new() };

    // string depth p: largest p with β − pα a root
    let depth = |a: usize, b: usize| -> i64 {
        let (ra, rb) = (&rs.roots[a], &rs.roots[b]);
        let mut p = 0;
        loop {
            let r: Vec<i64> = rb.iter().zip(ra).map(|(y, x)| y - (p + 1) * x).collect();
            if index.contains_key(&r) {
                p += 1;
            } else {
                return p;
            }
        }
    };

    // positive roots are already sorted by height; process sums in that order
    for xi in 0..npos {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..xi {
            for b in a + 1..xi {
                if nt.sum(a, b) == Some(xi) {
                    pairs.push((a, b));
                }
            }
        }
        let Some(&(a1, b1)) = pairs.first() else {
            continue;
        };
        let p1 = depth(a1, b1);
        nt.pos.insert((a1, b1), p1 + 1);
        nt.pos.insert((b1, a1), -(p1 + 1));
        let xx = nt.len2(xi);
        for &(a, b) in &pairs[1..] {
            let (na1, nb1) = (nt.neg(a1), nt.neg(b1));
            let mut num = 0i64;
            // the four-root identity applied to (α, β, −α₁, −β₁)
            if let Some(g) = nt.sum(b, na1) {
                num += nt.n(b, na1) * nt.n(a, nb1) * xx / nt.len2(g);
            }
            if let Some(g) = nt.sum(a, na1) {
                num += nt.n(na1, a) * nt.n(b, nb1) * xx / nt.len2(g);
            }
            debug_assert_eq!(num % (p1 + 1), 0);
            let v = num / (p1 + 1);
            debug_assert_eq!(v.abs(), depth(a, b) + 1, "structure constant magnitude");
            nt.pos.insert((a, b), v);
            nt.pos.insert((b, a), -v);
        }
    }

    let mut names: Vec<String> = (1..=n).map(|i| format!("h{i}")).collect();
    names.extend(rs.roots.iter().map(|r| root_name(r)));
    let dim = names.len();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let terms: Vec<(usize, i64)> = match (i < n, j < n) {
                (true, true) => vec![],
                (true, false) => {
                    let c = rs.pairing(&rs.roots[j - n], i);
                    vec![(j, c)]
                }
                (false, true) => unreachable!(),
                (false, false) => {
                    let (a, b) = (i - n, j - n);
                    if nt.neg(a) == b {
                        rs.coroot(&rs.roots[a]).into_iter().enumerate().collect()
                    } else {
                        match nt.sum(a, b) {
                            Some(s) => vec![(s + n, nt.n(a, b))],
                            None => vec![],
                        }
                    }
                }
            };
            if !terms.is_empty() {
                brackets.push(((i, j), terms));
            }
        }
    }
    let algebra = LieAlgebra::new(rs.cartan_type.to_string(), names, StructureConstants { denom: 1, brackets });
    ChevalleyAlgebra { root_system: rs.clone(), algebra: Arc::new(algebra), root_index: index }
}

/// Convenience: parse a type like `"E8"` and build its Chevalley algebra.
pub fn chevalley_of(t: &str) -> Result<ChevalleyAlgebra> {
    let t: CartanType = t.parse()?;
    Ok(chevalley(&build_root_system(t)))
}
