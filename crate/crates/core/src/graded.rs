//! ℤ_m-gradings of Lie algebras, in particular those of inner automorphisms
//! given by Kac labels.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::Field;
use crate::lie::LieAlgebra;
use crate::rootsys::{build_root_system, chevalley, CartanType, ChevalleyAlgebra};

/// Labels `s_0, …, s_n` on the affine Dynkin diagram (node 0 first, then
/// Bourbaki order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacLabels {
    pub cartan_type: CartanType,
    pub s: Vec<u32>,
}

impl KacLabels {
    pub fn new(cartan_type: CartanType, s: Vec<u32>) -> Result<Self> {
        if s.len() != cartan_type.rank + 1 {
            return Err(Error::InvalidLabels(format!("{cartan_type} needs {} labels, got {}", cartan_type.rank + 1, s.len())));
        }
        if s.iter().all(|&x| x == 0) {
            return Err(Error::InvalidLabels("at least one label must be positive".into()));
        }
        Ok(KacLabels { cartan_type, s })
    }

    /// Labels from the list of black nodes.
    pub fn from_black_nodes(cartan_type: CartanType, black: &[usize]) -> Result<Self> {
        let mut s = vec![0; cartan_type.rank + 1];
        for &b in black {
            if b > cartan_type.rank {
                return Err(Error::InvalidLabels(format!("node {b} out of range")));
            }
            s[b] = 1;
        }
        KacLabels::new(cartan_type, s)
    }

    /// The period `m = Σ a_i s_i`.
    pub fn period(&self) -> usize {
        let rs = build_root_system(self.cartan_type);
        self.period_with_marks(&rs.marks)
    }

    fn period_with_marks(&self, marks: &[i64]) -> usize {
        self.s.iter().zip(marks).map(|(&s, &a)| s as usize * a as usize).sum()
    }
}

impl fmt::Display for KacLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.s.iter().map(|x| x.to_string()).collect();
        write!(f, "{}: s=[{}]", self.cartan_type, s.join(","))
    }
}

/// Parses `"E8: s=[1,0,1,0,0,0,1,0,1]"`.
impl FromStr for KacLabels {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let (t, rest) = text.split_once(':').ok_or_else(|| Error::Parse(format!("expected '<type>: s=[...]', got '{text}'")))?;
        let t: CartanType = t.parse()?;
        parse_labels(t, rest)
    }
}

/// Parses the `s=[...]` part for a known type.
pub fn parse_labels(t: CartanType, text: &str) -> Result<KacLabels> {
    let body = text.trim();
    let body = body.strip_prefix("s=").or_else(|| body.strip_prefix("s =")).unwrap_or(body).trim();
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("labels must look like s=[..], got '{text}'")))?;
    let s = inner
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad label '{x}'"))))
        .collect::<Result<Vec<_>>>()?;
    KacLabels::new(t, s)
}

/// A Lie algebra with a ℤ_m-degree on every basis vector.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub algebra: Arc<LieAlgebra>,
    pub m: usize,
    degree: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    pub chevalley: Option<Arc<ChevalleyAlgebra>>,
    pub labels: Option<KacLabels>,
}

impl GradedAlgebra {
    /// Grading from an explicit degree per basis vector.
    pub fn from_degrees(algebra: Arc<LieAlgebra>, m: usize, degree: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidLabels("period must be positive".into()));
        }
        if degree.len() != algebra.dim() || degree.iter().any(|&d| d >= m) {
            return Err(Error::Dimension("degree map does not match the basis".into()));
        }
        let mut blocks = vec![Vec::new(); m];
        for (i, &d) in degree.iter().enumerate() {
            blocks[d].push(i);
        }
        Ok(GradedAlgebra { algebra, m, degree, blocks, chevalley: None, labels: None })
    }

    /// The trivial grading (m = 1).
    pub fn ungraded(algebra: Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        Self::from_degrees(algebra, 1, vec![0; n]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Reduces an integer degree into `0..m`.
    pub fn norm(&self, l: i64) -> usize {
        l.rem_euclid(self.m as i64) as usize
    }

    /// Basis indices of 𝔤_l.
    pub fn block(&self, l: usize) -> &[usize] {
        &self.blocks[l % self.m]
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Projection of `x` onto 𝔤_l.
    pub fn homogeneous_component<F: Field>(&self, x: &[F], l: usize) -> Vec<F> {
        let l = l % self.m;
        x.iter().enumerate().map(|(i, v)| if self.degree[i] == l { v.clone() } else { F::zero() }).collect()
    }

    /// The degree of a nonzero homogeneous vector; `None` if it is mixed.
    /// Zero counts as homogeneous of every degree and returns `Some(0)`.
    pub fn homogeneous_degree<F: Field>(&self, x: &[F]) -> Option<usize> {
        let mut d = None;
        for (i, v) in x.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            match d {
                None => d = Some(self.degree[i]),
                Some(e) if e != self.degree[i] => return None,
                _ => {}
            }
        }
        Some(d.unwrap_or(0))
    }

    pub fn is_homogeneous_of<F: Field>(&self, x: &[F], l: usize) -> bool {
        x.iter().enumerate().all(|(i, v)| v.is_zero() || self.degree[i] == l % self.m)
    }

    /// Checks `deg [b_i, b_j] = deg b_i + deg b_j` on every basis pair.
    pub fn bracket_respects_grading(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let d = (self.degree[i] + self.degree[j]) % self.m;
                self.algebra.basis_bracket(i, j).iter().all(|&(k, _)| self.degree[k as usize] == d)
            })
        })
    }

    pub fn dims_symmetric(&self) -> bool {
        let d = self.graded_dims();
        (0..self.m).all(|l| d[l] == d[(self.m - l) % self.m])
    }
}

/// Grading of the Chevalley algebra induced by Kac labels:
/// `deg e_α = Σ_{i≥1} s_i c_i(α) mod m`, `deg h_i = 0`.
pub fn grading_from_kac(alg: &Arc<ChevalleyAlgebra>, labels: &KacLabels) -> Result<GradedAlgebra> {
    if alg.root_system.cartan_type != labels.cartan_type {
        return Err(Error::InvalidLabels(format!("labels for {} applied to {}", labels.cartan_type, alg.root_system.cartan_type)));
    }
    let m = labels.period_with_marks(&alg.root_system.marks);
    let n = alg.rank();
    let degree: Vec<usize> = (0..alg.dim())
        .map(|i| match alg.root_of(i) {
            None => 0,
            Some(r) => {
                let s: i64 = r.iter().zip(&labels.s[1..]).map(|(&c, &s)| c * s as i64).sum();
                s.rem_euclid(m as i64) as usize
            }
        })
        .collect();
    debug_assert_eq!(degree.len(), n + alg.root_system.roots.len());
    let mut g = GradedAlgebra::from_degrees(alg.algebra.clone(), m, degree)?;
    g.chevalley = Some(alg.clone());
    g.labels = Some(labels.clone());
    Ok(g)
}

/// Builds the Chevalley algebra of the labels' type and grades it.
pub fn graded_from_labels(labels: &KacLabels) -> Result<GradedAlgebra> {
    let alg = Arc::new(chevalley(&build_root_system(labels.cartan_type)));
    grading_from_kac(&alg, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;

    #[test]
    fn parse_labels_text() {
        let k: KacLabels = "E8: s=[1,0,1,0,0,0,1,0,1]".parse().unwrap();
        assert_eq!(k.s.len(), 9);
        assert!("E8: s=[1,0]".parse::<KacLabels>().is_err());
        assert!("E8 s=[1,0]".parse::<KacLabels>().is_err());
        assert!("A1: s=[0,0]".parse::<KacLabels>().is_err());
        assert!("A1: s=[1,x]".parse::<KacLabels>().is_err());
    }

    #[test]
    fn g2_period_three() {
        let k: KacLabels = "G2: s=[1,0,1]".parse().unwrap();
        assert_eq!(k.period(), 3);
        let g = graded_from_labels(&k).unwrap();
        assert_eq!(g.graded_dims(), vec![4, 5, 5]);
        assert!(g.bracket_respects_grading());
    }

    #[test]
    fn trivial_grading() {
        let k: KacLabels = "A1: s=[1,0]".parse().unwrap();
        let g = graded_from_labels(&k).unwrap();
        assert_eq!(g.m, 1);
        assert_eq!(g.graded_dims(), vec![3]);
    }

    #[test]
    fn components_sum_back() {
        let k: KacLabels = "A2: s=[1,1,1]".parse().unwrap();
        let g = graded_from_labels(&k).unwrap();
        let x: Vec<Rational> = (0..8).map(|i| Rational::from_i64(i as i64 - 3)).collect();
        let mut s = vec![Rational::zero(); 8];
        for l in 0..g.m {
            let c = g.homogeneous_component(&x, l);
            assert!(g.is_homogeneous_of(&c, l));
            for (a, b) in s.iter_mut().zip(&c) {
                *a += b;
            }
        }
        assert_eq!(s, x);
    }
}
