//! Cyclotomic mode systems, the `h₀ = 0` obstruction and adapted Cartan
//! subalgebras built from `𝔠_𝔤(𝔠)`.

use serde::{Deserialize, Serialize};

use crate::centralizers::Subalgebra;
use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::jordan::CartanSubspaceData;
use crate::kernel::{Cyclotomic, Field, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeInstance {
    pub m: usize,
    pub n: Vec<i64>,
    pub lambda: Vec<Cyclotomic>,
}

/// `M(ω)_{kl} = ω^{kl}` with `ω = exp(2πi/m)`.
pub fn vandermonde(m: usize, inverse_root: bool) -> Vec<Vec<Cyclotomic>> {
    let s = if inverse_root { -1 } else { 1 };
    (0..m).map(|k| (0..m).map(|l| Cyclotomic::root_of_unity(m as u32, s * (k * l) as i64)).collect()).collect()
}

fn mat_vec(a: &[Vec<Cyclotomic>], v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().map(|row| row.iter().zip(v).fold(Cyclotomic::zero(), |acc, (x, y)| acc.add(&x.mul(y)))).collect()
}

/// `M(ω)·M(ω^{-1}) = m·Id`.
pub fn vandermonde_inverse_holds(m: usize) -> bool {
    let a = vandermonde(m, false);
    let b = vandermonde(m, true);
    (0..m).all(|i| {
        (0..m).all(|j| {
            let s = (0..m).fold(Cyclotomic::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])));
            s == Cyclotomic::from_rational(Rational::from_i64(if i == j { m as i64 } else { 0 }))
        })
    })
}

impl ModeInstance {
    /// `M(ω)λ − n = 0`.
    pub fn residual_vanishes(&self) -> bool {
        let lhs = mat_vec(&vandermonde(self.m, false), &self.lambda);
        lhs.iter().zip(&self.n).all(|(a, &b)| *a == Cyclotomic::from_rational(Rational::from_i64(b)))
    }

    /// `m·λ₀ = Σ n_l`.
    pub fn identity_holds(&self) -> bool {
        let sum: i64 = self.n.iter().sum();
        self.lambda[0].scale(&Rational::from_i64(self.m as i64)) == Cyclotomic::from_rational(Rational::from_i64(sum))
    }
}

/// `λ = (1/m)·M(ω^{-1})·n`.
pub fn solve_modes(n: &[i64], m: usize) -> Result<ModeInstance> {
    if m == 0 || n.len() != m {
        return Err(Error::Dimension(format!("expected {m} entries, got {}", n.len())));
    }
    let nv: Vec<Cyclotomic> = n.iter().map(|&x| Cyclotomic::from_rational(Rational::from_i64(x))).collect();
    let inv_m = Rational::ratio(1, m as i64);
    let lambda = mat_vec(&vandermonde(m, true), &nv).iter().map(|x| x.scale(&inv_m).shrink()).collect();
    let inst = ModeInstance { m, n: n.to_vec(), lambda };
    if !inst.residual_vanishes() {
        return Err(Error::Internal("mode residual is nonzero".into()));
    }
    Ok(inst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    Obstructed,
    Inconclusive,
}

pub fn check_obstruction(h_graded_dims: &[usize]) -> Obstruction {
    match h_graded_dims.first() {
        Some(0) => Obstruction::Obstructed,
        _ => Obstruction::Inconclusive,
    }
}

/// `𝔠_𝔤(𝔠)` when it is abelian; `None` otherwise.
pub fn adapted_cartan_from_c<F: Field>(g: &GradedAlgebra, c: &CartanSubspaceData<F>) -> Option<Subalgebra<F>> {
    c.centralizer.is_abelian(g).then(|| c.centralizer.clone())
}

/// `n₀(α) ≥ 0 ⟹ n₁(α) ≥ 0` for every supplied vector.
pub fn theta_stability_test(orbit_data: &[Vec<i64>]) -> Result<bool> {
    let Some(first) = orbit_data.first() else { return Ok(true) };
    let m = first.len();
    if m == 0 || orbit_data.iter().any(|v| v.len() != m) {
        return Err(Error::Dimension("mode vectors of unequal or zero length".into()));
    }
    Ok(orbit_data.iter().all(|v| v[0] < 0 || v[1 % m] >= 0))
}

/// JSON request `{"m": 3, "n": [3,0,0]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModeRequest {
    pub m: usize,
    pub n: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeReport {
    pub m: usize,
    pub n: Vec<i64>,
    pub lambda: Vec<String>,
    pub lambda_0: Rational,
    pub identity_holds: bool,
}

impl From<&ModeInstance> for ModeReport {
    fn from(inst: &ModeInstance) -> Self {
        ModeReport {
            m: inst.m,
            n: inst.n.clone(),
            lambda: inst.lambda.iter().map(ToString::to_string).collect(),
            lambda_0: inst.lambda[0].as_rational().unwrap_or_else(Rational::zero),
            identity_holds: inst.identity_holds(),
        }
    }
}
