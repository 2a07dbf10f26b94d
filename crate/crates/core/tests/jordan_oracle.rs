mod common;

use common::*;
use rand::Rng;
use vinberg::graded::GradedAlgebra;
use vinberg::jordan::{is_nilpotent, is_semisimple, jordan_decompose};
use vinberg::kernel::Rational;
use vinberg::rootsys::chevalley_of;

/// Elements of `h + n` type with `h` killed by one root, so both parts
/// are usually nonzero; mixed with generic and nilpotent samples.
fn samples(t: &str, count: usize, seed: u64) -> (GradedAlgebra, Vec<Vec<Rational>>) {
    let c = chevalley_of(t).unwrap();
    let g = GradedAlgebra::ungraded(c.algebra.clone());
    let n = c.dim();
    let r = c.rank();
    let pos: Vec<usize> = (r..n).filter(|&i| c.root_of(i).unwrap().iter().all(|&a| a >= 0)).collect();
    let all: Vec<usize> = (0..n).collect();
    let mut rg = rng(seed);
    let mut out = Vec::new();
    for k in 0..count {
        let x = match k % 3 {
            0 => random_on(n, &all, 4, &mut rg),
            1 => random_on(n, &pos, 3, &mut rg),
            _ => {
                let a = pos[rg.gen_range(0..pos.len())];
                // α(h_i) read off [h_i, e_α]
                let vals: Vec<i64> = (0..r)
                    .map(|i| {
                        let mut hi = vec![Rational::zero(); n];
                        hi[i] = Rational::one();
                        let mut ea = vec![Rational::zero(); n];
                        ea[a] = Rational::one();
                        let v = c.algebra.bracket(&hi, &ea)[a].clone();
                        v.to_string().parse().unwrap()
                    })
                    .collect();
                let mut x = random_on(n, &pos, 3, &mut rg);
                let t: i64 = rg.gen_range(1..=3);
                if r == 1 {
                    // only h = 0 is killed; use a multiple of h instead
                    x[0] = q(t);
                } else {
                    x[0] = q(t * vals[1]);
                    x[1] = q(-t * vals[0]);
                }
                x
            }
        };
        out.push(x);
    }
    (g, out)
}

fn check_against_oracle(t: &str, count: usize, seed: u64) -> (usize, usize) {
    let (g, xs) = samples(t, count, seed);
    let mut mixed = 0;
    for x in &xs {
        let pair = jordan_decompose(&g, x).unwrap();
        let (os, on) = oracle_jordan(&g.algebra, x);
        assert_eq!(pair.x_s, os, "{t}: semisimple parts differ for {x:?}");
        assert_eq!(pair.x_n, on, "{t}: nilpotent parts differ for {x:?}");
        if !is_zero_vec(&os) && !is_zero_vec(&on) {
            mixed += 1;
        }
    }
    (xs.len(), mixed)
}

#[test]
fn a1_matches_newton_oracle() {
    let (n, _) = check_against_oracle("A1", 120, 1);
    assert!(n >= 100);
}

#[test]
fn a2_matches_newton_oracle() {
    let (n, mixed) = check_against_oracle("A2", 120, 2);
    assert!(n >= 100);
    assert!(mixed > 10, "only {mixed} samples had both parts nonzero");
}

#[test]
fn g2_matches_newton_oracle() {
    let (n, mixed) = check_against_oracle("G2", 102, 3);
    assert!(n >= 100);
    assert!(mixed > 10, "only {mixed} samples had both parts nonzero");
}

#[test]
fn graded_g2_degree_one_matches_oracle() {
    let g = grading("G2: s=[1,0,1]");
    let mut rg = rng(4);
    for _ in 0..40 {
        let x = sparse_degree_one(&g, &mut rg);
        let pair = jordan_decompose(&g, &x).unwrap();
        let (os, on) = oracle_jordan(&g.algebra, &x);
        assert_eq!(pair.x_s, os);
        assert_eq!(pair.x_n, on);
        assert!(g.is_homogeneous_of(&pair.x_s, 1));
    }
}

#[test]
fn pair_invariants_hold() {
    let (g, xs) = samples("A2", 60, 5);
    for x in &xs {
        let p = jordan_decompose(&g, x).unwrap();
        let sum: Vec<Rational> = p.x_s.iter().zip(&p.x_n).map(|(a, b)| a + b).collect();
        assert_eq!(&sum, x);
        assert!(is_zero_vec(&g.algebra.bracket(&p.x_s, &p.x_n)));
        assert!(squarefree_min_poly(&dense_ad(&g.algebra, &p.x_s)));
        assert!(is_nilpotent_mat(&dense_ad(&g.algebra, &p.x_n)));
        assert!(is_semisimple(&g, &p.x_s));
        assert!(is_nilpotent(&g, &p.x_n));
    }
}

#[test]
fn sl2_borel_element() {
    // x = h + e is conjugate to h
    let g = grading("A1: s=[1,0]");
    let x = vec![q(1), q(1), q(0)];
    let p = jordan_decompose(&g, &x).unwrap();
    assert!(is_zero_vec(&p.x_n));
    assert_eq!(p.x_s, x);
}

#[test]
fn centralizer_dims_match_gauss_oracle() {
    for (labels, seed) in [("G2: s=[1,0,1]", 10), ("A2: s=[1,1,1]", 11), ("F4: s=[1,0,1,0,1]", 12), ("B3: s=[0,1,0,1]", 13)] {
        let g = grading(labels);
        let mut rg = rng(seed);
        for k in 0..12 {
            let x = if k % 2 == 0 { random_degree_one(&g, 5, &mut rg) } else { sparse_degree_one(&g, &mut rg) };
            let ours = vinberg::centralizers::graded_centralizer_dims(&g, &x).unwrap();
            assert_eq!(ours, oracle_graded_centralizer(&g, &x, 1), "{labels}");
        }
    }
}
