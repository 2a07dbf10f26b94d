mod common;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::Rng;
use vinberg::centralizers::{
    center_of, centralizer, dimensions_identity, double_centralizer_equivalences, graded_centralizer_dims, orbit_dim_g0,
    orbit_dimension_formula,
};
use vinberg::graded::GradedAlgebra;
use vinberg::jordan::{cartan_subspace, classify_regularity, jordan_decompose, SamplingConfig};
use vinberg::kernel::{Rational, Subspace};
use vinberg::modes::{solve_modes, vandermonde_inverse_holds};
use vinberg::rootsys::chevalley_of;

const GRADINGS: &[&str] = &[
    "A1: s=[1,1]",
    "A2: s=[1,1,1]",
    "A3: s=[1,0,1,0]",
    "B3: s=[0,1,0,1]",
    "C3: s=[1,0,1,0]",
    "G2: s=[1,0,1]",
    "G2: s=[1,1,1]",
    "D4: s=[1,0,1,0,0]",
    "F4: s=[1,0,1,0,1]",
];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn element_from(g: &GradedAlgebra, coeffs: &[i64], mask: &[bool]) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); g.dim()];
    for ((&i, &c), &on) in g.block(1).iter().zip(coeffs).zip(mask) {
        if on {
            x[i] = q(c);
        }
    }
    x
}

fn degree_one_strategy(g: &GradedAlgebra) -> impl Strategy<Value = (Vec<i64>, Vec<bool>)> {
    let d = g.block(1).len();
    (prop::collection::vec(-4i64..=4, d), prop::collection::vec(prop::bool::weighted(0.4), d))
}

#[test]
fn jacobi_exhaustive_small_rank() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"] {
        let alg = chevalley_of(t).unwrap().algebra;
        let n = alg.dim();
        let triples = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))));
        assert_eq!(alg.jacobi_failures(triples), 0, "{t}");
    }
}

#[test]
fn jacobi_sampled_exceptional() {
    let mut algs: Vec<_> = ["E6", "E7", "E8"].iter().map(|t| chevalley_of(t).unwrap().algebra).collect();
    algs.push(vinberg::trivector::e8_model().graded.algebra.clone());
    for (s, alg) in algs.iter().enumerate() {
        let n = alg.dim();
        let mut r = rng(100 + s as u64);
        let triples: Vec<_> = (0..10_000).map(|_| (r.gen_range(0..n), r.gen_range(0..n), r.gen_range(0..n))).collect();
        assert_eq!(alg.jacobi_failures(triples), 0, "{}", alg.id());
    }
}

#[test]
fn dimensions_identity_and_orbit_formulas() {
    for labels in GRADINGS {
        let g = grading(labels);
        let dim_g0 = g.block(0).len();
        runner(100)
            .run(&degree_one_strategy(&g), |(c, mask)| {
                let x = element_from(&g, &c, &mask);
                let dims = graded_centralizer_dims(&g, &x).unwrap();
                prop_assert!(dimensions_identity(&g, &dims), "{labels} {dims:?}");
                prop_assert!(orbit_dimension_formula(&g, &dims), "{labels} {dims:?}");
                prop_assert_eq!(orbit_dim_g0(&g, &x).unwrap() + dims[0], dim_g0);
                // (𝔤^x)_0 = 𝔤_0 iff x = 0
                prop_assert_eq!(dims[0] == dim_g0, is_zero_vec(&x));
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn semisimple_orbit_dims_scale_with_period() {
    for labels in GRADINGS {
        let g = grading(labels);
        let gd = g.graded_dims();
        runner(100)
            .run(&degree_one_strategy(&g), |(c, mask)| {
                let x = element_from(&g, &c, &mask);
                let xs = jordan_decompose(&g, &x).unwrap().x_s;
                let dims = graded_centralizer_dims(&g, &xs).unwrap();
                let diffs: Vec<usize> = gd.iter().zip(&dims).map(|(a, b)| a - b).collect();
                prop_assert!(diffs.iter().all(|&d| d == diffs[0]), "{labels} {diffs:?}");
                let total: usize = diffs.iter().sum();
                prop_assert_eq!(total, g.m * diffs[0]);
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn double_centralizer_conditions_agree() {
    for labels in ["A2: s=[1,1,1]", "G2: s=[1,0,1]", "B3: s=[0,1,0,1]"] {
        let g = grading(labels);
        let n = g.dim();
        let d = g.block(1).len();
        let strat = (
            prop::collection::vec(-3i64..=3, d),
            prop::collection::vec(prop::bool::weighted(0.4), d),
            prop::collection::vec(-2i64..=2, n),
            0u8..3,
        );
        runner(110)
            .run(&strat, |(c, mask, yc, kind)| {
                let x = element_from(&g, &c, &mask);
                let y: Vec<Rational> = match kind {
                    // a combination of the center of 𝔤^x
                    0 => {
                        let z = center_of(&g, &centralizer(&g, &x));
                        let mut y = vec![Rational::zero(); n];
                        for (b, k) in z.basis.iter().zip(&yc) {
                            for (a, v) in y.iter_mut().zip(b) {
                                *a += &(v * &q(*k));
                            }
                        }
                        y
                    }
                    1 => yc.iter().map(|&k| q(k)).collect(),
                    _ => x.iter().map(|a| a * &q(yc[0])).collect(),
                };
                let rep = double_centralizer_equivalences(&g, &x, &y);
                prop_assert!(rep.agree(), "{labels}: {rep:?}");
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn center_dimension_additivity() {
    let mut total = 0;
    for (t, seed) in [("A3", 1), ("B3", 2), ("C3", 3), ("G2", 4), ("D4", 5)] {
        let (g, xs) = cartan_plus_nilpotent(t, 12, seed);
        for x in &xs {
            assert!(additivity_holds(&g, x));
        }
        total += xs.len();
    }
    for (labels, seed) in [("G2: s=[1,0,1]", 1), ("F4: s=[1,0,1,0,1]", 3)] {
        let g = grading(labels);
        for x in mixed_elements(&g, 10, seed) {
            assert!(additivity_holds(&g, &x));
            total += 1;
        }
    }
    assert!(total >= 50, "only {total} mixed elements");
}

#[test]
fn centers_of_cartan_elements_stay_in_c() {
    for labels in GRADINGS.iter().chain(&["F4: s=[1,0,1,0,0]", "F4: s=[1,1,1,0,1]"]) {
        let g = grading(labels);
        let c = cartan_subspace(&g, &SamplingConfig::default()).unwrap();
        assert!(c.checks.all(), "{labels}");
        let span = Subspace::span(g.dim(), &c.basis);
        for x in &c.basis {
            for z in center_of(&g, &centralizer(&g, x)).part(1) {
                assert!(span.contains(&z), "{labels}");
            }
        }
    }
}

#[test]
fn equal_rank_center_elements_share_centralizers() {
    let g = grading("G2: s=[1,0,1]");
    let n = g.dim();
    let rank = |v: &[Rational]| gauss_rank(dense_ad(&g.algebra, v));
    let mut r = rng(7);
    for _ in 0..30 {
        let x = sparse_degree_one(&g, &mut r);
        let cx = centralizer(&g, &x);
        for y in center_of(&g, &cx).part(1) {
            let same = centralizer(&g, &y).same_span(n, &cx);
            assert_eq!(rank(&y) == rank(&x), same);
        }
    }
}

#[test]
fn regular_subset_within_bullet_subset() {
    // samples of V containing a generic point of V
    let g = grading("F4: s=[1,0,1,0,1]");
    let mut r = rng(8);
    for _ in 0..10 {
        let mut xs: Vec<Vec<Rational>> = (0..6).map(|_| sparse_degree_one(&g, &mut r)).collect();
        xs.push(random_degree_one(&g, 1000, &mut r));
        let rep = classify_regularity(&g, &xs).unwrap();
        assert!(rep.regular_within_bullet);
        assert!(rep.entries.last().unwrap().regular);
    }
}

#[test]
fn arbitrary_finite_sets_can_violate_inclusion() {
    // without a generic point the minimizers of dim 𝔤^x and dim 𝔤^x_0 can differ
    let g = grading("F4: s=[1,0,1,0,1]");
    let mut r = rng(8);
    let found = (0..10).any(|_| {
        let xs: Vec<Vec<Rational>> = (0..6).map(|_| sparse_degree_one(&g, &mut r)).collect();
        !classify_regularity(&g, &xs).unwrap().regular_within_bullet
    });
    assert!(found);
}

#[test]
fn vandermonde_modes() {
    for m in 2..=24usize {
        assert!(vandermonde_inverse_holds(m), "m = {m}");
        runner(100)
            .run(&prop::collection::vec(-20i64..=20, m), |n| {
                let inst = solve_modes(&n, m).unwrap();
                prop_assert!(inst.residual_vanishes());
                prop_assert!(inst.identity_holds());
                // λ_0 ∈ (1/m)ℤ
                let l0 = inst.lambda[0].as_rational().unwrap();
                prop_assert!((&l0 * &q(m as i64)).is_integer());
                Ok(())
            })
            .unwrap();
    }
}
