mod common;

use common::grading;
use vinberg::jordan::{rank_of_grading, SamplingConfig};
use vinberg::tables::bundled_fixtures;

#[test]
fn rank_computations_agree_across_seeds() {
    let mut labels: Vec<String> = ["A2: s=[1,1,1]", "B3: s=[0,1,0,1]", "C3: s=[1,0,1,0]", "D4: s=[1,0,1,0,0]", "G2: s=[1,1,1]"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    labels.extend(bundled_fixtures().into_iter().filter(|r| !r.labels.starts_with("E7") && !r.labels.starts_with("E8")).map(|r| r.labels));
    for l in &labels {
        let g = grading(l);
        let ranks: Vec<usize> = (0..5u64)
            .map(|seed| {
                let r = rank_of_grading(&g, &SamplingConfig { seed, ..SamplingConfig::default() }).unwrap();
                assert!(r.agree && r.from_center == r.from_orbits, "{l} seed {seed}");
                r.rank
            })
            .collect();
        assert!(ranks.iter().all(|&r| r == ranks[0]), "{l}: {ranks:?}");
    }
}
