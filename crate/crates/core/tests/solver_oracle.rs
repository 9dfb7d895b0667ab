use num_traits::Zero;
use p7c4c5::forge;
use p7c4c5::oracle::{brute_chromatic, brute_max_clique, brute_mwis};
use p7c4c5::rational::unit_weights;
use p7c4c5::solve::{max_weight_clique, min_coloring, mwis};
use p7c4c5::Rational;
use rand::Rng;

fn weights(n: usize, seed: u64) -> Vec<Rational> {
    let mut rng = forge::rng(seed);
    (0..n).map(|_| Rational::from_integer(rng.gen_range(-5..=9))).collect()
}

#[test]
fn coloring_matches_oracle() {
    for inst in forge::corpus(101, 120, 14) {
        let c = min_coloring(&inst.graph).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        assert!(c.is_proper(&inst.graph));
        assert_eq!(c.count, brute_chromatic(&inst.graph).unwrap(), "{}", inst.name);
    }
}

#[test]
fn mwis_matches_oracle() {
    for (i, inst) in forge::corpus(202, 120, 20).into_iter().enumerate() {
        let w = weights(inst.graph.n(), i as u64);
        let s = mwis(&inst.graph, &w).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        assert!(s.is_valid_stable(&inst.graph, &w));
        assert_eq!(s.weight, brute_mwis(&inst.graph, &w).unwrap().weight, "{}", inst.name);
    }
}

#[test]
fn clique_matches_oracle() {
    for (i, inst) in forge::corpus(303, 120, 18).into_iter().enumerate() {
        let w = if i % 2 == 0 { unit_weights(inst.graph.n()) } else { weights(inst.graph.n(), i as u64) };
        let s = max_weight_clique(&inst.graph, &w).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        assert!(s.is_valid_clique(&inst.graph, &w));
        assert_eq!(s.weight, brute_max_clique(&inst.graph, &w).unwrap().weight, "{}", inst.name);
        assert!(s.weight >= Rational::zero());
    }
}
