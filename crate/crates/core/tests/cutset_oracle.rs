use p7c4c5::cutset::{decompose, has_clique_cutset};
use p7c4c5::oracle::brute_has_clique_cutset;
use p7c4c5::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut e = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

#[test]
fn cutset_search_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3000 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let found = has_clique_cutset(&g);
        assert_eq!(found.is_some(), brute_has_clique_cutset(&g), "{g:?}");
        if let Some(cut) = found {
            assert!(g.is_clique(&cut.clique));
            assert!(!cut.side_a.is_empty() && !cut.side_b.is_empty());
            assert!(g.is_anticomplete_to(&cut.side_a, &cut.side_b));
            let all = cut.clique.union(&cut.side_a).union(&cut.side_b);
            assert_eq!(all, g.vertices());
        }
    }
}

#[test]
fn decomposition_leaves_are_atoms() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1500 {
        let n = rng.gen_range(2..=11);
        let p = rng.gen_range(0.15..0.8);
        let g = random_graph(&mut rng, n, p);
        let t = decompose(&g);
        t.validate(&g).unwrap();
        let bound = if g.is_connected() { n - 1 } else { n };
        assert!(t.leaves().len() <= bound, "{g:?}\n{}", t.dump());
        for leaf in t.leaves() {
            let sub = g.induced_on(leaf).graph;
            assert!(!brute_has_clique_cutset(&sub), "{g:?}\n{}", t.dump());
        }
        // every edge lives in some leaf
        for (u, v) in g.edges() {
            assert!(t.leaves().iter().any(|l| l.contains(&u) && l.contains(&v)));
        }
    }
}
