mod common;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use condiam::enumerate::{enumerate_connected_graphs, enumerate_trees};
use condiam::{canonical_key, Graph};

fn all_labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

#[test]
fn keys_agree_with_brute_force_isomorphism_on_all_labelled_graphs() {
    for n in 1..=5 {
        let graphs = all_labelled_graphs(n);
        let keys: Vec<String> = graphs.iter().map(canonical_key).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert_eq!(
                    keys[i] == keys[j],
                    common::isomorphic(&graphs[i], &graphs[j]),
                    "n={n}: {i} vs {j}"
                );
            }
        }
    }
}

#[test]
fn generated_classes_are_pairwise_non_isomorphic() {
    for n in 1..=7 {
        let graphs = enumerate_connected_graphs(n).unwrap();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(!common::isomorphic(&graphs[i], &graphs[j]), "n={n}: {i} ~ {j}");
            }
        }
    }
}

#[test]
fn keys_survive_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let key = canonical_key(&g);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert!(common::isomorphic(&g, &h));
            assert_eq!(canonical_key(&h), key);
        }
    }
    for t in enumerate_trees(16) {
        let mut perm: Vec<usize> = (0..16).collect();
        perm.shuffle(&mut rng);
        assert_eq!(canonical_key(&t.relabel(&perm)), canonical_key(&t));
    }
}
