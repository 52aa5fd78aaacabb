//! Combinatorial routines against brute-force oracles.

use std::collections::BTreeSet;

use bei_core::graph::*;
use itertools::Itertools;
use proptest::prelude::*;

/// Every labeled graph on `n` vertices.
fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Upper-triangle bitstring in column order, first pair most significant.
fn bitstring(g: &Graph) -> u128 {
    let mut bits = 0u128;
    for j in 2..=g.n() {
        for i in 1..j {
            bits = bits << 1 | g.has_edge(i, j) as u128;
        }
    }
    bits
}

fn brute_canonical(g: &Graph) -> u128 {
    (1..=g.n())
        .permutations(g.n())
        .map(|p| bitstring(&g.permuted(&p)))
        .min()
        .unwrap()
}

#[test]
fn enumeration_matches_brute_force_canonicalization() {
    for n in 1..=6 {
        let brute: BTreeSet<u128> = all_labeled(n).map(|g| brute_canonical(&g)).collect();
        let reps = enumerate_graphs(n).unwrap();
        let fast: BTreeSet<u128> = reps
            .iter()
            .map(|g| canonical_form(g).unwrap().bits())
            .collect();
        assert_eq!(
            reps.len(),
            fast.len(),
            "representatives are pairwise non-isomorphic for n = {n}"
        );
        assert_eq!(fast, brute, "n = {n}");
        for g in &reps {
            assert_eq!(bitstring(g), canonical_form(g).unwrap().bits());
        }
        let connected: BTreeSet<u128> = all_labeled(n)
            .filter(|g| g.is_connected())
            .map(|g| brute_canonical(&g))
            .collect();
        let fast_connected: BTreeSet<u128> = enumerate_connected_graphs(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap().bits())
            .collect();
        assert_eq!(fast_connected, connected);
    }
}

#[test]
fn enumeration_counts() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_graphs(n).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_connected_graphs(n).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
    assert_eq!(
        enumerate_connected_graphs(3)
            .unwrap()
            .iter()
            .map(|g| g.edge_count())
            .collect::<Vec<_>>(),
        [2, 3]
    );
    assert!(enumerate_graphs(0).is_err());
    assert!(enumerate_graphs(9).is_err());
}

fn dfs_longest_induced_path(g: &Graph) -> usize {
    fn extend(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(path.len() - 1);
        let last = *path.last().unwrap();
        for v in g.neighbors(last).iter() {
            if path.contains(&v) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            path.push(v);
            extend(g, path, best);
            path.pop();
        }
    }
    let mut best = 0;
    for v in 1..=g.n() {
        extend(g, &mut vec![v], &mut best);
    }
    best
}

fn brute_induced_matching(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let ends: VertexSet = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
        if ends.len() == 2 * chosen.len() && g.edges_within(ends) == chosen.len() {
            best = best.max(chosen.len());
        }
    }
    best
}

fn maximum_matching(g: &Graph) -> usize {
    let edges = g.edges();
    (0u32..1 << edges.len())
        .filter_map(|mask| {
            let chosen: Vec<_> = edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let ends: VertexSet = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
            (ends.len() == 2 * chosen.len()).then_some(chosen.len())
        })
        .max()
        .unwrap()
}

#[test]
fn induced_paths_and_matchings_against_oracles() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let comps = connected_components(&g);
            for c in comps {
                let (h, _) = g.induced_subgraph(c).unwrap();
                let ell = longest_induced_path_length(&h).unwrap();
                assert_eq!(ell, dfs_longest_induced_path(&h), "{}", h.edge_string());
                if h.n() >= 2 {
                    assert!(1 <= ell && ell < h.n());
                    assert_eq!(ell == h.n() - 1, h.is_path_graph(), "{}", h.edge_string());
                }
            }
            let im = induced_matching_number(&g);
            assert_eq!(im, brute_induced_matching(&g), "{}", g.edge_string());
            assert!(im <= maximum_matching(&g) && maximum_matching(&g) <= n / 2);
        }
    }
}

#[test]
fn path_extremality_by_canonical_form() {
    for n in 2..=7 {
        let path = canonical_form(&Graph::path(n).unwrap()).unwrap();
        for g in enumerate_connected_graphs(n).unwrap() {
            let is_max = longest_induced_path_length(&g).unwrap() == n - 1;
            assert_eq!(is_max, canonical_form(&g).unwrap() == path);
        }
    }
}

/// A chordless cycle of length at least 4, by brute force over vertex subsets.
fn has_chordless_cycle(g: &Graph, min_len: usize) -> bool {
    (0u32..1 << g.n()).map(VertexSet::from_bits).any(|s| {
        s.len() >= min_len
            && g.edges_within(s) == s.len()
            && s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2)
            && {
                let (h, _) = g.induced_subgraph(s).unwrap();
                h.is_connected()
            }
    })
}

#[test]
fn chordality_and_weak_chordality_against_cycle_search() {
    for n in 1..=6 {
        for g in all_labeled(n) {
            assert_eq!(
                is_chordal(&g),
                !has_chordless_cycle(&g, 4),
                "{}",
                g.edge_string()
            );
            let weak = !has_chordless_cycle(&g, 5) && !has_chordless_cycle(&g.complement(), 5);
            assert_eq!(is_weakly_chordal(&g), weak, "{}", g.edge_string());
        }
    }
}

fn brute_claw_free(g: &Graph) -> bool {
    (1..=g.n()).combinations(4).all(|q| {
        let s = VertexSet::from_vertices(&q);
        let (h, _) = g.induced_subgraph(s).unwrap();
        !(h.edge_count() == 3 && (1..=4).any(|v| h.degree(v) == 3))
    })
}

fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let cliques: Vec<VertexSet> = (1u32..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_clique(s))
        .collect();
    let mut out: Vec<VertexSet> = cliques
        .iter()
        .copied()
        .filter(|c| !cliques.iter().any(|d| d != c && c.is_subset(*d)))
        .collect();
    out.sort();
    out
}

#[test]
fn cliques_and_claws_against_subset_search() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let cliques = maximal_cliques(&g);
            assert_eq!(cliques, brute_maximal_cliques(&g));
            let pairwise = cliques
                .iter()
                .tuple_combinations()
                .all(|(a, b)| a.intersection(*b).len() <= 1);
            assert_eq!(cliques_pairwise_intersect_at_most_one(&g), pairwise);
            assert_eq!(is_claw_free(&g), brute_claw_free(&g));
            let stats = graph_stats(&g);
            assert_eq!(stats.r, cliques.len());
            assert_eq!(stats.chordal, is_chordal(&g));
            assert_eq!(stats.connected, g.is_connected());
            assert_eq!(stats.ell.len(), connected_components(&g).len());
        }
    }
}

#[test]
fn documented_examples() {
    let tail = Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
    assert_eq!(longest_induced_path_length(&tail).unwrap(), 3);
    assert_eq!(induced_matching_number(&Graph::path(4).unwrap()), 1);
    assert_eq!(induced_matching_number(&Graph::path(5).unwrap()), 2);
    assert!(is_weakly_chordal(&Graph::cycle(4).unwrap()));
    assert!(!is_weakly_chordal(&Graph::cycle(5).unwrap()));
    let claw = Graph::star(3).unwrap();
    assert_eq!(maximal_cliques(&claw).len(), 3);
    let glued_edge = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
    assert!(!cliques_pairwise_intersect_at_most_one(&glued_edge));
    let bowtie = Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
    assert!(cliques_pairwise_intersect_at_most_one(&bowtie));
    let edgeless = Graph::new(3).unwrap();
    assert_eq!(connected_components(&edgeless).len(), 3);
    assert!(longest_induced_path_length(&edgeless).is_err());
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
            let edges: Vec<_> = pairs
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_and_graph6_round_trip(g in arb_graph()) {
        prop_assert_eq!(Graph::parse(&g.to_text()).unwrap(), g.clone());
        prop_assert_eq!(Graph::parse(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant(g in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().to_graph(), canonical_form(&h).unwrap().to_graph());
    }
}
