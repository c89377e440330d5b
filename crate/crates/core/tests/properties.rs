mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rdcore::blocks::blocks;
use rdcore::coloring::{shannon_proper_coloring, vizing_proper_coloring};
use rdcore::connectivity::{edge_connectivity, local_edge_connectivity, upper_edge_connectivity};
use rdcore::rainbow::{rd_exact, verify_rd_coloring, RdBudget, RdCertificate, Verification};
use rdcore::Graph;

fn rd(g: &Graph) -> usize {
    rd_exact(g, &RdBudget::default()).unwrap().exact().expect("small graphs resolve")
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7, proptest::collection::vec(any::<bool>(), 21))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
        .prop_filter("connected", |g| g.is_connected())
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.vertex_count(), g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_connectivity_matches_bipartitions(g in connected_graph()) {
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                prop_assert_eq!(local_edge_connectivity(&g, u, v).unwrap(), common::brute_force_lambda(&g, u, v));
            }
        }
    }

    #[test]
    fn connectivity_chain(g in connected_graph()) {
        let up = upper_edge_connectivity(&g).unwrap().value;
        prop_assert!(edge_connectivity(&g) <= up);
        prop_assert!(up <= g.max_degree());
        prop_assert!(up <= rd(&g));
        prop_assert!(rd(&g) <= g.max_degree() + 1);
    }

    #[test]
    fn rd_ignores_vertex_labels(g in connected_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(rd(&g), rd(&relabel(&g, &perm)));
    }

    #[test]
    fn deleting_an_edge_never_raises_rd(g in connected_graph(), pick in any::<prop::sample::Index>()) {
        let e = pick.index(g.edge_count());
        let mut edges = g.edges().to_vec();
        edges.remove(e);
        let h = Graph::new(g.vertex_count(), edges).unwrap();
        if h.is_connected() {
            prop_assert!(rd(&h) <= rd(&g));
        }
    }

    #[test]
    fn rd_is_the_largest_block_value(g in connected_graph()) {
        let per_block = blocks(&g).unwrap().iter().map(|b| rd(&b.graph)).max().unwrap_or(0);
        prop_assert_eq!(rd(&g), per_block);
    }

    #[test]
    fn proper_colorings_rainbow_disconnect(g in connected_graph()) {
        let c = vizing_proper_coloring(&g).unwrap();
        let verified = verify_rd_coloring(&g, &c).unwrap();
        prop_assert!(verified.is_certified());
        if let Verification::Certified(cert) = verified {
            prop_assert!(cert.recheck(&g));
            let round_trip = RdCertificate::from_json(&g, &cert.to_json(&g)).unwrap();
            prop_assert!(round_trip.recheck(&g));
        }
    }

    #[test]
    fn shannon_bound_on_multigraphs(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = common::random_multigraph(&mut rng, 7, 5);
        let c = shannon_proper_coloring(&g).unwrap();
        prop_assert!(c.is_proper(&g));
        prop_assert!(c.num_colors() <= 3 * g.max_degree() / 2);
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let g = rdcore::families::Family::Petersen.build().unwrap();
    let c = vizing_proper_coloring(&g).unwrap();
    let Verification::Certified(cert) = verify_rd_coloring(&g, &c).unwrap() else { panic!("proper colorings verify") };
    let mut json = cert.to_json(&g);
    // the first cut is for pair (0, 1); moving vertex 1 onto vertex 0's side breaks it
    let side = &mut json.cuts[0].side;
    if !side.contains(&1) {
        side.push(1);
    } else {
        side.retain(|&v| v != 1);
    }
    let accepted = RdCertificate::from_json(&g, &json).map(|c| c.recheck(&g)).unwrap_or(false);
    assert!(!accepted);
}

#[test]
fn rd_matches_brute_force_on_order_five() {
    for g in common::connected_up_to(2, 5) {
        assert_eq!(rd(&g), common::brute_force_rd(&g), "{:?}", g.edges());
    }
}
