//! Equitable partition refinement: frozen classes on known graphs, the
//! count identities, idempotence, and agreement between the common-partition
//! test and iterated degree comparison.

mod common;

use std::collections::BTreeSet;

use common::{c5_union_c7, path, petersen, two_triangles};
use fractiso::error::Error;
use fractiso::generators;
use fractiso::hypergraph::Hypergraph;
use fractiso::partition::{
    coarsest_partition, common_partition, is_equitable, iterated_degree_sequence, parameters,
    refine_partition, same_ultimate_degrees, EquitablePartition,
};
use proptest::prelude::*;

fn class_set(classes: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    classes.iter().cloned().collect()
}

#[test]
fn gem_refines_to_three_vertex_and_four_edge_classes() {
    // Path 0-1-2-3 plus universal vertex 4. The path ends pair up, the path
    // middles pair up, and the apex stands alone; the seven edges fall into
    // four classes, not three: the two end path edges, the middle path edge,
    // the two spokes to path ends, and the two spokes to path middles.
    let p = coarsest_partition(&generators::gem());
    assert_eq!(
        class_set(&p.vertex_classes),
        BTreeSet::from([vec![0, 3], vec![1, 2], vec![4]])
    );
    assert_eq!(
        class_set(&p.edge_classes),
        BTreeSet::from([vec![0, 2], vec![1], vec![3, 6], vec![4, 5]])
    );
}

#[test]
fn gem_parameters_satisfy_the_count_identity() {
    let gem = generators::gem();
    let p = coarsest_partition(&gem);
    let params = parameters(&gem, &p).unwrap();
    assert_eq!(params.vertex_class_sizes, vec![2, 2, 1]);
    assert_eq!(params.edge_class_sizes, vec![2, 2, 1, 2]);
    assert_eq!(
        params.incidence_counts,
        vec![vec![1, 1, 0, 0], vec![1, 0, 1, 1], vec![0, 2, 0, 2]]
    );
    assert_eq!(
        params.member_counts,
        vec![vec![1, 1, 0, 0], vec![1, 0, 2, 1], vec![0, 1, 0, 1]]
    );
    for i in 0..3 {
        for j in 0..4 {
            assert_eq!(
                params.vertex_class_sizes[i] * params.incidence_counts[i][j],
                params.edge_class_sizes[j] * params.member_counts[i][j],
            );
        }
    }
}

#[test]
fn regular_graphs_stay_in_one_class() {
    for g in [
        generators::cycle(8).unwrap(),
        generators::complete(5).unwrap(),
        petersen(),
        generators::random_regular(14, 3, 7).unwrap(),
    ] {
        let p = coarsest_partition(&g);
        assert_eq!(p.vertex_classes.len(), 1);
        assert_eq!(p.edge_classes.len(), 1);
    }
}

#[test]
fn edgeless_hypergraph_keeps_a_single_vertex_class() {
    let p = coarsest_partition(&Hypergraph::new(4, vec![]).unwrap());
    assert_eq!(p.vertex_classes, vec![vec![0, 1, 2, 3]]);
    assert!(p.edge_classes.is_empty());
}

#[test]
fn inequitable_partition_is_rejected_with_a_reason() {
    // Path on three vertices: lumping everything together is not equitable
    // because the middle vertex meets two edges and the ends meet one.
    let g = path(3);
    let all = EquitablePartition {
        vertex_classes: vec![vec![0, 1, 2]],
        edge_classes: vec![vec![0, 1]],
    };
    assert!(!is_equitable(&g, &all));
    assert!(matches!(parameters(&g, &all), Err(Error::NotEquitable(_))));
}

#[test]
fn malformed_partitions_are_invalid_not_inequitable() {
    let g = path(3);
    let missing = EquitablePartition {
        vertex_classes: vec![vec![0, 1]],
        edge_classes: vec![vec![0, 1]],
    };
    assert!(matches!(
        parameters(&g, &missing),
        Err(Error::InvalidParameter(_))
    ));
    let duplicated = EquitablePartition {
        vertex_classes: vec![vec![0, 1], vec![1, 2]],
        edge_classes: vec![vec![0, 1]],
    };
    assert!(matches!(
        parameters(&g, &duplicated),
        Err(Error::InvalidParameter(_))
    ));
}

#[test]
fn two_triangles_and_hexagon_share_one_class_with_the_same_counts() {
    let common = common_partition(&two_triangles(), &generators::cycle(6).unwrap())
        .expect("a common partition exists");
    assert_eq!(common.params.vertex_class_sizes, vec![6]);
    assert_eq!(common.params.edge_class_sizes, vec![6]);
    assert_eq!(common.params.incidence_counts, vec![vec![2]]);
    assert_eq!(common.params.member_counts, vec![vec![2]]);
    assert_eq!(common.left_vertex_classes, vec![vec![0, 1, 2, 3, 4, 5]]);
    assert_eq!(common.right_vertex_classes, vec![vec![0, 1, 2, 3, 4, 5]]);
}

#[test]
fn four_uniform_fixtures_share_one_class() {
    let common = common_partition(&generators::fixture_h4u(), &generators::fixture_g4u())
        .expect("a common partition exists");
    assert_eq!(common.params.vertex_class_sizes, vec![8]);
    assert_eq!(common.params.edge_class_sizes, vec![4]);
    assert_eq!(common.params.incidence_counts, vec![vec![2]]);
    assert_eq!(common.params.member_counts, vec![vec![4]]);
}

#[test]
fn equal_degree_multisets_do_not_guarantee_a_common_partition() {
    // A path on seven vertices versus a path on four plus a triangle: the
    // degree multisets agree but refinement separates them.
    let p7 = path(7);
    let p4c3 = generators::disjoint_union(&path(4), &generators::cycle(3).unwrap());
    assert_eq!(p7.degree_sequence(), p4c3.degree_sequence());
    assert!(common_partition(&p7, &p4c3).is_none());
    assert!(!same_ultimate_degrees(&p7, &p4c3).unwrap());
    assert!(!common::fractional_iso_graph_oracle(&p7, &p4c3));
}

#[test]
fn mismatched_counts_never_have_a_common_partition() {
    let c5 = generators::cycle(5).unwrap();
    let c6 = generators::cycle(6).unwrap();
    assert!(common_partition(&c5, &c6).is_none());
    let one_edge = Hypergraph::new(5, vec![vec![0, 1]]).unwrap();
    let edgeless = Hypergraph::new(5, vec![]).unwrap();
    assert!(common_partition(&one_edge, &edgeless).is_none());
}

#[test]
fn iterated_degrees_of_the_gem_stabilize_immediately() {
    let ids = iterated_degree_sequence(&generators::gem(), None).unwrap();
    assert_eq!(ids.stabilized_after, Some(1));
    let last = ids.rounds.last().unwrap();
    let distinct: BTreeSet<usize> = last.iter().copied().collect();
    assert_eq!(distinct.len(), 3);
}

#[test]
fn iterated_degrees_of_a_cycle_never_split() {
    let ids = iterated_degree_sequence(&generators::cycle(6).unwrap(), None).unwrap();
    assert_eq!(ids.stabilized_after, Some(1));
    for round in &ids.rounds {
        assert_eq!(round, &vec![0; 6]);
    }
}

#[test]
fn a_fixed_round_count_is_honored_without_stability_detection() {
    let ids = iterated_degree_sequence(&path(5), Some(3)).unwrap();
    assert_eq!(ids.rounds.len(), 4);
    assert_eq!(ids.stabilized_after, None);
}

#[test]
fn path_degrees_refine_to_distance_classes() {
    let ids = iterated_degree_sequence(&path(7), None).unwrap();
    let last = ids.rounds.last().unwrap();
    // Distance from the nearer end determines the signature.
    assert_eq!(last[0], last[6]);
    assert_eq!(last[1], last[5]);
    assert_eq!(last[2], last[4]);
    let distinct: BTreeSet<usize> = last.iter().copied().collect();
    assert_eq!(distinct.len(), 4);
}

#[test]
fn ultimate_degree_comparison_matches_known_pairs() {
    assert!(same_ultimate_degrees(&two_triangles(), &generators::cycle(6).unwrap()).unwrap());
    assert!(
        same_ultimate_degrees(&c5_union_c7(), &generators::cycle(12).unwrap()).unwrap()
    );
    assert!(!same_ultimate_degrees(&path(4), &common::star(3)).unwrap());
    assert!(matches!(
        same_ultimate_degrees(&generators::fixture_h4u(), &generators::fixture_g4u()),
        Err(Error::NotAGraph)
    ));
}

fn partition_from_colors(vertex_colors: &[usize], edge_colors: &[usize]) -> EquitablePartition {
    let classes = |colors: &[usize]| {
        let count = colors.iter().copied().max().map_or(0, |c| c + 1);
        let mut classes = vec![Vec::new(); count];
        for (x, &c) in colors.iter().enumerate() {
            classes[c].push(x);
        }
        classes.retain(|c| !c.is_empty());
        classes
    };
    EquitablePartition {
        vertex_classes: classes(vertex_colors),
        edge_classes: classes(edge_colors),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coarsest_partition_is_equitable_and_refinement_is_idempotent(
        h in common::arb_hypergraph(7, 7),
    ) {
        let p = coarsest_partition(&h);
        prop_assert!(is_equitable(&h, &p));
        let again = refine_partition(&h, &p).unwrap();
        prop_assert_eq!(p, again);
    }

    #[test]
    fn refinement_from_any_start_reaches_an_equitable_partition(
        (h, vertex_colors, edge_colors) in common::arb_hypergraph(6, 6).prop_flat_map(|h| {
            let n = h.vertex_count();
            let m = h.edge_count();
            (
                Just(h),
                prop::collection::vec(0..3usize, n),
                prop::collection::vec(0..3usize, m),
            )
        }),
    ) {
        let start = partition_from_colors(&vertex_colors, &edge_colors);
        let refined = refine_partition(&h, &start).unwrap();
        prop_assert!(is_equitable(&h, &refined));
    }

    /// For graphs the stable iterated-degree classes and the coarsest
    /// equitable partition's vertex classes coincide.
    #[test]
    fn stable_degree_classes_match_the_coarsest_partition(g in common::arb_graph(8)) {
        let ids = iterated_degree_sequence(&g, None).unwrap();
        let last = ids.rounds.last().unwrap();
        let mut classes = vec![Vec::new(); last.iter().copied().max().map_or(0, |c| c + 1)];
        for (v, &c) in last.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        let p = coarsest_partition(&g);
        prop_assert_eq!(class_set(&classes), class_set(&p.vertex_classes));
    }

    /// The union-refinement test and the iterated-degree comparison agree on
    /// every graph pair.
    #[test]
    fn common_partition_and_ultimate_degrees_agree(
        g in common::arb_graph(6),
        h in common::arb_graph(6),
    ) {
        let by_partition = common_partition(&g, &h).is_some();
        let by_degrees = g.vertex_count() == h.vertex_count()
            && same_ultimate_degrees(&g, &h).unwrap();
        prop_assert_eq!(by_partition, by_degrees);
    }

    /// Every class of a common partition pairs left and right sides of equal
    /// size, and both restrictions really carry the shared parameters.
    #[test]
    fn common_partition_restrictions_share_parameters(
        g in common::arb_hypergraph(6, 6),
    ) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(11);
        let h = common::permuted(&g, &mut rng);
        let c = common_partition(&g, &h).expect("relabeled copies always match");
        let left = EquitablePartition {
            vertex_classes: c.left_vertex_classes.clone(),
            edge_classes: c.left_edge_classes.clone(),
        };
        let right = EquitablePartition {
            vertex_classes: c.right_vertex_classes.clone(),
            edge_classes: c.right_edge_classes.clone(),
        };
        prop_assert_eq!(parameters(&g, &left).unwrap(), c.params.clone());
        prop_assert_eq!(parameters(&h, &right).unwrap(), c.params);
    }
}
