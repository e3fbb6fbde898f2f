use dicolor::bounds::{has_odd_symmetric_cycle, bound_underlying};
use dicolor::chromatic::{chromatic_number_exact, greedy_color_graph};
use dicolor::coloring::{Coloring, Labeling, SequenceColoring, VertexOrder};
use dicolor::dichromatic::{
    acyclic_one_coloring, beta_oc, can_be_monochromatic, chi_d_exact, directed_cycle_two_coloring,
    is_valid_coloring, order_with_u_before_v, realize_order, semicycle_one_coloring,
};
use dicolor::enumerate::{digraph_from_mask, for_each_permutation, ordered_pairs};
use dicolor::io::{parse_edge_list, write_edge_list};
use dicolor::lmatrix::{acyclic_color_matrix_literal, decode, encode, validate};
use dicolor::partitions::{achromatic_number, grundy_number};
use dicolor::random::{random_dag, random_digraph};
use dicolor::seq::{
    forward_constraint_graph, max_over_orders, min_over_orders, prop9_construct, s_number_exact,
    s_number_greedy, validate_sequence_coloring,
};
use dicolor::{Acyclicity, Digraph, LabeledDigraph, ScanMode, UndirectedGraph};
use proptest::prelude::*;

fn digraph(max_p: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_p).prop_flat_map(|p| {
        let pairs = ordered_pairs(p);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let arcs = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&a, _)| a);
            Digraph::new(p, arcs).unwrap()
        })
    })
}

fn graph(max_p: usize) -> impl Strategy<Value = UndirectedGraph> {
    digraph(max_p).prop_map(|d| d.underlying_graph())
}

fn order_of(p: usize) -> impl Strategy<Value = VertexOrder> {
    Just((0..p).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |o| VertexOrder::new(p, o).unwrap())
}

fn digraph_and_order(max_p: usize) -> impl Strategy<Value = (Digraph, VertexOrder)> {
    digraph(max_p).prop_flat_map(|d| {
        let p = d.order();
        (Just(d), order_of(p))
    })
}

fn labeled(max_p: usize, labels: u32) -> impl Strategy<Value = LabeledDigraph> {
    digraph(max_p).prop_flat_map(move |d| {
        let p = d.order();
        proptest::collection::vec(1..=labels, p)
            .prop_map(move |l| LabeledDigraph::new(d.clone(), Labeling(l)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn acyclicity_witness_is_sound(d in digraph(8)) {
        match d.is_acyclic() {
            Acyclicity::Acyclic(order) => {
                let pos = VertexOrder::new(d.order(), order).unwrap().positions();
                prop_assert!(d.arcs().all(|(t, h)| pos[t] < pos[h]));
            }
            Acyclicity::Cyclic(cycle) => {
                prop_assert!(!cycle.is_empty());
                for i in 0..cycle.len() {
                    prop_assert!(d.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn underlying_edges_count_digons_once(d in digraph(8)) {
        let g = d.underlying_graph();
        prop_assert_eq!(g.edge_count(), d.arc_count() - d.symmetric_arcs().len());
    }

    #[test]
    fn greedy_graph_coloring_within_degree_bound((d, o) in digraph_and_order(8)) {
        let g = d.underlying_graph();
        let c = greedy_color_graph(&g, &o).unwrap();
        prop_assert!(c.num_colors() <= g.max_degree() + 1);
        prop_assert!(g.edges().all(|(u, v)| c.color(u) != c.color(v)));
    }

    #[test]
    fn digon_free_generation(p in 0usize..12, seed in any::<u64>()) {
        prop_assert!(random_digraph(p, 0.7, false, seed).unwrap().symmetric_arcs().is_empty());
        prop_assert_eq!(random_digraph(p, 0.5, true, seed).unwrap(), random_digraph(p, 0.5, true, seed).unwrap());
    }

    #[test]
    fn greedy_never_beats_exact((d, o) in digraph_and_order(8)) {
        let exact = s_number_exact(&d, &o).unwrap();
        let greedy = s_number_greedy(&d, &o).unwrap();
        prop_assert!(greedy.0 >= exact.0);
        prop_assert!(validate_sequence_coloring(&d, &exact.1).unwrap().valid);
        prop_assert!(validate_sequence_coloring(&d, &greedy.1).unwrap().valid);
    }

    #[test]
    fn symmetric_digraph_constraint_graph_is_the_graph((g, o) in graph(7).prop_flat_map(|g| {
        let p = g.order();
        (Just(g), order_of(p))
    })) {
        let d = g.to_symmetric_digraph();
        prop_assert_eq!(&forward_constraint_graph(&d, &o).unwrap(), &g);
        prop_assert_eq!(s_number_exact(&d, &o).unwrap().0, chromatic_number_exact(&g).unwrap().0);
    }

    #[test]
    fn exact_witness_classes_are_acyclic(d in digraph(9)) {
        let (k, partition) = chi_d_exact(&d).unwrap();
        prop_assert_eq!(partition.len(), k);
        for class in partition.classes() {
            prop_assert!(can_be_monochromatic(&d, class));
        }
        let coloring = partition.to_coloring();
        prop_assert!(is_valid_coloring(&d, &coloring).unwrap().is_valid());
        let order = realize_order(&d, &coloring).unwrap();
        let s = SequenceColoring::from_order(&order, &coloring);
        prop_assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
    }

    #[test]
    fn one_color_iff_acyclic(d in digraph(9)) {
        let acyclic = d.is_acyclic().is_acyclic();
        prop_assert_eq!(chi_d_exact(&d).unwrap().0 == 1, acyclic);
        prop_assert_eq!(beta_oc(&d).unwrap().0 == d.order(), acyclic);
    }

    #[test]
    fn realize_order_validates_or_shows_cycle(d in digraph(7), colors in proptest::collection::vec(1u32..=3, 7)) {
        let c = Coloring::new(colors[..d.order()].to_vec()).unwrap();
        match realize_order(&d, &c) {
            Ok(order) => {
                let s = SequenceColoring::from_order(&order, &c);
                prop_assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
            }
            Err(_) => prop_assert!(!is_valid_coloring(&d, &c).unwrap().is_valid()),
        }
    }

    #[test]
    fn odd_symmetric_cycle_forces_three(d in digraph(7)) {
        if let Some(cycle) = has_odd_symmetric_cycle(&d) {
            let n = cycle.len();
            prop_assert!(n % 2 == 1 && n >= 3);
            for i in 0..n {
                let (a, b) = (cycle[i], cycle[(i + 1) % n]);
                prop_assert!(d.has_arc(a, b) && d.has_arc(b, a));
            }
            prop_assert!(chi_d_exact(&d).unwrap().0 >= 3);
        }
    }

    #[test]
    fn symmetric_digraphs_match_underlying_chromatic(g in graph(8)) {
        let d = g.to_symmetric_digraph();
        prop_assert_eq!(chi_d_exact(&d).unwrap().0, bound_underlying(&d).unwrap());
    }

    #[test]
    fn grundy_at_most_achromatic(g in graph(7)) {
        let (grundy, order) = grundy_number(&g).unwrap();
        prop_assert_eq!(greedy_color_graph(&g, &order).unwrap().num_colors(), grundy);
        prop_assert!(grundy <= achromatic_number(&g).unwrap().0);
    }

    #[test]
    fn edge_list_roundtrip(ld in labeled(9, 3)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&ld)).unwrap(), ld.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&LabeledDigraph::unlabeled(ld.digraph.clone()))).unwrap().digraph, ld.digraph);
    }

    #[test]
    fn encode_is_valid_and_decodes_back(ld in labeled(8, 4)) {
        let m = encode(&ld);
        prop_assert!(validate(&m).valid);
        prop_assert_eq!(decode(&m).unwrap(), ld.canonical());
        prop_assert_eq!(encode(&decode(&m).unwrap()), m);
    }

    #[test]
    fn literal_check_holds_on_acyclic_tournaments(o in (1usize..8).prop_flat_map(order_of)) {
        // Orient every pair along a hidden order: a transitive tournament.
        let p = o.len();
        let pos = o.positions();
        let d = Digraph::new(p, (0..p).flat_map(|u| (0..p).map(move |v| (u, v))).filter(|&(u, v)| pos[u] < pos[v])).unwrap();
        prop_assert!(acyclic_color_matrix_literal(&encode(&LabeledDigraph::new(d, Labeling::uniform(p, 1)).unwrap())));
    }

    #[test]
    fn topological_one_coloring_on_dags(p in 1usize..40, seed in any::<u64>()) {
        let d = random_dag(p, 0.3, seed).unwrap();
        prop_assert_eq!(chi_d_exact(&d).unwrap().0, 1);
        let s = acyclic_one_coloring(&d).unwrap();
        prop_assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
    }

    #[test]
    fn u_before_v_when_no_path(p in 2usize..9, seed in any::<u64>(), u in 0usize..9, v in 0usize..9) {
        let d = random_dag(p, 0.35, seed).unwrap();
        let (u, v) = (u % p, v % p);
        prop_assume!(u != v);
        match order_with_u_before_v(&d, u, v) {
            Ok(s) => {
                prop_assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
                let vs = s.vertices();
                let at = |x| vs.iter().position(|&y| y == x).unwrap();
                prop_assert!(at(u) < at(v));
                prop_assert_eq!(s.num_colors(), 1);
            }
            Err(_) => prop_assert!(d.directed_path_between(u, v).is_some()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn order_scans_reach_chi_d(d in digraph(5)) {
        let chi_d = chi_d_exact(&d).unwrap().0;
        prop_assert_eq!(min_over_orders(&d, ScanMode::Exact).unwrap().0, chi_d);
        prop_assert_eq!(min_over_orders(&d, ScanMode::Greedy).unwrap().0, chi_d);
        prop_assert!(max_over_orders(&d, ScanMode::Greedy).unwrap().0 >= chi_d);
    }

    #[test]
    fn graph_chromatic_is_best_first_fit(g in graph(7)) {
        let d = g.to_symmetric_digraph();
        prop_assert_eq!(min_over_orders(&d, ScanMode::Greedy).unwrap().0, chromatic_number_exact(&g).unwrap().0);
    }
}

#[test]
fn validity_is_constraint_graph_coloring_exhaustively() {
    // Every digraph on 3 vertices, every order, every assignment of 1..=3.
    for mask in 0..1u64 << 6 {
        let d = digraph_from_mask(3, mask);
        for_each_permutation(3, |o| {
            let order = VertexOrder::new(3, o.to_vec()).unwrap();
            let h = forward_constraint_graph(&d, &order).unwrap();
            for code in 0..27u32 {
                let colors = vec![code % 3 + 1, code / 3 % 3 + 1, code / 9 + 1];
                let c = Coloring::new(colors.clone()).unwrap();
                let proper = h.edges().all(|(u, v)| colors[u] != colors[v]);
                let s = SequenceColoring::from_order(&order, &c);
                assert_eq!(validate_sequence_coloring(&d, &s).unwrap().valid, proper);
            }
            true
        });
    }
}

#[test]
fn forward_tournament_needs_n_greedy_colors() {
    for n in 1..=12 {
        let (d, order) = prop9_construct(n).unwrap();
        assert!(d.is_acyclic().is_acyclic());
        let (k, s) = s_number_greedy(&d, &order).unwrap();
        assert_eq!(k, n);
        assert!(s.pairs().iter().enumerate().all(|(i, &(v, c))| v == i && c == i as u32 + 1));
        assert_eq!(chi_d_exact(&d).unwrap().0, 1);
    }
}

#[test]
fn directed_cycles_need_two_colors() {
    for n in 3..=8 {
        let d = Digraph::directed_cycle(n).unwrap();
        assert_eq!(chi_d_exact(&d).unwrap().0, 2);
        let s = directed_cycle_two_coloring(n).unwrap();
        assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
        assert_eq!(s.num_colors(), 2);
    }
}

#[test]
fn every_proper_semicycle_takes_one_color() {
    for n in 3..=8 {
        for dirs in 0..1u32 << n {
            let arcs: Vec<_> = (0..n)
                .map(|i| {
                    let j = (i + 1) % n;
                    if dirs >> i & 1 == 1 { (i, j) } else { (j, i) }
                })
                .collect();
            let d = Digraph::new(n, arcs).unwrap();
            let directed = dirs == 0 || dirs == (1 << n) - 1;
            match semicycle_one_coloring(&d) {
                Ok(s) => {
                    assert!(!directed);
                    assert!(validate_sequence_coloring(&d, &s).unwrap().valid);
                    assert_eq!(s.num_colors(), 1);
                }
                Err(_) => assert!(directed, "n={n} dirs={dirs:b}"),
            }
        }
    }
}

#[test]
fn oriented_trees_take_one_color() {
    // Every orientation of every labeled tree on up to 6 vertices, via Prufer codes.
    for n in 2..=6usize {
        let codes = n.pow(n as u32 - 2);
        for code in 0..codes {
            let seq: Vec<usize> = (0..n - 2).map(|i| code / n.pow(i as u32) % n).collect();
            let mut degree = vec![1usize; n];
            seq.iter().for_each(|&v| degree[v] += 1);
            let mut edges = Vec::new();
            for &v in &seq {
                let leaf = (0..n).find(|&x| degree[x] == 1).unwrap();
                edges.push((leaf, v));
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<_> = (0..n).filter(|&x| degree[x] == 1).collect();
            edges.push((rest[0], rest[1]));
            for dirs in 0..1u32 << (n - 1) {
                let arcs = edges.iter().enumerate().map(|(i, &(a, b))| if dirs >> i & 1 == 1 { (a, b) } else { (b, a) });
                let d = Digraph::new(n, arcs).unwrap();
                assert_eq!(chi_d_exact(&d).unwrap().0, 1);
            }
        }
    }
}
