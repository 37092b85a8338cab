use p5gem::classify::classify;
use p5gem::instances::{gen_class_instance, BagMode, GenSpec};
use p5gem::pattern::{clique_number, find_induced, is_p5_gem_free, Pattern};
use p5gem::solver::{degeneracy_order, exact_chromatic, max_back_degree, replay, solve_with, SolveOptions};
use p5gem::structure::{check_partition, cograph_optimal_coloring, is_cograph, CographCertificate, Template, TemplateId};
use p5gem::{verify_coloring, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn spec_strategy() -> impl Strategy<Value = GenSpec> {
    (0..TemplateId::ALL.len(), any::<u64>(), any::<bool>(), proptest::collection::vec(1usize..=3, 9), proptest::collection::vec(1usize..=3, 1..=2))
        .prop_map(|(i, seed, cograph, sizes, pendant)| {
            let class = TemplateId::ALL[i];
            let t = Template::new(class);
            let (bags, pendant) = if t.pendant().is_some() { (t.len() - 1, pendant) } else { (t.len(), vec![]) };
            let mode = if cograph { BagMode::Cograph } else { BagMode::Clique };
            GenSpec { class, sizes: sizes[..bags].to_vec(), mode, seed, pendant }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_verify(g in graph_strategy(9)) {
        for p in [Pattern::P4, Pattern::P5, Pattern::Gem, Pattern::C5] {
            if let Some(w) = find_induced(&g, p) {
                prop_assert!(w.verify(&g));
            }
        }
    }

    #[test]
    fn complement_swaps_clique_and_independence(g in graph_strategy(10)) {
        let co = g.complement();
        prop_assert_eq!(co.complement().edges(), g.edges());
        prop_assert_eq!(g.edge_count() + co.edge_count(), g.n() * (g.n() - 1) / 2);
        let (w, c) = clique_number(&g);
        prop_assert!(co.is_independent(&c));
        prop_assert!(exact_chromatic(&g).unwrap().0 >= w);
        prop_assert!(exact_chromatic(&co).unwrap().0 * w >= g.n());
    }

    #[test]
    fn degeneracy_order_meets_its_bound(g in graph_strategy(12)) {
        let all: Vec<usize> = (0..g.n()).collect();
        let (seq, d) = degeneracy_order(&g, &all);
        prop_assert_eq!(seq.len(), g.n());
        prop_assert_eq!(max_back_degree(&g, &seq), d);
    }

    #[test]
    fn cographs_color_optimally(g in graph_strategy(8)) {
        let cert = is_cograph(&g);
        match &cert {
            CographCertificate::Tree(_) => {
                let c = cograph_optimal_coloring(&g, &cert).unwrap();
                prop_assert!(verify_coloring(&g, &c));
                prop_assert_eq!(c.colors_used(), clique_number(&g).0);
            }
            CographCertificate::P4(p) => {
                prop_assert!(find_induced(&g, Pattern::P4).is_some());
                prop_assert!(g.induced_subgraph(p).unwrap().0.edge_count() == 3);
            }
        }
    }

    #[test]
    fn generated_members_are_well_formed(spec in spec_strategy()) {
        let (g, bags) = gen_class_instance(&spec).unwrap();
        prop_assert!(is_p5_gem_free(&g).is_ok());
        check_partition(&g, &Template::new(spec.class), &bags).unwrap();
        prop_assert_eq!(gen_class_instance(&spec).unwrap().0.edges(), g.edges());
        prop_assert!(classify(&g).is_ok());
    }

    #[test]
    fn solve_is_replayable(spec in spec_strategy()) {
        let (g, _) = gen_class_instance(&spec).unwrap();
        if g.max_degree() >= 9 && clique_number(&g).0 < g.max_degree() {
            let (c, trace) = solve_with(&g, SolveOptions::default()).unwrap();
            prop_assert!(verify_coloring(&g, &c));
            prop_assert!(c.palette as usize <= g.max_degree() - 1);
            prop_assert_eq!(replay(&g, &trace).unwrap(), c);
        }
    }
}
