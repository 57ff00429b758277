mod common;

use common::*;
use dipathcover::constructive::{one_to_one_threshold, unpaired_threshold};
use dipathcover::exact::random_spec;
use dipathcover::{
    construct_cover, exists_cover, find_cover_exact, find_hamiltonian_path, verify_cover,
    CoverKind, CoverSpec, CoverVariant, Digraph, OreMin, PathCover,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            Digraph::from_fn(n, |u, v| bits[u * n + v])
        })
    })
}

fn arb_dense_digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = Digraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..10, n * n)
            .prop_map(move |w| Digraph::from_fn(n, |u, v| w[u * n + v] < 8))
    })
}

fn fresh(d: &Digraph) -> Digraph {
    Digraph::from_arcs(d.order(), d.arcs()).unwrap()
}

proptest! {
    #[test]
    fn closed_form_arc_counts(a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        prop_assert_eq!(Digraph::complete(a).arc_count(), a * a.saturating_sub(1));
        prop_assert_eq!(Digraph::complete_bipartite(a, b).arc_count(), 2 * a * b);
        if c <= a.min(b) {
            let g = Digraph::glued_cliques(a, b, c).unwrap();
            prop_assert_eq!(g.order(), a + b - c);
            prop_assert_eq!(
                g.arc_count(),
                a * a.saturating_sub(1) + b * b.saturating_sub(1) - c * c.saturating_sub(1)
            );
        } else {
            prop_assert!(Digraph::glued_cliques(a, b, c).is_err());
        }
        let j = Digraph::full_join(&Digraph::complete(a), &Digraph::empty(b));
        prop_assert_eq!(j.arc_count(), a * a.saturating_sub(1) + 2 * a * b);
    }

    #[test]
    fn contraction_loses_at_most_one_per_degree(d in arb_digraph(2, 9), s in 0usize..9, t in 0usize..9) {
        let n = d.order();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let c = d.contract_pair(s, t).unwrap();
        prop_assert_eq!(c.digraph.order(), n - 1);
        prop_assert_eq!(c.r, n - 2);
        for z in 0..n {
            if z == s || z == t {
                continue;
            }
            let nz = c.map.to_new(z).unwrap();
            prop_assert!(c.digraph.out_degree(nz) + 1 >= d.out_degree(z));
            prop_assert!(c.digraph.in_degree(nz) + 1 >= d.in_degree(z));
        }
        prop_assert!(c.digraph.out_degree(c.r) + 1 >= d.out_degree(s));
        prop_assert!(c.digraph.in_degree(c.r) + 1 >= d.in_degree(t));
        prop_assert!(c.digraph.min_semi_degree() + 1 >= d.min_semi_degree());
        prop_assert_eq!(c.digraph.degree_summary(), fresh(&c.digraph).degree_summary());
    }

    #[test]
    fn deletion_matches_fresh_computation(d in arb_digraph(1, 9), v in 0usize..9) {
        let v = v % d.order();
        let (smaller, map) = d.delete_vertex(v).unwrap();
        prop_assert_eq!(smaller.order(), d.order() - 1);
        prop_assert_eq!(smaller.degree_summary(), fresh(&smaller).degree_summary());
        for (a, b) in smaller.arcs() {
            prop_assert!(d.has_arc(map.to_old(a).unwrap(), map.to_old(b).unwrap()));
        }
        prop_assert_eq!(
            smaller.arc_count(),
            d.arc_count() - d.out_degree(v) - d.in_degree(v)
        );
    }

    #[test]
    fn ore_min_matches_definition(d in arb_digraph(1, 7)) {
        let n = d.order();
        let mut best: Option<usize> = None;
        for x in 0..n {
            for y in 0..n {
                if x != y && !d.has_arc(x, y) {
                    let sum = d.out_degree(x) + d.in_degree(y);
                    best = Some(best.map_or(sum, |b| b.min(sum)));
                }
            }
        }
        let expected = best.map_or(OreMin::Unbounded, OreMin::Finite);
        prop_assert_eq!(d.ore_min(), expected);
        prop_assert!(d.min_semi_degree() <= n.saturating_sub(1));
    }

    #[test]
    fn single_mutations_are_rejected(d in arb_dense_digraph(4, 8), seed in any::<u64>(), which in 0usize..4) {
        let variant = CoverVariant::ALL[which];
        let n = d.order();
        let k = if variant.is_many_to_many() { 1 + (seed as usize % (n / 2)) } else { 1 + (seed as usize % (n - 1)) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(n, CoverKind::new(variant, k), &mut rng);
        let Some(cover) = find_cover_exact(&d, &spec).unwrap() else { return Ok(()) };
        prop_assert!(verify_cover(&d, &spec, &cover).is_ok());
        let paths: Vec<Vec<usize>> = cover.paths.iter().map(|p| p.to_vec()).collect();

        // drop one occurrence of a vertex
        for i in 0..paths.len() {
            for j in 0..paths[i].len() {
                let mut m = paths.clone();
                m[i].remove(j);
                prop_assert!(verify_cover(&d, &spec, &PathCover::from_vecs(m)).is_err());
            }
        }
        // move an end of a path onto a vertex that is not an admissible end
        for i in 0..paths.len() {
            let mut m = paths.clone();
            let last = m[i].len() - 1;
            for v in 0..n {
                if !spec.sinks.contains(&v) && !spec.sources.contains(&v) {
                    m[i][last] = v;
                    prop_assert!(verify_cover(&d, &spec, &PathCover::from_vecs(m.clone())).is_err());
                }
            }
        }
        // repeat a vertex of another path
        if paths.len() >= 2 {
            let mut m = paths.clone();
            let x = paths[1][paths[1].len() / 2];
            let at = (m[0].len() / 2 + 1).min(m[0].len());
            m[0].insert(at, x);
            prop_assert!(verify_cover(&d, &spec, &PathCover::from_vecs(m)).is_err());
        }
    }

    #[test]
    fn paired_cover_is_unpaired_cover(d in arb_dense_digraph(4, 8), seed in any::<u64>()) {
        let n = d.order();
        let k = 1 + seed as usize % (n / 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(n, CoverKind::new(CoverVariant::PairedMtm, k), &mut rng);
        let unpaired = CoverSpec::unpaired(spec.sources.clone(), spec.sinks.clone());
        if let Some(cover) = find_cover_exact(&d, &spec).unwrap() {
            prop_assert!(verify_cover(&d, &unpaired, &cover).is_ok());
            prop_assert!(exists_cover(&d, &unpaired).unwrap());
        }
    }

    #[test]
    fn adding_an_arc_keeps_a_cover(d in arb_dense_digraph(3, 8), seed in any::<u64>(), which in 0usize..4) {
        let variant = CoverVariant::ALL[which];
        let n = d.order();
        let k = if variant.is_many_to_many() {
            prop_assume!(n >= 2);
            1 + seed as usize % (n / 2)
        } else {
            1 + seed as usize % (n - 1)
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(n, CoverKind::new(variant, k), &mut rng);
        if exists_cover(&d, &spec).unwrap() {
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && !d.has_arc(u, v))
                .collect();
            for &(u, v) in missing.iter().take(5) {
                let bigger = Digraph::from_arcs(n, d.arcs().chain([(u, v)])).unwrap();
                prop_assert!(exists_cover(&bigger, &spec).unwrap());
            }
        }
    }
}

#[test]
fn ore_bound_gives_hamiltonian_connected_exhaustively() {
    for n in 2..=5 {
        let graphs: Vec<Digraph> =
            if n <= 4 { all_digraphs(n).collect() } else { digraphs_up_to_isomorphism(n) };
        for d in graphs {
            if !d.ore_min().at_least(n + 1) {
                continue;
            }
            for s in 0..n {
                for t in 0..n {
                    if s != t {
                        assert!(find_hamiltonian_path(&d, s, t).unwrap().is_some(), "{d:?} {s} {t}");
                    }
                }
            }
        }
    }
}

#[test]
fn ore_bound_gives_hamiltonian_connected_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 6..=12 {
        for _ in 0..8 {
            let d = dense_sample(n, |g| g.ore_min().at_least(n + 1), &mut rng);
            for s in 0..n {
                for t in 0..n {
                    if s != t {
                        assert!(find_hamiltonian_path(&d, s, t).unwrap().is_some());
                    }
                }
            }
        }
    }
}

#[test]
fn constructions_agree_with_exact_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 1..=4 {
        for n in (3 * k).max(3)..=14 {
            let bound = unpaired_threshold(n, k);
            for variant in [CoverVariant::UnpairedMtm, CoverVariant::OneToMany] {
                if variant == CoverVariant::OneToMany && k < 2 {
                    continue;
                }
                let d = dense_sample(n, |g| g.min_semi_degree() >= bound, &mut rng);
                let spec = random_spec(n, CoverKind::new(variant, k), &mut rng);
                let c = construct_cover(&d, &spec).unwrap();
                assert!(verify_cover(&d, &spec, &c.cover).is_ok());
                if variant == CoverVariant::UnpairedMtm {
                    assert_eq!(c.trace.contractions, k - 1);
                }
                assert!(exists_cover(&d, &spec).unwrap());
            }
        }
        for n in (k + 1).max(3)..=14 {
            if k < 2 {
                continue;
            }
            let bound = one_to_one_threshold(n, k);
            let d = dense_sample(n, |g| g.min_semi_degree() >= bound, &mut rng);
            let spec = random_spec(n, CoverKind::new(CoverVariant::OneToOne, k), &mut rng);
            let c = construct_cover(&d, &spec).unwrap();
            assert_eq!(c.trace.deletions, k - 2);
            assert!(c.trace.claim_overlaps.iter().all(|&x| x >= 2));
            assert!(exists_cover(&d, &spec).unwrap());
        }
    }
}

#[test]
fn paired_two_construction_agrees_with_exact_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 4..=12 {
        for _ in 0..3 {
            let d = dense_sample(n, |g| g.ore_min().at_least(n + 2), &mut rng);
            let spec = random_spec(n, CoverKind::new(CoverVariant::PairedMtm, 2), &mut rng);
            let c = construct_cover(&d, &spec).unwrap();
            assert!(verify_cover(&d, &spec, &c.cover).is_ok());
            assert!(exists_cover(&d, &spec).unwrap());
        }
    }
}
