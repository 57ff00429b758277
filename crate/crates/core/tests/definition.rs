mod common;

use common::*;
use dipathcover::{
    find_hamiltonian_path, verify_cover, CoverSpec, CoverVariant, Digraph, PathCover,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_agrees_on_every_digraph_up_to_order_four() {
    for n in 2..=4 {
        for (variant, k) in kinds_at(n, 2) {
            let layouts = candidate_layouts(n, variant, k);
            for d in all_digraphs(n) {
                check_agreement(&d, variant, k, &layouts).unwrap();
            }
        }
    }
}

#[test]
fn oracle_agrees_on_sampled_order_seven() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let n = 7;
    for (variant, k) in kinds_at(n, 2) {
        let layouts = candidate_layouts(n, variant, k);
        for density in [0.5, 0.7, 0.9] {
            let d = random_digraph(n, density, &mut rng);
            check_agreement(&d, variant, k, &layouts).unwrap();
        }
    }
}

#[test]
fn brute_force_sees_known_values() {
    let k22 = Digraph::complete_bipartite(2, 2);
    assert!(!brute_force_exists(&k22, &CoverSpec::unpaired(vec![0], vec![1])));
    assert!(brute_force_exists(&k22, &CoverSpec::unpaired(vec![0], vec![2])));
    let k4 = Digraph::complete(4);
    assert!(brute_force_exists(&k4, &CoverSpec::one_to_one(0, 3, 3)));
    assert!(!brute_force_exists(&k4, &CoverSpec::one_to_one(0, 3, 4)));
}

#[test]
fn one_path_one_to_one_is_hamiltonian_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=6 {
        for _ in 0..20 {
            let d = random_digraph(n, 0.6, &mut rng);
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let spec = CoverSpec::one_to_one(s, t, 1);
                    let ham = find_hamiltonian_path(&d, s, t).unwrap();
                    assert_eq!(ham.is_some(), brute_force_exists(&d, &spec));
                    if let Some(p) = ham {
                        let cover = PathCover::new(vec![p.clone()]);
                        assert!(verify_cover(&d, &spec, &cover).is_ok());
                        assert_eq!(p.len(), n);
                    }
                }
            }
        }
    }
}

#[test]
fn every_layout_kind_is_exercised() {
    // sanity on the enumerator itself: layout counts by closed form
    assert_eq!(candidate_layouts(4, CoverVariant::UnpairedMtm, 2).len(), 24 * 3);
    assert_eq!(candidate_layouts(4, CoverVariant::OneToMany, 2).len(), 4 * 6 * 2);
    assert_eq!(candidate_layouts(4, CoverVariant::OneToOne, 2).len(), 12 * 2 * 3);
    assert_eq!(digraphs_up_to_isomorphism(3).len(), 16);
    assert_eq!(digraphs_up_to_isomorphism(4).len(), 218);
}
