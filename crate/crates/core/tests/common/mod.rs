//! Independent brute-force oracle: enumerates every way to lay out `k`
//! vertex sequences over the vertex set, and checks the definition of each
//! cover kind directly. Shares nothing with the library except `Digraph`
//! and `CoverSpec`.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use dipathcover::{CoverSpec, CoverVariant, Digraph};
use rand::Rng;

/// Unordered description of a source/sink choice, used to look up whether
/// any enumerated layout realises it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Key {
    Unpaired(Vec<usize>, Vec<usize>),
    Paired(Vec<(usize, usize)>),
    OneToMany(usize, Vec<usize>),
    OneToOne(usize, usize),
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

pub fn key_of(spec: &CoverSpec) -> Key {
    match spec.variant() {
        CoverVariant::UnpairedMtm => Key::Unpaired(sorted(spec.sources.clone()), sorted(spec.sinks.clone())),
        CoverVariant::PairedMtm => {
            let mut pairs: Vec<(usize, usize)> =
                spec.sources.iter().copied().zip(spec.sinks.iter().copied()).collect();
            pairs.sort_unstable();
            Key::Paired(pairs)
        }
        CoverVariant::OneToMany => Key::OneToMany(spec.sources[0], sorted(spec.sinks.clone())),
        CoverVariant::OneToOne => Key::OneToOne(spec.sources[0], spec.sinks[0]),
    }
}

/// Digraph on `n` vertices whose arcs are the set bits of `mask`, over the
/// ordered pairs `(u, v)`, `u != v`, in lexicographic order.
pub fn digraph_from_mask(n: usize, mask: u64) -> Digraph {
    let mut arcs = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in 0..n {
            if u != v {
                if mask >> bit & 1 == 1 {
                    arcs.push((u, v));
                }
                bit += 1;
            }
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}

pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = n * n.saturating_sub(1);
    (0u64..1 << pairs).map(move |m| digraph_from_mask(n, m))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, a, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// One representative per isomorphism class of digraphs on `n <= 5`
/// vertices: masks minimal under every relabelling.
pub fn digraphs_up_to_isomorphism(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u, v)).unwrap();
    // image of each pair bit under each permutation
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut reps = Vec::new();
    'mask: for mask in 0u64..1 << pairs.len() {
        for img in &images {
            let mut relabelled = 0u64;
            for (b, &target) in img.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    relabelled |= 1 << target;
                }
            }
            if relabelled < mask {
                continue 'mask;
            }
        }
        reps.push(digraph_from_mask(n, mask));
    }
    reps
}

pub fn random_digraph(n: usize, density: f64, rng: &mut impl Rng) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.random_bool(density))
        .collect();
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Every split of `seq` into `k` consecutive pieces, nonempty unless
/// `allow_empty`.
fn cuts(seq: &[usize], k: usize, allow_empty: bool, out: &mut Vec<Vec<Vec<usize>>>) {
    fn go(
        seq: &[usize],
        k: usize,
        allow_empty: bool,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == 1 {
            if allow_empty || !seq.is_empty() {
                acc.push(seq.to_vec());
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        let first = if allow_empty { 0 } else { 1 };
        for len in first..=seq.len() {
            acc.push(seq[..len].to_vec());
            go(&seq[len..], k - 1, allow_empty, acc, out);
            acc.pop();
        }
    }
    go(seq, k, allow_empty, &mut Vec::new(), out);
}

/// All candidate layouts for `variant` with `k` paths on `n` vertices,
/// regardless of arcs:
/// - many-to-many: ordered partitions of the vertex set into `k` nonempty
///   sequences,
/// - one-to-many: for each `s`, ordered partitions of the other vertices
///   into `k` nonempty sequences, each prefixed by `s`,
/// - one-to-one: for each `s != t`, ordered partitions of the rest into `k`
///   possibly empty sequences, each wrapped as `s ... t`.
pub fn candidate_layouts(n: usize, variant: CoverVariant, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    match variant {
        CoverVariant::UnpairedMtm | CoverVariant::PairedMtm => {
            for p in permutations(n) {
                cuts(&p, k, false, &mut out);
            }
        }
        CoverVariant::OneToMany => {
            for s in 0..n {
                let rest: Vec<usize> = (0..n).filter(|&v| v != s).collect();
                for p in permutations(rest.len()) {
                    let seq: Vec<usize> = p.iter().map(|&i| rest[i]).collect();
                    let mut pieces = Vec::new();
                    cuts(&seq, k, false, &mut pieces);
                    for mut layout in pieces {
                        for path in &mut layout {
                            path.insert(0, s);
                        }
                        out.push(layout);
                    }
                }
            }
        }
        CoverVariant::OneToOne => {
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let rest: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
                    for p in permutations(rest.len()) {
                        let seq: Vec<usize> = p.iter().map(|&i| rest[i]).collect();
                        let mut pieces = Vec::new();
                        cuts(&seq, k, true, &mut pieces);
                        for mut layout in pieces {
                            for path in &mut layout {
                                path.insert(0, s);
                                path.push(t);
                            }
                            out.push(layout);
                        }
                    }
                }
            }
        }
    }
    out
}

fn is_arc_path(d: &Digraph, p: &[usize]) -> bool {
    let n = d.order();
    !p.is_empty()
        && p.iter().all(|&v| v < n)
        && p.windows(2).all(|w| d.has_arc(w[0], w[1]))
        && p.iter().collect::<BTreeSet<_>>().len() == p.len()
}

fn pairwise_meet_exactly(paths: &[Vec<usize>], shared: &BTreeSet<usize>) -> bool {
    let sets: Vec<BTreeSet<usize>> = paths.iter().map(|p| p.iter().copied().collect()).collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let meet: BTreeSet<usize> = sets[i].intersection(&sets[j]).copied().collect();
            if &meet != shared {
                return false;
            }
        }
    }
    true
}

/// The cover definition, checked literally. Many-to-many paths are listed
/// in source order: path `i` starts at `spec.sources[i]`.
pub fn satisfies(d: &Digraph, spec: &CoverSpec, paths: &[Vec<usize>]) -> bool {
    let n = d.order();
    if paths.len() != spec.k() || !paths.iter().all(|p| is_arc_path(d, p)) {
        return false;
    }
    let union: BTreeSet<usize> = paths.iter().flatten().copied().collect();
    if union.len() != n {
        return false;
    }
    let heads: Vec<usize> = paths.iter().map(|p| p[0]).collect();
    let tails: Vec<usize> = paths.iter().map(|p| *p.last().unwrap()).collect();
    match spec.variant() {
        CoverVariant::UnpairedMtm => {
            heads == spec.sources
                && sorted(tails) == sorted(spec.sinks.clone())
                && pairwise_meet_exactly(paths, &BTreeSet::new())
        }
        CoverVariant::PairedMtm => {
            heads == spec.sources
                && tails == spec.sinks
                && pairwise_meet_exactly(paths, &BTreeSet::new())
        }
        CoverVariant::OneToMany => {
            let s = spec.sources[0];
            heads.iter().all(|&h| h == s)
                && sorted(tails) == sorted(spec.sinks.clone())
                && pairwise_meet_exactly(paths, &BTreeSet::from([s]))
        }
        CoverVariant::OneToOne => {
            let (s, t) = (spec.sources[0], spec.sinks[0]);
            heads.iter().all(|&h| h == s)
                && tails.iter().all(|&x| x == t)
                && paths.iter().collect::<HashSet<_>>().len() == paths.len()
                && (paths.len() < 2 || pairwise_meet_exactly(paths, &BTreeSet::from([s, t])))
        }
    }
}

/// The choice a layout would serve, when it forms a valid one.
pub fn natural_spec(variant: CoverVariant, layout: &[Vec<usize>]) -> Option<CoverSpec> {
    let k = layout.len();
    let heads: Vec<usize> = layout.iter().map(|p| p[0]).collect();
    let tails: Vec<usize> = layout.iter().map(|p| *p.last().unwrap()).collect();
    let spec = match variant {
        CoverVariant::UnpairedMtm => CoverSpec::unpaired(heads, sorted(tails)),
        CoverVariant::PairedMtm => CoverSpec::paired(heads, tails),
        CoverVariant::OneToMany => CoverSpec::one_to_many(heads[0], sorted(tails)),
        CoverVariant::OneToOne => CoverSpec::one_to_one(heads[0], tails[0], k),
    };
    let mut ends: Vec<usize> = spec.sources.iter().chain(&spec.sinks).copied().collect();
    ends.sort_unstable();
    ends.dedup();
    (ends.len() == spec.sources.len() + spec.sinks.len()).then_some(spec)
}

/// Choices realised by some layout in `layouts` on `d`.
pub fn realised_keys(d: &Digraph, variant: CoverVariant, layouts: &[Vec<Vec<usize>>]) -> HashSet<Key> {
    let mut keys = HashSet::new();
    for layout in layouts {
        if let Some(spec) = natural_spec(variant, layout) {
            if satisfies(d, &spec, layout) {
                keys.insert(key_of(&spec));
            }
        }
    }
    keys
}

/// Brute-force existence for one choice.
pub fn brute_force_exists(d: &Digraph, spec: &CoverSpec) -> bool {
    let layouts = candidate_layouts(d.order(), spec.variant(), spec.k());
    realised_keys(d, spec.variant(), &layouts).contains(&key_of(spec))
}

/// Kinds and path counts the definition check covers at order `n`.
pub fn kinds_at(n: usize, max_k: usize) -> Vec<(CoverVariant, usize)> {
    let mut out = Vec::new();
    for variant in CoverVariant::ALL {
        for k in 1..=max_k {
            let needed = if variant.is_many_to_many() { 2 * k } else { k + 1 };
            if n >= needed {
                out.push((variant, k));
            }
        }
    }
    out
}

/// Compares the library against the brute-force oracle on `d`:
/// `exists_cover` for every admissible choice, and `verify_cover` for every
/// enumerated layout against both the choice it would serve and one other
/// admissible choice. Returns the number of comparisons made.
pub fn check_agreement(
    d: &Digraph,
    variant: CoverVariant,
    k: usize,
    layouts: &[Vec<Vec<usize>>],
) -> Result<usize, String> {
    use dipathcover::exact::admissible_specs;
    use dipathcover::{exists_cover, verify_cover, CoverKind, PathCover};

    let n = d.order();
    let specs = admissible_specs(n, CoverKind::new(variant, k));
    let keys = realised_keys(d, variant, layouts);
    let mut checks = 0;
    for spec in &specs {
        let exact = exists_cover(d, spec).map_err(|e| e.to_string())?;
        if exact != keys.contains(&key_of(spec)) {
            return Err(format!("existence disagrees on {d:?} for {spec:?}: exact says {exact}"));
        }
        checks += 1;
    }
    for (i, layout) in layouts.iter().enumerate() {
        let cover = PathCover::from_vecs(layout.clone());
        let natural = natural_spec(variant, layout);
        let other = &specs[i % specs.len()];
        for spec in natural.iter().chain(std::iter::once(other)) {
            let accepted = verify_cover(d, spec, &cover).is_ok();
            if accepted != satisfies(d, spec, layout) {
                return Err(format!(
                    "verify_cover disagrees on {d:?} for {spec:?} with {layout:?}: accepted = {accepted}"
                ));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

/// Random digraph accepted by `keep`: start complete and try deleting arcs
/// in random order, keeping each deletion that `keep` still accepts, until
/// a random number of deletions has been made.
pub fn dense_sample(n: usize, keep: impl Fn(&Digraph) -> bool, rng: &mut impl Rng) -> Digraph {
    use rand::seq::SliceRandom;
    let mut arcs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let mut order = arcs.clone();
    order.shuffle(rng);
    let budget = rng.random_range(0..=order.len());
    let mut deleted = 0;
    for arc in order {
        if deleted == budget {
            break;
        }
        let trial: Vec<(usize, usize)> = arcs.iter().copied().filter(|&a| a != arc).collect();
        let d = Digraph::from_arcs(n, trial.iter().copied()).unwrap();
        if keep(&d) {
            arcs = trial;
            deleted += 1;
        }
    }
    Digraph::from_arcs(n, arcs).unwrap()
}
