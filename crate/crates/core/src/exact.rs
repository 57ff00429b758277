//! Exhaustive search for path covers.
//!
//! Partial path systems are extended depth-first. At every node the open
//! path with the fewest admissible next vertices is extended, candidates in
//! increasing label order. A node is pruned when
//!
//! * some open path has no admissible extension,
//! * some uncovered vertex cannot be reached from any open path head, or
//!   cannot reach any open sink, through uncovered vertices,
//! * some open path can no longer reach a sink it is allowed to end at.
//!
//! All prunings are necessary conditions, so the search is exact. Failed
//! states are memoised; the future of a state depends only on the uncovered
//! set, the unused sinks and the heads of the open paths.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cover::{
    validate_spec, verify_cover, CoverKind, CoverSpec, CoverVariant, DiPath, PathCover,
};
use crate::digraph::Digraph;
use crate::error::ExactError;

/// Bitmask representation caps the order.
pub const MAX_EXACT_ORDER: usize = 64;

const MEMO_CAP: usize = 1 << 22;
const NO_TARGET: u32 = 0xff;

/// Returns a Hamiltonian `s`-`t` path if one exists.
pub fn find_hamiltonian_path(d: &Digraph, s: usize, t: usize) -> Result<Option<DiPath>, ExactError> {
    let spec = CoverSpec::one_to_one(s, t, 1);
    Ok(find_cover_exact(d, &spec)?.map(|c| c.paths.into_iter().next().unwrap()))
}

/// Returns a cover accepted by [`verify_cover`] if one exists, `None`
/// otherwise.
pub fn find_cover_exact(d: &Digraph, spec: &CoverSpec) -> Result<Option<PathCover>, ExactError> {
    validate_spec(d, spec).map_err(ExactError::InvalidSpec)?;
    if d.order() > MAX_EXACT_ORDER {
        return Err(ExactError::TooLarge { order: d.order(), max: MAX_EXACT_ORDER });
    }
    let mut search = Search::new(d, spec);
    if !search.run() {
        return Ok(None);
    }
    let cover = PathCover::from_vecs(search.paths);
    assert_eq!(
        verify_cover(d, spec, &cover),
        Ok(()),
        "exact search produced an invalid cover for {spec:?}"
    );
    Ok(Some(cover))
}

pub fn exists_cover(d: &Digraph, spec: &CoverSpec) -> Result<bool, ExactError> {
    Ok(find_cover_exact(d, spec)?.is_some())
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Hash, PartialEq, Eq)]
struct StateKey {
    free: u64,
    open_sinks: u64,
    heads: Vec<u32>,
}

struct Search {
    variant: CoverVariant,
    out: Vec<u64>,
    inn: Vec<u64>,
    source: usize,
    sink_mask: u64,
    targets: Vec<u64>,
    heads: Vec<usize>,
    open: Vec<bool>,
    paths: Vec<Vec<usize>>,
    free: u64,
    open_sinks: u64,
    launched: usize,
    failed: HashSet<StateKey>,
}

impl Search {
    fn new(d: &Digraph, spec: &CoverSpec) -> Self {
        let n = d.order();
        let k = spec.kind.k;
        let variant = spec.kind.variant;
        let out = (0..n).map(|v| d.out_neighbors(v).iter().fold(0, |m, &u| m | bit(u))).collect();
        let inn = (0..n).map(|v| d.in_neighbors(v).iter().fold(0, |m, &u| m | bit(u))).collect();
        let sink_mask = spec.sinks.iter().fold(0, |m, &t| m | bit(t));
        let everything = if n == 64 { u64::MAX } else { bit(n) - 1 };
        let used = spec.sources.iter().fold(sink_mask, |m, &s| m | bit(s));
        let starts: Vec<usize> = match variant {
            CoverVariant::UnpairedMtm | CoverVariant::PairedMtm => spec.sources.clone(),
            CoverVariant::OneToMany | CoverVariant::OneToOne => vec![spec.sources[0]; k],
        };
        let targets = match variant {
            CoverVariant::PairedMtm | CoverVariant::OneToMany => {
                spec.sinks.iter().map(|&t| bit(t)).collect()
            }
            CoverVariant::UnpairedMtm => vec![sink_mask; k],
            CoverVariant::OneToOne => vec![sink_mask; k],
        };
        Search {
            variant,
            out,
            inn,
            source: spec.sources[0],
            sink_mask,
            targets,
            heads: starts.clone(),
            open: vec![true; k],
            paths: starts.iter().map(|&s| vec![s]).collect(),
            free: everything & !used,
            open_sinks: sink_mask,
            launched: 0,
            failed: HashSet::new(),
        }
    }

    fn allowed(&self, i: usize) -> u64 {
        self.targets[i] & self.open_sinks
    }

    fn candidates(&self, i: usize) -> u64 {
        self.out[self.heads[i]] & (self.free | self.allowed(i))
    }

    fn out_union(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |m, v| m | self.out[v])
    }

    fn in_union(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |m, v| m | self.inn[v])
    }

    /// Uncovered vertices reachable from `start` through uncovered vertices.
    fn reach(&self, start: u64) -> u64 {
        let mut seen = 0;
        let mut frontier = self.out_union(start) & self.free;
        while frontier != 0 {
            seen |= frontier;
            frontier = self.out_union(frontier) & self.free & !seen;
        }
        seen
    }

    fn coreach(&self, targets: u64) -> u64 {
        let mut seen = 0;
        let mut frontier = self.in_union(targets) & self.free;
        while frontier != 0 {
            seen |= frontier;
            frontier = self.in_union(frontier) & self.free & !seen;
        }
        seen
    }

    fn feasible(&self) -> bool {
        let open: Vec<usize> = (0..self.open.len()).filter(|&i| self.open[i]).collect();
        let heads = open.iter().fold(0, |m, &i| m | bit(self.heads[i]));
        let reached = self.reach(heads);
        if self.free & !reached != 0 {
            return false;
        }
        let sinks = open.iter().fold(0, |m, &i| m | self.allowed(i));
        if self.free & !self.coreach(sinks) != 0 {
            return false;
        }
        if self.variant == CoverVariant::UnpairedMtm
            && self.open_sinks & !self.out_union(heads | reached) != 0
        {
            return false;
        }
        open.iter().all(|&i| {
            let own = bit(self.heads[i]);
            self.out_union(own | self.reach(own)) & self.allowed(i) != 0
        })
    }

    fn key(&self) -> StateKey {
        let mut heads: Vec<u32> = (0..self.open.len())
            .filter(|&i| self.open[i])
            .map(|i| {
                let target = match self.variant {
                    CoverVariant::PairedMtm | CoverVariant::OneToMany => {
                        self.targets[i].trailing_zeros()
                    }
                    _ => NO_TARGET,
                };
                (self.heads[i] as u32) << 8 | target
            })
            .collect();
        heads.sort_unstable();
        StateKey { free: self.free, open_sinks: self.open_sinks, heads }
    }

    fn run(&mut self) -> bool {
        if self.variant == CoverVariant::OneToOne {
            self.launch(None)
        } else {
            self.dfs()
        }
    }

    fn push(&mut self, i: usize, v: usize) {
        self.paths[i].push(v);
        self.heads[i] = v;
        if self.sink_mask & bit(v) != 0 {
            self.open[i] = false;
            if self.variant != CoverVariant::OneToOne {
                self.open_sinks &= !bit(v);
            }
        } else {
            self.free &= !bit(v);
        }
    }

    fn pop(&mut self, i: usize) {
        let v = self.paths[i].pop().unwrap();
        self.heads[i] = *self.paths[i].last().unwrap();
        if self.sink_mask & bit(v) != 0 {
            self.open[i] = true;
            self.open_sinks |= bit(v) & self.sink_mask;
        } else {
            self.free |= bit(v);
        }
    }

    /// One-to-one paths are interchangeable; their second vertices are fixed
    /// first, in strictly increasing order, to search each system once.
    fn launch(&mut self, prev: Option<usize>) -> bool {
        let i = self.launched;
        if i == self.open.len() {
            return self.dfs();
        }
        let above = match prev {
            None => u64::MAX,
            Some(v) if v >= 63 => 0,
            Some(v) => !((bit(v + 1)) - 1),
        };
        let cand = self.out[self.source] & (self.free | self.sink_mask) & above;
        for v in bits(cand) {
            self.push(i, v);
            self.launched += 1;
            if self.launch(Some(v)) {
                return true;
            }
            self.launched -= 1;
            self.pop(i);
        }
        false
    }

    fn dfs(&mut self) -> bool {
        if self.open.iter().all(|o| !o) {
            return self.free == 0;
        }
        if !self.feasible() {
            return false;
        }
        let key = self.key();
        if self.failed.contains(&key) {
            return false;
        }
        let (i, cand) = (0..self.open.len())
            .filter(|&i| self.open[i])
            .map(|i| (i, self.candidates(i)))
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .unwrap();
        for v in bits(cand) {
            self.push(i, v);
            if self.dfs() {
                return true;
            }
            self.pop(i);
        }
        if self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        false
    }
}

/// How [`is_k_coverable`] quantifies over source/sink choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SamplingPolicy {
    /// Enumerate every admissible choice when there are at most this many.
    pub exhaustive_cap: u64,
    /// Number of uniformly drawn choices otherwise.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SamplingPolicy {
    fn default() -> Self {
        SamplingPolicy { exhaustive_cap: 100_000, samples: 1_000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coverability {
    /// Every admissible choice has a cover.
    ProvenTrue { checked: u64 },
    /// `witness` admits no cover.
    ProvenFalse { witness: CoverSpec },
    /// Every sampled choice has a cover; the population was too large to
    /// enumerate.
    SampledTrue { checked: u64, population: u64 },
}

/// Number of distinct admissible source/sink choices for `kind` on `n`
/// vertices. Sources and sinks are sets except where the pairing matters
/// (paired sinks are ordered).
pub fn admissible_count(n: usize, kind: CoverKind) -> u64 {
    fn choose(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
    }
    fn falling(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64))
    }
    let k = kind.k;
    match kind.variant {
        CoverVariant::UnpairedMtm => choose(n, k).saturating_mul(choose(n.saturating_sub(k), k)),
        CoverVariant::PairedMtm => choose(n, k).saturating_mul(falling(n.saturating_sub(k), k)),
        CoverVariant::OneToMany => (n as u64).saturating_mul(choose(n.saturating_sub(1), k)),
        CoverVariant::OneToOne => falling(n, 2),
    }
}

/// Every admissible choice for `kind` on `n` vertices, in lexicographic
/// order.
pub fn admissible_specs(n: usize, kind: CoverKind) -> Vec<CoverSpec> {
    let all: Vec<usize> = (0..n).collect();
    let k = kind.k;
    let mut specs = Vec::new();
    let rest = |taken: &[usize]| -> Vec<usize> {
        all.iter().copied().filter(|v| !taken.contains(v)).collect()
    };
    match kind.variant {
        CoverVariant::UnpairedMtm | CoverVariant::PairedMtm => {
            for sources in combinations(&all, k) {
                let pool = rest(&sources);
                let sinks = if kind.variant == CoverVariant::UnpairedMtm {
                    combinations(&pool, k)
                } else {
                    arrangements(&pool, k)
                };
                for t in sinks {
                    specs.push(CoverSpec {
                        kind,
                        sources: sources.clone(),
                        sinks: t,
                    });
                }
            }
        }
        CoverVariant::OneToMany => {
            for s in 0..n {
                for t in combinations(&rest(&[s]), k) {
                    specs.push(CoverSpec::one_to_many(s, t));
                }
            }
        }
        CoverVariant::OneToOne => {
            for s in 0..n {
                for t in 0..n {
                    if s != t {
                        specs.push(CoverSpec::one_to_one(s, t, k));
                    }
                }
            }
        }
    }
    specs
}

/// A uniformly random admissible choice.
pub fn random_spec(n: usize, kind: CoverKind, rng: &mut impl rand::Rng) -> CoverSpec {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let k = kind.k;
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    match kind.variant {
        CoverVariant::UnpairedMtm => {
            CoverSpec::unpaired(sorted(order[..k].to_vec()), sorted(order[k..2 * k].to_vec()))
        }
        CoverVariant::PairedMtm => {
            // sort sources, carrying each paired sink along
            let mut pairs: Vec<(usize, usize)> = (0..k).map(|i| (order[i], order[k + i])).collect();
            pairs.sort_unstable();
            CoverSpec {
                kind,
                sources: pairs.iter().map(|p| p.0).collect(),
                sinks: pairs.iter().map(|p| p.1).collect(),
            }
        }
        CoverVariant::OneToMany => CoverSpec::one_to_many(order[0], sorted(order[1..=k].to_vec())),
        CoverVariant::OneToOne => CoverSpec::one_to_one(order[0], order[1], k),
    }
}

pub(crate) fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, from: usize, cur: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            acc.push(cur.clone());
            return;
        }
        for i in from..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, acc);
            cur.pop();
        }
    }
    let mut acc = Vec::new();
    go(pool, k, 0, &mut Vec::new(), &mut acc);
    acc
}

pub(crate) fn arrangements(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            acc.push(cur.clone());
            return;
        }
        for i in 0..pool.len() {
            if !used[i] {
                used[i] = true;
                cur.push(pool[i]);
                go(pool, k, used, cur, acc);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut acc = Vec::new();
    go(pool, k, &mut vec![false; pool.len()], &mut Vec::new(), &mut acc);
    acc
}

/// Decides (or samples) whether `d` has a cover of `kind` for every
/// admissible source/sink choice.
pub fn is_k_coverable(
    d: &Digraph,
    kind: CoverKind,
    policy: &SamplingPolicy,
) -> Result<Coverability, ExactError> {
    let n = d.order();
    let k = kind.k;
    let required = if kind.variant.is_many_to_many() { 2 * k } else { k + 1 };
    if k == 0 || n < required {
        return Err(ExactError::OrderTooSmall { order: n, k, required });
    }
    let population = admissible_count(n, kind);
    if population <= policy.exhaustive_cap {
        let specs = admissible_specs(n, kind);
        for spec in &specs {
            if !exists_cover(d, spec)? {
                return Ok(Coverability::ProvenFalse { witness: spec.clone() });
            }
        }
        return Ok(Coverability::ProvenTrue { checked: specs.len() as u64 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    for _ in 0..policy.samples {
        let spec = random_spec(n, kind, &mut rng);
        if !exists_cover(d, &spec)? {
            return Ok(Coverability::ProvenFalse { witness: spec });
        }
    }
    Ok(Coverability::SampledTrue { checked: policy.samples as u64, population })
}
