//! Constructive cover solvers that follow the inductive existence arguments.
//!
//! Each solver checks its degree hypothesis up front and returns
//! [`ConstructError::Precondition`] when it does not hold. Under the
//! hypothesis every step is guaranteed to succeed; a step that fails anyway
//! is reported as [`ConstructError::Defect`]. The only search used is the
//! exact Hamiltonian path search, at the points where Hamiltonian
//! connectedness is guaranteed by an Ore-type bound.

use serde::Serialize;

use crate::cover::{validate_spec, verify_cover, CoverSpec, DiPath, PathCover};
use crate::digraph::Digraph;
use crate::error::{ConstructError, Precondition};
use crate::exact::find_hamiltonian_path;
use crate::matching::maximum_matching;

/// Minimum semi-degree under which every digraph of order `n >= 3k` is
/// unpaired many-to-many (and, for `k >= 2`, one-to-many) `k`-coverable.
pub fn unpaired_threshold(n: usize, k: usize) -> usize {
    (n + k).div_ceil(2)
}

/// Minimum semi-degree that suffices when `n = 2k`.
pub fn tight_threshold(k: usize) -> usize {
    (3 * k).div_ceil(2) - 1
}

/// Minimum semi-degree for one-to-one `k`-coverability, `k >= 2`.
pub fn one_to_one_threshold(n: usize, k: usize) -> usize {
    (n + k - 1).div_ceil(2)
}

/// Ore-type bound for paired two-path covers.
pub fn paired_two_ore_bound(n: usize) -> usize {
    n + 2
}

/// Structural record of a construction, for checking recursion shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub contractions: usize,
    pub deletions: usize,
    pub hamiltonian_calls: usize,
    /// Size of the candidate set for the splitting vertex at each two-path
    /// one-to-one step.
    pub claim_overlaps: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub cover: PathCover,
    pub trace: Trace,
}

fn defect(msg: impl Into<String>) -> ConstructError {
    ConstructError::Defect(msg.into())
}

fn check_spec(d: &Digraph, spec: &CoverSpec) -> Result<(), Precondition> {
    validate_spec(d, spec).map_err(Precondition::InvalidSpec)
}

fn check_order(d: &Digraph, required: usize) -> Result<(), Precondition> {
    if d.order() < required {
        return Err(Precondition::Order { order: d.order(), required });
    }
    Ok(())
}

fn check_semi_degree(d: &Digraph, required: usize) -> Result<(), Precondition> {
    let found = d.min_semi_degree();
    if found < required {
        return Err(Precondition::SemiDegree { found, required });
    }
    Ok(())
}

fn finish(
    d: &Digraph,
    spec: &CoverSpec,
    paths: Vec<Vec<usize>>,
    trace: Trace,
) -> Result<Construction, ConstructError> {
    let cover = PathCover::from_vecs(paths);
    verify_cover(d, spec, &cover)
        .map_err(|r| defect(format!("constructed cover rejected: {r}")))?;
    Ok(Construction { cover, trace })
}

fn hamiltonian(d: &Digraph, s: usize, t: usize, trace: &mut Trace) -> Result<Vec<usize>, ConstructError> {
    trace.hamiltonian_calls += 1;
    match find_hamiltonian_path(d, s, t) {
        Ok(Some(p)) => Ok(p.into_vertices()),
        Ok(None) => Err(defect(format!(
            "no Hamiltonian {s}-{t} path in a digraph meeting the Ore bound"
        ))),
        Err(e) => Err(defect(e.to_string())),
    }
}

/// Unpaired many-to-many cover for `n >= 3k` and minimum semi-degree at
/// least `ceil((n + k) / 2)`. Path `i` starts at `sources[i]`.
///
/// Contracts `(s_k, t_k)` into one vertex `r`, covers the smaller instance,
/// and splits the path through `r` into `... r- t_k` and `s_k r+ ...`.
pub fn unpaired_mtm_cover(
    d: &Digraph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<Construction, ConstructError> {
    let spec = CoverSpec::unpaired(sources.to_vec(), sinks.to_vec());
    check_spec(d, &spec)?;
    let k = sources.len();
    check_order(d, 3 * k)?;
    check_semi_degree(d, unpaired_threshold(d.order(), k))?;
    let mut trace = Trace::default();
    let paths = unpaired_rec(d, sources, sinks, &mut trace)?;
    finish(d, &spec, paths, trace)
}

fn unpaired_rec(
    d: &Digraph,
    sources: &[usize],
    sinks: &[usize],
    trace: &mut Trace,
) -> Result<Vec<Vec<usize>>, ConstructError> {
    let k = sources.len();
    if k == 1 {
        return Ok(vec![hamiltonian(d, sources[0], sinks[0], trace)?]);
    }
    let (sk, tk) = (sources[k - 1], sinks[k - 1]);
    let c = d.contract_pair(sk, tk).map_err(|e| defect(e.to_string()))?;
    trace.contractions += 1;
    let to_new = |v: usize| c.map.to_new(v).expect("survivor");
    let sub_sources: Vec<usize> = sources[..k - 1].iter().map(|&v| to_new(v)).collect();
    let sub_sinks: Vec<usize> = sinks[..k - 1].iter().map(|&v| to_new(v)).collect();
    let sub = unpaired_rec(&c.digraph, &sub_sources, &sub_sinks, trace)?;

    let (host, at) = sub
        .iter()
        .enumerate()
        .find_map(|(i, p)| p.iter().position(|&v| v == c.r).map(|j| (i, j)))
        .ok_or_else(|| defect("merged vertex not covered"))?;
    if at == 0 || at + 1 == sub[host].len() {
        return Err(defect("merged vertex is an end of its path"));
    }
    let lift = |p: &[usize]| -> Vec<usize> { p.iter().map(|&v| c.map.new_to_old[v]).collect() };
    let mut paths: Vec<Vec<usize>> = sub.iter().map(|p| {
        if p.contains(&c.r) { Vec::new() } else { lift(p) }
    }).collect();
    let mut front = lift(&sub[host][..at]);
    front.push(tk);
    let mut back = vec![sk];
    back.extend(lift(&sub[host][at + 1..]));
    paths[host] = front;
    paths.push(back);
    Ok(paths)
}

/// Unpaired many-to-many cover when `n = 2k` and the minimum semi-degree is
/// at least `ceil(3k / 2) - 1`: every path is a single arc, taken from a
/// perfect matching of the arcs from sources to sinks.
pub fn unpaired_mtm_cover_tight(
    d: &Digraph,
    sources: &[usize],
    sinks: &[usize],
) -> Result<Construction, ConstructError> {
    let spec = CoverSpec::unpaired(sources.to_vec(), sinks.to_vec());
    check_spec(d, &spec)?;
    let k = sources.len();
    if d.order() != 2 * k {
        return Err(Precondition::ExactOrder { order: d.order(), required: 2 * k }.into());
    }
    check_semi_degree(d, tight_threshold(k))?;

    let mut by_label: Vec<usize> = (0..k).collect();
    by_label.sort_by_key(|&j| sinks[j]);
    let adj: Vec<Vec<usize>> = sources
        .iter()
        .map(|&s| by_label.iter().copied().filter(|&j| d.has_arc(s, sinks[j])).collect())
        .collect();
    let matching = maximum_matching(&adj, k);
    let paths = sources
        .iter()
        .zip(&matching)
        .map(|(&s, m)| m.map(|j| vec![s, sinks[j]]))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| defect("arcs from sources to sinks have no perfect matching"))?;
    finish(d, &spec, paths, Trace::default())
}

/// Unpaired `m`-path cover of the complete bipartite digraph with parts
/// `0..m` and `m..2m`: sources on each side are matched to the sinks on the
/// other side.
pub fn balanced_bipartite_cover(
    m: usize,
    sources: &[usize],
    sinks: &[usize],
) -> Result<Construction, ConstructError> {
    if m < 2 {
        return Err(Precondition::PathCount { k: m, min: 2 }.into());
    }
    let d = Digraph::complete_bipartite(m, m);
    let spec = CoverSpec::unpaired(sources.to_vec(), sinks.to_vec());
    check_spec(&d, &spec)?;
    if sources.len() != m {
        return Err(Precondition::InvalidSpec(vec![crate::cover::SpecViolation::SourceCount {
            expected: m,
            found: sources.len(),
        }])
        .into());
    }
    let in_x = |v: &&usize| **v < m;
    let mut sinks_y = sinks.iter().filter(|v| !in_x(v));
    let mut sinks_x = sinks.iter().filter(in_x);
    let s_x = sources.iter().filter(in_x).count();
    if s_x != sinks.iter().filter(|v| !in_x(v)).count() {
        return Err(defect("source/sink side counts do not balance"));
    }
    let paths = sources
        .iter()
        .map(|&s| {
            let t = if s < m { sinks_y.next() } else { sinks_x.next() };
            vec![s, *t.expect("balanced sides")]
        })
        .collect();
    finish(&d, &spec, paths, Trace::default())
}

/// Paired two-path cover (`s1 -> t1`, `s2 -> t2`) when `d+(x) + d-(y) >= n + 2`
/// for every non-arc `xy`.
///
/// Merges `s2` and `t1` into `w`, takes a Hamiltonian `s1`-`t2` path of the
/// merged digraph and cuts it at `w`.
pub fn paired_two_cover(
    d: &Digraph,
    s1: usize,
    s2: usize,
    t1: usize,
    t2: usize,
) -> Result<Construction, ConstructError> {
    let spec = CoverSpec::paired(vec![s1, s2], vec![t1, t2]);
    check_spec(d, &spec)?;
    let required = paired_two_ore_bound(d.order());
    let found = d.ore_min();
    if !found.at_least(required) {
        return Err(Precondition::Ore { found, required }.into());
    }
    let mut trace = Trace::default();
    let c = d.contract_pair(s2, t1).map_err(|e| defect(e.to_string()))?;
    trace.contractions += 1;
    let to_new = |v: usize| c.map.to_new(v).expect("survivor");
    let p = hamiltonian(&c.digraph, to_new(s1), to_new(t2), &mut trace)?;
    let at = p
        .iter()
        .position(|&v| v == c.r)
        .ok_or_else(|| defect("merged vertex missing from Hamiltonian path"))?;
    let lift = |p: &[usize]| -> Vec<usize> { p.iter().map(|&v| c.map.new_to_old[v]).collect() };
    let mut first = lift(&p[..at]);
    first.push(t1);
    let mut second = vec![s2];
    second.extend(lift(&p[at + 1..]));
    finish(d, &spec, vec![first, second], trace)
}

/// One-to-many cover from `s` to `sinks` for `n >= 3k`, `k >= 2` and
/// minimum semi-degree at least `ceil((n + k) / 2)`. Path `i` ends at
/// `sinks[i]`.
///
/// Picks `k - 1` out-neighbours of `s` outside the sinks as extra sources,
/// builds an unpaired cover, and prefixes `s` to the extra paths.
pub fn one_to_many_cover(
    d: &Digraph,
    s: usize,
    sinks: &[usize],
) -> Result<Construction, ConstructError> {
    let spec = CoverSpec::one_to_many(s, sinks.to_vec());
    check_spec(d, &spec)?;
    let k = sinks.len();
    if k < 2 {
        return Err(Precondition::PathCount { k, min: 2 }.into());
    }
    check_order(d, 3 * k)?;
    check_semi_degree(d, unpaired_threshold(d.order(), k))?;

    let mut sources = vec![s];
    sources.extend(
        d.out_neighbors(s)
            .iter()
            .copied()
            .filter(|v| !sinks.contains(v))
            .take(k - 1),
    );
    if sources.len() < k {
        return Err(defect("too few out-neighbours of the source outside the sinks"));
    }
    let mut trace = Trace::default();
    let mut paths = unpaired_rec(d, &sources, sinks, &mut trace)?;
    for p in paths.iter_mut().skip(1) {
        p.insert(0, s);
    }
    paths.sort_by_key(|p| sinks.iter().position(|t| Some(t) == p.last()));
    finish(d, &spec, paths, trace)
}

/// One-to-one `k`-path cover from `s` to `t` for `n >= k + 1`, `k >= 2` and
/// minimum semi-degree at least `ceil((n + k - 1) / 2)`.
///
/// For `k >= 3` a common neighbour `h` (`s -> h -> t`) is split off and the
/// rest is covered recursively; for `k = 2` a Hamiltonian `s`-`t` path is cut
/// at a vertex `w` with `s -> w+` and `w -> t`.
pub fn one_to_one_cover(
    d: &Digraph,
    s: usize,
    t: usize,
    k: usize,
) -> Result<Construction, ConstructError> {
    let spec = CoverSpec::one_to_one(s, t, k);
    check_spec(d, &spec)?;
    if k < 2 {
        return Err(Precondition::PathCount { k, min: 2 }.into());
    }
    check_order(d, k + 1)?;
    check_semi_degree(d, one_to_one_threshold(d.order(), k))?;
    let mut trace = Trace::default();
    let paths = one_to_one_rec(d, s, t, k, &mut trace)?;
    finish(d, &spec, paths, trace)
}

fn one_to_one_rec(
    d: &Digraph,
    s: usize,
    t: usize,
    k: usize,
    trace: &mut Trace,
) -> Result<Vec<Vec<usize>>, ConstructError> {
    if k == 2 {
        return split_hamiltonian(d, s, t, trace);
    }
    let h = d
        .out_neighbors(s)
        .iter()
        .copied()
        .find(|&h| d.has_arc(h, t))
        .ok_or_else(|| defect("source and sink have no common neighbour"))?;
    let (smaller, map) = d.delete_vertex(h).map_err(|e| defect(e.to_string()))?;
    trace.deletions += 1;
    let to_new = |v: usize| map.to_new(v).expect("survivor");
    let sub = one_to_one_rec(&smaller, to_new(s), to_new(t), k - 1, trace)?;
    let mut paths: Vec<Vec<usize>> = sub
        .into_iter()
        .map(|p| p.into_iter().map(|v| map.new_to_old[v]).collect())
        .collect();
    paths.push(vec![s, h, t]);
    Ok(paths)
}

fn split_hamiltonian(
    d: &Digraph,
    s: usize,
    t: usize,
    trace: &mut Trace,
) -> Result<Vec<Vec<usize>>, ConstructError> {
    let p = hamiltonian(d, s, t, trace)?;
    let mut position = vec![0; d.order()];
    for (i, &v) in p.iter().enumerate() {
        position[v] = i;
    }
    // predecessors on P of the out-neighbours of s, that also reach t
    let mut candidates: Vec<usize> = d
        .out_neighbors(s)
        .iter()
        .map(|&v| p[position[v] - 1])
        .filter(|&w| d.has_arc(w, t))
        .collect();
    candidates.sort_unstable();
    trace.claim_overlaps.push(candidates.len());
    if candidates.len() < 2 {
        return Err(defect(format!(
            "only {} splitting candidates on the Hamiltonian path",
            candidates.len()
        )));
    }
    let at = position[candidates[0]];
    let mut first = vec![s];
    first.extend_from_slice(&p[at + 1..]);
    let mut second = p[..=at].to_vec();
    second.push(t);
    Ok(vec![first, second])
}

/// Convenience for callers holding a [`CoverSpec`]: dispatches to the
/// constructive solver for its kind.
pub fn construct_cover(d: &Digraph, spec: &CoverSpec) -> Result<Construction, ConstructError> {
    use crate::cover::CoverVariant::*;
    match spec.kind.variant {
        UnpairedMtm if d.order() == 2 * spec.sources.len() && !spec.sources.is_empty() => {
            unpaired_mtm_cover_tight(d, &spec.sources, &spec.sinks)
        }
        UnpairedMtm => unpaired_mtm_cover(d, &spec.sources, &spec.sinks),
        PairedMtm => {
            if spec.sources.len() != 2 || spec.sinks.len() != 2 {
                return Err(Precondition::PathCount { k: spec.kind.k, min: 2 }.into());
            }
            paired_two_cover(d, spec.sources[0], spec.sources[1], spec.sinks[0], spec.sinks[1])
        }
        OneToMany => {
            check_spec(d, spec)?;
            one_to_many_cover(d, spec.sources[0], &spec.sinks)
        }
        OneToOne => {
            check_spec(d, spec)?;
            one_to_one_cover(d, spec.sources[0], spec.sinks[0], spec.kind.k)
        }
    }
}

impl Construction {
    pub fn paths(&self) -> &[DiPath] {
        &self.cover.paths
    }
}
