//! Verification campaigns: generate digraphs meeting a degree hypothesis,
//! run the matching construction on every generated instance, check the
//! result with [`verify_cover`], and collect a deterministic report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructive::{
    balanced_bipartite_cover, construct_cover, one_to_one_threshold, paired_two_ore_bound,
    tight_threshold, unpaired_threshold,
};
use crate::cover::{verify_cover, CoverKind, CoverSpec, CoverVariant};
use crate::digraph::{Digraph, OreMin};
use crate::error::{ConstructError, GenError};
use crate::exact::{admissible_specs, exists_cover, is_k_coverable, random_spec, Coverability, SamplingPolicy};
use crate::extremal::{self, ExtremalWitness, Family};

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Which sufficient condition a campaign exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// Unpaired many-to-many, `n >= 3k`, semi-degree `ceil((n+k)/2)`.
    Unpaired,
    /// Unpaired many-to-many, `n = 2k`, semi-degree `ceil(3k/2) - 1`.
    Tight,
    /// Balanced complete bipartite digraphs: coverable with `k = m` paths,
    /// not with fewer.
    Bipartite,
    /// Paired two-path covers under the Ore bound `n + 2`.
    PairedTwo,
    /// One-to-many, `n >= 3k`, semi-degree `ceil((n+k)/2)`.
    OneToMany,
    /// One-to-one, `n >= k + 1`, semi-degree `ceil((n+k-1)/2)`.
    OneToOne,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Unpaired,
        TheoremId::Tight,
        TheoremId::Bipartite,
        TheoremId::PairedTwo,
        TheoremId::OneToMany,
        TheoremId::OneToOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Unpaired => "unpaired",
            TheoremId::Tight => "tight",
            TheoremId::Bipartite => "bipartite",
            TheoremId::PairedTwo => "paired-two",
            TheoremId::OneToMany => "one-to-many",
            TheoremId::OneToOne => "one-to-one",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| s.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Random,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            _ => Err(s.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub theorem: TheoremId,
    pub n_min: usize,
    pub n_max: usize,
    /// For [`TheoremId::Bipartite`] this ranges over the part size `m`.
    pub k_min: usize,
    pub k_max: usize,
    pub mode: Mode,
    /// Instances per `(n, k)` in random mode.
    pub samples: usize,
    pub seed: u64,
    /// Largest order handed to the exact search when the construction
    /// refuses an instance.
    pub oracle_max_order: usize,
    /// Stop after this many instances and mark the report truncated.
    pub instance_cap: usize,
    /// Largest order enumerated in exhaustive mode.
    pub max_exhaustive_order: usize,
    /// Added to the degree (or Ore) bound the generator enforces. Negative
    /// values produce instances below the sufficient condition; these are
    /// decided by the exact search and known sharp witnesses are added.
    pub threshold_offset: i64,
    /// Record wall-clock time per instance. Off by default because it makes
    /// reports differ between runs.
    pub record_timing: bool,
}

impl CampaignConfig {
    pub fn new(theorem: TheoremId, mode: Mode) -> Self {
        CampaignConfig {
            theorem,
            n_min: 1,
            n_max: 12,
            k_min: 1,
            k_max: 1,
            mode,
            samples: 300,
            seed: 0,
            oracle_max_order: 12,
            instance_cap: 1_000_000,
            max_exhaustive_order: 5,
            threshold_offset: 0,
            record_timing: false,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_min > self.n_max {
            return Err(ConfigError::EmptyRange("n"));
        }
        if self.k_min > self.k_max {
            return Err(ConfigError::EmptyRange("k"));
        }
        if self.k_min == 0 {
            return Err(ConfigError::ZeroK);
        }
        if self.mode == Mode::Random && self.samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        if self.mode == Mode::Exhaustive && self.n_max > self.max_exhaustive_order {
            let outside_bipartite = self.theorem != TheoremId::Bipartite;
            if outside_bipartite {
                return Err(ConfigError::ExhaustiveTooLarge {
                    n: self.n_max,
                    max: self.max_exhaustive_order,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("empty {0} range")]
    EmptyRange(&'static str),
    #[error("k must be positive")]
    ZeroK,
    #[error("random mode needs a positive sample count")]
    NoSamples,
    #[error("exhaustive enumeration up to order {n} exceeds the cap {max}")]
    ExhaustiveTooLarge { n: usize, max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InstanceKey {
    pub n: usize,
    pub k: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// The construction's cover was accepted.
    Accepted,
    /// The construction refused the instance; the exact search found a
    /// cover.
    AcceptedByOracle,
    /// The exact search proved that no cover exists, as expected.
    Refuted,
    /// The construction refused the instance and it was too large for the
    /// exact search.
    Undecided,
    Failed { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub key: InstanceKey,
    pub spec: CoverSpec,
    pub min_semi_degree: usize,
    pub ore_min: OreMin,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Splitting-candidate counts seen by the one-to-one construction.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub claim_overlaps: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

/// Everything needed to replay a failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub key: InstanceKey,
    pub reason: String,
    pub graph: Digraph,
    pub spec: CoverSpec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub accepted: usize,
    pub accepted_by_oracle: usize,
    pub refuted: usize,
    pub undecided: usize,
    pub failed: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub format_version: u32,
    pub campaign: String,
    pub config: serde_json::Value,
    pub summary: Summary,
    pub failures: Vec<FailureRecord>,
    pub records: Vec<InstanceRecord>,
}

impl VerificationReport {
    fn new(campaign: String, config: serde_json::Value) -> Self {
        VerificationReport {
            format_version: REPORT_FORMAT_VERSION,
            campaign,
            config,
            summary: Summary::default(),
            failures: Vec::new(),
            records: Vec::new(),
        }
    }

    fn push(&mut self, record: InstanceRecord, graph: &Digraph) {
        if let Verdict::Failed { reason } = &record.verdict {
            self.failures.push(FailureRecord {
                key: record.key,
                reason: reason.clone(),
                graph: graph.clone(),
                spec: record.spec.clone(),
            });
        }
        self.records.push(record);
    }

    fn finalize(&mut self) {
        self.records.sort_by_key(|r| r.key);
        self.failures.sort_by_key(|f| f.key);
        let mut s = Summary { truncated: self.summary.truncated, ..Summary::default() };
        s.instances = self.records.len();
        for r in &self.records {
            match r.verdict {
                Verdict::Accepted => s.accepted += 1,
                Verdict::AcceptedByOracle => s.accepted_by_oracle += 1,
                Verdict::Refuted => s.refuted += 1,
                Verdict::Undecided => s.undecided += 1,
                Verdict::Failed { .. } => s.failed += 1,
            }
        }
        self.summary = s;
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line for humans.
    pub fn summary_line(&self) -> String {
        let s = &self.summary;
        format!(
            "{}: {} instances, {} accepted, {} accepted by exact search, {} refuted, {} undecided, {} failed{}",
            self.campaign,
            s.instances,
            s.accepted,
            s.accepted_by_oracle,
            s.refuted,
            s.undecided,
            s.failed,
            if s.truncated { " (truncated)" } else { "" }
        )
    }
}

/// The degree condition an instance generator must maintain.
#[derive(Clone, Copy, Debug)]
enum Hypothesis {
    SemiDegree(usize),
    Ore(usize),
}

impl Hypothesis {
    fn holds(self, d: &Digraph) -> bool {
        match self {
            Hypothesis::SemiDegree(b) => d.min_semi_degree() >= b,
            Hypothesis::Ore(b) => d.ore_min().at_least(b),
        }
    }
}

fn offset(bound: usize, by: i64) -> usize {
    (bound as i64 + by).max(0) as usize
}

/// The cover kind and hypothesis for `(n, k)`, or `None` when the condition
/// says nothing at these parameters.
fn setting(config: &CampaignConfig, n: usize, k: usize) -> Option<(CoverKind, Hypothesis)> {
    let off = config.threshold_offset;
    let semi = |b: usize| Hypothesis::SemiDegree(offset(b, off));
    match config.theorem {
        TheoremId::Unpaired => (n >= 3 * k)
            .then(|| (CoverKind::new(CoverVariant::UnpairedMtm, k), semi(unpaired_threshold(n, k)))),
        TheoremId::Tight => (n == 2 * k && k >= 1)
            .then(|| (CoverKind::new(CoverVariant::UnpairedMtm, k), semi(tight_threshold(k)))),
        TheoremId::PairedTwo => (k == 2 && n >= 4).then(|| {
            (
                CoverKind::new(CoverVariant::PairedMtm, 2),
                Hypothesis::Ore(offset(paired_two_ore_bound(n), off)),
            )
        }),
        TheoremId::OneToMany => (n >= 3 * k && k >= 2)
            .then(|| (CoverKind::new(CoverVariant::OneToMany, k), semi(unpaired_threshold(n, k)))),
        TheoremId::OneToOne => (n > k && k >= 2)
            .then(|| (CoverKind::new(CoverVariant::OneToOne, k), semi(one_to_one_threshold(n, k)))),
        TheoremId::Bipartite => None,
    }
}

fn sharp_witness(theorem: TheoremId, n: usize, k: usize) -> Option<ExtremalWitness> {
    match theorem {
        TheoremId::Unpaired => extremal::gen_unpaired_sharp(n, k).ok(),
        TheoremId::Tight => (n == 2 * k).then(|| extremal::gen_tight_sharp(k).ok()).flatten(),
        TheoremId::PairedTwo => extremal::gen_paired2_figure1(n, 3).ok(),
        TheoremId::OneToMany => extremal::gen_one_to_many_sharp(n, k).ok(),
        TheoremId::OneToOne => extremal::gen_one_to_one_sharp(n, k).ok(),
        TheoremId::Bipartite => None,
    }
}

/// Runs the construction on one instance and decides the verdict.
fn solve_instance(
    config: &CampaignConfig,
    key: InstanceKey,
    d: &Digraph,
    spec: &CoverSpec,
) -> InstanceRecord {
    let start = Instant::now();
    let mut claim_overlaps = Vec::new();
    let verdict = match construct_cover(d, spec) {
        Ok(c) => {
            claim_overlaps = c.trace.claim_overlaps;
            match verify_cover(d, spec, &c.cover) {
                Ok(()) => Verdict::Accepted,
                Err(r) => Verdict::Failed { reason: format!("cover rejected: {r}") },
            }
        }
        Err(ConstructError::Defect(msg)) => Verdict::Failed { reason: msg },
        Err(ConstructError::Precondition(p)) => {
            if config.threshold_offset >= 0 {
                Verdict::Failed { reason: format!("generated instance refused: {p}") }
            } else if d.order() > config.oracle_max_order {
                Verdict::Undecided
            } else {
                match exists_cover(d, spec) {
                    Ok(true) => Verdict::AcceptedByOracle,
                    Ok(false) => Verdict::Failed { reason: "no cover exists".to_string() },
                    Err(e) => Verdict::Failed { reason: e.to_string() },
                }
            }
        }
    };
    InstanceRecord {
        key,
        spec: spec.clone(),
        min_semi_degree: d.min_semi_degree(),
        ore_min: d.ore_min(),
        verdict,
        claim_overlaps,
        elapsed_us: config.record_timing.then(|| start.elapsed().as_micros() as u64),
    }
}

/// Random digraph meeting `hyp`: start complete, pick a deletion budget,
/// then delete arcs in random order whenever the hypothesis survives.
fn sample_dense(n: usize, hyp: Hypothesis, rng: &mut impl Rng) -> Digraph {
    let mut arc = vec![true; n * n];
    for v in 0..n {
        arc[v * n + v] = false;
    }
    let mut out = vec![n - 1; n];
    let mut inn = vec![n - 1; n];
    let mut arcs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    arcs.shuffle(rng);
    let budget = rng.random_range(0..=arcs.len());
    let mut deleted = 0;
    for (u, v) in arcs {
        if deleted == budget {
            break;
        }
        let ok = match hyp {
            Hypothesis::SemiDegree(b) => out[u] > b && inn[v] > b,
            Hypothesis::Ore(b) => {
                out[u] + inn[v] >= b + 2
                    && (0..n).all(|y| y == u || arc[u * n + y] || out[u] - 1 + inn[y] >= b)
                    && (0..n).all(|x| x == v || arc[x * n + v] || out[x] + inn[v] - 1 >= b)
            }
        };
        if ok {
            arc[u * n + v] = false;
            out[u] -= 1;
            inn[v] -= 1;
            deleted += 1;
        }
    }
    Digraph::from_matrix(n, arc)
}

/// Every digraph on `n` vertices in which each out-degree is at least
/// `min_out`, in a fixed order, passed to `visit` until it returns false.
fn for_each_digraph(n: usize, min_out: usize, mut visit: impl FnMut(&Digraph) -> bool) {
    let choices: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            (0u32..1 << n)
                .filter(|m| m & (1 << v) == 0 && m.count_ones() as usize >= min_out)
                .collect()
        })
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; n];
    loop {
        let d = Digraph::from_fn(n, |u, v| choices[u][idx[u]] & (1 << v) != 0);
        if !visit(&d) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

pub fn run_theorem_check(config: &CampaignConfig) -> Result<VerificationReport, ConfigError> {
    config.validate()?;
    let echo = serde_json::to_value(config).expect("config serializes");
    let mut report = VerificationReport::new(format!("theorem {}", config.theorem), echo);
    if config.theorem == TheoremId::Bipartite {
        run_bipartite(config, &mut report);
        report.finalize();
        return Ok(report);
    }
    'outer: for k in config.k_min..=config.k_max {
        for n in config.n_min..=config.n_max {
            let Some((kind, hyp)) = setting(config, n, k) else { continue };
            let mut index = 0;
            let mut next_key = || {
                let key = InstanceKey { n, k, index };
                index += 1;
                key
            };
            if config.threshold_offset < 0 {
                if let Some(w) = sharp_witness(config.theorem, n, k) {
                    if hyp.holds(&w.digraph) {
                        let rec = solve_instance(config, next_key(), &w.digraph, &w.spec);
                        report.push(rec, &w.digraph);
                    }
                }
            }
            match config.mode {
                Mode::Random => {
                    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                    rng.set_stream(((n as u64) << 32) | k as u64);
                    for _ in 0..config.samples {
                        if report.records.len() >= config.instance_cap {
                            report.summary.truncated = true;
                            break 'outer;
                        }
                        let d = sample_dense(n, hyp, &mut rng);
                        let spec = random_spec(n, kind, &mut rng);
                        let rec = solve_instance(config, next_key(), &d, &spec);
                        report.push(rec, &d);
                    }
                }
                Mode::Exhaustive => {
                    let min_out = match hyp {
                        Hypothesis::SemiDegree(b) => b,
                        Hypothesis::Ore(_) => 0,
                    };
                    let specs = admissible_specs(n, kind);
                    let mut truncated = false;
                    for_each_digraph(n, min_out, |d| {
                        if !hyp.holds(d) {
                            return true;
                        }
                        for spec in &specs {
                            if report.records.len() >= config.instance_cap {
                                truncated = true;
                                return false;
                            }
                            let rec = solve_instance(config, next_key(), d, spec);
                            report.push(rec, d);
                        }
                        true
                    });
                    if truncated {
                        report.summary.truncated = true;
                        break 'outer;
                    }
                }
            }
        }
    }
    report.finalize();
    Ok(report)
}

/// `K_{m,m}` with both directions: the matching construction for `k = m`
/// on every (or sampled) source/sink choice, then the exact search must
/// find an uncoverable choice for each `k < m`.
fn run_bipartite(config: &CampaignConfig, report: &mut VerificationReport) {
    for m in config.k_min..=config.k_max {
        let n = 2 * m;
        if n < config.n_min || n > config.n_max {
            continue;
        }
        let d = Digraph::complete_bipartite(m, m);
        let kind = CoverKind::new(CoverVariant::UnpairedMtm, m);
        let specs = match config.mode {
            Mode::Exhaustive => admissible_specs(n, kind),
            Mode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                rng.set_stream(m as u64);
                (0..config.samples).map(|_| random_spec(n, kind, &mut rng)).collect()
            }
        };
        let mut index = 0;
        for spec in specs {
            if report.records.len() >= config.instance_cap {
                report.summary.truncated = true;
                return;
            }
            let start = Instant::now();
            let verdict = match balanced_bipartite_cover(m, &spec.sources, &spec.sinks) {
                Ok(c) => match verify_cover(&d, &spec, &c.cover) {
                    Ok(()) => Verdict::Accepted,
                    Err(r) => Verdict::Failed { reason: format!("cover rejected: {r}") },
                },
                Err(e) => Verdict::Failed { reason: e.to_string() },
            };
            let rec = InstanceRecord {
                key: InstanceKey { n, k: m, index },
                spec,
                min_semi_degree: m,
                ore_min: d.ore_min(),
                verdict,
                claim_overlaps: Vec::new(),
                elapsed_us: config.record_timing.then(|| start.elapsed().as_micros() as u64),
            };
            index += 1;
            report.push(rec, &d);
        }
        for k in 1..m {
            let kind = CoverKind::new(CoverVariant::UnpairedMtm, k);
            let policy = SamplingPolicy { seed: config.seed, ..SamplingPolicy::default() };
            let start = Instant::now();
            let (spec, verdict) = match is_k_coverable(&d, kind, &policy) {
                Ok(Coverability::ProvenFalse { witness }) => (witness, Verdict::Refuted),
                Ok(other) => (
                    CoverSpec { kind, sources: Vec::new(), sinks: Vec::new() },
                    Verdict::Failed { reason: format!("expected an uncoverable choice, got {other:?}") },
                ),
                Err(e) => (
                    CoverSpec { kind, sources: Vec::new(), sinks: Vec::new() },
                    Verdict::Failed { reason: e.to_string() },
                ),
            };
            let rec = InstanceRecord {
                key: InstanceKey { n, k, index },
                spec,
                min_semi_degree: m,
                ore_min: d.ore_min(),
                verdict,
                claim_overlaps: Vec::new(),
                elapsed_us: config.record_timing.then(|| start.elapsed().as_micros() as u64),
            };
            index += 1;
            report.push(rec, &d);
        }
    }
}

/// Builds the family's witness, checks its degree claim, asks the exact
/// search to refute the designated choice, and, where the matching
/// sufficient condition applies at these parameters, solves the raised
/// instance with the construction.
pub fn run_sharpness_check(
    family: Family,
    n: usize,
    param: usize,
) -> Result<VerificationReport, GenError> {
    let w = extremal::generate(family, n, param)?;
    let echo = serde_json::json!({ "family": family, "n": n, "param": param });
    let mut report = VerificationReport::new(format!("sharpness {family}"), echo);
    let k = w.spec.k();
    let verdict = if !w.claim_holds() {
        Verdict::Failed { reason: format!("degree claim {:?} does not hold", w.claim) }
    } else {
        match exists_cover(&w.digraph, &w.spec) {
            Ok(false) => Verdict::Refuted,
            Ok(true) => Verdict::Failed { reason: "witness choice has a cover".to_string() },
            Err(e) => Verdict::Failed { reason: e.to_string() },
        }
    };
    let rec = InstanceRecord {
        key: InstanceKey { n, k, index: 0 },
        spec: w.spec.clone(),
        min_semi_degree: w.digraph.min_semi_degree(),
        ore_min: w.digraph.ore_min(),
        verdict,
        claim_overlaps: Vec::new(),
        elapsed_us: None,
    };
    report.push(rec, &w.digraph);
    if let Ok(raised) = w.hypothesis_side() {
        let config = CampaignConfig::new(TheoremId::Unpaired, Mode::Random);
        let rec = solve_instance(&config, InstanceKey { n, k, index: 1 }, &raised, &w.spec);
        report.push(rec, &raised);
    }
    report.finalize();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(theorem: TheoremId, mode: Mode, n: (usize, usize), k: (usize, usize)) -> CampaignConfig {
        CampaignConfig {
            n_min: n.0,
            n_max: n.1,
            k_min: k.0,
            k_max: k.1,
            samples: 20,
            seed: 7,
            ..CampaignConfig::new(theorem, mode)
        }
    }

    #[test]
    fn enumerates_all_digraphs() {
        let mut count = 0;
        for_each_digraph(3, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 64);
        let mut count = 0;
        for_each_digraph(3, 2, |d| {
            assert_eq!(*d, Digraph::complete(3));
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn sampler_respects_hypothesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let d = sample_dense(8, Hypothesis::SemiDegree(5), &mut rng);
            assert!(d.min_semi_degree() >= 5);
            let d = sample_dense(7, Hypothesis::Ore(9), &mut rng);
            assert!(d.ore_min().at_least(9));
        }
    }

    #[test]
    fn unpaired_exhaustive_small() {
        let r = run_theorem_check(&config(TheoremId::Unpaired, Mode::Exhaustive, (3, 4), (1, 1)))
            .unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.summary.accepted > 0);
    }

    #[test]
    fn lowered_threshold_finds_failure() {
        let mut c = config(TheoremId::Unpaired, Mode::Random, (6, 8), (2, 2));
        c.threshold_offset = -1;
        let r = run_theorem_check(&c).unwrap();
        assert!(r.summary.failed > 0);
        assert_eq!(r.failures.len(), r.summary.failed);
    }

    #[test]
    fn reports_are_deterministic() {
        let c = config(TheoremId::OneToOne, Mode::Random, (5, 8), (2, 3));
        let a = run_theorem_check(&c).unwrap().to_json();
        let b = run_theorem_check(&c).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn instance_cap_truncates() {
        let mut c = config(TheoremId::Unpaired, Mode::Random, (3, 12), (1, 1));
        c.instance_cap = 5;
        let r = run_theorem_check(&c).unwrap();
        assert_eq!(r.summary.instances, 5);
        assert!(r.summary.truncated);
    }

    #[test]
    fn invalid_configs() {
        let c = config(TheoremId::Unpaired, Mode::Random, (5, 4), (1, 1));
        assert_eq!(run_theorem_check(&c).unwrap_err(), ConfigError::EmptyRange("n"));
        let c = config(TheoremId::Unpaired, Mode::Exhaustive, (3, 7), (1, 1));
        assert!(matches!(run_theorem_check(&c), Err(ConfigError::ExhaustiveTooLarge { .. })));
        let c = config(TheoremId::Unpaired, Mode::Random, (3, 4), (0, 1));
        assert_eq!(run_theorem_check(&c).unwrap_err(), ConfigError::ZeroK);
    }

    #[test]
    fn bipartite_small() {
        let r = run_theorem_check(&config(TheoremId::Bipartite, Mode::Exhaustive, (4, 4), (2, 2)))
            .unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.summary.accepted, 6);
        assert_eq!(r.summary.refuted, 1);
    }

    #[test]
    fn sharpness_examples() {
        let r = run_sharpness_check(Family::UnpairedSharpEven, 10, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.summary.refuted, 1);
        assert_eq!(r.summary.accepted, 1);
        let r = run_sharpness_check(Family::OneToOneSharpOdd, 5, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(run_sharpness_check(Family::Paired2Figure1, 8, 3).is_err());
    }
}
