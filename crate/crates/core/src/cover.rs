//! Cover specifications, path systems and the verification predicate that
//! decides whether a path system is a disjoint directed path cover.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;

/// The four cover problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverVariant {
    /// `k` disjoint paths, path `i` from `s_i` to some sink; sinks used
    /// bijectively.
    UnpairedMtm,
    /// `k` disjoint paths, path `i` from `s_i` to `t_i`.
    PairedMtm,
    /// `k` paths from one source to `k` distinct sinks, meeting only in the
    /// source.
    OneToMany,
    /// `k` paths from `s` to `t`, meeting only in `{s, t}`.
    OneToOne,
}

impl CoverVariant {
    pub const ALL: [CoverVariant; 4] = [
        CoverVariant::UnpairedMtm,
        CoverVariant::PairedMtm,
        CoverVariant::OneToMany,
        CoverVariant::OneToOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoverVariant::UnpairedMtm => "unpaired-mtm",
            CoverVariant::PairedMtm => "paired-mtm",
            CoverVariant::OneToMany => "one-to-many",
            CoverVariant::OneToOne => "one-to-one",
        }
    }

    pub fn is_many_to_many(self) -> bool {
        matches!(self, CoverVariant::UnpairedMtm | CoverVariant::PairedMtm)
    }
}

impl fmt::Display for CoverVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoverVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoverVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverKind {
    pub variant: CoverVariant,
    pub k: usize,
}

impl CoverKind {
    pub fn new(variant: CoverVariant, k: usize) -> Self {
        CoverKind { variant, k }
    }
}

/// A cover problem instance on some digraph: kind plus ordered source and
/// sink lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverSpec {
    pub kind: CoverKind,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

impl CoverSpec {
    pub fn unpaired(sources: Vec<usize>, sinks: Vec<usize>) -> Self {
        let k = sources.len();
        CoverSpec { kind: CoverKind::new(CoverVariant::UnpairedMtm, k), sources, sinks }
    }

    pub fn paired(sources: Vec<usize>, sinks: Vec<usize>) -> Self {
        let k = sources.len();
        CoverSpec { kind: CoverKind::new(CoverVariant::PairedMtm, k), sources, sinks }
    }

    pub fn one_to_many(source: usize, sinks: Vec<usize>) -> Self {
        let k = sinks.len();
        CoverSpec { kind: CoverKind::new(CoverVariant::OneToMany, k), sources: vec![source], sinks }
    }

    pub fn one_to_one(source: usize, sink: usize, k: usize) -> Self {
        CoverSpec {
            kind: CoverKind::new(CoverVariant::OneToOne, k),
            sources: vec![source],
            sinks: vec![sink],
        }
    }

    pub fn variant(&self) -> CoverVariant {
        self.kind.variant
    }

    pub fn k(&self) -> usize {
        self.kind.k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpecViolation {
    ZeroPaths,
    SourceCount { expected: usize, found: usize },
    SinkCount { expected: usize, found: usize },
    OutOfRange { vertex: usize },
    RepeatedSource { vertex: usize },
    RepeatedSink { vertex: usize },
    SourceIsSink { vertex: usize },
}

/// Checks that `spec` describes a well-formed instance on `d`: sizes match
/// the kind, all vertices exist, sources and sinks are distinct and
/// disjoint.
pub fn validate_spec(d: &Digraph, spec: &CoverSpec) -> Result<(), Vec<SpecViolation>> {
    let mut violations = Vec::new();
    let k = spec.kind.k;
    if k == 0 {
        violations.push(SpecViolation::ZeroPaths);
    }
    let (sources, sinks) = match spec.kind.variant {
        CoverVariant::UnpairedMtm | CoverVariant::PairedMtm => (k, k),
        CoverVariant::OneToMany => (1, k),
        CoverVariant::OneToOne => (1, 1),
    };
    if spec.sources.len() != sources {
        violations.push(SpecViolation::SourceCount { expected: sources, found: spec.sources.len() });
    }
    if spec.sinks.len() != sinks {
        violations.push(SpecViolation::SinkCount { expected: sinks, found: spec.sinks.len() });
    }
    for &v in spec.sources.iter().chain(&spec.sinks) {
        if !d.contains_vertex(v) {
            violations.push(SpecViolation::OutOfRange { vertex: v });
        }
    }
    for (i, &v) in spec.sources.iter().enumerate() {
        if spec.sources[..i].contains(&v) {
            violations.push(SpecViolation::RepeatedSource { vertex: v });
        }
        if spec.sinks.contains(&v) {
            violations.push(SpecViolation::SourceIsSink { vertex: v });
        }
    }
    for (i, &v) in spec.sinks.iter().enumerate() {
        if spec.sinks[..i].contains(&v) {
            violations.push(SpecViolation::RepeatedSink { vertex: v });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// A directed path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiPath(Vec<usize>);

impl DiPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        DiPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn head(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn tail(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// True if the sequence is nonempty, repeats no vertex and follows arcs
    /// of `d`.
    pub fn is_path_in(&self, d: &Digraph) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&v| d.contains_vertex(v))
            && self.0.windows(2).all(|w| d.has_arc(w[0], w[1]))
            && self.0.iter().enumerate().all(|(i, v)| !self.0[..i].contains(v))
    }
}

impl Deref for DiPath {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for DiPath {
    fn from(v: Vec<usize>) -> Self {
        DiPath(v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathCover {
    pub paths: Vec<DiPath>,
}

impl PathCover {
    pub fn new(paths: Vec<DiPath>) -> Self {
        PathCover { paths }
    }

    pub fn from_vecs(paths: Vec<Vec<usize>>) -> Self {
        PathCover { paths: paths.into_iter().map(DiPath::new).collect() }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Machine-readable rejection category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RejectCode {
    BadArc,
    BadEndpoint,
    Overlap,
    Uncovered,
    WrongCount,
    InvalidSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    InvalidSpec(Vec<SpecViolation>),
    WrongCount { expected: usize, found: usize },
    EmptyPath { path: usize },
    ForeignVertex { path: usize, vertex: usize },
    BadArc { path: usize, from: usize, to: usize },
    BadEndpoint { path: usize },
    RepeatedVertex { path: usize, vertex: usize },
    Overlap { vertex: usize },
    DuplicatePath { first: usize, second: usize },
    Uncovered { vertex: usize },
}

impl Rejection {
    pub fn code(&self) -> RejectCode {
        match self {
            Rejection::InvalidSpec(_) => RejectCode::InvalidSpec,
            Rejection::WrongCount { .. } => RejectCode::WrongCount,
            Rejection::ForeignVertex { .. } | Rejection::BadArc { .. } => RejectCode::BadArc,
            Rejection::EmptyPath { .. } | Rejection::BadEndpoint { .. } => RejectCode::BadEndpoint,
            Rejection::RepeatedVertex { .. }
            | Rejection::Overlap { .. }
            | Rejection::DuplicatePath { .. } => RejectCode::Overlap,
            Rejection::Uncovered { .. } => RejectCode::Uncovered,
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::InvalidSpec(v) => write!(f, "invalid spec: {v:?}"),
            Rejection::WrongCount { expected, found } => {
                write!(f, "expected {expected} paths, found {found}")
            }
            Rejection::EmptyPath { path } => write!(f, "path {path} is empty"),
            Rejection::ForeignVertex { path, vertex } => {
                write!(f, "path {path} uses unknown vertex {vertex}")
            }
            Rejection::BadArc { path, from, to } => {
                write!(f, "path {path} uses missing arc {from} -> {to}")
            }
            Rejection::BadEndpoint { path } => write!(f, "path {path} has wrong endpoints"),
            Rejection::RepeatedVertex { path, vertex } => {
                write!(f, "path {path} visits {vertex} twice")
            }
            Rejection::Overlap { vertex } => write!(f, "vertex {vertex} lies on two paths"),
            Rejection::DuplicatePath { first, second } => {
                write!(f, "paths {first} and {second} coincide")
            }
            Rejection::Uncovered { vertex } => write!(f, "vertex {vertex} is not covered"),
        }
    }
}

/// Decides whether `cover` is a disjoint directed path cover of `d` for
/// `spec`.
pub fn verify_cover(d: &Digraph, spec: &CoverSpec, cover: &PathCover) -> Result<(), Rejection> {
    validate_spec(d, spec).map_err(Rejection::InvalidSpec)?;
    let n = d.order();
    let k = spec.kind.k;
    if cover.paths.len() != k {
        return Err(Rejection::WrongCount { expected: k, found: cover.paths.len() });
    }

    for (i, path) in cover.paths.iter().enumerate() {
        if path.is_empty() {
            return Err(Rejection::EmptyPath { path: i });
        }
        if let Some(&v) = path.iter().find(|&&v| v >= n) {
            return Err(Rejection::ForeignVertex { path: i, vertex: v });
        }
        if let Some(w) = path.windows(2).find(|w| !d.has_arc(w[0], w[1])) {
            return Err(Rejection::BadArc { path: i, from: w[0], to: w[1] });
        }
        let mut seen = vec![false; n];
        for &v in path.iter() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Rejection::RepeatedVertex { path: i, vertex: v });
            }
        }
    }

    check_endpoints(spec, cover)?;

    // Vertices every path is allowed (and required) to share.
    let shared: &[usize] = match spec.kind.variant {
        CoverVariant::UnpairedMtm | CoverVariant::PairedMtm => &[],
        CoverVariant::OneToMany => &spec.sources,
        CoverVariant::OneToOne => &[spec.sources[0], spec.sinks[0]],
    };
    let mut hits = vec![0usize; n];
    for path in &cover.paths {
        for &v in path.iter() {
            hits[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|v| hits[*v] > 1 && !shared.contains(v)) {
        return Err(Rejection::Overlap { vertex: v });
    }
    if spec.kind.variant == CoverVariant::OneToOne {
        let direct: Vec<usize> = (0..k).filter(|&i| cover.paths[i].len() == 2).collect();
        if direct.len() > 1 {
            return Err(Rejection::DuplicatePath { first: direct[0], second: direct[1] });
        }
    }
    if let Some(v) = (0..n).find(|&v| hits[v] == 0) {
        return Err(Rejection::Uncovered { vertex: v });
    }
    Ok(())
}

fn check_endpoints(spec: &CoverSpec, cover: &PathCover) -> Result<(), Rejection> {
    let paths = &cover.paths;
    let ends = |i: usize| (paths[i][0], *paths[i].last().unwrap());
    match spec.kind.variant {
        CoverVariant::PairedMtm => {
            for i in 0..paths.len() {
                if ends(i) != (spec.sources[i], spec.sinks[i]) {
                    return Err(Rejection::BadEndpoint { path: i });
                }
            }
        }
        CoverVariant::UnpairedMtm | CoverVariant::OneToMany => {
            let unpaired = spec.kind.variant == CoverVariant::UnpairedMtm;
            let mut used = vec![false; spec.sinks.len()];
            for i in 0..paths.len() {
                let (head, tail) = ends(i);
                let source = if unpaired { spec.sources[i] } else { spec.sources[0] };
                if head != source {
                    return Err(Rejection::BadEndpoint { path: i });
                }
                // Sinks are distinct, so the bijection exists iff every tail
                // is an unused sink.
                match spec.sinks.iter().position(|&t| t == tail) {
                    Some(j) if !used[j] => used[j] = true,
                    _ => return Err(Rejection::BadEndpoint { path: i }),
                }
            }
        }
        CoverVariant::OneToOne => {
            let st = (spec.sources[0], spec.sinks[0]);
            if let Some(i) = (0..paths.len()).find(|&i| ends(i) != st) {
                return Err(Rejection::BadEndpoint { path: i });
            }
        }
    }
    Ok(())
}
