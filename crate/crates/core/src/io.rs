//! JSON and DOT formats.
//!
//! Digraph: `{"n":3,"arcs":[[0,1],[1,2]]}` with arcs sorted.
//! Spec: `{"kind":"unpaired-mtm","k":2,"S":[0,1],"T":[2,3]}`.
//! Cover: a spec object with an extra `"paths"` field.
//! Emission is compact and canonical, so parse followed by emit is the
//! identity on emitted text.

use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::cover::{CoverKind, CoverSpec, CoverVariant, PathCover};
use crate::digraph::Digraph;
use crate::error::ParseError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: String,
    k: usize,
    #[serde(rename = "S")]
    sources: Vec<usize>,
    #[serde(rename = "T")]
    sinks: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCover {
    kind: String,
    k: usize,
    #[serde(rename = "S")]
    sources: Vec<usize>,
    #[serde(rename = "T")]
    sinks: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let arcs: Vec<[usize; 2]> = self.arcs().map(|(u, v)| [u, v]).collect();
        let mut st = serializer.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.order())?;
        st.serialize_field("arcs", &arcs)?;
        st.end()
    }
}

impl Serialize for CoverSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CoverSpec", 4)?;
        st.serialize_field("kind", self.variant().name())?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("S", &self.sources)?;
        st.serialize_field("T", &self.sinks)?;
        st.end()
    }
}

pub fn digraph_to_json(d: &Digraph) -> String {
    serde_json::to_string(d).expect("digraph serializes")
}

pub fn digraph_from_json(text: &str) -> Result<Digraph, ParseError> {
    let raw: RawDigraph = serde_json::from_str(text)?;
    Ok(Digraph::from_arcs(raw.n, raw.arcs)?)
}

fn make_spec(kind: &str, k: usize, sources: Vec<usize>, sinks: Vec<usize>) -> Result<CoverSpec, ParseError> {
    let variant: CoverVariant =
        kind.parse().map_err(|_| ParseError::UnknownKind(kind.to_string()))?;
    if !variant.is_many_to_many() && sources.len() != 1 {
        return Err(ParseError::Field(format!("{variant} takes exactly one source")));
    }
    Ok(CoverSpec { kind: CoverKind::new(variant, k), sources, sinks })
}

pub fn spec_to_json(spec: &CoverSpec) -> String {
    serde_json::to_string(spec).expect("spec serializes")
}

pub fn spec_from_json(text: &str) -> Result<CoverSpec, ParseError> {
    let raw: RawSpec = serde_json::from_str(text)?;
    make_spec(&raw.kind, raw.k, raw.sources, raw.sinks)
}

pub fn cover_to_json(spec: &CoverSpec, cover: &PathCover) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        kind: &'static str,
        k: usize,
        #[serde(rename = "S")]
        sources: &'a [usize],
        #[serde(rename = "T")]
        sinks: &'a [usize],
        paths: &'a PathCover,
    }
    serde_json::to_string(&Out {
        kind: spec.variant().name(),
        k: spec.k(),
        sources: &spec.sources,
        sinks: &spec.sinks,
        paths: cover,
    })
    .expect("cover serializes")
}

pub fn cover_from_json(text: &str) -> Result<(CoverSpec, PathCover), ParseError> {
    let raw: RawCover = serde_json::from_str(text)?;
    let spec = make_spec(&raw.kind, raw.k, raw.sources, raw.sinks)?;
    Ok((spec, PathCover::from_vecs(raw.paths)))
}

/// Graphviz text. Sources and sinks of `spec`, when given, are labelled and
/// coloured.
pub fn to_dot(d: &Digraph, spec: Option<&CoverSpec>) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..d.order() {
        let role = spec.and_then(|sp| {
            let src = sp.sources.iter().position(|&x| x == v);
            let snk = sp.sinks.iter().position(|&x| x == v);
            match (src, snk) {
                (Some(_), _) if !sp.variant().is_many_to_many() => Some(("s".to_string(), "blue")),
                (Some(i), _) => Some((format!("s{}", i + 1), "blue")),
                (None, Some(_)) if sp.variant() == CoverVariant::OneToOne => {
                    Some(("t".to_string(), "red"))
                }
                (None, Some(j)) => Some((format!("t{}", j + 1), "red")),
                (None, None) => None,
            }
        });
        match role {
            Some((label, color)) => {
                let _ = writeln!(out, "  {v} [color={color}, xlabel=\"{label}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}
