//! Loop-free simple digraphs on dense vertex labels `0..n`.
//!
//! A [`Digraph`] is immutable once built. Every structural surgery
//! ([`Digraph::delete_vertex`], [`Digraph::contract_pair`]) returns a fresh
//! digraph together with a [`VertexMap`] that relates the new labels to the
//! old ones, so paths found in the derived digraph can be lifted back.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;

/// A directed graph without loops or parallel arcs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    /// Builds a digraph from an arc list. Repeated arcs collapse to one.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut matrix = vec![false; n * n];
        for (u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            matrix[u * n + v] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    /// Builds a digraph from a row-major `n * n` adjacency matrix. The
    /// diagonal is ignored.
    pub(crate) fn from_matrix(n: usize, mut matrix: Vec<bool>) -> Self {
        debug_assert_eq!(matrix.len(), n * n);
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for u in 0..n {
            matrix[u * n + u] = false;
            for v in 0..n {
                if matrix[u * n + v] {
                    out[u].push(v);
                    inn[v].push(u);
                }
            }
        }
        Digraph { n, out, inn, matrix }
    }

    /// Builds a digraph from a predicate on ordered pairs of distinct vertices.
    pub fn from_fn(n: usize, mut has_arc: impl FnMut(usize, usize) -> bool) -> Self {
        let mut matrix = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    matrix[u * n + v] = has_arc(u, v);
                }
            }
        }
        Self::from_matrix(n, matrix)
    }

    /// The empty digraph `E_n`.
    pub fn empty(n: usize) -> Self {
        Self::from_fn(n, |_, _| false)
    }

    /// The complete digraph on `n` vertices: every ordered pair is an arc.
    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// Biorientation of `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// Two complete digraphs `A = 0..a` and `B = a-c..a+b-c` sharing the
    /// `c` vertices `a-c..a`.
    pub fn glued_cliques(a: usize, b: usize, c: usize) -> Result<Self, GraphError> {
        if c > a.min(b) {
            return Err(GraphError::InvalidOverlap { a, b, overlap: c });
        }
        let n = a + b - c;
        let b_start = a - c;
        Ok(Self::from_fn(n, |u, v| {
            (u < a && v < a) || (u >= b_start && v >= b_start)
        }))
    }

    /// Disjoint union of `first` (labels kept) and `second` (shifted by
    /// `first.order()`) plus every arc between the two parts in both
    /// directions.
    pub fn full_join(first: &Digraph, second: &Digraph) -> Self {
        let shift = first.n;
        Self::from_fn(first.n + second.n, |u, v| match (u < shift, v < shift) {
            (true, true) => first.has_arc(u, v),
            (false, false) => second.has_arc(u - shift, v - shift),
            _ => true,
        })
    }

    /// The directed path `0 -> 1 -> ... -> n-1`.
    pub fn directed_path(n: usize) -> Self {
        Self::from_fn(n, |u, v| v == u + 1)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Self {
        Self::from_fn(n, |u, v| n > 1 && v == (u + 1) % n)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    /// Out-neighbours of `v` in increasing label order.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// In-neighbours of `v` in increasing label order.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Minimum semi-degree: the least in- or out-degree over all vertices,
    /// 0 for the null digraph.
    pub fn min_semi_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.out_degree(v).min(self.in_degree(v)))
            .min()
            .unwrap_or(0)
    }

    /// Minimum of `d+(x) + d-(y)` over ordered pairs `x != y` with no arc
    /// `x -> y`.
    pub fn ore_min(&self) -> OreMin {
        let mut best = OreMin::Unbounded;
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && !self.matrix[x * self.n + y] {
                    best = best.min(OreMin::Finite(self.out_degree(x) + self.in_degree(y)));
                }
            }
        }
        best
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        DegreeSummary {
            out_degree: (0..self.n).map(|v| self.out_degree(v)).collect(),
            in_degree: (0..self.n).map(|v| self.in_degree(v)).collect(),
            min_semi_degree: self.min_semi_degree(),
            ore_min: self.ore_min(),
        }
    }

    /// The subdigraph induced by `keep`, relabelled in increasing order.
    pub fn induced(&self, keep: &[bool]) -> (Digraph, VertexMap) {
        let map = VertexMap::from_keep(keep);
        let m = map.new_to_old.len();
        let d = Digraph::from_fn(m, |u, v| self.has_arc(map.new_to_old[u], map.new_to_old[v]));
        (d, map)
    }

    /// `D - v`. Survivors keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<(Digraph, VertexMap), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let keep: Vec<bool> = (0..self.n).map(|u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Replaces `s` and `t` by one fresh vertex `r` whose out-neighbourhood is
    /// `N+(s)` and in-neighbourhood is `N-(t)`, both restricted to the other
    /// vertices. Survivors are relabelled `0..n-2` in order and `r = n-2`.
    pub fn contract_pair(&self, s: usize, t: usize) -> Result<Contraction, GraphError> {
        for x in [s, t] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, order: self.n });
            }
        }
        if s == t {
            return Err(GraphError::SameVertex { vertex: s });
        }
        let keep: Vec<bool> = (0..self.n).map(|u| u != s && u != t).collect();
        let map = VertexMap::from_keep(&keep);
        let r = map.new_to_old.len();
        let old = |x: usize| map.new_to_old[x];
        let digraph = Digraph::from_fn(r + 1, |u, v| {
            if u == r {
                self.has_arc(s, old(v))
            } else if v == r {
                self.has_arc(old(u), t)
            } else {
                self.has_arc(old(u), old(v))
            }
        });
        Ok(Contraction { digraph, r, map })
    }
}

/// Result of [`Digraph::contract_pair`].
#[derive(Clone, Debug)]
pub struct Contraction {
    pub digraph: Digraph,
    /// Label of the merged vertex in `digraph`.
    pub r: usize,
    /// Relabelling of the surviving vertices; `r` has no preimage.
    pub map: VertexMap,
}

/// Order-preserving relabelling produced by a surgery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl VertexMap {
    fn from_keep(keep: &[bool]) -> Self {
        let mut old_to_new = vec![None; keep.len()];
        let mut new_to_old = Vec::new();
        for (old, &k) in keep.iter().enumerate() {
            if k {
                old_to_new[old] = Some(new_to_old.len());
                new_to_old.push(old);
            }
        }
        VertexMap { old_to_new, new_to_old }
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> Option<usize> {
        self.new_to_old.get(new).copied()
    }
}

/// Ore-type minimum. `Unbounded` when every ordered pair is an arc, so
/// any lower bound is met vacuously.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OreMin {
    Finite(usize),
    Unbounded,
}

impl OreMin {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            OreMin::Finite(v) => v >= bound,
            OreMin::Unbounded => true,
        }
    }
}

impl Ord for OreMin {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OreMin::Finite(a), OreMin::Finite(b)) => a.cmp(b),
            (OreMin::Finite(_), OreMin::Unbounded) => Ordering::Less,
            (OreMin::Unbounded, OreMin::Finite(_)) => Ordering::Greater,
            (OreMin::Unbounded, OreMin::Unbounded) => Ordering::Equal,
        }
    }
}

impl PartialOrd for OreMin {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OreMin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OreMin::Finite(v) => write!(f, "{v}"),
            OreMin::Unbounded => f.write_str("inf"),
        }
    }
}

// Serialized as an integer, or the string "inf".
impl Serialize for OreMin {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            OreMin::Finite(v) => serializer.serialize_u64(*v as u64),
            OreMin::Unbounded => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    pub min_semi_degree: usize,
    pub ore_min: OreMin,
}
