//! Sharpness families: digraphs one step below a coverability threshold,
//! each with a source/sink choice that admits no cover.
//!
//! Vertex layout is fixed per family. Glued-clique families list the
//! private part of `A` first, then the overlap `A ∩ B`, then the private
//! part of `B`. Join families list the complete part first, then the empty
//! part. The Figure-1 family lists `A \ {z}`, `z`, `B \ {z}` and finally
//! `s1, s2, t1, t2`. Where several source/sink choices are symmetric the
//! lexicographically least one is taken.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::constructive::{
    one_to_one_threshold, paired_two_ore_bound, tight_threshold, unpaired_threshold,
};
use crate::cover::CoverSpec;
use crate::digraph::Digraph;
use crate::error::GenError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    UnpairedSharpEven,
    UnpairedSharpOdd,
    TightSharpOddK,
    TightSharpEvenK,
    Paired2Figure1,
    OneToManySharpOdd,
    OneToManySharpEven,
    OneToOneSharpOdd,
    OneToOneSharpEven,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::UnpairedSharpEven,
        Family::UnpairedSharpOdd,
        Family::TightSharpOddK,
        Family::TightSharpEvenK,
        Family::Paired2Figure1,
        Family::OneToManySharpOdd,
        Family::OneToManySharpEven,
        Family::OneToOneSharpOdd,
        Family::OneToOneSharpEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::UnpairedSharpEven => "unpaired-sharp-even",
            Family::UnpairedSharpOdd => "unpaired-sharp-odd",
            Family::TightSharpOddK => "tight-sharp-odd-k",
            Family::TightSharpEvenK => "tight-sharp-even-k",
            Family::Paired2Figure1 => "paired2-figure1",
            Family::OneToManySharpOdd => "one-to-many-sharp-odd",
            Family::OneToManySharpEven => "one-to-many-sharp-even",
            Family::OneToOneSharpOdd => "one-to-one-sharp-odd",
            Family::OneToOneSharpEven => "one-to-one-sharp-even",
        }
    }

    /// Smallest `(n, k)` the generator accepts; `(n, m)` for the Figure-1
    /// family.
    pub fn smallest_params(self) -> (usize, usize) {
        match self {
            Family::UnpairedSharpEven => (3, 1),
            Family::UnpairedSharpOdd => (4, 1),
            Family::TightSharpOddK => (6, 3),
            Family::TightSharpEvenK => (4, 2),
            Family::Paired2Figure1 => (9, 3),
            Family::OneToManySharpOdd => (5, 2),
            Family::OneToManySharpEven => (4, 2),
            Family::OneToOneSharpOdd => (3, 2),
            Family::OneToOneSharpEven => (4, 2),
        }
    }

    /// Smallest parameters at which the matching sufficient condition also
    /// applies, so both sides of the threshold can be exercised.
    pub fn smallest_two_sided_params(self) -> (usize, usize) {
        match self {
            Family::OneToManySharpOdd => (7, 2),
            Family::OneToManySharpEven => (6, 2),
            other => other.smallest_params(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| s.to_string())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// The degree quantity a family pins down exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeClaim {
    MinSemiDegree(usize),
    /// `d+(x) + d-(y)` over all non-arcs `xy`.
    OreMin(usize),
}

#[derive(Clone, Debug)]
pub struct ExtremalWitness {
    pub family: Family,
    pub n: usize,
    /// `k`, or `m = |A|` for the Figure-1 family.
    pub param: usize,
    pub digraph: Digraph,
    pub claim: DegreeClaim,
    pub spec: CoverSpec,
    /// False when the parameters are accepted by the construction but lie
    /// outside the range the family is stated for.
    pub in_stated_range: bool,
}

fn out_of_range(n: usize, k: usize, reason: &'static str) -> GenError {
    GenError::OutOfRange { n, k, reason }
}

fn glued(a: usize, c: usize) -> Digraph {
    Digraph::glued_cliques(a, a, c).expect("overlap within clique size")
}

fn join_clique_empty(clique: usize, empty: usize) -> Digraph {
    Digraph::full_join(&Digraph::complete(clique), &Digraph::empty(empty))
}

/// Unpaired many-to-many family: glued cliques of size `(n+k)/2` sharing
/// `k` vertices (`n + k` even), or a clique of size `(n+k-1)/2` joined to
/// an independent set (`n + k` odd).
pub fn gen_unpaired_sharp(n: usize, k: usize) -> Result<ExtremalWitness, GenError> {
    if k < 1 {
        return Err(out_of_range(n, k, "k must be positive"));
    }
    if (n + k) % 2 == 0 {
        if n < 3 * k {
            return Err(out_of_range(n, k, "n + k even needs n >= 3k"));
        }
        let a = (n + k) / 2;
        let private = a - k;
        Ok(ExtremalWitness {
            family: Family::UnpairedSharpEven,
            n,
            param: k,
            digraph: glued(a, k),
            claim: DegreeClaim::MinSemiDegree((n + k) / 2 - 1),
            spec: CoverSpec::unpaired((0..k).collect(), (private..a).collect()),
            in_stated_range: n > 3 * k,
        })
    } else {
        if n < 3 * k + 1 {
            return Err(out_of_range(n, k, "n + k odd needs n >= 3k + 1"));
        }
        let clique = (n + k - 1) / 2;
        Ok(ExtremalWitness {
            family: Family::UnpairedSharpOdd,
            n,
            param: k,
            digraph: join_clique_empty(clique, (n - k + 1) / 2),
            claim: DegreeClaim::MinSemiDegree(clique),
            spec: CoverSpec::unpaired((0..k).collect(), (k..2 * k).collect()),
            in_stated_range: true,
        })
    }
}

/// Family for `n = 2k`: two glued cliques whose private parts hold most of
/// the sources and sinks, so fewer than `k` disjoint source-to-sink arcs
/// exist.
pub fn gen_tight_sharp(k: usize) -> Result<ExtremalWitness, GenError> {
    let n = 2 * k;
    if k < 2 {
        return Err(out_of_range(n, k, "k must be at least 2"));
    }
    let (family, a, overlap) = if k % 2 == 1 {
        (Family::TightSharpOddK, (3 * k - 1) / 2, k - 1)
    } else {
        (Family::TightSharpEvenK, 3 * k / 2 - 1, k - 2)
    };
    let private = a - overlap;
    let half = overlap / 2;
    let mut sources: Vec<usize> = (0..private).collect();
    sources.extend(private..private + half);
    let mut sinks: Vec<usize> = (a..n).collect();
    sinks.extend(private + half..a);
    Ok(ExtremalWitness {
        family,
        n,
        param: k,
        digraph: glued(a, overlap),
        claim: DegreeClaim::MinSemiDegree((3 * k).div_ceil(2) - 2),
        spec: CoverSpec::unpaired(sources, sinks),
        in_stated_range: true,
    })
}

/// The paired two-path family: every non-arc has Ore sum exactly `n + 1`,
/// and every `s1-t1` / `s2-t2` path pair must share the cut vertex `z`.
pub fn gen_paired2_figure1(n: usize, m: usize) -> Result<ExtremalWitness, GenError> {
    if n < 9 {
        return Err(out_of_range(n, m, "order must be at least 9"));
    }
    if m < 3 || m + 6 > n {
        return Err(out_of_range(n, m, "needs 3 <= m <= n - 6"));
    }
    let z = m - 1;
    let (s1, s2, t1, t2) = (n - 4, n - 3, n - 2, n - 1);
    let in_a = |v: usize| v <= z;
    let in_b = |v: usize| v >= z && v < s1;
    let a_private = |v: usize| v < z;
    let b_private = |v: usize| v > z && v < s1;
    let in_s = |v: usize| v >= s1;

    let digraph = Digraph::from_fn(n, |u, v| {
        (in_a(u) && in_a(v))
            || (in_b(u) && in_b(v))
            || (in_s(u) && in_s(v) && (u, v) != (s1, t1) && (u, v) != (s2, t2))
            || (u == z && in_s(v))
            || (in_s(u) && v == z)
            // A-side: s1 <-> A', t2 <-> A', t1 -> A', A' -> s2
            || (a_private(v) && (u == s1 || u == t2 || u == t1))
            || (a_private(u) && (v == s1 || v == t2 || v == s2))
            // B-side: t1 <-> B', s2 <-> B', t2 -> B', B' -> s1
            || (b_private(v) && (u == t1 || u == s2 || u == t2))
            || (b_private(u) && (v == t1 || v == s2 || v == s1))
    });
    Ok(ExtremalWitness {
        family: Family::Paired2Figure1,
        n,
        param: m,
        digraph,
        claim: DegreeClaim::OreMin(n + 1),
        spec: CoverSpec::paired(vec![s1, s2], vec![t1, t2]),
        in_stated_range: true,
    })
}

/// One-to-many family: glued cliques sharing `k - 1` vertices with the
/// source on one side and all sinks on the other (`n + k` odd), or a clique
/// joined to an independent set with the source in the independent set
/// (`n + k` even).
pub fn gen_one_to_many_sharp(n: usize, k: usize) -> Result<ExtremalWitness, GenError> {
    if k < 2 {
        return Err(out_of_range(n, k, "k must be at least 2"));
    }
    if n < k + 2 {
        return Err(out_of_range(n, k, "needs n >= k + 2"));
    }
    if (n + k) % 2 == 1 {
        let a = (n + k - 1) / 2;
        let private = a - (k - 1);
        Ok(ExtremalWitness {
            family: Family::OneToManySharpOdd,
            n,
            param: k,
            digraph: glued(a, k - 1),
            claim: DegreeClaim::MinSemiDegree(a - 1),
            spec: CoverSpec::one_to_many(0, (private..private + k).collect()),
            in_stated_range: true,
        })
    } else {
        let clique = (n + k) / 2 - 1;
        Ok(ExtremalWitness {
            family: Family::OneToManySharpEven,
            n,
            param: k,
            digraph: join_clique_empty(clique, (n - k) / 2 + 1),
            claim: DegreeClaim::MinSemiDegree(clique),
            spec: CoverSpec::one_to_many(clique, (0..k).collect()),
            in_stated_range: true,
        })
    }
}

/// One-to-one family: glued cliques whose overlap has fewer than `k`
/// vertices, with `s` and `t` in opposite private parts.
pub fn gen_one_to_one_sharp(n: usize, k: usize) -> Result<ExtremalWitness, GenError> {
    if k < 2 {
        return Err(out_of_range(n, k, "k must be at least 2"));
    }
    if n < k + 1 {
        return Err(out_of_range(n, k, "needs n >= k + 1"));
    }
    let (family, a, overlap) = if (n + k) % 2 == 1 {
        (Family::OneToOneSharpOdd, (n + k - 1) / 2, k - 1)
    } else {
        (Family::OneToOneSharpEven, (n + k) / 2 - 1, k - 2)
    };
    Ok(ExtremalWitness {
        family,
        n,
        param: k,
        digraph: glued(a, overlap),
        claim: DegreeClaim::MinSemiDegree((n + k).div_ceil(2) - 2),
        spec: CoverSpec::one_to_one(0, a, k),
        in_stated_range: true,
    })
}

/// Generates `family` at `(n, param)`; `param` is `k`, or `m` for the
/// Figure-1 family. Refuses parameters of the wrong parity for the family.
pub fn generate(family: Family, n: usize, param: usize) -> Result<ExtremalWitness, GenError> {
    let w = match family {
        Family::UnpairedSharpEven | Family::UnpairedSharpOdd => gen_unpaired_sharp(n, param)?,
        Family::TightSharpOddK | Family::TightSharpEvenK => {
            if n != 2 * param {
                return Err(out_of_range(n, param, "family needs n = 2k"));
            }
            gen_tight_sharp(param)?
        }
        Family::Paired2Figure1 => gen_paired2_figure1(n, param)?,
        Family::OneToManySharpOdd | Family::OneToManySharpEven => {
            gen_one_to_many_sharp(n, param)?
        }
        Family::OneToOneSharpOdd | Family::OneToOneSharpEven => gen_one_to_one_sharp(n, param)?,
    };
    if w.family != family {
        return Err(out_of_range(n, param, "parity selects a different family"));
    }
    Ok(w)
}

impl ExtremalWitness {
    /// Whether the digraph meets its degree claim exactly.
    pub fn claim_holds(&self) -> bool {
        match self.claim {
            DegreeClaim::MinSemiDegree(d) => self.digraph.min_semi_degree() == d,
            DegreeClaim::OreMin(b) => self.digraph.ore_min() == crate::digraph::OreMin::Finite(b),
        }
    }

    /// The degree bound of the sufficient condition this family is sharp
    /// against, or `None` when the condition does not apply at these
    /// parameters.
    pub fn hypothesis_bound(&self) -> Option<usize> {
        let (n, k) = (self.n, self.param);
        match self.family {
            Family::UnpairedSharpEven | Family::UnpairedSharpOdd => {
                (n >= 3 * k).then(|| unpaired_threshold(n, k))
            }
            Family::TightSharpOddK | Family::TightSharpEvenK => Some(tight_threshold(k)),
            Family::Paired2Figure1 => Some(paired_two_ore_bound(n)),
            Family::OneToManySharpOdd | Family::OneToManySharpEven => {
                (n >= 3 * k).then(|| unpaired_threshold(n, k))
            }
            Family::OneToOneSharpOdd | Family::OneToOneSharpEven => {
                Some(one_to_one_threshold(n, k))
            }
        }
    }

    /// The same construction with its degree raised to the sufficient
    /// condition, on the same vertex set and with the same spec.
    pub fn hypothesis_side(&self) -> Result<Digraph, GenError> {
        let bound = self
            .hypothesis_bound()
            .ok_or_else(|| out_of_range(self.n, self.param, "sufficient condition does not apply"))?;
        let n = self.n;
        let d = match self.family {
            Family::Paired2Figure1 => ore_closure(&self.digraph, bound),
            Family::UnpairedSharpOdd | Family::OneToManySharpEven => {
                if bound >= n {
                    return Err(out_of_range(n, self.param, "bound exceeds n - 1"));
                }
                join_clique_empty(bound, n - bound)
            }
            _ => glued_with_min_semi_degree(n, bound)
                .ok_or_else(|| out_of_range(n, self.param, "no glued cliques of that degree"))?,
        };
        Ok(d)
    }
}

/// Two glued cliques on `n` vertices with minimum semi-degree exactly
/// `degree`.
pub fn glued_with_min_semi_degree(n: usize, degree: usize) -> Option<Digraph> {
    let a = degree + 1;
    if a > n || 2 * a < n {
        return None;
    }
    Some(glued(a, 2 * a - n))
}

/// Adds arcs, lexicographically first offending pair first, until every
/// non-arc `xy` has `d+(x) + d-(y) >= bound`.
pub fn ore_closure(d: &Digraph, bound: usize) -> Digraph {
    let n = d.order();
    let mut arc = vec![false; n * n];
    let mut out: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut inn: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    for (u, v) in d.arcs() {
        arc[u * n + v] = true;
    }
    loop {
        let offending = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && !arc[x * n + y] && out[x] + inn[y] < bound);
        let Some((x, y)) = offending else { break };
        arc[x * n + y] = true;
        out[x] += 1;
        inn[y] += 1;
    }
    Digraph::from_matrix(n, arc)
}
