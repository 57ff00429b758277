//! Disjoint directed path covers: definitions, an exact search, the
//! degree-based constructions, sharpness families and a verification
//! harness.
//!
//! The four cover kinds are
//! - unpaired many-to-many: `k` disjoint paths from sources `S` to sinks `T`
//!   under some bijection,
//! - paired many-to-many: path `i` runs from `s_i` to `t_i`,
//! - one-to-many: `k` paths from `s` to distinct sinks, meeting only at `s`,
//! - one-to-one: `k` internally disjoint `s`-`t` paths,
//!
//! and in every case the paths together cover all vertices.

pub mod constructive;
pub mod cover;
pub mod digraph;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod harness;
pub mod io;
mod matching;

pub use constructive::{construct_cover, Construction, Trace};
pub use cover::{
    validate_spec, verify_cover, CoverKind, CoverSpec, CoverVariant, DiPath, PathCover, RejectCode,
    Rejection, SpecViolation,
};
pub use digraph::{Contraction, DegreeSummary, Digraph, OreMin, VertexMap};
pub use error::{ConstructError, ExactError, GenError, GraphError, ParseError, Precondition};
pub use exact::{
    exists_cover, find_cover_exact, find_hamiltonian_path, is_k_coverable, Coverability,
    SamplingPolicy,
};
pub use extremal::{DegreeClaim, ExtremalWitness, Family};
