//! Exact counting, structural detection, bound certification, constructive
//! reductions, and exhaustive extremal search for small undirected graphs.
//!
//! The crate is organized around a handful of questions about a simple
//! graph `G`:
//!
//! * **How many?** — [`counting`] computes exact walk, path, 4-cycle and
//!   6-cycle counts (arbitrary precision; no floating point).
//! * **Does it contain?** — [`detect`] finds 6-cycles, cubes, and cubes
//!   with a diagonal, returning explicit witnesses.
//! * **Is the inequality respected?** — [`bounds`] evaluates a catalog of
//!   counting and Turán-type inequalities, each producing a machine-checkable
//!   [`bounds::BoundReport`] verdict.
//! * **Can it be thinned?** — [`reduce`] implements two reductions that keep
//!   at least half the edges: a bipartite subgraph with per-vertex degree
//!   guarantees, and a 4-cycle-free subgraph of a 6-cycle-free graph.
//! * **What is extremal?** — [`search`] enumerates graphs up to isomorphism
//!   and computes exact extremal edge counts for forbidden subgraphs, plus a
//!   sweep harness that checks every bound against every small graph.
//!
//! Graphs enter and leave through the graph6 format ([`graph6`]).

pub mod bitset;
pub mod bounds;
pub mod counting;
pub mod detect;
pub mod graph;
pub mod graph6;
pub mod reduce;
pub mod search;

pub use graph::{bipartition, BipartiteView, DegreeSequence, Graph, OddCycle};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
