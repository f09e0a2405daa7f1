//! Simulation and exact analysis of paging eviction policies on
//! access-graph-constrained request sequences.
//!
//! The crate provides:
//!
//! - [`graph`]: access graphs, the standard families, and walk validation;
//! - [`paging`]: deterministic LRU / FIFO / FWF / LFD simulators, the
//!   conservative-property checker, and k-phase decomposition;
//! - [`walkstruct`]: turn-sequence decomposition of cycle walks, the
//!   normalization rewrites, and the FIFO block machinery for paths;
//! - [`worstorder`]: exact worst-ordering search over graph-respecting
//!   permutations of a request multiset, plus ratio curves;
//! - [`families`]: generators for the named request-sequence families;
//! - [`verify`]: the claim-verification harness behind `pagewalk verify`.

pub mod error;
pub mod families;
pub mod graph;
pub mod paging;
pub mod verify;
pub mod walkstruct;
pub mod worstorder;

pub use error::{Error, Result};
pub use graph::{
    build_family, parse_edge_list, AccessGraph, CycleTopology, Direction, Family, PageId,
    RequestSequence,
};
pub use paging::{
    conservative_violation, k_phase_decompose, simulate, CacheConfig, Outcome, Policy,
    SimulationTrace, TieBreak, TraceEvent,
};
