//! Analytic cost models for memory-oriented design-space exploration of
//! edge-AI inference accelerators.
//!
//! The crate models single-frame DNN inference on three accelerator
//! organizations (a sequential CPU, a row-stationary systolic array and a
//! weight-stationary systolic array) across SRAM and MRAM (STT/SOT/VGSOT)
//! memory hierarchies. It is organized as a pipeline of pure functions:
//!
//! 1. [`workload`] describes layers and networks and derives exact MAC and
//!    tensor-size arithmetic.
//! 2. [`arch`] describes PE arrays and memory hierarchies.
//! 3. [`mapper`] turns (layer, architecture) into per-level access counts
//!    under a fixed tiling heuristic per dataflow, validated by an
//!    event-counting oracle.
//! 4. [`tech`] holds per-device, per-node electrical and geometric
//!    parameters plus node-scaling factors.
//! 5. [`energy`], [`timing`], [`area`] and [`duty`] convert access counts
//!    and technology bindings into per-inference energy, latency, silicon
//!    area and duty-cycled memory power (including the SRAM-vs-NVM
//!    crossover-IPS solver).
//! 6. [`scenario`] composes the above into one report per
//!    (workload, architecture, assignment, node) tuple.
//!
//! Everything is deterministic: same inputs, bit-identical outputs. All
//! types are immutable after construction and safe to share across threads.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `memdse` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arch;
pub mod area;
pub mod duty;
pub mod energy;
pub mod error;
pub mod mapper;
pub mod scenario;
pub mod tech;
pub mod timing;
pub mod workload;

pub use arch::{
    builtin_architectures, validate_assignment, ArchitectureSpec, AssignmentVariant, DataKind,
    Dataflow, MemoryAssignment, MemoryLevel, Sharing,
};
pub use error::Error;
pub use mapper::{map_layer, map_network, oracle_map_layer, AccessProfile, NetworkProfile};
pub use tech::{DeviceKind, MemDeviceParams, TechLibrary};
pub use workload::{LayerKind, LayerSpec, NetworkDescriptor, TensorFootprint};
