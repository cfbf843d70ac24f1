//! Error types shared across the model pipeline.

use alloc::string::String;

/// Top-level error for every model operation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A layer or network violates a workload invariant.
    #[error("workload: {0}")]
    Workload(#[from] WorkloadError),
    /// An architecture or memory assignment is malformed.
    #[error("architecture: {0}")]
    Arch(#[from] ArchError),
    /// A layer cannot be scheduled onto a hierarchy.
    #[error("mapper: {0}")]
    Map(#[from] MapError),
    /// A technology lookup failed.
    #[error("technology: {0}")]
    Tech(#[from] TechError),
}

/// Workload validation failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WorkloadError {
    #[error("dimension `{field}` must be >= 1")]
    ZeroDimension { field: &'static str },
    #[error("depthwise layer requires out_channels == in_channels (got M={out}, C={expected})")]
    DepthwiseChannels { out: u32, expected: u32 },
    #[error("pointwise layer requires a 1x1 kernel (got {r}x{s})")]
    PointwiseKernel { r: u32, s: u32 },
    #[error("kernel {r}x{s} with stride {stride} and padding {padding} produces an empty output for {h}x{w} input")]
    EmptyOutput {
        h: u32,
        w: u32,
        r: u32,
        s: u32,
        stride: u32,
        padding: u32,
    },
    #[error("network has no layers")]
    EmptyNetwork,
    #[error("layer {index}: {source}")]
    Layer {
        index: usize,
        source: alloc::boxed::Box<WorkloadError>,
    },
    #[error("layer {index}: expects {expected} input channels, previous layer produces {got}")]
    ChannelChain { index: usize, got: u32, expected: u32 },
}

impl WorkloadError {
    /// Attach a layer index to an error raised while validating one layer of
    /// a network.
    pub fn at_layer(self, index: usize) -> Self {
        WorkloadError::Layer {
            index,
            source: alloc::boxed::Box::new(self),
        }
    }
}

/// Architecture and assignment validation failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ArchError {
    #[error("{0}")]
    Invalid(String),
    #[error("assignment names unknown slot `{slot}`")]
    UnknownSlot { slot: String },
    #[error("assignment is missing slot `{slot}`")]
    MissingSlot { slot: String },
    #[error("variant {variant}: slot `{slot}` must not be bound to {device}")]
    VariantDeviceMismatch {
        variant: String,
        slot: String,
        device: String,
    },
}

/// Mapping failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MapError {
    #[error("layer is unmappable: level `{level}` needs {required_words} words ({reason}), has {available_words}")]
    Unmappable {
        level: String,
        required_words: u64,
        available_words: u64,
        reason: &'static str,
    },
    #[error("PE array too small: dataflow needs {required} {axis}, array has {available}")]
    ArrayTooSmall {
        axis: &'static str,
        required: u32,
        available: u32,
    },
    #[error("hierarchy does not match {dataflow} shape: {expected}")]
    HierarchyShape {
        dataflow: &'static str,
        expected: &'static str,
    },
    #[error("oracle dimension guard: `{field}` = {value} exceeds {limit}")]
    DimensionGuard {
        field: &'static str,
        value: u32,
        limit: u32,
    },
    #[error("layer {index}: {source}")]
    Layer {
        index: usize,
        source: alloc::boxed::Box<MapError>,
    },
    #[error("network weights ({required} B) exceed weight-memory capacity ({available} B)")]
    WeightsDontFit { required: u64, available: u64 },
}

impl MapError {
    pub fn at_layer(self, index: usize) -> Self {
        MapError::Layer {
            index,
            source: alloc::boxed::Box::new(self),
        }
    }
}

/// Technology library lookup failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TechError {
    #[error("no parameters for device {device} at {node_nm} nm and no scalable base entry")]
    MissingDevice { device: String, node_nm: u32 },
    #[error("no scaling entry for {from_nm} nm -> {to_nm} nm")]
    MissingScale { from_nm: u32, to_nm: u32 },
    #[error("no MAC energy entry for {bits}-bit at {node_nm} nm")]
    MissingMacEnergy { node_nm: u32, bits: u32 },
    #[error("no MAC area entry at {node_nm} nm")]
    MissingMacArea { node_nm: u32 },
    #[error("invalid technology data: {0}")]
    Invalid(String),
}
