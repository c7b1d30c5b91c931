use thiserror::Error;

/// Errors shared across the workbench kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("cell outside coloring domain: {0}")]
    Domain(String),
    #[error("coordinate out of range: {0}")]
    Range(String),
    #[error("search cap exceeded: {0}")]
    Resource(String),
    #[error("geometric construction failed: {0}")]
    Geometry(String),
    #[error("concentric spheres of equal radius: infinite intersection")]
    Concentric,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size bound not met: {0}")]
    Bound(String),
    #[error("coloring uses more colors than allowed: {0}")]
    Palette(String),
    #[error("equivalence pattern unsuitable: {0}")]
    Pattern(String),
    #[error("internal construction bug: {0}")]
    Internal(String),
    #[error("no canonical subspace at this dimension (n too small): {0}")]
    SearchExhausted(String),
    #[error("parse error: {0}")]
    Parse(String),
}
