use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid point configuration: {0}")]
    InvalidConfiguration(String),
    #[error("configuration is not in convex position: point {0} is not a vertex")]
    NotConvexPosition(String),
    #[error("height function does not match configuration: {0}")]
    HeightMismatch(String),
    #[error("malformed ridge: {0}")]
    MalformedRidge(String),
    #[error("degenerate simplex {0:?}")]
    DegenerateSimplex(Vec<usize>),
    #[error("label {apex} is a vertex of simplex {simplex:?}")]
    InvalidApex { simplex: Vec<usize>, apex: usize },
    #[error("height function is not generic: {0}")]
    NonGeneric(String),
    #[error("labels {0:?} do not form a circuit")]
    InvalidCircuit(Vec<usize>),
    #[error("cones live over different label sets ({0} vs {1})")]
    LabelMismatch(usize, usize),
    #[error("witness is not in the interior of the cone")]
    BoundaryWitness,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown leaf {0}")]
    UnknownLeaf(usize),
    #[error("point lies outside the convex hull of the configuration")]
    Infeasible,
    #[error("refusing {what}: size {size} exceeds desk-scale limit {limit} (set MSTFAN_SCALE_OVERRIDE=1 to lift)")]
    ScaleGuard { what: String, size: usize, limit: usize },
    #[error("fan axiom violated: {0}")]
    FanViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}
