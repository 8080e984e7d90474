use thiserror::Error;

/// Errors across graph construction, the enumeration oracle, the peeling
/// engine, and the decomposition theorems.
///
/// Guard refusals (`OracleLimit`, `DegreeGuard`, `SubsetGuard`) are a
/// distinct class from input/precondition errors; the CLI maps them to a
/// separate exit code.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} already present")]
    EdgeExists(usize, usize),
    #[error("edge {{{0}, {1}}} not present")]
    NoSuchEdge(usize, usize),
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("invalid size parameter for generator {family}: {reason}")]
    InvalidGeneratorSize { family: String, reason: String },
    #[error("unknown generator spec '{0}' (expected family:arg, e.g. ladder:5 or grid:3x4)")]
    BadGeneratorSpec(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("graph order {n} exceeds the enumeration oracle limit {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error(
        "degeneracy {degeneracy} exceeds the residual-degree guard {guard} \
         (estimated {term_count} correction terms); raise the guard or use the oracle"
    )]
    DegreeGuard {
        degeneracy: usize,
        guard: usize,
        term_count: u64,
    },
    #[error("subset enumeration over {size} vertices exceeds the guard {guard}")]
    SubsetGuard { size: usize, guard: usize },
    #[error("no applicable method: graph of order {n} fails both the degree guard ({degeneracy} > {guard}) and the oracle limit ({limit})")]
    NoMethod {
        n: usize,
        degeneracy: usize,
        guard: usize,
        limit: usize,
    },

    #[error("vertex {0} is not a cut vertex (its removal does not split its component)")]
    NotCutVertex(usize),
    #[error("cut set is not an independent set: edge {{{0}, {1}}} lies inside it")]
    CutSetNotIndependent(usize, usize),
    #[error("removing the given set does not disconnect the graph")]
    NotACut,
    #[error("cut set must be nonempty")]
    EmptyCutSet,
    #[error("edge set is not a matching: vertex {0} is shared")]
    NotAMatching(usize),
    #[error("matching cut is not minimal: it disconnects without edge {{{0}, {1}}}")]
    NotMinimalCut(usize, usize),
    #[error("matching-cut theorem requires a connected graph")]
    NotConnected,
    #[error(
        "a path of length 3 joins {0} and {1}; the restricted edge-insertion theorem \
         does not apply (use the general edge-insertion theorem)"
    )]
    LengthThreePath(usize, usize),
    #[error("vertex {0} is isolated; the general edge-insertion theorem requires non-isolated endpoints")]
    IsolatedEndpoint(usize),
    #[error("graph has an isolated vertex ({0}); the Cartesian-product formula requires minimum degree >= 1")]
    IsolatedInProduct(usize),
    #[error("join formula requires both operands nonempty")]
    EmptyJoinOperand,
    #[error("not a neighborhood polynomial: constant term is {0}, expected 1")]
    NotNeighborhoodPoly(String),
    #[error("duplicate vertex {0} in set argument")]
    DuplicateVertex(usize),
}

impl Error {
    /// True for cost-guard refusals as opposed to invalid input.
    pub fn is_guard_refusal(&self) -> bool {
        matches!(
            self,
            Error::OracleLimit { .. }
                | Error::DegreeGuard { .. }
                | Error::SubsetGuard { .. }
                | Error::NoMethod { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
