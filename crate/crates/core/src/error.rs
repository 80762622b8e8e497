use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at `{0}`: undirected graphs are simple and loopless")]
    Loop(String),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex `{0}` has no image")]
    NotTotal(String),
    #[error("image `{0}` is not a vertex of the codomain")]
    ImageOutOfRange(String),
    #[error("edge {{{0}, {1}}} is not mapped to an edge")]
    NotHomomorphism(String, String),
    #[error("arc ({0}, {1}) is not mapped to an arc")]
    NotDigraphHomomorphism(String, String),
    #[error("maps cannot be composed: codomain and domain differ")]
    IncompatibleComposition,
    #[error("slice objects live over different base graphs")]
    BaseMismatch,
    #[error("structure maps disagree at `{0}`: the triangle does not commute")]
    NotCommuting(String),
    #[error("vertex id `{0}` is produced twice by the construction")]
    IdCollision(String),
    #[error("arc ({0}, {1}) is not an arc of the digraph")]
    UnknownArc(String, String),
    #[error("distinguished vertices must differ, both are `{0}`")]
    DistinguishedEqual(String),
    #[error("distinguished vertices have different colors: f({a}) = {fa}, f({b}) = {fb}")]
    UnbalancedGadget {
        a: String,
        b: String,
        fa: String,
        fb: String,
    },
    #[error("distinguished vertices `{0}` and `{1}` are adjacent")]
    AdjacentDistinguished(String, String),
    #[error("digraph has an isolated point `{0}`")]
    IsolatedPoint(String),
    #[error("digraph has a loop at `{0}` but the irreflexive regime was requested")]
    ReflexiveDigraph(String),
    #[error("digraph size {n} exceeds the enumeration cap of {cap}")]
    DigraphCap { n: usize, cap: usize },
    #[error("digraph enumeration needs at least one vertex")]
    EmptyDigraphSize,
    #[error("G_k needs k >= 2, got {0}")]
    GkTooSmall(usize),
    #[error("base graph is not a path with at most 3 edges")]
    NotShortPath,
    #[error("structure map is not surjective: `{0}` is missed")]
    NotSurjective(String),
    #[error("carrier is not connected")]
    Disconnected,
    #[error("retraction target for `{vertex}` is not unique (candidates `{first}` and `{second}`)")]
    RetractionTie {
        vertex: String,
        first: String,
        second: String,
    },
    #[error("retraction is not a homomorphism: {0}")]
    RetractionInvalid(String),
    #[error("base graph is algebraically universal (contains {0}); use the gadget pipeline instead")]
    UniversalBase(String),
    #[error("image of the first object is not contained in the image of the second")]
    ImageNotContained,
    #[error("images lie in different components of the base")]
    ImagesInDifferentComponents,
    #[error("constructive verdict {constructive} disagrees with brute force {brute_force}")]
    CrossCheck { constructive: String, brute_force: String },
    #[error("gadget failed verification, full embedding check not applicable")]
    GadgetNotVerified,
    #[error("unknown built-in gadget `{0}`")]
    UnknownGadget(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
