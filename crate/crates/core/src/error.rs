use thiserror::Error;

/// Everything that can go wrong while building or checking finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("missing composite {g} o {f}")]
    MissingComposite { g: String, f: String },
    #[error("composite {g} o {f} = {h} has the wrong endpoints")]
    IllTypedComposite { g: String, f: String, h: String },
    #[error("composition is not associative at ({h}, {g}, {f})")]
    NonAssociative { h: String, g: String, f: String },
    #[error("bad identity: {0}")]
    BadIdentity(String),
    #[error("arrows `{g}` and `{f}` are not composable")]
    NotComposable { g: String, f: String },
    #[error("graph has a cycle through `{0}`")]
    CyclicGraph(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("invalid natural transformation: {0}")]
    InvalidNatTrans(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("search limit of {0} candidates exceeded")]
    SizeLimitExceeded(u64),
    #[error("not a pullback square: {0}")]
    NotAPullback(String),
    #[error("witness not found: {0}")]
    WitnessNotFound(String),
    #[error("not unique: {0}")]
    NotUnique(String),
    #[error("invalid coalgebra: {0}")]
    CoalgebraInvalid(String),
    #[error("invalid algebra: {0}")]
    AlgebraInvalid(String),
    #[error("invalid opfibration bundle: {0}")]
    BundleInvalid(String),
    #[error("not a retraction: {0}")]
    NotARetraction(String),
    #[error("missing pullback for arrow `{0}`")]
    MissingPullback(String),
    #[error("reflection is not simple at arrow `{0}`")]
    NotSimple(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
