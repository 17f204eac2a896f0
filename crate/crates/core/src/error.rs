use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field characteristic {0}: need an odd prime below 2^31")]
    UnsupportedField(u64),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation {relation} is not admissible: {reason}")]
    NonAdmissibleIdeal { relation: usize, reason: String },
    #[error("nilpotency bound {bound} is inconsistent: path {path} survives modulo the ideal")]
    InconsistentBound { bound: usize, path: String },
    #[error("algebra is not self-injective: {0}")]
    NotSelfInjective(String),
    #[error("weight sequence is not closed under conjugation: {0}")]
    WeightNotClosed(String),
    #[error("relation {0} does not generate a Hopf ideal")]
    NotHopfIdeal(String),
    #[error("characteristic {p} is too small for an endomorphism algebra of dimension {dim}")]
    CharTooSmall { p: u64, dim: usize },
    #[error("the field does not split the required polynomial: {0}")]
    NonSplitField(String),
    #[error("projective presentation failed: {0}")]
    PresentationFailure(String),
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("bar complex for a group of order {order} exceeds the size bound {bound}")]
    SizeBound { order: usize, bound: usize },
    #[error("group is not abelian: {0}")]
    NotAbelian(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no group action available: {0}")]
    MissingAction(String),
}
