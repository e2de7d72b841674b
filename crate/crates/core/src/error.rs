use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("a group type needs at least one cyclic summand")]
    EmptyType,
    #[error("exponents must be positive")]
    ZeroExponent,
    #[error("p = 2 needs all exponents >= 2 (got a Z/2 summand)")]
    TwoTorsionSummand,
    #[error("group of order {p}^{total} is too large for this representation")]
    TooLarge { p: u64, total: u32 },
    #[error("objects belong to different groups")]
    ParentMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("wedge is not decomposable (rank {rank})")]
    NotDecomposable { rank: usize },
    #[error("cannot factor the zero wedge")]
    ZeroWedge,
    #[error("class is outside the scope of the classification: {0}")]
    OutsideScope(String),
    #[error("matrix does not define an endomorphism: entry ({row},{col}) must be divisible by p^{need}")]
    NotEndomorphism { row: usize, col: usize, need: u32 },
    #[error("matrix does not define an automorphism")]
    NotInvertible,
    #[error("scalar must be a unit mod p")]
    ZeroScalar,
    #[error("dual lift does not reduce to the given abelian class")]
    LiftMismatch,
    #[error("2-cocycle identity fails at ({x}, {y}, {z})")]
    CocycleViolation { x: usize, y: usize, z: usize },
    #[error("c-index needs |G:T| <= p and pG <= M with |G:M| <= p^2")]
    IndexPrecondition,
    #[error("{what}: {needed} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, needed: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
