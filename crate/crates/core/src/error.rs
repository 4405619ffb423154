use thiserror::Error;

use crate::ring::AxiomViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("ring order must be at least 2, got {0}")]
    InvalidOrder(usize),
    #[error("order {requested} exceeds the configured maximum {max} (see RINGLAB_MAX_ORDER)")]
    OrderBound { requested: usize, max: usize },
    #[error("{0}")]
    Axiom(AxiomViolation),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("element index {index} out of range for order {order}")]
    BadIndex { index: usize, order: usize },
    #[error("operation table is not square or contains an out-of-range index")]
    MalformedTable,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial modulus must be monic of degree at least 1")]
    BadModulusPoly,
    #[error("no irreducible polynomial found for gf({p}, {k})")]
    NoIrreducible { p: u64, k: u32 },
    #[error("quotient by the whole ring has no nonzero identity")]
    ImproperIdeal,
    #[error("the given set is not an ideal: {0}")]
    NotAnIdeal(&'static str),
    #[error("the given ideal is not prime")]
    NotPrimeIdeal,
    #[error("the given set is not multiplicatively closed")]
    NotMultiplicativelyClosed,
    #[error("ring is not a phi-ring: its nilradical is not a divided prime")]
    NotPhiRing,
    #[error("module does not live over the expected ring")]
    ModuleRingMismatch,
    #[error("{0}")]
    Unsupported(String),
}
