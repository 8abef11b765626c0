use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("nilpotency class mismatch: {left} vs {right}")]
    ClassMismatch { left: usize, right: usize },
    #[error("word does not lie in layer {weight} of the lower central series")]
    NotInLayer { weight: usize },
    #[error("polynomial is not a Lie element (residual at monomial {monomial})")]
    NotALieElement { monomial: String },
    #[error("endomorphism is not in the kernel of the tower projection")]
    NotInKernel,
    #[error("endomorphism is not an automorphism (abelianisation determinant {det})")]
    NotAutomorphism { det: String },
    #[error("tower projection needs nilpotency class at least 2")]
    ClassTooSmall,
    #[error("matrix does not preserve the symplectic form")]
    NotFormPreserving,
    #[error("boundary word is not fixed by the endomorphism")]
    BoundaryMoved,
    #[error("abelianisation matrix is not symplectic")]
    NotSymplectic,
    #[error("no bundled generator tables for genus {0}")]
    UnsupportedGenus(usize),
    #[error("mapping class does not act trivially on homology")]
    NotTorelli,
    #[error("contraction does not lie in the image of the wedge-cube embedding")]
    NotInLambdaCubed,
    #[error("evaluation window too small: need at least {need}, got {got}")]
    WindowTooSmall { need: usize, got: usize },
    #[error("duplication reduction requires m > n, got n={n}, m={m}")]
    DuplicationBounds { n: usize, m: usize },
    #[error("vertex count must be even and positive, got {0}")]
    OddVertices(usize),
    #[error("vertex count {got} exceeds the enumeration cap {cap}")]
    VertexCap { got: usize, cap: usize },
    #[error("unsupported degree convention: {0}")]
    UnsupportedConvention(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
