use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// An alternating sum accumulated as a rational did not come out integral.
    #[error("integrality error in {formula}: sum evaluated to {value}")]
    Integrality { formula: &'static str, value: String },
    /// Brute-force enumeration refused because the path length exceeds the cap.
    #[error("size error: path length {len} exceeds enumeration cap {cap}")]
    Size { len: i64, cap: i64 },
    /// An exact arithmetic step failed; always indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
