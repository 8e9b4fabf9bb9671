use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("not Eulerian: vertex {vertex} has in-degree {in_degree}, out-degree {out_degree}")]
    NotEulerian {
        vertex: usize,
        in_degree: usize,
        out_degree: usize,
    },
    #[error("colouring has {got} entries but the digraph has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
