use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("poset has no unique least or greatest element")]
    NoBound,
    #[error("unknown poset element `{0}`")]
    UnknownElement(String),
    #[error("duplicate poset element `{0}`")]
    DuplicateElement(String),
    #[error("posets are limited to 64 elements, got {0}")]
    TooManyElements(usize),
    #[error("unknown built-in poset `{0}` (expected chain2, chain3, m2 or m3)")]
    UnknownPoset(String),

    #[error("structure must have at least one vertex")]
    NoVertices,
    #[error("structures are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("edge color matrix has {got} entries, expected {expected}")]
    MatrixShape { expected: usize, got: usize },
    #[error("color index {0} is not an element of the poset")]
    ColorOutOfRange(u8),
    #[error("vertex {0} has a non-bottom loop color but loops are not allowed")]
    Loop(usize),
    #[error("edge colors of ({0}, {1}) and ({1}, {0}) differ in an undirected structure")]
    Asymmetry(usize, usize),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("pair ({0}, {1}) is colored twice")]
    DuplicateEdge(String, String),
    #[error("vertex subset is empty")]
    EmptySet,
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("no vertex carries color `{0}`")]
    EmptySlice(String),
    #[error("operation requires an undirected loopless structure")]
    Flags,

    #[error("structures are colored over different posets")]
    PosetMismatch,
    #[error("partial map repeats source vertex {0}")]
    RepeatedSource(usize),

    #[error("poset shape is {found:?}, expected {expected}")]
    Shape {
        expected: &'static str,
        found: crate::poset::Shape,
    },
    #[error("structure is not vertex-uniform")]
    NotVertexUniform,
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("bad color: {0}")]
    BadColor(String),
    #[error("bad example spec: {0}")]
    BadSpec(String),
    #[error("enumeration space {space} exceeds cap {cap}")]
    CapExceeded { space: u128, cap: u128 },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("JSON error at line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        }
    }
}
