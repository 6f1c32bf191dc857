use thiserror::Error;

/// Location of a failure inside a sweep, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Location {
    Cell { i: usize },
    Cell2 { i: usize, j: usize },
    Interface { axis: crate::system::Axis, line: usize, iface: usize },
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("inadmissible state at {location:?}: {what}")]
    InadmissibleState { what: String, location: Location },

    #[error("eigen-decomposition failed at {location:?}: {what}")]
    EigenDecomposition { what: String, location: Location },

    #[error("equilibrium-variable inversion failed at {location:?}: {what}")]
    Reconstruction { what: String, location: Location },

    #[error("non-finite value at t = {time} ({location:?})")]
    NonFinite { time: f64, location: Location },

    #[error("meshes are not nested: coarse n = {coarse}, fine n = {fine}")]
    NonNestedMeshes { coarse: usize, fine: usize },

    #[error("benchmark runs were not bitwise reproducible ({0})")]
    NonDeterministic(String),

    #[error("i/o error for {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, SolverError>;
