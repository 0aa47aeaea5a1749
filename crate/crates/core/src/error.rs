//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("image dimensions must be at least 1x1")]
    ZeroDimension,

    #[error("expected {expected} cells, found {found}")]
    CellCountMismatch { expected: usize, found: usize },

    #[error("invalid symbol token {token:?} (tokens must be nonempty and free of whitespace)")]
    BadToken { token: String },

    #[error("point ({0}, {1}) lies outside the {2}x{3} grid", point.0, point.1, height, width)]
    PointOutOfBounds {
        point: (usize, usize),
        height: usize,
        width: usize,
    },

    #[error("mask bit at ({0}, {1}) cannot be the start of a fitting occurrence", position.0, position.1)]
    MaskBitOutOfRange { position: (usize, usize) },

    #[error("requested {0}x{1} sub-image of a {2}x{3} image", requested.0, requested.1, actual.0, actual.1)]
    SubImageBounds {
        requested: (usize, usize),
        actual: (usize, usize),
    },

    #[error("pattern is {0}x{1} but text is only {2}x{3}", pattern.0, pattern.1, text.0, text.1)]
    PatternTooLarge {
        pattern: (usize, usize),
        text: (usize, usize),
    },

    #[error("{0} must be nonempty")]
    Empty(&'static str),

    #[error("color {token:?} collides with a reserved structural symbol")]
    ReservedColor { token: String },

    #[error("tile name {name:?} is defined twice")]
    DuplicateTile { name: String },

    #[error("unknown tile name {name:?}")]
    UnknownTile { name: String },

    #[error("tile index {index} out of range for a set of {len} tiles")]
    TileIndexOutOfRange { index: usize, len: usize },

    #[error(
        "tiles at ({0}, {1}) and ({2}, {3}) disagree on their shared edge: {first_color:?} vs {second_color:?}",
        first.0, first.1, second.0, second.1
    )]
    Adjacency {
        first: (usize, usize),
        second: (usize, usize),
        first_color: String,
        second_color: String,
    },

    #[error("image is not a tile encoding: {reason}")]
    NotATileImage { reason: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{message}")]
    InvalidArgs { message: String },

    #[error("cannot read {path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
