//! 2D string covers: quasi-periodicity analysis for images.
//!
//! A *cover* of an image `T` is an image `C` such that every cell of `T`
//! lies inside some exact occurrence of `C`. Since cell `(0, 0)` can only be
//! covered by an occurrence starting there, every cover of `T` is one of its
//! top-left sub-images, so a candidate is just a shape `(h, w)`.
//!
//! The crate provides:
//!
//! - [`decide::is_cover`]: decides one candidate in `O(WH)` via 2D matching
//!   (row naming + per-column matching) and a nearest-support scan.
//! - [`minimize::minimal_cover`]: the metric-minimal cover (area, `l1`,
//!   `linf`, or a custom function), walking candidates in metric order with
//!   row/column pruning that keeps the average number of decisions tiny.
//! - [`cover1d`]: linear-time 1D cover indicators feeding the pruning.
//! - [`wang`]: Wang tilings encoded as images, with tile-aligned minimal
//!   covers.
//! - [`io`]: grid/PGM/wang file formats and the JSON command layer used by
//!   the `coverscan` CLI.
//!
//! # Quick start
//!
//! ```
//! use coverscan::{Image, Metric};
//!
//! let text = Image::from_chars(&["abab", "cdcd", "abab", "cdcd"]).unwrap();
//! assert!(coverscan::is_cover(&text, 2, 2).is_covered());
//!
//! let report = coverscan::minimal_cover(&text, &Metric::Area, true);
//! assert_eq!((report.best.height, report.best.width), (2, 2));
//! ```
//!
//! Runnable demonstrations of each capability live under `examples/`; the
//! thin `coverscan` binary exposes the same operations on files.
//!
//! All coordinates are 0-based `(row, col)` pairs.

pub mod cover1d;
pub mod decide;
pub mod error;
pub mod grid;
pub mod io;
pub mod match2d;
pub mod minimize;
pub mod wang;

pub use cover1d::{cover_indicator, minimal_cover_1d, CoverIndicator};
pub use decide::{coverage_paint_oracle, is_cover, mask_covers, CoverDecision, SupportGrid};
pub use error::{Error, Result};
pub use grid::{Alphabet, Image, Mask, PointSet, SymbolId};
pub use match2d::{build_maximal_mask, KmpAutomaton, RowAutomaton, StageGrid};
pub use minimize::{
    build_prune_matrix, enumerate_candidates, minimal_cover, minimal_cover_with,
    prune_statistics, CoverCandidate, CoverReport, CustomMetric, Metric, MinimizeOptions,
    PruneMatrix, PruneStats,
};
pub use wang::{
    minimal_wang_cover, minimal_wang_cover_via_image, WangTile, WangTileSet, WangTiling,
};
