//! Cover decision in `O(WH)`.
//!
//! A candidate shape `(h, w)` covers the text when every cell lies inside
//! some occurrence of the top-left `h x w` sub-image. For a cell `(i, j)` the
//! occurrences that can contain it start inside the support window
//! `rows [i-h+1, i] x cols [j-w+1, j]` (clamped at 0). The decision walks the
//! grid row-major maintaining `N(i, j)`, the lexicographically closest
//! occurrence start in that window; `N` at each cell is either a neighbor's
//! `N` (when it still fits the window) or the cell itself when an occurrence
//! starts there. The first cell with an empty window is the mismatch witness.

use crate::grid::{Image, Mask};
use crate::match2d::build_maximal_mask;

/// Outcome of a cover check. A witness, the first uncovered cell in
/// row-major order, is present exactly when the text is not covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDecision {
    covered: bool,
    witness: Option<(usize, usize)>,
    note: Option<String>,
}

impl CoverDecision {
    pub(crate) fn covered() -> Self {
        Self {
            covered: true,
            witness: None,
            note: None,
        }
    }

    pub(crate) fn uncovered(witness: (usize, usize)) -> Self {
        Self {
            covered: false,
            witness: Some(witness),
            note: None,
        }
    }

    pub(crate) fn uncovered_with_note(witness: (usize, usize), note: String) -> Self {
        Self {
            covered: false,
            witness: Some(witness),
            note: Some(note),
        }
    }

    pub fn is_covered(&self) -> bool {
        self.covered
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        self.witness
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// The oracle-comparable part: verdict plus witness.
    pub fn outcome(&self) -> (bool, Option<(usize, usize)>) {
        (self.covered, self.witness)
    }
}

fn dimension_note(h: usize, w: usize, height: usize, width: usize) -> String {
    format!("candidate is {h}x{w} but the text is only {height}x{width}")
}

#[inline]
fn in_window(start: (usize, usize), cell: (usize, usize), h: usize, w: usize) -> bool {
    debug_assert!(start.0 <= cell.0 && start.1 <= cell.1);
    start.0 + h > cell.0 && start.1 + w > cell.1
}

/// Larger `(row, col)` wins: for a fixed cell, maximizing the start
/// lexicographically is the same as minimizing the offset
/// `(cell.0 - start.0, cell.1 - start.1)` lexicographically.
#[inline]
fn closer(a: Option<(usize, usize)>, b: (usize, usize)) -> (usize, usize) {
    match a {
        Some(a) if a >= b => a,
        _ => b,
    }
}

/// Window check for an arbitrary occurrence mask: does every cell of the
/// grid have a set bit inside its support window? This is the cover
/// condition for any mask, maximal or not.
pub fn mask_covers(mask: &Mask) -> CoverDecision {
    let (height, width) = (mask.height(), mask.width());
    let (h, w) = (mask.pattern_height(), mask.pattern_width());
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; width];
    let mut cur: Vec<Option<(usize, usize)>> = vec![None; width];
    for i in 0..height {
        for j in 0..width {
            let mut support: Option<(usize, usize)> = None;
            if i > 0 {
                if let Some(p) = prev[j] {
                    if in_window(p, (i, j), h, w) {
                        support = Some(p);
                    }
                }
            }
            if j > 0 {
                if let Some(p) = cur[j - 1] {
                    if in_window(p, (i, j), h, w) {
                        support = Some(closer(support, p));
                    }
                }
            }
            if mask.get(i, j) {
                support = Some((i, j));
            }
            match support {
                Some(_) => cur[j] = support,
                None => return CoverDecision::uncovered((i, j)),
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    CoverDecision::covered()
}

/// Decides whether the top-left `h x w` sub-image covers `text`.
///
/// Candidates taller or wider than the text are disqualified immediately.
/// Runs in `O(WH)`: one maximal-mask construction plus one row-major pass.
pub fn is_cover(text: &Image, h: usize, w: usize) -> CoverDecision {
    assert!(h >= 1 && w >= 1, "candidate dimensions must be at least 1");
    let (height, width) = text.dims();
    if h > height || w > width {
        return CoverDecision::uncovered_with_note((0, 0), dimension_note(h, w, height, width));
    }
    let candidate = text.sub_image(h, w).expect("dimensions checked above");
    let mask = build_maximal_mask(text, &candidate).expect("candidate fits the text");
    mask_covers(&mask)
}

/// Reference decision procedure: stamps every occurrence window into a
/// boolean grid and looks for an unpainted cell. `O(W^2 H^2)` worst case;
/// kept as the independent oracle for [`is_cover`].
pub fn coverage_paint_oracle(text: &Image, h: usize, w: usize) -> CoverDecision {
    assert!(h >= 1 && w >= 1, "candidate dimensions must be at least 1");
    let (height, width) = text.dims();
    if h > height || w > width {
        return CoverDecision::uncovered_with_note((0, 0), dimension_note(h, w, height, width));
    }
    let mut painted = vec![false; height * width];
    for i in 0..=height - h {
        'next: for j in 0..=width - w {
            for a in 0..h {
                for b in 0..w {
                    if text.get(i + a, j + b) != text.get(a, b) {
                        continue 'next;
                    }
                }
            }
            for a in 0..h {
                for cell in painted.iter_mut().skip((i + a) * width + j).take(w) {
                    *cell = true;
                }
            }
        }
    }
    match painted.iter().position(|&p| !p) {
        None => CoverDecision::covered(),
        Some(k) => CoverDecision::uncovered((k / width, k % width)),
    }
}

/// The nearest-support table for a mask: entry `(i, j)` is the
/// lexicographically closest occurrence start inside the support window of
/// `(i, j)`, or `None` when the window is empty.
pub struct SupportGrid {
    height: usize,
    width: usize,
    pattern_height: usize,
    pattern_width: usize,
    entries: Vec<Option<(u32, u32)>>,
}

impl SupportGrid {
    /// Fills the whole table, including cells past an empty window.
    pub fn from_mask(mask: &Mask) -> Self {
        let (height, width) = (mask.height(), mask.width());
        let (h, w) = (mask.pattern_height(), mask.pattern_width());
        let mut entries: Vec<Option<(u32, u32)>> = vec![None; height * width];
        for i in 0..height {
            for j in 0..width {
                let mut support: Option<(usize, usize)> = None;
                if i > 0 {
                    if let Some((a, b)) = entries[(i - 1) * width + j] {
                        let p = (a as usize, b as usize);
                        if in_window(p, (i, j), h, w) {
                            support = Some(p);
                        }
                    }
                }
                if j > 0 {
                    if let Some((a, b)) = entries[i * width + j - 1] {
                        let p = (a as usize, b as usize);
                        if in_window(p, (i, j), h, w) {
                            support = Some(closer(support, p));
                        }
                    }
                }
                if mask.get(i, j) {
                    support = Some((i, j));
                }
                entries[i * width + j] = support.map(|(a, b)| (a as u32, b as u32));
            }
        }
        Self {
            height,
            width,
            pattern_height: h,
            pattern_width: w,
            entries,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn pattern_dims(&self) -> (usize, usize) {
        (self.pattern_height, self.pattern_width)
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        assert!(i < self.height && j < self.width, "cell out of range");
        self.entries[i * self.width + j].map(|(a, b)| (a as usize, b as usize))
    }

    /// First cell in row-major order whose window holds no occurrence start.
    pub fn first_unsupported(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(Option::is_none)
            .map(|k| (k / self.width, k % self.width))
    }
}
