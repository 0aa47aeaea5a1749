//! Exact 1D and 2D pattern matching.
//!
//! [`build_maximal_mask`] finds every occurrence of a pattern image inside a
//! text image in `O(WH + wh)` time. Single-row texts go straight through KMP;
//! everything else uses the row-naming scheme: an Aho-Corasick automaton over
//! the pattern's distinct rows labels each text position with the distinct
//! row ending there (all pattern rows have equal width, so at most one can
//! end at any position), and a per-column KMP over the pattern's row-name
//! sequence then finds the positions where whole occurrences end.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::{Image, Mask, SymbolId};

/// KMP matcher for a fixed nonempty pattern.
///
/// `failure[i]` is the length of the longest proper border of
/// `pattern[0..=i]`, so `failure[0] == 0` and `failure[i] <= i`.
#[derive(Clone, Debug)]
pub struct KmpAutomaton<T> {
    pattern: Vec<T>,
    failure: Vec<usize>,
}

impl<T: Eq + Clone> KmpAutomaton<T> {
    pub fn new(pattern: &[T]) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::Empty("pattern"));
        }
        let mut failure = vec![0usize; pattern.len()];
        let mut matched = 0usize;
        for i in 1..pattern.len() {
            while matched > 0 && pattern[matched] != pattern[i] {
                matched = failure[matched - 1];
            }
            if pattern[matched] == pattern[i] {
                matched += 1;
            }
            failure[i] = matched;
        }
        Ok(Self {
            pattern: pattern.to_vec(),
            failure,
        })
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn failure(&self) -> &[usize] {
        &self.failure
    }

    /// Advances the matched-prefix length by one symbol. A `state` equal to
    /// the pattern length (a full match) first falls back to its border, so
    /// overlapping occurrences are found.
    pub fn step(&self, state: usize, next: &T) -> usize {
        let mut s = if state == self.pattern.len() {
            self.failure[state - 1]
        } else {
            state
        };
        while s > 0 && self.pattern[s] != *next {
            s = self.failure[s - 1];
        }
        if self.pattern[s] == *next {
            s + 1
        } else {
            0
        }
    }

    /// 0-based end positions of every occurrence of the pattern in `text`,
    /// ascending. Runs in `O(|text|)`.
    pub fn find_all(&self, text: &[T]) -> Vec<usize> {
        let mut ends = Vec::new();
        let mut state = 0usize;
        for (i, sym) in text.iter().enumerate() {
            state = self.step(state, sym);
            if state == self.pattern.len() {
                ends.push(i);
            }
        }
        ends
    }
}

const ROOT: u32 = 0;

/// Name emitted where no pattern row ends; never equal to a row class, so the
/// column matchers reset naturally.
pub const NO_ROW: u32 = u32::MAX;

struct AcNode {
    children: HashMap<SymbolId, u32>,
    fail: u32,
    output: Option<u32>,
}

/// Aho-Corasick automaton over the distinct rows of a pattern.
///
/// Transitions are per-node sparse maps, keeping the walk independent of the
/// alphabet size. Because every pattern row has the same width, an accepting
/// node can never have another accepting node on its suffix chain, so each
/// node carries at most one row name.
pub struct RowAutomaton {
    nodes: Vec<AcNode>,
    row_names: Vec<u32>,
    class_count: usize,
}

impl RowAutomaton {
    /// Builds the automaton from the rows of `pattern` (in the pattern's own
    /// alphabet).
    pub fn new(pattern: &Image) -> Self {
        let rows: Vec<&[SymbolId]> = (0..pattern.height()).map(|i| pattern.row(i)).collect();
        Self::from_rows(&rows)
    }

    /// Builds from explicit equal-length rows. Symbols must come from the
    /// same alphabet as the rows that will be scanned later.
    pub fn from_rows(rows: &[&[SymbolId]]) -> Self {
        assert!(!rows.is_empty(), "pattern must have at least one row");
        let width = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == width), "rows must have equal width");

        // Distinct-row classes, by hashing with full content as the key.
        let mut classes: HashMap<&[SymbolId], u32> = HashMap::new();
        let mut row_names = Vec::with_capacity(rows.len());
        let mut distinct: Vec<&[SymbolId]> = Vec::new();
        for &row in rows {
            let next_id = distinct.len() as u32;
            let id = *classes.entry(row).or_insert_with(|| {
                distinct.push(row);
                next_id
            });
            row_names.push(id);
        }

        let mut nodes = vec![AcNode {
            children: HashMap::new(),
            fail: ROOT,
            output: None,
        }];
        for (class, row) in distinct.iter().enumerate() {
            let mut state = ROOT;
            for &sym in *row {
                let next_id = nodes.len() as u32;
                let entry = nodes[state as usize]
                    .children
                    .entry(sym)
                    .or_insert(next_id);
                let next = *entry;
                if next == next_id {
                    nodes.push(AcNode {
                        children: HashMap::new(),
                        fail: ROOT,
                        output: None,
                    });
                }
                state = next;
            }
            nodes[state as usize].output = Some(class as u32);
        }

        // Breadth-first suffix links.
        let mut queue: std::collections::VecDeque<u32> = std::collections::VecDeque::new();
        let root_children: Vec<u32> = nodes[ROOT as usize].children.values().copied().collect();
        for child in root_children {
            nodes[child as usize].fail = ROOT;
            queue.push_back(child);
        }
        while let Some(node) = queue.pop_front() {
            let children: Vec<(SymbolId, u32)> = nodes[node as usize]
                .children
                .iter()
                .map(|(&s, &c)| (s, c))
                .collect();
            for (sym, child) in children {
                let mut f = nodes[node as usize].fail;
                loop {
                    if let Some(&via) = nodes[f as usize].children.get(&sym) {
                        if via != child {
                            nodes[child as usize].fail = via;
                            break;
                        }
                    }
                    if f == ROOT {
                        nodes[child as usize].fail = ROOT;
                        break;
                    }
                    f = nodes[f as usize].fail;
                }
                queue.push_back(child);
            }
        }

        Self {
            nodes,
            row_names,
            class_count: distinct.len(),
        }
    }

    /// For each pattern row index, the id of its distinct-row class.
    pub fn row_names(&self) -> &[u32] {
        &self.row_names
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    fn next_state(&self, mut state: u32, sym: SymbolId) -> u32 {
        loop {
            if let Some(&child) = self.nodes[state as usize].children.get(&sym) {
                return child;
            }
            if state == ROOT {
                return ROOT;
            }
            state = self.nodes[state as usize].fail;
        }
    }

    /// Labels every position of `row` with the distinct row ending there, or
    /// [`NO_ROW`].
    pub fn name_row(&self, row: &[SymbolId], out: &mut [u32]) {
        debug_assert_eq!(row.len(), out.len());
        let mut state = ROOT;
        for (j, &sym) in row.iter().enumerate() {
            state = self.next_state(state, sym);
            out[j] = self.nodes[state as usize].output.unwrap_or(NO_ROW);
        }
    }
}

/// Boolean grid with the text's dimensions; `get(i, j)` is true iff an
/// occurrence of the pattern ends at `(i, j)`. Every set bit therefore has
/// `i >= pattern_height - 1` and `j >= pattern_width - 1`.
pub struct StageGrid {
    height: usize,
    width: usize,
    pattern_height: usize,
    pattern_width: usize,
    bits: Vec<bool>,
}

impl StageGrid {
    /// Runs the row-naming and column-matching passes over `text`.
    pub fn build(text: &Image, pattern: &Image) -> Result<StageGrid> {
        let (height, width) = text.dims();
        let (ph, pw) = pattern.dims();
        if ph > height || pw > width {
            return Err(Error::PatternTooLarge {
                pattern: (ph, pw),
                text: (height, width),
            });
        }
        let mut grid = StageGrid {
            height,
            width,
            pattern_height: ph,
            pattern_width: pw,
            bits: vec![false; height * width],
        };

        let Some(cells) = remap_pattern(text, pattern) else {
            // Some pattern symbol never appears in the text.
            return Ok(grid);
        };
        let rows: Vec<&[SymbolId]> = cells.chunks(pw).collect();
        let automaton = RowAutomaton::from_rows(&rows);
        let column_matcher = KmpAutomaton::new(automaton.row_names())
            .expect("pattern has at least one row");

        let mut names = vec![NO_ROW; width];
        let mut column_states = vec![0usize; width];
        for i in 0..height {
            automaton.name_row(text.row(i), &mut names);
            for j in 0..width {
                let state = column_matcher.step(column_states[j], &names[j]);
                column_states[j] = state;
                if state == ph {
                    grid.bits[i * width + j] = true;
                }
            }
        }
        Ok(grid)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.height && j < self.width, "cell out of range");
        self.bits[i * self.width + j]
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    /// Shifts end positions back to start positions:
    /// the mask bit `(i, j)` is `stage(i + h - 1, j + w - 1)`.
    pub fn to_maximal_mask(&self) -> Mask {
        let mut mask = Mask::zeroed(
            self.height,
            self.width,
            self.pattern_height,
            self.pattern_width,
        );
        for i in 0..self.height {
            for j in 0..self.width {
                if self.bits[i * self.width + j] {
                    debug_assert!(i + 1 >= self.pattern_height && j + 1 >= self.pattern_width);
                    mask.set(i + 1 - self.pattern_height, j + 1 - self.pattern_width);
                }
            }
        }
        mask
    }
}

/// Translates pattern cells into the text's alphabet. `None` when a pattern
/// token does not occur in the text at all (so no occurrence is possible).
fn remap_pattern(text: &Image, pattern: &Image) -> Option<Vec<SymbolId>> {
    if std::sync::Arc::ptr_eq(text.alphabet_arc(), pattern.alphabet_arc()) {
        let mut cells = Vec::with_capacity(pattern.height() * pattern.width());
        for i in 0..pattern.height() {
            cells.extend_from_slice(pattern.row(i));
        }
        return Some(cells);
    }
    let mut cells = Vec::with_capacity(pattern.height() * pattern.width());
    for i in 0..pattern.height() {
        for j in 0..pattern.width() {
            cells.push(text.alphabet().id_of(pattern.token_at(i, j))?);
        }
    }
    Some(cells)
}

/// Marks the start of every occurrence of `pattern` in `text`.
///
/// Bit `(i, j)` is set iff the `h x w` block of `text` at `(i, j)` equals
/// `pattern` cell for cell. Runs in `O(WH + wh)`.
pub fn build_maximal_mask(text: &Image, pattern: &Image) -> Result<Mask> {
    let (height, width) = text.dims();
    let (ph, pw) = pattern.dims();
    if ph > height || pw > width {
        return Err(Error::PatternTooLarge {
            pattern: (ph, pw),
            text: (height, width),
        });
    }
    if height == 1 {
        let mut mask = Mask::zeroed(height, width, ph, pw);
        if let Some(cells) = remap_pattern(text, pattern) {
            let matcher = KmpAutomaton::new(&cells).expect("pattern is nonempty");
            for end in matcher.find_all(text.row(0)) {
                mask.set(0, end + 1 - pw);
            }
        }
        return Ok(mask);
    }
    Ok(StageGrid::build(text, pattern)?.to_maximal_mask())
}
