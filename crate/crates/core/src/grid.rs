//! Dense grid types shared by every other module: interned-symbol images,
//! occurrence masks, and the point-set view of binary grids.
//!
//! All coordinates are 0-based `(row, col)` pairs throughout the crate.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Dense identifier for an interned symbol token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Bijection between symbol tokens and dense ids.
///
/// Tokens are arbitrary UTF-8 strings without whitespace; cell comparisons
/// everywhere else are id comparisons, so matching cost is independent of
/// token length.
#[derive(Debug, Default)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, SymbolId>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for `token`, registering it if new.
    pub fn intern(&mut self, token: &str) -> Result<SymbolId> {
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::BadToken {
                token: token.to_string(),
            });
        }
        if let Some(&id) = self.index.get(token) {
            return Ok(id);
        }
        let id = SymbolId(self.tokens.len() as u32);
        self.tokens.push(token.to_string());
        self.index.insert(token.to_string(), id);
        Ok(id)
    }

    pub fn id_of(&self, token: &str) -> Option<SymbolId> {
        self.index.get(token).copied()
    }

    pub fn token(&self, id: SymbolId) -> &str {
        &self.tokens[id.index()]
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// An immutable `height x width` grid of interned symbols.
///
/// Images are never mutated after construction, so they can be shared freely
/// across threads; sub-images share the parent's alphabet.
#[derive(Clone, Debug)]
pub struct Image {
    height: usize,
    width: usize,
    cells: Vec<SymbolId>,
    alphabet: Arc<Alphabet>,
}

impl Image {
    /// Builds an image from row-major tokens.
    pub fn from_tokens<'a, I>(height: usize, width: usize, tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        if height == 0 || width == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut alphabet = Alphabet::new();
        let mut cells = Vec::with_capacity(height * width);
        for token in tokens {
            cells.push(alphabet.intern(token)?);
        }
        if cells.len() != height * width {
            return Err(Error::CellCountMismatch {
                expected: height * width,
                found: cells.len(),
            });
        }
        Ok(Self {
            height,
            width,
            cells,
            alphabet: Arc::new(alphabet),
        })
    }

    /// Convenience constructor: one row per string, one symbol per `char`.
    pub fn from_chars(rows: &[&str]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let width = rows[0].chars().count();
        let height = rows.len();
        let mut buf = String::new();
        let mut tokens: Vec<(usize, usize)> = Vec::new();
        for row in rows {
            let count = row.chars().count();
            if count != width {
                return Err(Error::CellCountMismatch {
                    expected: width,
                    found: count,
                });
            }
            for ch in row.chars() {
                let start = buf.len();
                buf.push(ch);
                tokens.push((start, buf.len()));
            }
        }
        Image::from_tokens(height, width, tokens.iter().map(|&(s, e)| &buf[s..e]))
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub(crate) fn alphabet_arc(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn get(&self, row: usize, col: usize) -> SymbolId {
        assert!(row < self.height && col < self.width, "cell out of range");
        self.cells[row * self.width + col]
    }

    pub fn token_at(&self, row: usize, col: usize) -> &str {
        self.alphabet.token(self.get(row, col))
    }

    pub fn row(&self, row: usize) -> &[SymbolId] {
        assert!(row < self.height, "row out of range");
        &self.cells[row * self.width..(row + 1) * self.width]
    }

    pub fn column(&self, col: usize) -> Vec<SymbolId> {
        assert!(col < self.width, "column out of range");
        (0..self.height).map(|i| self.get(i, col)).collect()
    }

    /// The top-left `h x w` sub-image, sharing this image's alphabet.
    ///
    /// This is the unique cover candidate of shape `(h, w)`: cell `(0, 0)`
    /// can only be covered by an occurrence starting there, so any cover of
    /// the image must equal its top-left corner.
    pub fn sub_image(&self, h: usize, w: usize) -> Result<Image> {
        if h == 0 || w == 0 || h > self.height || w > self.width {
            return Err(Error::SubImageBounds {
                requested: (h, w),
                actual: (self.height, self.width),
            });
        }
        let mut cells = Vec::with_capacity(h * w);
        for i in 0..h {
            cells.extend_from_slice(&self.row(i)[..w]);
        }
        Ok(Image {
            height: h,
            width: w,
            cells,
            alphabet: Arc::clone(&self.alphabet),
        })
    }
}

impl PartialEq for Image {
    /// Token-wise equality; the two images may use different alphabets.
    fn eq(&self, other: &Self) -> bool {
        if self.dims() != other.dims() {
            return false;
        }
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) {
            return self.cells == other.cells;
        }
        self.cells
            .iter()
            .zip(&other.cells)
            .all(|(&a, &b)| self.alphabet.token(a) == other.alphabet.token(b))
    }
}

impl Eq for Image {}

/// A binary `height x width` grid marking occurrence start positions of an
/// `pattern_height x pattern_width` pattern inside a text of the same grid
/// dimensions.
///
/// Every set bit `(i, j)` satisfies `i + pattern_height <= height` and
/// `j + pattern_width <= width`: an occurrence must fit inside the text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mask {
    height: usize,
    width: usize,
    pattern_height: usize,
    pattern_width: usize,
    bits: Vec<bool>,
}

impl Mask {
    pub fn new(
        height: usize,
        width: usize,
        pattern_height: usize,
        pattern_width: usize,
        bits: Vec<bool>,
    ) -> Result<Self> {
        if height == 0 || width == 0 || pattern_height == 0 || pattern_width == 0 {
            return Err(Error::ZeroDimension);
        }
        if bits.len() != height * width {
            return Err(Error::CellCountMismatch {
                expected: height * width,
                found: bits.len(),
            });
        }
        let mask = Self {
            height,
            width,
            pattern_height,
            pattern_width,
            bits,
        };
        if let Some(bad) = mask.set_positions().find(|&(i, j)| !mask.fits(i, j)) {
            return Err(Error::MaskBitOutOfRange { position: bad });
        }
        Ok(mask)
    }

    pub(crate) fn zeroed(
        height: usize,
        width: usize,
        pattern_height: usize,
        pattern_width: usize,
    ) -> Self {
        Self {
            height,
            width,
            pattern_height,
            pattern_width,
            bits: vec![false; height * width],
        }
    }

    fn fits(&self, i: usize, j: usize) -> bool {
        i + self.pattern_height <= self.height && j + self.pattern_width <= self.width
    }

    pub(crate) fn set(&mut self, i: usize, j: usize) {
        debug_assert!(self.fits(i, j), "occurrence start out of range");
        self.bits[i * self.width + j] = true;
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.height && j < self.width, "cell out of range");
        self.bits[i * self.width + j]
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pattern_height(&self) -> usize {
        self.pattern_height
    }

    pub fn pattern_width(&self) -> usize {
        self.pattern_width
    }

    pub fn count_set(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn set_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let width = self.width;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / width, k % width))
    }

    /// Characteristic-function view of a point set: bit `(i, j)` is set iff
    /// `(i, j)` is in `points`. Pattern dimensions default to `(1, 1)`.
    pub fn from_point_set(points: &PointSet, height: usize, width: usize) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut mask = Mask::zeroed(height, width, 1, 1);
        for &(i, j) in points.iter() {
            if i >= height || j >= width {
                return Err(Error::PointOutOfBounds {
                    point: (i, j),
                    height,
                    width,
                });
            }
            mask.set(i, j);
        }
        Ok(mask)
    }

    /// Inverse of [`Mask::from_point_set`].
    pub fn point_set(&self) -> PointSet {
        self.set_positions().collect()
    }
}

/// A finite set of `(row, col)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointSet {
    points: BTreeSet<(usize, usize)>,
}

impl PointSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, point: (usize, usize)) {
        self.points.insert(point);
    }

    pub fn contains(&self, point: (usize, usize)) -> bool {
        self.points.contains(&point)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.points.iter()
    }
}

impl FromIterator<(usize, usize)> for PointSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Self {
            points: iter.into_iter().collect(),
        }
    }
}
