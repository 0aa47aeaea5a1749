//! Wang tiles and tilings, encoded as images so the cover machinery applies.
//!
//! A tile is a unit square with a color on each edge; tiles may sit next to
//! each other only where the touching edge colors match. Each tile becomes a
//! 3x3 image: black corners, gray center, the four edge colors at the edge
//! midpoints. A tiling becomes the block concatenation of its tiles.
//! Because the structural black/gray symbols are reserved and never valid
//! colors, an encoded tile block can only ever match at tile-aligned
//! positions, so cover candidates over the encoding are restricted to
//! dimensions that are multiples of 3.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cover1d::minimal_cover_1d;
use crate::decide::is_cover;
use crate::error::{Error, Result};
use crate::grid::{Alphabet, Image, SymbolId};
use crate::minimize::{build_prune_matrix, CoverCandidate};

/// Reserved structural symbol for tile corners.
pub const BLACK_TOKEN: &str = "__BLACK__";
/// Reserved structural symbol for tile centers.
pub const GRAY_TOKEN: &str = "__GRAY__";

/// One Wang tile: a color id per edge, drawn from the owning set's colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WangTile {
    pub north: SymbolId,
    pub east: SymbolId,
    pub south: SymbolId,
    pub west: SymbolId,
}

/// A named collection of tiles over one color alphabet.
#[derive(Debug, Default)]
pub struct WangTileSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
    tiles: Vec<WangTile>,
    colors: Alphabet,
}

impl WangTileSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a tile by name with edge color tokens in N, E, S, W order.
    pub fn add_tile(
        &mut self,
        name: &str,
        north: &str,
        east: &str,
        south: &str,
        west: &str,
    ) -> Result<usize> {
        if self.index.contains_key(name) {
            return Err(Error::DuplicateTile {
                name: name.to_string(),
            });
        }
        let mut intern = |token: &str| -> Result<SymbolId> {
            if token == BLACK_TOKEN || token == GRAY_TOKEN {
                return Err(Error::ReservedColor {
                    token: token.to_string(),
                });
            }
            self.colors.intern(token)
        };
        let tile = WangTile {
            north: intern(north)?,
            east: intern(east)?,
            south: intern(south)?,
            west: intern(west)?,
        };
        let idx = self.tiles.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), idx);
        self.tiles.push(tile);
        Ok(idx)
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tile(&self, index: usize) -> &WangTile {
        &self.tiles[index]
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn colors(&self) -> &Alphabet {
        &self.colors
    }

    fn color_token(&self, id: SymbolId) -> &str {
        self.colors.token(id)
    }

    /// The 3x3 image of one tile:
    ///
    /// ```text
    /// BLACK  north  BLACK
    /// west   GRAY   east
    /// BLACK  south  BLACK
    /// ```
    pub fn tile_image(&self, tile: &WangTile) -> Image {
        let tokens = [
            BLACK_TOKEN,
            self.color_token(tile.north),
            BLACK_TOKEN,
            self.color_token(tile.west),
            GRAY_TOKEN,
            self.color_token(tile.east),
            BLACK_TOKEN,
            self.color_token(tile.south),
            BLACK_TOKEN,
        ];
        Image::from_tokens(3, 3, tokens).expect("tile tokens are valid")
    }

    /// Inverse of [`WangTileSet::tile_image`].
    pub fn tile_from_image(&self, image: &Image) -> Result<WangTile> {
        if image.dims() != (3, 3) {
            return Err(Error::NotATileImage {
                reason: format!("expected a 3x3 image, got {}x{}", image.height(), image.width()),
            });
        }
        for (i, j) in [(0, 0), (0, 2), (2, 0), (2, 2)] {
            if image.token_at(i, j) != BLACK_TOKEN {
                return Err(Error::NotATileImage {
                    reason: format!("corner ({i}, {j}) is not the reserved black symbol"),
                });
            }
        }
        if image.token_at(1, 1) != GRAY_TOKEN {
            return Err(Error::NotATileImage {
                reason: "center is not the reserved gray symbol".to_string(),
            });
        }
        let edge = |i: usize, j: usize| -> Result<SymbolId> {
            self.colors
                .id_of(image.token_at(i, j))
                .ok_or_else(|| Error::NotATileImage {
                    reason: format!("edge color {:?} is not in the color alphabet", image.token_at(i, j)),
                })
        };
        Ok(WangTile {
            north: edge(0, 1)?,
            east: edge(1, 2)?,
            south: edge(2, 1)?,
            west: edge(1, 0)?,
        })
    }
}

/// An adjacency-valid grid of tiles from one set.
///
/// Horizontal neighbors agree on their east/west colors and vertical
/// neighbors on their south/north colors; violations are rejected at
/// construction, naming the offending edge.
#[derive(Debug)]
pub struct WangTiling {
    set: Arc<WangTileSet>,
    rows: usize,
    cols: usize,
    grid: Vec<usize>,
}

impl WangTiling {
    pub fn new(set: WangTileSet, rows: usize, cols: usize, grid: Vec<usize>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension);
        }
        if grid.len() != rows * cols {
            return Err(Error::CellCountMismatch {
                expected: rows * cols,
                found: grid.len(),
            });
        }
        for &idx in &grid {
            if idx >= set.len() {
                return Err(Error::TileIndexOutOfRange {
                    index: idx,
                    len: set.len(),
                });
            }
        }
        let tiling = Self {
            set: Arc::new(set),
            rows,
            cols,
            grid,
        };
        tiling.validate_adjacency()?;
        Ok(tiling)
    }

    fn validate_adjacency(&self) -> Result<()> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let here = self.tile_at(r, c);
                if c + 1 < self.cols {
                    let right = self.tile_at(r, c + 1);
                    if here.east != right.west {
                        return Err(Error::Adjacency {
                            first: (r, c),
                            second: (r, c + 1),
                            first_color: self.set.color_token(here.east).to_string(),
                            second_color: self.set.color_token(right.west).to_string(),
                        });
                    }
                }
                if r + 1 < self.rows {
                    let below = self.tile_at(r + 1, c);
                    if here.south != below.north {
                        return Err(Error::Adjacency {
                            first: (r, c),
                            second: (r + 1, c),
                            first_color: self.set.color_token(here.south).to_string(),
                            second_color: self.set.color_token(below.north).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&self) -> &WangTileSet {
        &self.set
    }

    pub fn tile_index(&self, row: usize, col: usize) -> usize {
        assert!(row < self.rows && col < self.cols, "tile out of range");
        self.grid[row * self.cols + col]
    }

    pub fn tile_at(&self, row: usize, col: usize) -> &WangTile {
        self.set.tile(self.tile_index(row, col))
    }

    pub fn tile_indices(&self) -> &[usize] {
        &self.grid
    }

    /// Block concatenation of the tile encodings: a `3*rows x 3*cols` image.
    /// No blending: adjacent edge colors appear side by side.
    pub fn to_image(&self) -> Image {
        let height = 3 * self.rows;
        let width = 3 * self.cols;
        let mut tokens: Vec<&str> = Vec::with_capacity(height * width);
        for r in 0..self.rows {
            for sub in 0..3 {
                for c in 0..self.cols {
                    let tile = self.tile_at(r, c);
                    let row: [&str; 3] = match sub {
                        0 => [BLACK_TOKEN, self.set.color_token(tile.north), BLACK_TOKEN],
                        1 => [
                            self.set.color_token(tile.west),
                            GRAY_TOKEN,
                            self.set.color_token(tile.east),
                        ],
                        _ => [BLACK_TOKEN, self.set.color_token(tile.south), BLACK_TOKEN],
                    };
                    tokens.extend_from_slice(&row);
                }
            }
        }
        Image::from_tokens(height, width, tokens).expect("tile tokens are valid")
    }
}

/// Smallest tile-aligned cover of the tiling, in tile units.
///
/// Single-row tilings are solved directly as a 1D cover over whole-tile
/// letters; taller tilings search the encoded image over candidates whose
/// dimensions are multiples of 3. The two routes agree on single rows.
pub fn minimal_wang_cover(tiling: &WangTiling) -> CoverCandidate {
    if tiling.rows == 1 {
        let len = minimal_cover_1d(tiling.tile_indices()).expect("tilings are nonempty");
        return CoverCandidate::new(1, len);
    }
    minimal_wang_cover_via_image(tiling)
}

/// The image route, usable for any tiling: encode, then walk tile-aligned
/// candidates by area (ties broken lexicographically), pruning with the
/// encoded image's matrices.
pub fn minimal_wang_cover_via_image(tiling: &WangTiling) -> CoverCandidate {
    let image = tiling.to_image();
    let prune = build_prune_matrix(&image);

    let mut candidates: Vec<CoverCandidate> = Vec::with_capacity(tiling.rows * tiling.cols);
    for a in 1..=tiling.rows {
        for b in 1..=tiling.cols {
            candidates.push(CoverCandidate::new(a, b));
        }
    }
    candidates.sort_by_key(|c| (c.height * c.width, c.height, c.width));

    for candidate in candidates {
        let (h, w) = (3 * candidate.height, 3 * candidate.width);
        if !prune.s_star(h - 1, w - 1) {
            continue;
        }
        if is_cover(&image, h, w).is_covered() {
            return candidate;
        }
    }
    unreachable!("the whole tiling always covers itself")
}
