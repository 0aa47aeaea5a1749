//! Shared oracles and generators for the integration suites. Everything here
//! is deliberately independent of the implementation paths it checks:
//! matching is direct cell comparison, coverage is window painting.

#![allow(dead_code)]

use coverscan::{Image, Mask, WangTileSet, WangTiling};
use rand::rngs::StdRng;
use rand::Rng;

const LETTERS: [&str; 4] = ["a", "b", "c", "d"];

pub fn random_image(rng: &mut StdRng, height: usize, width: usize, sigma: usize) -> Image {
    let tokens: Vec<&str> = (0..height * width)
        .map(|_| LETTERS[rng.random_range(0..sigma)])
        .collect();
    Image::from_tokens(height, width, tokens).unwrap()
}

/// Image whose cells come from a binary word, row-major; used for exhaustive
/// sweeps over all small binary images.
pub fn image_from_word(height: usize, width: usize, word: u32) -> Image {
    let tokens: Vec<&str> = (0..height * width)
        .map(|k| LETTERS[((word >> k) & 1) as usize])
        .collect();
    Image::from_tokens(height, width, tokens).unwrap()
}

/// Periodic tiling of a random block, so every tile-aligned occurrence is
/// guaranteed and cover decisions run their full course.
pub fn tiled_image(rng: &mut StdRng, height: usize, width: usize, block: usize) -> Image {
    let cells: Vec<usize> = (0..block * block).map(|_| rng.random_range(0..2)).collect();
    let tokens: Vec<&str> = (0..height * width)
        .map(|k| {
            let (i, j) = (k / width, k % width);
            LETTERS[cells[(i % block) * block + (j % block)]]
        })
        .collect();
    Image::from_tokens(height, width, tokens).unwrap()
}

/// Direct `O(WHwh)` matcher.
pub fn naive_maximal_mask(text: &Image, pattern: &Image) -> Mask {
    let (height, width) = text.dims();
    let (ph, pw) = pattern.dims();
    let mut bits = vec![false; height * width];
    for i in 0..=height - ph {
        'next: for j in 0..=width - pw {
            for a in 0..ph {
                for b in 0..pw {
                    if text.token_at(i + a, j + b) != pattern.token_at(a, b) {
                        continue 'next;
                    }
                }
            }
            bits[i * width + j] = true;
        }
    }
    Mask::new(height, width, ph, pw, bits).unwrap()
}

/// Brute-force 1D cover lengths by slice comparison and window painting.
pub fn brute_cover_lengths<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut out = Vec::new();
    for len in 1..=n {
        let mut painted = vec![false; n];
        for start in 0..=n - len {
            if s[start..start + len] == s[..len] {
                for cell in painted.iter_mut().skip(start).take(len) {
                    *cell = true;
                }
            }
        }
        if painted.iter().all(|&p| p) {
            out.push(len);
        }
    }
    out
}

pub fn brute_minimal_cover_1d<T: Eq>(s: &[T]) -> usize {
    *brute_cover_lengths(s).first().expect("a string covers itself")
}

/// Does any set bit of `mask` fall inside the support window of `(i, j)`?
/// Computed by direct window scan.
pub fn window_has_support(mask: &Mask, i: usize, j: usize) -> bool {
    let h = mask.pattern_height();
    let w = mask.pattern_width();
    let top = i.saturating_sub(h - 1);
    let left = j.saturating_sub(w - 1);
    (top..=i).any(|a| (left..=j).any(|b| mask.get(a, b)))
}

/// Random adjacency-valid single-row tiling over `colors` edge colors:
/// consecutive tiles chain west = previous east, everything else free.
pub fn random_row_tiling(rng: &mut StdRng, n: usize, colors: usize) -> WangTiling {
    let palette: Vec<String> = (0..colors).map(|c| c.to_string()).collect();
    let mut set = WangTileSet::new();
    let mut seen: std::collections::HashMap<(usize, usize, usize, usize), usize> =
        std::collections::HashMap::new();
    let mut grid = Vec::with_capacity(n);
    let mut west = rng.random_range(0..colors);
    for _ in 0..n {
        let north = rng.random_range(0..colors);
        let east = rng.random_range(0..colors);
        let south = rng.random_range(0..colors);
        let key = (north, east, south, west);
        let next_name = format!("t{}", seen.len());
        let idx = *seen.entry(key).or_insert_with(|| {
            set.add_tile(
                &next_name,
                &palette[north],
                &palette[east],
                &palette[south],
                &palette[west],
            )
            .unwrap()
        });
        grid.push(idx);
        west = east;
    }
    WangTiling::new(set, 1, n, grid).unwrap()
}

/// The JSON payload with the trailing `elapsed_ms` field removed; panics if
/// the field is missing or not last.
pub fn strip_elapsed(json: &str) -> &str {
    let idx = json
        .find(",\"elapsed_ms\":")
        .expect("payload has an elapsed_ms field");
    &json[..idx]
}
