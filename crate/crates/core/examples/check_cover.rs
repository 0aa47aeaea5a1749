//! Decide whether a candidate shape covers an image.
//!
//! ```bash
//! cargo run -p coverscan --example check_cover
//! ```

use coverscan::{coverage_paint_oracle, is_cover, Image};

fn report(text: &Image, h: usize, w: usize) {
    let decision = is_cover(text, h, w);
    print!("candidate {h}x{w}: ");
    match decision.witness() {
        None => println!("covers"),
        Some((r, c)) => println!("does not cover, first uncovered cell ({r}, {c})"),
    }
    // The quadratic painting oracle reaches the same verdict.
    assert_eq!(
        decision.outcome(),
        coverage_paint_oracle(text, h, w).outcome()
    );
}

fn main() {
    // A 2x2 block tiled twice in each direction, with one corrupted cell.
    let clean = Image::from_chars(&[
        "abab", //
        "cdcd",
        "abab",
        "cdcd",
    ])
    .unwrap();
    let corrupted = Image::from_chars(&[
        "abab", //
        "cdcd",
        "abab",
        "cdcx",
    ])
    .unwrap();

    println!("clean 4x4 tiling:");
    for (h, w) in [(1, 1), (2, 2), (2, 4), (4, 4)] {
        report(&clean, h, w);
    }

    println!("\nsame image with one corrupted cell:");
    for (h, w) in [(2, 2), (4, 4)] {
        report(&corrupted, h, w);
    }

    // Quasi-periodicity in a single row: "aba" covers this string even
    // though the string is not periodic.
    let row = Image::from_chars(&["abaababaaba"]).unwrap();
    println!("\nsingle row \"abaababaaba\":");
    report(&row, 1, 3);
}
