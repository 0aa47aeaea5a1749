//! Visualize the nearest-support table behind the cover decision.
//!
//! For each cell, the decision keeps the closest occurrence start inside
//! the cell's support window; a cell with an empty window is the mismatch
//! witness.
//!
//! ```bash
//! cargo run -p coverscan --example support_grid
//! ```

use coverscan::{build_maximal_mask, is_cover, Image, SupportGrid};

fn show(text: &Image, h: usize, w: usize) {
    let candidate = text.sub_image(h, w).unwrap();
    let mask = build_maximal_mask(text, &candidate).unwrap();
    let grid = SupportGrid::from_mask(&mask);

    println!(
        "candidate {h}x{w}: occurrences start at {:?}",
        mask.set_positions().collect::<Vec<_>>()
    );
    for i in 0..text.height() {
        let row: Vec<String> = (0..text.width())
            .map(|j| match grid.entry(i, j) {
                Some((a, b)) => format!("({a},{b})"),
                None => "  -  ".to_string(),
            })
            .collect();
        println!("  {}", row.join(" "));
    }
    let decision = is_cover(text, h, w);
    match decision.witness() {
        None => println!("=> covers\n"),
        Some(cell) => println!("=> first unsupported cell {cell:?}\n"),
    }
}

fn main() {
    let text = Image::from_chars(&[
        "abaab", //
        "ababa",
        "abaab",
    ])
    .unwrap();

    show(&text, 1, 1);
    show(&text, 3, 2);
    show(&text, 3, 5);
}
