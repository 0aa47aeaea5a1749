//! Inspect the pruning matrices that keep the candidate walk short.
//!
//! A zero at `s_star(h-1, w-1)` proves shape `(h, w)` cannot cover the
//! image, so the minimizer skips it without running the decision.
//!
//! ```bash
//! cargo run -p coverscan --example prune_preview
//! ```

use coverscan::{build_prune_matrix, prune_statistics, Image};

fn show(label: &str, text: &Image) {
    let matrix = build_prune_matrix(text);
    let stats = prune_statistics(text);
    println!("{label} ({}x{}):", text.height(), text.width());
    for i in 0..text.height() {
        let row: String = (0..text.width())
            .map(|j| if matrix.s_star(i, j) { '1' } else { '.' })
            .collect();
        println!("  {row}");
    }
    println!(
        "  {} of {} candidate shapes survive pruning\n",
        stats.unpruned, stats.total
    );
}

fn main() {
    show("uniform image", &Image::from_chars(&["aaaa"; 4]).unwrap());

    show(
        "2x2 block tiling",
        &Image::from_chars(&["abab", "cdcd", "abab", "cdcd"]).unwrap(),
    );

    show(
        "anti-diagonal",
        &Image::from_chars(&["ab", "ba"]).unwrap(),
    );

    // On unstructured data almost everything is pruned: only the trivial
    // shape (and rare coincidences) survive.
    show(
        "unstructured image",
        &Image::from_chars(&["abbba", "babab", "bbaab", "ababb", "aabba"]).unwrap(),
    );
}
