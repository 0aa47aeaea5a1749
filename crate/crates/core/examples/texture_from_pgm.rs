//! Extract the repeating texture of a grayscale image: parse a plain PGM
//! and find its minimal-area cover.
//!
//! ```bash
//! cargo run -p coverscan --example texture_from_pgm [FILE.pgm]
//! ```

use coverscan::io::parse_pgm;
use coverscan::{minimal_cover, Metric};

// An 8x8 grayscale swatch: a 4x4 motif repeated in both directions.
const SWATCH: &str = "\
P2
# repeating 4x4 motif
8 8
255
  0  64 128  64   0  64 128  64
 64 255 255 255  64 255 255 255
128 255   0 255 128 255   0 255
 64 255 255 255  64 255 255 255
  0  64 128  64   0  64 128  64
 64 255 255 255  64 255 255 255
128 255   0 255 128 255   0 255
 64 255 255 255  64 255 255 255
";

fn main() {
    let source = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable PGM file"),
        None => SWATCH.to_string(),
    };
    let image = parse_pgm(&source).expect("plain PGM (P2)");
    println!(
        "parsed {}x{} image with {} distinct gray level(s)",
        image.height(),
        image.width(),
        image.alphabet().len()
    );

    let report = minimal_cover(&image, &Metric::Area, true);
    println!(
        "minimal-area texture: {}x{} (checked {} candidate(s), pruned {})",
        report.best.height, report.best.width, report.candidates_checked, report.candidates_pruned
    );

    println!("texture cells:");
    for i in 0..report.best.height {
        let row: Vec<String> = (0..report.best.width)
            .map(|j| format!("{:>3}", image.token_at(i, j)))
            .collect();
        println!("  {}", row.join(" "));
    }
}
