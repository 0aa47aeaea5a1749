//! Find the minimal cover of an image under the three built-in metrics and
//! a custom one.
//!
//! ```bash
//! cargo run -p coverscan --example minimal_cover
//! ```

use coverscan::{minimal_cover, CustomMetric, Image, Metric};

fn main() {
    // A 2x3 brick repeated over a 6x6 canvas.
    let text = Image::from_chars(&[
        "abcabc", //
        "defdef",
        "abcabc",
        "defdef",
        "abcabc",
        "defdef",
    ])
    .unwrap();

    let metrics = [
        Metric::Area,
        Metric::L1,
        Metric::Linf,
        Metric::Custom(
            CustomMetric::new("width-heavy", |h, w| (h + 3 * w) as f64)
                .with_cost_note("O(1) arithmetic"),
        ),
    ];

    for metric in &metrics {
        let report = minimal_cover(&text, metric, true);
        println!(
            "{:>12}: best {}x{} (value {}), checked {} candidate(s), pruned {}",
            report.metric_name,
            report.best.height,
            report.best.width,
            report.eval_value,
            report.candidates_checked,
            report.candidates_pruned,
        );
    }

    let report = minimal_cover(&text, &Metric::Area, true);
    println!(
        "\noccurrences of the {}x{} winner:",
        report.best.height, report.best.width
    );
    for i in 0..report.mask.height() {
        let row: String = (0..report.mask.width())
            .map(|j| if report.mask.get(i, j) { '1' } else { '.' })
            .collect();
        println!("  {row}");
    }
}
