//! Minimal-cover search over all candidate shapes.
//!
//! Candidates are walked in metric order; the first one that covers wins.
//! Before any decision runs, the pruning matrices knock out shapes that
//! provably cannot cover: if the `h x w` corner covers the text, then each of
//! the first `h` rows is covered by its own width-`w` prefix and each of the
//! first `w` columns by its height-`h` prefix. Cell (0, 0) forces a column of
//! occurrences down the left edge and a run along the top edge, which stamps
//! the corner's rows and columns across the whole text, so a failed row or
//! column indicator anywhere in that corner rules the shape out.

use std::fmt;
use std::sync::Arc;

use crate::cover1d::cover_indicator;
use crate::decide::is_cover;
use crate::grid::{Image, Mask};
use crate::match2d::build_maximal_mask;

/// Shape of a cover candidate: the top-left `height x width` sub-image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverCandidate {
    pub height: usize,
    pub width: usize,
}

impl CoverCandidate {
    pub fn new(height: usize, width: usize) -> Self {
        Self { height, width }
    }
}

/// User-supplied evaluation function over candidate dimensions, with an
/// optional note describing its evaluation cost.
#[derive(Clone)]
pub struct CustomMetric {
    name: String,
    cost_note: Option<String>,
    eval: Arc<dyn Fn(usize, usize) -> f64 + Send + Sync>,
}

impl CustomMetric {
    pub fn new<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(usize, usize) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            cost_note: None,
            eval: Arc::new(eval),
        }
    }

    pub fn with_cost_note(mut self, note: impl Into<String>) -> Self {
        self.cost_note = Some(note.into());
        self
    }
}

impl fmt::Debug for CustomMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomMetric")
            .field("name", &self.name)
            .field("cost_note", &self.cost_note)
            .finish_non_exhaustive()
    }
}

/// Evaluation metric ordering the candidates; smaller is better.
#[derive(Clone, Debug)]
pub enum Metric {
    /// `h * w`
    Area,
    /// `h + w`
    L1,
    /// `max(h, w)`
    Linf,
    Custom(CustomMetric),
}

impl Metric {
    pub fn eval(&self, height: usize, width: usize) -> f64 {
        match self {
            Metric::Area => (height * width) as f64,
            Metric::L1 => (height + width) as f64,
            Metric::Linf => height.max(width) as f64,
            Metric::Custom(custom) => (custom.eval)(height, width),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Metric::Area => "area",
            Metric::L1 => "l1",
            Metric::Linf => "linf",
            Metric::Custom(custom) => &custom.name,
        }
    }

    pub fn cost_note(&self) -> Option<&str> {
        match self {
            Metric::Custom(custom) => custom.cost_note.as_deref(),
            _ => None,
        }
    }
}

/// The pruning matrices for one text.
///
/// All five are `H x W`, 0-based:
/// - `s(i, j)`: row `i` is covered by its length-`j+1` prefix.
/// - `s_prime(i, j)`: column `j` is covered by its height-`i+1` prefix.
/// - `s1`: cumulative AND of `s` down each column.
/// - `s_prime1`: cumulative AND of `s_prime` along each row.
/// - `s_star`: pointwise AND of the two cumulatives; `s_star(h-1, w-1) == 0`
///   certifies that shape `(h, w)` cannot cover the text.
pub struct PruneMatrix {
    height: usize,
    width: usize,
    s: Vec<bool>,
    s_prime: Vec<bool>,
    s1: Vec<bool>,
    s_prime1: Vec<bool>,
    s_star: Vec<bool>,
}

impl PruneMatrix {
    fn at(&self, grid: &[bool], i: usize, j: usize) -> bool {
        assert!(i < self.height && j < self.width, "cell out of range");
        grid[i * self.width + j]
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn s(&self, i: usize, j: usize) -> bool {
        self.at(&self.s, i, j)
    }

    pub fn s_prime(&self, i: usize, j: usize) -> bool {
        self.at(&self.s_prime, i, j)
    }

    pub fn s1(&self, i: usize, j: usize) -> bool {
        self.at(&self.s1, i, j)
    }

    pub fn s_prime1(&self, i: usize, j: usize) -> bool {
        self.at(&self.s_prime1, i, j)
    }

    pub fn s_star(&self, i: usize, j: usize) -> bool {
        self.at(&self.s_star, i, j)
    }

    /// Whether shape `(h, w)` survives pruning.
    pub fn keeps(&self, candidate: CoverCandidate) -> bool {
        self.s_star(candidate.height - 1, candidate.width - 1)
    }

    /// Number of set bits in `s_star`.
    pub fn unpruned_count(&self) -> usize {
        self.s_star.iter().filter(|&&b| b).count()
    }
}

/// Builds the pruning matrices from per-row and per-column cover indicators
/// in `O(WH)` plus the indicator costs.
pub fn build_prune_matrix(text: &Image) -> PruneMatrix {
    let (height, width) = text.dims();
    let mut s = vec![false; height * width];
    let mut s_prime = vec![false; height * width];

    for i in 0..height {
        let ind = cover_indicator(text.row(i)).expect("rows are nonempty");
        for j in 0..width {
            s[i * width + j] = ind.covers(j + 1);
        }
    }
    let mut column = Vec::with_capacity(height);
    for j in 0..width {
        column.clear();
        column.extend((0..height).map(|i| text.get(i, j)));
        let ind = cover_indicator(&column).expect("columns are nonempty");
        for i in 0..height {
            s_prime[i * width + j] = ind.covers(i + 1);
        }
    }

    let mut s1 = s.clone();
    for i in 1..height {
        for j in 0..width {
            s1[i * width + j] = s1[i * width + j] && s1[(i - 1) * width + j];
        }
    }
    let mut s_prime1 = s_prime.clone();
    for i in 0..height {
        for j in 1..width {
            s_prime1[i * width + j] = s_prime1[i * width + j] && s_prime1[i * width + j - 1];
        }
    }
    let s_star: Vec<bool> = s1
        .iter()
        .zip(&s_prime1)
        .map(|(&a, &b)| a && b)
        .collect();

    debug_assert!(s_star[height * width - 1], "the trivial candidate is never pruned");
    PruneMatrix {
        height,
        width,
        s,
        s_prime,
        s1,
        s_prime1,
        s_star,
    }
}

/// All `(h, w)` shapes in `{1..H} x {1..W}`, sorted ascending by metric value
/// with ties broken by `(h, w)` lexicographically. Deterministic.
pub fn enumerate_candidates(height: usize, width: usize, metric: &Metric) -> Vec<CoverCandidate> {
    let mut candidates = Vec::with_capacity(height * width);
    for h in 1..=height {
        for w in 1..=width {
            candidates.push(CoverCandidate::new(h, w));
        }
    }
    candidates.sort_by(|a, b| {
        metric
            .eval(a.height, a.width)
            .total_cmp(&metric.eval(b.height, b.width))
            .then_with(|| a.cmp(b))
    });
    candidates
}

/// Search knobs for [`minimal_cover_with`].
#[derive(Clone, Copy, Debug)]
pub struct MinimizeOptions {
    pub use_prune: bool,
    /// Number of candidate decisions run concurrently; `0` and `1` both mean
    /// sequential. The winner is identical regardless, though a parallel run
    /// may check a few candidates past it.
    pub threads: usize,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        Self {
            use_prune: true,
            threads: 0,
        }
    }
}

/// Result of a minimal-cover search.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverReport {
    pub best: CoverCandidate,
    pub eval_value: f64,
    pub candidates_checked: u64,
    pub candidates_pruned: u64,
    /// Maximal mask of the winning cover.
    pub mask: Mask,
    pub metric_name: String,
    pub cost_note: Option<String>,
}

/// Finds the metric-minimal cover of `text`.
///
/// Every candidate shape with a smaller metric value than the winner fails
/// the cover check; the trivial shape `(H, W)` always covers and is never
/// pruned, so the search always terminates with a result.
pub fn minimal_cover(text: &Image, metric: &Metric, use_prune: bool) -> CoverReport {
    minimal_cover_with(
        text,
        metric,
        MinimizeOptions {
            use_prune,
            threads: 0,
        },
    )
}

pub fn minimal_cover_with(text: &Image, metric: &Metric, options: MinimizeOptions) -> CoverReport {
    let (height, width) = text.dims();
    let prune = options.use_prune.then(|| build_prune_matrix(text));
    let candidates = enumerate_candidates(height, width, metric);

    let mut checked = 0u64;
    let mut pruned = 0u64;
    let mut winner: Option<CoverCandidate> = None;

    if options.threads <= 1 {
        for &candidate in &candidates {
            if let Some(matrix) = &prune {
                if !matrix.keeps(candidate) {
                    pruned += 1;
                    continue;
                }
            }
            checked += 1;
            if is_cover(text, candidate.height, candidate.width).is_covered() {
                winner = Some(candidate);
                break;
            }
        }
    } else {
        let mut block: Vec<CoverCandidate> = Vec::with_capacity(options.threads);
        let mut stream = candidates.iter().copied();
        'search: loop {
            block.clear();
            for candidate in stream.by_ref() {
                if let Some(matrix) = &prune {
                    if !matrix.keeps(candidate) {
                        pruned += 1;
                        continue;
                    }
                }
                block.push(candidate);
                if block.len() == options.threads {
                    break;
                }
            }
            if block.is_empty() {
                break;
            }
            checked += block.len() as u64;
            let covered: Vec<bool> = std::thread::scope(|scope| {
                let handles: Vec<_> = block
                    .iter()
                    .map(|&c| scope.spawn(move || is_cover(text, c.height, c.width).is_covered()))
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
            for (&candidate, &hit) in block.iter().zip(&covered) {
                if hit {
                    winner = Some(candidate);
                    break 'search;
                }
            }
        }
    }

    let best = winner.expect("the full text always covers itself");
    let candidate_image = text
        .sub_image(best.height, best.width)
        .expect("winner fits the text");
    let mask = build_maximal_mask(text, &candidate_image).expect("winner fits the text");
    CoverReport {
        best,
        eval_value: metric.eval(best.height, best.width),
        candidates_checked: checked,
        candidates_pruned: pruned,
        mask,
        metric_name: metric.name().to_string(),
        cost_note: metric.cost_note().map(str::to_string),
    }
}

/// How much of the candidate space survives pruning for this text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PruneStats {
    pub unpruned: usize,
    pub total: usize,
}

pub fn prune_statistics(text: &Image) -> PruneStats {
    let matrix = build_prune_matrix(text);
    PruneStats {
        unpruned: matrix.unpruned_count(),
        total: text.height() * text.width(),
    }
}

/// Cover decision for a candidate shape as a plain bool.
pub fn candidate_covers(text: &Image, candidate: CoverCandidate) -> bool {
    is_cover(text, candidate.height, candidate.width).is_covered()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unary_prune_matrix_all_ones() {
        let text = Image::from_chars(&["aaa", "aaa", "aaa"]).unwrap();
        let matrix = build_prune_matrix(&text);
        for i in 0..3 {
            for j in 0..3 {
                assert!(matrix.s_star(i, j));
            }
        }
        assert_eq!(matrix.unpruned_count(), 9);
    }

    #[test]
    fn single_row_star_equals_indicator() {
        let text = Image::from_chars(&["abaababaaba"]).unwrap();
        let matrix = build_prune_matrix(&text);
        let ind = cover_indicator(text.row(0)).unwrap();
        for j in 0..11 {
            assert_eq!(matrix.s_star(0, j), ind.covers(j + 1));
            assert!(matrix.s_prime(0, j));
        }
    }

    #[test]
    fn two_by_two_star_by_hand() {
        let text = Image::from_chars(&["ab", "ba"]).unwrap();
        let matrix = build_prune_matrix(&text);
        let star: Vec<Vec<bool>> = (0..2)
            .map(|i| (0..2).map(|j| matrix.s_star(i, j)).collect())
            .collect();
        assert_eq!(star, vec![vec![false, false], vec![false, true]]);
        assert_eq!(
            prune_statistics(&text),
            PruneStats {
                unpruned: 1,
                total: 4
            }
        );
    }

    #[test]
    fn last_row_and_column_of_indicators_are_set() {
        let text = Image::from_chars(&["abc", "cab", "bca"]).unwrap();
        let matrix = build_prune_matrix(&text);
        for i in 0..3 {
            assert!(matrix.s(i, 2));
        }
        for j in 0..3 {
            assert!(matrix.s_prime(2, j));
        }
        assert!(matrix.s_star(2, 2));
    }

    #[test]
    fn star_is_monotone_under_the_cumulatives() {
        let text = Image::from_chars(&["abab", "baba", "abab"]).unwrap();
        let matrix = build_prune_matrix(&text);
        for i in 0..3 {
            for j in 0..4 {
                assert!(matrix.s_star(i, j) <= matrix.s1(i, j));
                assert!(matrix.s1(i, j) <= matrix.s(i, j));
                assert!(matrix.s_star(i, j) <= matrix.s_prime1(i, j));
                assert!(matrix.s_prime1(i, j) <= matrix.s_prime(i, j));
            }
        }
    }

    #[test]
    fn candidate_order_area() {
        let order = enumerate_candidates(2, 2, &Metric::Area);
        assert_eq!(
            order,
            vec![
                CoverCandidate::new(1, 1),
                CoverCandidate::new(1, 2),
                CoverCandidate::new(2, 1),
                CoverCandidate::new(2, 2),
            ]
        );
    }

    #[test]
    fn candidate_order_linf() {
        let order = enumerate_candidates(2, 2, &Metric::Linf);
        assert_eq!(
            order,
            vec![
                CoverCandidate::new(1, 1),
                CoverCandidate::new(1, 2),
                CoverCandidate::new(2, 1),
                CoverCandidate::new(2, 2),
            ]
        );
    }

    #[test]
    fn candidate_order_l1_single_row() {
        let order = enumerate_candidates(1, 3, &Metric::L1);
        assert_eq!(
            order,
            vec![
                CoverCandidate::new(1, 1),
                CoverCandidate::new(1, 2),
                CoverCandidate::new(1, 3),
            ]
        );
    }

    #[test]
    fn unary_image_minimal_is_single_cell() {
        let text = Image::from_chars(&["aaaaa"; 4]).unwrap();
        let report = minimal_cover(&text, &Metric::Area, true);
        assert_eq!(report.best, CoverCandidate::new(1, 1));
        assert_eq!(report.eval_value, 1.0);
    }

    #[test]
    fn quasi_periodic_row_minimal_cover() {
        let text = Image::from_chars(&["abaababaaba"]).unwrap();
        let report = minimal_cover(&text, &Metric::Area, true);
        assert_eq!(report.best, CoverCandidate::new(1, 3));
        assert_eq!(report.eval_value, 3.0);
        // Pruned search only ever checks actual covers of a single row.
        assert_eq!(report.candidates_checked, 1);
    }

    #[test]
    fn two_by_two_needs_whole_image() {
        let text = Image::from_chars(&["ab", "ba"]).unwrap();
        for metric in [Metric::Area, Metric::L1, Metric::Linf] {
            let report = minimal_cover(&text, &metric, true);
            assert_eq!(report.best, CoverCandidate::new(2, 2), "metric {}", metric.name());
        }
    }

    #[test]
    fn block_tiling_finds_the_block() {
        let text = Image::from_chars(&["abab", "cdcd", "abab", "cdcd"]).unwrap();
        let report = minimal_cover(&text, &Metric::Area, true);
        assert_eq!(report.best, CoverCandidate::new(2, 2));
        assert_eq!(report.mask.point_set(), [(0, 0), (0, 2), (2, 0), (2, 2)].into_iter().collect());
    }

    #[test]
    fn prune_flag_does_not_change_the_result() {
        let text = Image::from_chars(&["abab", "cdcd", "abab", "cdcd"]).unwrap();
        for metric in [Metric::Area, Metric::L1, Metric::Linf] {
            let with = minimal_cover(&text, &metric, true);
            let without = minimal_cover(&text, &metric, false);
            assert_eq!(with.best, without.best);
            assert_eq!(with.eval_value, without.eval_value);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let text = Image::from_chars(&["abab", "baba", "abab"]).unwrap();
        let a = minimal_cover(&text, &Metric::Area, true);
        let b = minimal_cover(&text, &Metric::Area, true);
        assert_eq!(a, b);
    }

    #[test]
    fn custom_metric_is_pruned_too() {
        let text = Image::from_chars(&["abab", "cdcd", "abab", "cdcd"]).unwrap();
        let metric = Metric::Custom(
            CustomMetric::new("tall-penalty", |h, w| (h * h * w) as f64)
                .with_cost_note("O(1) arithmetic"),
        );
        let with = minimal_cover(&text, &metric, true);
        let without = minimal_cover(&text, &metric, false);
        assert_eq!(with.best, without.best);
        assert_eq!(with.cost_note.as_deref(), Some("O(1) arithmetic"));
        assert!(with.candidates_checked <= without.candidates_checked);
    }

    #[test]
    fn parallel_winner_matches_sequential() {
        let text = Image::from_chars(&["abab", "cdcd", "abab", "cdcd"]).unwrap();
        let sequential = minimal_cover(&text, &Metric::Area, true);
        let parallel = minimal_cover_with(
            &text,
            &Metric::Area,
            MinimizeOptions {
                use_prune: true,
                threads: 4,
            },
        );
        assert_eq!(sequential.best, parallel.best);
        assert_eq!(sequential.eval_value, parallel.eval_value);
    }
}
