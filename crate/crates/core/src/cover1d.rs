//! Linear-time 1D cover analysis.
//!
//! A prefix of length `l` covers a string `s` of length `n` when every
//! position of `s` lies inside some occurrence of that prefix. Equivalently:
//! the prefix also occurs as a suffix (it is a border, or `l = n`), and no
//! two consecutive occurrence starts are more than `l` apart.
//!
//! [`cover_indicator`] reports this for every prefix length at once, which is
//! what the row/column pruning matrices need, not just the minimum.

use crate::error::{Error, Result};

/// Per-prefix cover flags for one string: `covers(l)` is true iff the
/// length-`l` prefix covers the whole string.
///
/// The full string always covers itself, so `covers(n)` always holds, and
/// every covering prefix shorter than `n` is a border of the string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverIndicator {
    bits: Vec<bool>,
}

impl CoverIndicator {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Whether the length-`len` prefix covers the string (`1 <= len <= n`).
    pub fn covers(&self, len: usize) -> bool {
        assert!(len >= 1 && len <= self.bits.len(), "prefix length out of range");
        self.bits[len - 1]
    }

    /// All covering prefix lengths, ascending.
    pub fn cover_lengths(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Length of the shortest cover.
    pub fn minimal(&self) -> usize {
        self.bits
            .iter()
            .position(|&b| b)
            .map(|k| k + 1)
            .expect("a string always covers itself")
    }
}

/// Longest-common-prefix-with-self table: `z[i]` is the length of the longest
/// common prefix of `s` and `s[i..]`, with `z[0] = n`.
fn z_array<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n];
    z[0] = n;
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        let mut k = if i < r { (r - i).min(z[i - l]) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    z
}

/// Computes the cover flag for every prefix length of `s` in `O(n)`.
///
/// The length-`l` prefix starts exactly at the positions `i` with `z[i] >= l`.
/// Sweeping `l` upward while deleting expired start positions from a linked
/// list keeps, at each level, the exact start set of that prefix; a prefix
/// covers iff the surviving tail is `n - l` (the prefix is also a suffix) and
/// no recorded gap between consecutive starts ever exceeded `l`.
pub fn cover_indicator<T: Eq>(s: &[T]) -> Result<CoverIndicator> {
    let n = s.len();
    if n == 0 {
        return Err(Error::Empty("string"));
    }
    let z = z_array(s);

    // buckets[v] = positions i >= 1 with z[i] == v; they leave the active set
    // when the swept prefix length reaches v + 1.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &v) in z.iter().enumerate().skip(1) {
        buckets[v].push(i);
    }

    let mut prev: Vec<usize> = (0..n).map(|i| i.wrapping_sub(1)).collect();
    let mut next: Vec<usize> = (1..=n).collect();
    let mut tail = n - 1;
    let mut max_gap = 0usize;
    let mut bits = vec![false; n];

    for len in 1..=n {
        for &i in &buckets[len - 1] {
            if i == tail {
                tail = prev[i];
            } else {
                // Interior deletion widens the gap between its neighbors.
                max_gap = max_gap.max(next[i] - prev[i]);
            }
            let (p, nx) = (prev[i], next[i]);
            next[p] = nx;
            if nx < n {
                prev[nx] = p;
            }
        }
        bits[len - 1] = tail == n - len && max_gap <= len;
    }

    Ok(CoverIndicator { bits })
}

/// Length of the shortest cover of `s`.
pub fn minimal_cover_1d<T: Eq>(s: &[T]) -> Result<usize> {
    Ok(cover_indicator(s)?.minimal())
}
