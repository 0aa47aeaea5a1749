//! File formats and the command layer behind the `coverscan` binary.
//!
//! Three text formats are supported:
//!
//! - **grid**: first line `H W`, then `H` lines of `W` whitespace-separated
//!   symbol tokens.
//! - **PGM** (plain `P2` only): each distinct gray value becomes one symbol.
//! - **wang**: a `tileset <count>` header followed by one `name N E S W`
//!   line per tile, then `tiling <rows> <cols>` followed by `rows` lines of
//!   `cols` tile names. Blank lines and `#` comments are allowed.
//!
//! The `cmd_*` functions implement the CLI subcommands: they return the JSON
//! payload plus the process exit code, and parse failures carry line numbers.
//! All reported coordinates are 0-based `(row, col)`. JSON key order is fixed
//! and `elapsed_ms` is always the final key, so output is byte-stable modulo
//! that one field.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::decide::is_cover;
use crate::error::{Error, Result};
use crate::grid::{Image, Mask};
use crate::minimize::{minimal_cover_with, prune_statistics, Metric, MinimizeOptions};
use crate::wang::{minimal_wang_cover, WangTileSet, WangTiling};
use crate::cover1d::cover_indicator;

/// Environment variable capping internal parallelism; `0` (the default)
/// means sequential, which keeps candidate counts reproducible.
pub const THREADS_ENV_VAR: &str = "COVERSCAN_THREADS";

pub fn threads_from_env() -> usize {
    std::env::var(THREADS_ENV_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the grid format. Lines are 1-based in error messages.
pub fn parse_grid(src: &str) -> Result<Image> {
    let mut lines = src.lines().enumerate();
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file, expected an `H W` header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(parse_err(line_no + 1, "header must be exactly `H W`"));
    }
    let height: usize = dims[0]
        .parse()
        .map_err(|_| parse_err(line_no + 1, format!("bad height {:?}", dims[0])))?;
    let width: usize = dims[1]
        .parse()
        .map_err(|_| parse_err(line_no + 1, format!("bad width {:?}", dims[1])))?;
    if height == 0 || width == 0 {
        return Err(parse_err(line_no + 1, "grid dimensions must be at least 1"));
    }

    let mut tokens: Vec<&str> = Vec::with_capacity(height * width);
    let mut rows_read = 0;
    for (line_no, line) in &mut lines {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != width {
            return Err(parse_err(
                line_no + 1,
                format!("expected {width} tokens, found {}", row.len()),
            ));
        }
        tokens.extend(row);
        rows_read += 1;
        if rows_read == height {
            break;
        }
    }
    if rows_read != height {
        return Err(parse_err(
            src.lines().count(),
            format!("expected {height} rows, found {rows_read}"),
        ));
    }
    if let Some((line_no, _)) = lines.find(|(_, line)| !line.trim().is_empty()) {
        return Err(parse_err(line_no + 1, "trailing content after the grid"));
    }
    Image::from_tokens(height, width, tokens)
}

/// Serializes an image in the grid format. `parse_grid` of the output yields
/// an equal image.
pub fn write_grid(image: &Image) -> String {
    let mut out = format!("{} {}\n", image.height(), image.width());
    for i in 0..image.height() {
        for j in 0..image.width() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(image.token_at(i, j));
        }
        out.push('\n');
    }
    out
}

/// Parses plain (ASCII) PGM, magic `P2`. Each distinct gray value becomes
/// one alphabet symbol, so an image with `k` gray levels gets `k` symbols.
pub fn parse_pgm(src: &str) -> Result<Image> {
    let mut tokens: Vec<(&str, usize)> = Vec::new();
    for (idx, line) in src.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        for token in content.split_whitespace() {
            tokens.push((token, idx + 1));
        }
    }
    let mut stream = tokens.iter();
    let (magic, magic_line) = stream
        .next()
        .ok_or_else(|| parse_err(1, "empty file, expected plain PGM"))?;
    if *magic != "P2" {
        return Err(parse_err(
            *magic_line,
            format!("expected magic `P2`, found {magic:?} (binary P5 is not supported)"),
        ));
    }
    let mut next_number = |what: &str| -> Result<(u32, usize)> {
        let (token, line) = stream
            .next()
            .ok_or_else(|| parse_err(src.lines().count().max(1), format!("missing {what}")))?;
        let value = token
            .parse::<u32>()
            .map_err(|_| parse_err(*line, format!("bad {what} {token:?}")))?;
        Ok((value, *line))
    };
    let (width, line) = next_number("width")?;
    let (height, _) = next_number("height")?;
    if width == 0 || height == 0 {
        return Err(parse_err(line, "PGM dimensions must be at least 1"));
    }
    let (maxval, _) = next_number("maxval")?;
    let expected = (width as usize) * (height as usize);
    let mut values: Vec<String> = Vec::with_capacity(expected);
    for _ in 0..expected {
        let (value, line) = next_number("gray value")?;
        if value > maxval {
            return Err(parse_err(
                line,
                format!("gray value {value} exceeds maxval {maxval}"),
            ));
        }
        values.push(value.to_string());
    }
    if let Some((extra, line)) = stream.next() {
        return Err(parse_err(*line, format!("trailing token {extra:?}")));
    }
    Image::from_tokens(height as usize, width as usize, values.iter().map(String::as_str))
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::File {
        path: path.display().to_string(),
        source,
    })
}

/// Reads an image file, sniffing the format: plain PGM when the first token
/// is `P2`, the grid format otherwise.
pub fn load_image(path: &Path) -> Result<Image> {
    let src = read_file(path)?;
    if src.split_whitespace().next() == Some("P2") {
        parse_pgm(&src)
    } else {
        parse_grid(&src)
    }
}

/// Parses the wang format into a validated tiling.
pub fn parse_wang(src: &str) -> Result<WangTiling> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty file, expected a `tileset <count>` header"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 || parts[0] != "tileset" {
        return Err(parse_err(line_no, "expected `tileset <count>`"));
    }
    let count: usize = parts[1]
        .parse()
        .map_err(|_| parse_err(line_no, format!("bad tile count {:?}", parts[1])))?;
    if count == 0 {
        return Err(parse_err(line_no, "a tile set needs at least one tile"));
    }

    let mut set = WangTileSet::new();
    for _ in 0..count {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(src.lines().count(), "missing tile definition"))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(parse_err(line_no, "tile lines are `name N E S W`"));
        }
        set.add_tile(fields[0], fields[1], fields[2], fields[3], fields[4])
            .map_err(|e| parse_err(line_no, e.to_string()))?;
    }

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(src.lines().count(), "missing `tiling <rows> <cols>` header"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "tiling" {
        return Err(parse_err(line_no, "expected `tiling <rows> <cols>`"));
    }
    let rows: usize = parts[1]
        .parse()
        .map_err(|_| parse_err(line_no, format!("bad row count {:?}", parts[1])))?;
    let cols: usize = parts[2]
        .parse()
        .map_err(|_| parse_err(line_no, format!("bad column count {:?}", parts[2])))?;

    let mut grid: Vec<usize> = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(src.lines().count(), format!("expected {rows} tiling rows")))?;
        let names: Vec<&str> = line.split_whitespace().collect();
        if names.len() != cols {
            return Err(parse_err(
                line_no,
                format!("expected {cols} tile names, found {}", names.len()),
            ));
        }
        for name in names {
            let idx = set
                .index_of(name)
                .ok_or_else(|| parse_err(line_no, Error::UnknownTile { name: name.to_string() }.to_string()))?;
            grid.push(idx);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, "trailing content after the tiling grid"));
    }
    WangTiling::new(set, rows, cols, grid)
}

/// Serializes a tiling in the wang format. `parse_wang` of the output yields
/// a tiling with the same tiles and grid.
pub fn write_wang(tiling: &WangTiling) -> String {
    let set = tiling.set();
    let mut out = format!("tileset {}\n", set.len());
    for idx in 0..set.len() {
        let tile = set.tile(idx);
        let colors = set.colors();
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            set.name(idx),
            colors.token(tile.north),
            colors.token(tile.east),
            colors.token(tile.south),
            colors.token(tile.west),
        ));
    }
    out.push_str(&format!("tiling {} {}\n", tiling.rows(), tiling.cols()));
    for r in 0..tiling.rows() {
        for c in 0..tiling.cols() {
            if c > 0 {
                out.push(' ');
            }
            out.push_str(set.name(tiling.tile_index(r, c)));
        }
        out.push('\n');
    }
    out
}

/// JSON payload plus the process exit code for one command invocation.
#[derive(Clone, Debug)]
pub struct CmdOutcome {
    pub stdout: String,
    pub exit_code: i32,
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

#[derive(Serialize)]
struct CheckJson {
    covered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    h: usize,
    w: usize,
    elapsed_ms: f64,
}

/// `coverscan check`: does the top-left `h x w` sub-image cover the text?
///
/// The shape comes either from an explicit `--dims h w` or from a pattern
/// file; a pattern that differs from the top-left sub-image can never cover
/// the text's origin, so it is rejected with a reason without running the
/// decision. Exit code 0 when covered, 1 when not.
pub fn cmd_check(
    text_path: &Path,
    pattern_path: Option<&Path>,
    dims: Option<(usize, usize)>,
) -> Result<CmdOutcome> {
    let start = Instant::now();
    let text = load_image(text_path)?;
    let (h, w, pattern) = match (pattern_path, dims) {
        (Some(path), None) => {
            let pattern = load_image(path)?;
            (pattern.height(), pattern.width(), Some(pattern))
        }
        (None, Some((h, w))) => (h, w, None),
        _ => {
            return Err(Error::InvalidArgs {
                message: "provide either a pattern file or --dims H W (not both)".to_string(),
            })
        }
    };
    if h == 0 || w == 0 {
        return Err(Error::InvalidArgs {
            message: "candidate dimensions must be at least 1".to_string(),
        });
    }

    let decision = match &pattern {
        Some(pattern) if h <= text.height() && w <= text.width() => {
            if *pattern != text.sub_image(h, w).expect("dimensions checked") {
                crate::decide::CoverDecision::uncovered_with_note(
                    (0, 0),
                    "pattern differs from top-left sub-image".to_string(),
                )
            } else {
                is_cover(&text, h, w)
            }
        }
        _ => is_cover(&text, h, w),
    };

    let payload = CheckJson {
        covered: decision.is_covered(),
        witness: decision.witness().map(|(r, c)| [r, c]),
        reason: decision.note().map(str::to_string),
        h,
        w,
        elapsed_ms: elapsed_ms(start),
    };
    Ok(CmdOutcome {
        stdout: serde_json::to_string(&payload).expect("serializable"),
        exit_code: if decision.is_covered() { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct PruneStatsJson {
    unpruned: usize,
    total: usize,
}

#[derive(Serialize)]
struct MincoverJson {
    best: [usize; 2],
    eval: f64,
    metric: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cost_note: Option<String>,
    candidates_checked: u64,
    candidates_pruned: u64,
    mask: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prune_stats: Option<PruneStatsJson>,
    elapsed_ms: f64,
}

fn mask_rows(mask: &Mask) -> Vec<String> {
    (0..mask.height())
        .map(|i| {
            (0..mask.width())
                .map(|j| if mask.get(i, j) { '1' } else { '0' })
                .collect()
        })
        .collect()
}

/// `coverscan mincover`: metric-minimal cover of a grid or PGM file.
pub fn cmd_mincover(
    text_path: &Path,
    metric: &Metric,
    no_prune: bool,
    stats: bool,
    threads: usize,
) -> Result<CmdOutcome> {
    let start = Instant::now();
    let text = load_image(text_path)?;
    let report = minimal_cover_with(
        &text,
        metric,
        MinimizeOptions {
            use_prune: !no_prune,
            threads,
        },
    );
    let payload = MincoverJson {
        best: [report.best.height, report.best.width],
        eval: report.eval_value,
        metric: report.metric_name.clone(),
        cost_note: report.cost_note.clone(),
        candidates_checked: report.candidates_checked,
        candidates_pruned: report.candidates_pruned,
        mask: mask_rows(&report.mask),
        prune_stats: stats.then(|| {
            let s = prune_statistics(&text);
            PruneStatsJson {
                unpruned: s.unpruned,
                total: s.total,
            }
        }),
        elapsed_ms: elapsed_ms(start),
    };
    Ok(CmdOutcome {
        stdout: serde_json::to_string(&payload).expect("serializable"),
        exit_code: 0,
    })
}

#[derive(Serialize)]
struct Covers1dJson {
    length: usize,
    cover_lengths: Vec<usize>,
    minimal: usize,
}

/// `coverscan covers1d`: cover lengths of a literal string, one symbol per
/// character.
pub fn cmd_covers1d(s: &str) -> Result<CmdOutcome> {
    let symbols: Vec<char> = s.chars().collect();
    let indicator = cover_indicator(&symbols)?;
    let payload = Covers1dJson {
        length: symbols.len(),
        cover_lengths: indicator.cover_lengths(),
        minimal: indicator.minimal(),
    };
    Ok(CmdOutcome {
        stdout: serde_json::to_string(&payload).expect("serializable"),
        exit_code: 0,
    })
}

#[derive(Serialize)]
struct WangCheckJson {
    valid: bool,
    rows: usize,
    cols: usize,
    tiles: usize,
}

/// `coverscan wang check`: load and validate a wang file. Invalid adjacency
/// or unknown tile names surface as errors (exit 2) naming the location.
pub fn cmd_wang_check(path: &Path) -> Result<CmdOutcome> {
    let src = read_file(path)?;
    let tiling = parse_wang(&src)?;
    let payload = WangCheckJson {
        valid: true,
        rows: tiling.rows(),
        cols: tiling.cols(),
        tiles: tiling.set().len(),
    };
    Ok(CmdOutcome {
        stdout: serde_json::to_string(&payload).expect("serializable"),
        exit_code: 0,
    })
}

#[derive(Serialize)]
struct WangMincoverJson {
    cover: [usize; 2],
    rows: usize,
    cols: usize,
    elapsed_ms: f64,
}

/// `coverscan wang mincover`: smallest tile-aligned cover, in tile units.
pub fn cmd_wang_mincover(path: &Path) -> Result<CmdOutcome> {
    let start = Instant::now();
    let src = read_file(path)?;
    let tiling = parse_wang(&src)?;
    let cover = minimal_wang_cover(&tiling);
    let payload = WangMincoverJson {
        cover: [cover.height, cover.width],
        rows: tiling.rows(),
        cols: tiling.cols(),
        elapsed_ms: elapsed_ms(start),
    };
    Ok(CmdOutcome {
        stdout: serde_json::to_string(&payload).expect("serializable"),
        exit_code: 0,
    })
}
