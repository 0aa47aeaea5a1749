//! 1D cover indicators: which prefixes of a string cover it?
//!
//! ```bash
//! cargo run -p coverscan --example cover_strings [STRING...]
//! ```

use coverscan::cover_indicator;

fn analyze(s: &str) {
    let symbols: Vec<char> = s.chars().collect();
    match cover_indicator(&symbols) {
        Ok(indicator) => {
            let lengths = indicator.cover_lengths();
            println!("{s:?} (length {}):", symbols.len());
            for len in &lengths {
                let prefix: String = symbols[..*len].iter().collect();
                println!("  {len:>3}  {prefix:?}");
            }
            println!("  minimal cover length: {}\n", indicator.minimal());
        }
        Err(err) => println!("{s:?}: {err}\n"),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        for s in ["abaababaaba", "aaaa", "abcd", "abaabaabaaba"] {
            analyze(s);
        }
    } else {
        for s in &args {
            analyze(s);
        }
    }
}
