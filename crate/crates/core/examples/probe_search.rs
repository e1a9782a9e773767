//! Quick timing probe for the clique search on the interesting cells.
//! Usage: cargo run --release -p ftsnd --example probe_search [seconds]

use ftsnd::search::{max_ftsnd_exact_with, SearchBudget, SearchOptions, SearchStatus};

fn main() {
    let secs: f64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(60.0);
    let canonical = std::env::args().any(|a| a == "--canonical");
    for (m, e) in [(9usize, 1usize), (9, 2), (10, 2), (11, 2), (12, 2)] {
        let opts = SearchOptions {
            budget: SearchBudget::time_limit(secs),
            canonical_first_block: canonical,
        };
        let r = max_ftsnd_exact_with(m, e, &opts).unwrap();
        println!(
            "N({m},{e}): status={:?} lower={} upper={} nodes={} elapsed={:.2?}",
            r.status, r.lower, r.upper, r.nodes, r.elapsed
        );
        if r.status == SearchStatus::Bracket {
            println!("  (budget exhausted)");
        }
    }
}
