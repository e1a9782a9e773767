//! Regenerates the shipped Steiner system caches in crates/core/data.
//!
//! Usage: cargo run --release -p ftsnd --example regen_steiner_cache

use ftsnd::constructors::steiner_system_exact_cover;
use ftsnd::format::emit_system_canonical;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for (t, k, v, file) in [(4, 5, 11, "s_4_5_11.txt"), (5, 6, 12, "s_5_6_12.txt")] {
        let s = steiner_system_exact_cover(t, k, v).expect("search succeeds");
        let path = format!("{dir}/{file}");
        std::fs::write(&path, emit_system_canonical(&s)).expect("write cache");
        println!("wrote {path}: {} blocks", s.size());
    }
}
