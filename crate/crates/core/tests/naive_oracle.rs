//! Cross-check of the clique search against a naive exponential
//! enumeration that shares no machinery with it: plain include/exclude
//! backtracking over all block families, with only a cardinality prune.

use ftsnd::search::{max_ftsnd_exact, SearchBudget};

/// Maximum size of an (e+1)-diffbounded family over [m], the slow way.
fn naive_max(m: usize, e: usize) -> usize {
    fn diffbounded(a: u64, b: u64, e: usize) -> bool {
        (a & !b).count_ones() as usize > e && (b & !a).count_ones() as usize > e
    }
    fn rec(blocks: &[u64], idx: usize, chosen: &mut Vec<u64>, best: &mut usize, e: usize) {
        if chosen.len() > *best {
            *best = chosen.len();
        }
        if idx == blocks.len() || chosen.len() + (blocks.len() - idx) <= *best {
            return;
        }
        let cand = blocks[idx];
        if chosen.iter().all(|&c| diffbounded(c, cand, e)) {
            chosen.push(cand);
            rec(blocks, idx + 1, chosen, best, e);
            chosen.pop();
        }
        rec(blocks, idx + 1, chosen, best, e);
    }

    let blocks: Vec<u64> = (0..1u64 << m).collect();
    let mut best = 0;
    rec(&blocks, 0, &mut Vec::new(), &mut best, e);
    best.max(1)
}

#[test]
fn search_matches_naive_enumeration_small_orders() {
    for m in 1..=6 {
        for e in 0..m + 1 {
            let expected = naive_max(m, e) as u128;
            let got = max_ftsnd_exact(m, e, SearchBudget::time_limit(120.0))
                .unwrap()
                .exact_value()
                .expect("small cells resolve exactly");
            assert_eq!(got, expected, "N({m}, {e})");
        }
    }
}
