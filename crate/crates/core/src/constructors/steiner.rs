//! The small Steiner systems S(floor(m/2)-1, floor(m/2), m) behind the
//! exact values N(m, 1) at m in {4, 7, 8, 11, 12}.
//!
//! S(1,2,4), S(2,3,7), and S(3,4,8) have direct constructions. S(4,5,11)
//! and S(5,6,12) are found by an exact-cover search (cover every t-subset
//! by exactly one block); the results are cached as shipped data files and
//! the generator stays available so the cache can be re-derived.

use std::collections::HashMap;

use itertools::Itertools;

use crate::decoder::Decoder;
use crate::error::{Error, Result};
use crate::format;
use crate::setsystem::{Block, SetSystem};

/// The supported (t, k, v) parameter triples.
pub const STEINER_PARAMS: [(usize, usize, usize); 5] =
    [(1, 2, 4), (2, 3, 7), (3, 4, 8), (4, 5, 11), (5, 6, 12)];

const S_4_5_11: &str = include_str!("../../data/s_4_5_11.txt");
const S_5_6_12: &str = include_str!("../../data/s_5_6_12.txt");

/// A Steiner system S(t, k, v) for the supported parameter triples.
pub fn steiner_system(t: usize, k: usize, v: usize) -> Result<SetSystem> {
    match (t, k, v) {
        (1, 2, 4) => SetSystem::new(4, vec![Block::new(4, &[1, 2])?, Block::new(4, &[3, 4])?]),
        (2, 3, 7) => Ok(fano()),
        (3, 4, 8) => Ok(extended_fano()),
        (4, 5, 11) => format::parse_system(S_4_5_11),
        (5, 6, 12) => format::parse_system(S_5_6_12),
        _ => Err(Error::NotSupported(format!(
            "no S({t}, {k}, {v}) construction; supported: {STEINER_PARAMS:?}"
        ))),
    }
}

/// Fano plane from the difference set {1, 2, 4} mod 7.
fn fano() -> SetSystem {
    let blocks = (0..7)
        .map(|shift| {
            let pts: Vec<usize> = [1usize, 2, 4]
                .iter()
                .map(|&p| (p - 1 + shift) % 7 + 1)
                .collect();
            Block::new(7, &pts).expect("points in [7]")
        })
        .collect();
    SetSystem::new(7, blocks).expect("order 7")
}

/// S(3, 4, 8): each Fano line extended by the new point 8, together with
/// the complements of the Fano lines inside [7].
fn extended_fano() -> SetSystem {
    let mut blocks = Vec::with_capacity(14);
    for line in fano().blocks() {
        let mut pts = line.points();
        pts.push(8);
        blocks.push(Block::new(8, &pts).expect("points in [8]"));
        let comp: Vec<usize> = (1..=7).filter(|&p| !line.contains(p)).collect();
        blocks.push(Block::new(8, &comp).expect("points in [8]"));
    }
    SetSystem::new(8, blocks).expect("order 8")
}

/// Search for an S(t, k, v) from scratch: cover every t-subset of [v] by
/// exactly one k-subset. Backtracking over candidate blocks, always
/// branching on the uncovered t-subset with fewest remaining candidates.
pub fn steiner_system_exact_cover(t: usize, k: usize, v: usize) -> Result<SetSystem> {
    if !(1 <= t && t <= k && k <= v && v <= 16) {
        return Err(Error::Usage(format!(
            "exact-cover search requires 1 <= t <= k <= v <= 16, got ({t}, {k}, {v})"
        )));
    }
    let tsets: Vec<u64> = (0..v)
        .combinations(t)
        .map(|pts| pts.iter().fold(0u64, |m, &p| m | 1 << p))
        .collect();
    let tset_index: HashMap<u64, usize> = tsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let blocks: Vec<u64> = (0..v)
        .combinations(k)
        .map(|pts| pts.iter().fold(0u64, |m, &p| m | 1 << p))
        .collect();
    let block_tsets: Vec<Vec<usize>> = blocks
        .iter()
        .map(|&b| {
            (0..v)
                .filter(|&p| b >> p & 1 == 1)
                .combinations(t)
                .map(|pts| tset_index[&pts.iter().fold(0u64, |m, &p| m | 1 << p)])
                .collect()
        })
        .collect();
    let covering: Vec<Vec<usize>> = {
        let mut cov = vec![Vec::new(); tsets.len()];
        for (bi, ts) in block_tsets.iter().enumerate() {
            for &ti in ts {
                cov[ti].push(bi);
            }
        }
        cov
    };
    // Two blocks conflict when they share a t-subset.
    let words = blocks.len().div_ceil(64);
    let mut compatible = vec![vec![!0u64; words]; blocks.len()];
    for (a, row) in compatible.iter_mut().enumerate() {
        for b in 0..blocks.len() {
            if a == b || (blocks[a] & blocks[b]).count_ones() as usize >= t {
                row[b / 64] &= !(1u64 << (b % 64));
            }
        }
    }

    let mut state = CoverState {
        covered: vec![false; tsets.len()],
        uncovered: tsets.len(),
        active: vec![!0u64; words],
        chosen: Vec::new(),
        covering: &covering,
        block_tsets: &block_tsets,
        compatible: &compatible,
    };
    // Mask off the padding bits of the last word.
    if blocks.len() % 64 != 0 {
        let last = state.active.len() - 1;
        state.active[last] = (1u64 << (blocks.len() % 64)) - 1;
    }

    if !state.solve() {
        return Err(Error::NotSupported(format!("no S({t}, {k}, {v}) found")));
    }
    let chosen = state.chosen.clone();
    let out = chosen
        .iter()
        .map(|&bi| {
            let pts: Vec<usize> = (0..v).filter(|&p| blocks[bi] >> p & 1 == 1).map(|p| p + 1).collect();
            Block::new(v, &pts)
        })
        .collect::<Result<Vec<_>>>()?;
    SetSystem::new(v, out)
}

struct CoverState<'a> {
    covered: Vec<bool>,
    uncovered: usize,
    active: Vec<u64>,
    chosen: Vec<usize>,
    covering: &'a [Vec<usize>],
    block_tsets: &'a [Vec<usize>],
    compatible: &'a [Vec<u64>],
}

impl CoverState<'_> {
    fn is_active(&self, b: usize) -> bool {
        self.active[b / 64] >> (b % 64) & 1 == 1
    }

    fn solve(&mut self) -> bool {
        if self.uncovered == 0 {
            return true;
        }
        // Branch on the uncovered t-subset with fewest active candidates.
        let mut pick: Option<(usize, usize)> = None;
        for (ti, &cov) in self.covered.iter().enumerate() {
            if cov {
                continue;
            }
            let count = self.covering[ti].iter().filter(|&&b| self.is_active(b)).count();
            if count == 0 {
                return false;
            }
            if pick.is_none_or(|(_, best)| count < best) {
                pick = Some((ti, count));
                if count == 1 {
                    break;
                }
            }
        }
        let (ti, _) = pick.expect("uncovered > 0");
        let candidates: Vec<usize> = self.covering[ti]
            .iter()
            .copied()
            .filter(|&b| self.is_active(b))
            .collect();
        for b in candidates {
            let saved_active = self.active.clone();
            for (w, c) in self.active.iter_mut().zip(&self.compatible[b]) {
                *w &= c;
            }
            for &cover_ti in &self.block_tsets[b] {
                debug_assert!(!self.covered[cover_ti]);
                self.covered[cover_ti] = true;
            }
            self.uncovered -= self.block_tsets[b].len();
            self.chosen.push(b);

            if self.solve() {
                return true;
            }

            self.chosen.pop();
            self.uncovered += self.block_tsets[b].len();
            for &cover_ti in &self.block_tsets[b] {
                self.covered[cover_ti] = false;
            }
            self.active = saved_active;
        }
        false
    }
}

/// The Steiner-system decoder: the blocks of S(floor(m/2)-1, floor(m/2), m)
/// are pairwise 2-diffbounded, so they form an (m, n, 1)-FTSND of the
/// maximum size C(m, floor(m/2)-1) / floor(m/2).
pub fn steiner_ftsnd(m: usize) -> Result<Decoder> {
    let k = m / 2;
    match m {
        4 | 7 | 8 | 11 | 12 => Ok(Decoder::new(steiner_system(k - 1, k, m)?)),
        _ => Err(Error::NotSupported(format!(
            "no Steiner decoder at order {m}; supported: 4, 7, 8, 11, 12"
        ))),
    }
}
