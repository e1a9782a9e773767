//! Exact computation of N(m, e) for small m.
//!
//! Being (e+1)-diffbounded is a pairwise condition, so a maximum
//! (m, n, e)-FTSND is exactly a maximum clique in the graph whose vertices
//! are the blocks of [m] and whose edges join pairs with |A \ B| >= e+1 in
//! both directions. The solver is a branch-and-bound clique search with
//! greedy-coloring upper bounds, warm-started from the constructions.

use std::time::{Duration, Instant};

use crate::bounds::{self, AggregateOptions};
use crate::combin::binomial;
use crate::constructors;
use crate::error::{Error, Result};
use crate::setsystem::{Block, SetSystem};

/// Default cap on the ground-set order for graph construction; 2^m vertex
/// masks are enumerated, so this is also a memory guard.
pub const DEFAULT_ORDER_CAP: usize = 16;

/// Blocks that can have any neighbor at all: weight between e+1 and
/// m-(e+1). Everything else is isolated in the compatibility graph.
/// Enumeration order is by weight class, then lexicographic point lists,
/// and is the canonical vertex order of the search.
fn enumerate_core_blocks(m: usize, e: usize) -> Vec<u64> {
    use itertools::Itertools;
    let mut out = Vec::new();
    if m < 2 * (e + 1) {
        return out;
    }
    for w in e + 1..=m - (e + 1) {
        for pts in (0..m).combinations(w) {
            out.push(pts.iter().fold(0u64, |mask, &p| mask | 1 << p));
        }
    }
    out
}

/// The pairwise-compatibility graph of blocks at (m, e).
pub struct CompatibilityGraph {
    m: usize,
    e: usize,
    verts: Vec<u64>,
    adj: Vec<Vec<u64>>,
}

/// A ~ B iff both one-sided differences are at least e+1.
pub fn blocks_compatible(a: u64, b: u64, e: usize) -> bool {
    a != b
        && (a & !b).count_ones() as usize > e
        && (b & !a).count_ones() as usize > e
}

pub fn compatibility_graph(m: usize, e: usize) -> Result<CompatibilityGraph> {
    compatibility_graph_with_cap(m, e, DEFAULT_ORDER_CAP)
}

pub fn compatibility_graph_with_cap(m: usize, e: usize, cap: usize) -> Result<CompatibilityGraph> {
    if m > cap {
        return Err(Error::Usage(format!(
            "compatibility graph order {m} exceeds the cap {cap}"
        )));
    }
    let verts = enumerate_core_blocks(m, e);
    let words = verts.len().div_ceil(64).max(1);
    let mut adj = vec![vec![0u64; words]; verts.len()];
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if blocks_compatible(verts[i], verts[j], e) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    Ok(CompatibilityGraph {
        m,
        e,
        verts,
        adj,
    })
}

impl CompatibilityGraph {
    pub fn order(&self) -> usize {
        self.m
    }

    pub fn errors(&self) -> usize {
        self.e
    }

    /// Non-isolated candidate vertices (isolated weight classes are elided).
    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .sum::<usize>()
            / 2
    }

    /// Adjacency between arbitrary blocks, including elided ones.
    pub fn edge(&self, a: &Block, b: &Block) -> bool {
        blocks_compatible(a.mask(), b.mask(), self.e)
    }

    fn vertex_of(&self, mask: u64) -> Option<usize> {
        self.verts.iter().position(|&v| v == mask)
    }

    fn block_of(&self, vertex: usize) -> Block {
        Block::from_mask(self.m, self.verts[vertex]).expect("vertex mask fits order")
    }
}

/// Time/node limits for the search. At least one limit must be set unless
/// an unbounded run is requested explicitly.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    time_limit: Option<Duration>,
    node_limit: Option<u64>,
}

impl SearchBudget {
    pub fn new(time_limit: Option<Duration>, node_limit: Option<u64>) -> Result<Self> {
        if time_limit.is_none() && node_limit.is_none() {
            return Err(Error::Usage(
                "search budget needs a time or node limit; use SearchBudget::unbounded() to opt out".into(),
            ));
        }
        Ok(SearchBudget {
            time_limit,
            node_limit,
        })
    }

    pub fn time_limit(seconds: f64) -> Self {
        SearchBudget {
            time_limit: Some(Duration::from_secs_f64(seconds)),
            node_limit: None,
        }
    }

    pub fn node_limit(nodes: u64) -> Self {
        SearchBudget {
            time_limit: None,
            node_limit: Some(nodes),
        }
    }

    pub fn unbounded() -> Self {
        SearchBudget {
            time_limit: None,
            node_limit: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Exact,
    Bracket,
}

/// Outcome of a search: an exact value, or on budget exhaustion the best
/// bracket, always with a verified witness for the lower end.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub lower: u128,
    pub upper: u128,
    pub witness: SetSystem,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SearchResult {
    pub fn exact_value(&self) -> Option<u128> {
        (self.status == SearchStatus::Exact).then_some(self.lower)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Fix the first clique block to {1..k}, one k per cardinality; sound
    /// because ground-set relabeling preserves cliques.
    pub canonical_first_block: bool,
}

impl SearchOptions {
    pub fn budgeted(budget: SearchBudget) -> Self {
        SearchOptions {
            budget,
            canonical_first_block: false,
        }
    }
}

/// Exact N(m, e) by clique search, or an honest bracket on budget
/// exhaustion.
pub fn max_ftsnd_exact(m: usize, e: usize, budget: SearchBudget) -> Result<SearchResult> {
    max_ftsnd_exact_with(m, e, &SearchOptions::budgeted(budget))
}

pub fn max_ftsnd_exact_with(m: usize, e: usize, options: &SearchOptions) -> Result<SearchResult> {
    let start = Instant::now();
    let graph = compatibility_graph(m, e)?;

    // Any single block is a decoder, so 1 is always feasible.
    let fallback = SetSystem::new(m, vec![Block::full(m)])?;
    if graph.vertex_count() == 0 {
        return Ok(SearchResult {
            status: SearchStatus::Exact,
            lower: 1,
            upper: 1,
            witness: fallback,
            nodes: 0,
            elapsed: start.elapsed(),
        });
    }

    // Warm start from the best construction, greedily extended to maximal.
    let seed = extend_greedy(m, e, &construction_seed(m, e)?)?;
    let warm: Vec<usize> = seed
        .blocks()
        .iter()
        .filter_map(|b| graph.vertex_of(b.mask()))
        .collect();
    let warm = if warm.len() == seed.size() { warm } else { Vec::new() };

    let mut solver = Solver::new(&graph, options.budget, warm);
    let root_upper = solver.run(options.canonical_first_block);

    let lower = solver.best.len().max(1) as u128;
    let witness = if solver.best.is_empty() {
        fallback
    } else {
        SetSystem::new(m, solver.best.iter().map(|&v| graph.block_of(v)).collect())?
    };
    debug_assert!(witness.min_one_sided_difference() > e);

    if solver.aborted {
        // Combine the coloring upper bound with the closed-form aggregate.
        let agg = bounds::aggregate(m, e, &AggregateOptions::default())?;
        let upper = agg.upper.min(root_upper as u128).max(lower);
        Ok(SearchResult {
            status: if lower == upper {
                SearchStatus::Exact
            } else {
                SearchStatus::Bracket
            },
            lower,
            upper,
            witness,
            nodes: solver.nodes,
            elapsed: start.elapsed(),
        })
    } else {
        Ok(SearchResult {
            status: SearchStatus::Exact,
            lower,
            upper: lower,
            witness,
            nodes: solver.nodes,
            elapsed: start.elapsed(),
        })
    }
}

/// Extend a verified seed to a maximal (not necessarily maximum) system,
/// scanning candidate blocks in the canonical vertex order.
pub fn extend_greedy(m: usize, e: usize, seed: &SetSystem) -> Result<SetSystem> {
    if seed.order() != m {
        return Err(Error::Usage(format!(
            "seed order {} does not match m = {m}",
            seed.order()
        )));
    }
    if seed.size() >= 2 && seed.min_one_sided_difference() <= e {
        let (i, j) = seed.violating_pair(e + 1).expect("violation exists");
        return Err(Error::Usage(format!(
            "seed is not (e+1)-diffbounded: |A_{i} \\ A_{j}| < {}",
            e + 1
        )));
    }
    let mut masks: Vec<u64> = seed.blocks().iter().map(|b| b.mask()).collect();
    for cand in enumerate_core_blocks(m, e) {
        if masks.iter().all(|&b| blocks_compatible(cand, b, e)) {
            masks.push(cand);
        }
    }
    let blocks = masks
        .into_iter()
        .map(|mask| Block::from_mask(m, mask))
        .collect::<Result<Vec<_>>>()?;
    SetSystem::new(m, blocks)
}

/// A certified lower bound from an explicit system: verifies the diff
/// bound and reports the size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub m: usize,
    pub e: usize,
    pub size: u128,
}

pub fn certify(s: &SetSystem, e: usize) -> Result<Certificate> {
    if let Some((i, j)) = s.violating_pair(e + 1) {
        if s.size() >= 2 {
            return Err(Error::Usage(format!(
                "not {}-diffbounded: |A_{} \\ A_{}| = {} < {} (blocks {:?} and {:?})",
                e + 1,
                i + 1,
                j + 1,
                s.blocks()[i].difference_count(&s.blocks()[j]),
                e + 1,
                s.blocks()[i],
                s.blocks()[j],
            )));
        }
    }
    Ok(Certificate {
        m: s.order(),
        e,
        size: s.size().max(1) as u128,
    })
}

/// Best closed-form construction witness at (m, e), used to warm-start the
/// search.
fn construction_seed(m: usize, e: usize) -> Result<SetSystem> {
    let mut best = SetSystem::new(m, vec![Block::full(m)])?;
    let mut consider = |s: SetSystem| {
        if s.size() > best.size() && s.min_one_sided_difference() > e {
            best = s;
        }
    };

    if e == 0 {
        consider(constructors::middle_layer(m)?);
    }
    if e == 1 && bounds::STEINER_ORDERS.contains(&m) {
        consider(constructors::steiner_ftsnd(m)?.system().clone());
    }
    if m == 4 * e + 2 && constructors::hadamard_order_constructible(4 * (e + 1)) {
        consider(constructors::hadamard_ftsnd(e)?.system().clone());
    }
    for n in 2..=2 * m {
        for k in 2..=n {
            if binomial(n, k) == m as u128 && binomial(n - 2, k - 1) > e as u128 {
                consider(constructors::complete_uniform_dual(n, k)?.system().clone());
            }
        }
    }
    if m >= 2 * (e + 1) {
        consider(constructors::disjoint_pair(m, e)?.system().clone());
        for w in e + 1..=m - (e + 1) {
            let code = constructors::greedy_constant_weight(
                m,
                e + 1,
                w,
                constructors::GreedyOrder::Lexicographic,
            )?;
            consider(SetSystem::from_code(&code)?);
        }
    }
    Ok(best)
}

struct Solver<'g> {
    g: &'g CompatibilityGraph,
    best: Vec<usize>,
    nodes: u64,
    aborted: bool,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g CompatibilityGraph, budget: SearchBudget, warm: Vec<usize>) -> Self {
        Solver {
            g,
            best: warm,
            nodes: 0,
            aborted: false,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            node_limit: budget.node_limit,
        }
    }

    /// Run to completion or budget exhaustion; returns a coloring-based
    /// upper bound on the clique number that is valid either way.
    fn run(&mut self, canonical_first_block: bool) -> usize {
        let full: Vec<u64> = full_set(self.g.vertex_count());
        if canonical_first_block {
            // Every clique contains a block; relabel it to {1..k}.
            let mut upper = 1usize;
            let mut starts = Vec::new();
            for k in self.g.e + 1..=self.g.m.saturating_sub(self.g.e + 1) {
                let mask = (1u64 << k) - 1;
                let v = self.g.vertex_of(mask).expect("canonical block in core");
                starts.push(v);
                upper = upper.max(1 + self.color_bound(&self.g.adj[v]));
            }
            for v in starts {
                let mut p: Vec<u64> = self.g.adj[v].clone();
                let mut r = vec![v];
                self.expand(&mut r, &mut p);
                if self.aborted {
                    break;
                }
            }
            upper
        } else {
            let upper = self.color_bound(&full);
            let mut p = full;
            let mut r = Vec::new();
            self.expand(&mut r, &mut p);
            upper
        }
    }

    fn budget_exhausted(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.aborted = true;
                return true;
            }
        }
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.aborted = true;
                    return true;
                }
            }
        }
        false
    }

    /// Greedy sequential coloring of the candidate set; the color count
    /// bounds the clique number inside it.
    fn color_bound(&self, p: &[u64]) -> usize {
        let mut uncolored = p.to_vec();
        let mut colors = 0;
        while let Some(first) = first_bit(&uncolored) {
            colors += 1;
            let mut class_candidates = uncolored.clone();
            let mut v = first;
            loop {
                clear_bit(&mut uncolored, v);
                clear_bit(&mut class_candidates, v);
                and_not_assign(&mut class_candidates, &self.g.adj[v]);
                match first_bit(&class_candidates) {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }
        colors
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: &mut [u64]) {
        self.nodes += 1;
        if self.budget_exhausted() {
            return;
        }

        // Color the candidates; branch from the highest color down so the
        // bound r.len() + color prunes whole tails.
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut uncolored = p.to_vec();
        let mut color = 0;
        while let Some(first) = first_bit(&uncolored) {
            color += 1;
            let mut class_candidates = uncolored.clone();
            let mut v = first;
            loop {
                clear_bit(&mut uncolored, v);
                clear_bit(&mut class_candidates, v);
                and_not_assign(&mut class_candidates, &self.g.adj[v]);
                order.push((v, color));
                match first_bit(&class_candidates) {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }

        for &(v, color) in order.iter().rev() {
            if r.len() + color <= self.best.len() {
                return;
            }
            r.push(v);
            let mut p2: Vec<u64> = p
                .iter()
                .zip(&self.g.adj[v])
                .map(|(a, b)| a & b)
                .collect();
            if first_bit(&p2).is_none() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, &mut p2);
            }
            r.pop();
            clear_bit(p, v);
            if self.aborted {
                return;
            }
        }
    }
}

fn full_set(n: usize) -> Vec<u64> {
    let words = n.div_ceil(64).max(1);
    let mut set = vec![!0u64; words];
    let tail = n % 64;
    if tail != 0 {
        set[words - 1] = (1u64 << tail) - 1;
    }
    if n == 0 {
        set[0] = 0;
    }
    set
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn clear_bit(set: &mut [u64], bit: usize) {
    set[bit / 64] &= !(1u64 << (bit % 64));
}

fn and_not_assign(set: &mut [u64], other: &[u64]) {
    for (a, b) in set.iter_mut().zip(other) {
        *a &= !b;
    }
}
