//! Regenerates the shipped witness certificates in data/witnesses and the
//! deliberately broken files in data/witnesses/invalid.
//!
//! Usage: cargo run --release -p ftsnd --example gen_witnesses

use ftsnd::constructors;
use ftsnd::format::emit_system_canonical;
use ftsnd::search::{certify, max_ftsnd_exact, SearchBudget};
use ftsnd::{Block, SetSystem};

fn by_search(m: usize, e: usize, want: usize) -> SetSystem {
    let r = max_ftsnd_exact(m, e, SearchBudget::time_limit(600.0)).expect("search runs");
    assert!(
        r.lower as usize >= want,
        "search at ({m}, {e}) reached only {}, wanted {want}",
        r.lower
    );
    SetSystem::new(m, r.witness.blocks()[..want].to_vec()).expect("valid prefix")
}

fn main() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/witnesses");
    std::fs::create_dir_all(format!("{root}/invalid")).expect("mkdir");

    // (m, e, exact N(m, e), witness system) for every exact lower bound
    // the acceptance suite certifies.
    let mut witnesses: Vec<(usize, usize, usize, SetSystem)> = Vec::new();
    for m in [2usize, 4, 5, 6, 7, 8] {
        let s = constructors::middle_layer(m).unwrap();
        witnesses.push((m, 0, s.size(), s));
    }
    for (m, e) in [(4, 1), (5, 1), (6, 2), (7, 2), (8, 2), (8, 3), (9, 3)] {
        let s = constructors::disjoint_pair(m, e).unwrap().system().clone();
        witnesses.push((m, e, 2, s));
    }
    for e in [1usize, 2, 3, 4, 5] {
        // (6,1)=4, (10,2)=6, (14,3)=8, (18,4)=10, (22,5)=12.
        let s = constructors::hadamard_ftsnd(e).unwrap().system().clone();
        witnesses.push((4 * e + 2, e, 2 * e + 2, s));
    }
    for m in [7usize, 8, 11, 12] {
        let s = constructors::steiner_ftsnd(m).unwrap().system().clone();
        witnesses.push((m, 1, s.size(), s));
    }
    witnesses.push((9, 1, 18, by_search(9, 1, 18)));
    witnesses.push((9, 2, 3, by_search(9, 2, 3)));
    witnesses.push((11, 2, 11, by_search(11, 2, 11)));
    witnesses.push((12, 2, 22, by_search(12, 2, 22)));

    for (m, e, n, s) in &witnesses {
        assert_eq!(s.size(), *n, "size at ({m}, {e})");
        certify(s, *e).expect("witness certifies");
        let path = format!("{root}/witness_m{m}_e{e}_n{n}.txt");
        std::fs::write(&path, emit_system_canonical(s)).expect("write witness");
        println!("wrote {path}");
    }

    // 20 broken variants: duplicated blocks, proper-subset blocks, and
    // one-sided near misses; each must be rejected by certify at its e.
    let mut broken = 0usize;
    let mut emit_broken = |m: usize, e: usize, s: &SetSystem, tag: &str| {
        assert!(certify(s, e).is_err(), "mutant {tag} at ({m}, {e}) still certifies");
        let path = format!("{root}/invalid/bad_m{m}_e{e}_{tag}.txt");
        std::fs::write(&path, emit_system_canonical(s)).expect("write mutant");
        println!("wrote {path}");
        broken += 1;
    };

    for (m, e, _, s) in witnesses.iter().filter(|(_, _, n, _)| *n >= 2).take(10) {
        // Duplicate the first block.
        let mut blocks = s.blocks().to_vec();
        blocks.push(blocks[0].clone());
        emit_broken(*m, *e, &SetSystem::new(*m, blocks).unwrap(), "dup");

        // Append a proper subset of the first block (or, if it is empty,
        // a superset), breaking one direction of the diff bound.
        let mut blocks = s.blocks().to_vec();
        let first = blocks[0].points();
        let mutated = if first.len() > 1 {
            Block::new(*m, &first[1..]).unwrap()
        } else {
            Block::full(*m)
        };
        blocks.push(mutated);
        emit_broken(*m, *e, &SetSystem::new(*m, blocks).unwrap(), "subset");
    }
    assert_eq!(broken, 20);
}
