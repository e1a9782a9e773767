//! Lower-bound witness constructions: every explicit family whose
//! verification certifies a value of N(m, e).

mod hadamard;
mod steiner;

pub use hadamard::{hadamard_ftsnd, hadamard_matrix, hadamard_order_constructible, HadamardMatrix};
pub use steiner::{steiner_ftsnd, steiner_system, steiner_system_exact_cover, STEINER_PARAMS};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::combin::binomial;
use crate::decoder::Decoder;
use crate::error::{Error, Result};
use crate::setsystem::{BinaryWord, Block, SetSystem};

/// All floor(m/2)-subsets of [m]: the maximum antichain.
pub fn middle_layer(m: usize) -> Result<SetSystem> {
    if m == 0 || m > 64 {
        return Err(Error::Usage(format!("middle layer requires 1 <= m <= 64, got {m}")));
    }
    let blocks = (1..=m)
        .combinations(m / 2)
        .map(|pts| Block::new(m, &pts))
        .collect::<Result<Vec<_>>>()?;
    SetSystem::new(m, blocks)
}

/// Two disjoint (e+1)-blocks: the size-2 witness behind N(m, e) = 2.
pub fn disjoint_pair(m: usize, e: usize) -> Result<Decoder> {
    if m < 2 * e + 2 {
        return Err(Error::Usage(format!(
            "disjoint pair needs m >= 2e+2 = {}, got m = {m}",
            2 * e + 2
        )));
    }
    let first: Vec<usize> = (1..=e + 1).collect();
    let second: Vec<usize> = (e + 2..=2 * e + 2).collect();
    let s = SetSystem::new(m, vec![Block::new(m, &first)?, Block::new(m, &second)?])?;
    Ok(Decoder::new(s))
}

/// Enumeration order for the greedy constant-weight construction.
///
/// The underlying bound holds for any order; pinning it makes the
/// resulting code reproducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyOrder {
    /// Ascending point-list order of the supports.
    Lexicographic,
    /// Ascending mask order (colexicographic on supports).
    Colexicographic,
    /// A fixed shuffle of the lexicographic order.
    SeededRandom(u64),
}

impl std::str::FromStr for GreedyOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(GreedyOrder::Lexicographic),
            "colex" => Ok(GreedyOrder::Colexicographic),
            _ => match s.strip_prefix("seed=") {
                Some(seed) => seed
                    .parse()
                    .map(GreedyOrder::SeededRandom)
                    .map_err(|_| Error::Usage(format!("invalid seed in order {s:?}"))),
                None => Err(Error::Usage(format!(
                    "unknown order {s:?}; expected lex, colex, or seed=K"
                ))),
            },
        }
    }
}

/// All weight-w words of length n in the given enumeration order.
pub fn weight_class(n: usize, w: usize, order: GreedyOrder) -> Result<Vec<BinaryWord>> {
    if w > n {
        return Err(Error::Usage(format!("weight {w} exceeds length {n}")));
    }
    let mut words: Vec<BinaryWord> = (1..=n)
        .combinations(w)
        .map(|pts| Ok(Block::new(n, &pts)?.incidence_vector()))
        .collect::<Result<Vec<_>>>()?;
    match order {
        GreedyOrder::Lexicographic => {}
        GreedyOrder::Colexicographic => words.sort_by_key(|word| word.bits()),
        GreedyOrder::SeededRandom(seed) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            words.shuffle(&mut rng);
        }
    }
    Ok(words)
}

/// Greedy constant-weight code: scan the weight class in order, keeping a
/// word whenever it lies outside the radius-(2d-1) Hamming spheres around
/// the words already kept. The result has min distance >= 2d and size at
/// least C(n,w) / sum_{i<d} C(w,i) C(n-w,i).
pub fn greedy_constant_weight(
    n: usize,
    d: usize,
    w: usize,
    order: GreedyOrder,
) -> Result<Vec<BinaryWord>> {
    if d == 0 {
        return Err(Error::Usage("distance parameter d must be >= 1".into()));
    }
    let mut code: Vec<BinaryWord> = Vec::new();
    for word in weight_class(n, w, order)? {
        let clear = code
            .iter()
            .all(|kept| (kept.bits() ^ word.bits()).count_ones() as usize > 2 * d - 1);
        if clear {
            code.push(word);
        }
    }
    Ok(code)
}

/// Dual of the complete k-uniform system on [n]: a decoder with C(n,k)
/// mesowires and n blocks of size C(n-1,k-1), pairwise meeting in
/// C(n-2,k-2) points, hence (C(n-2,k-1))-diffbounded.
pub fn complete_uniform_dual(n: usize, k: usize) -> Result<Decoder> {
    if k == 0 || k > n {
        return Err(Error::Usage(format!("complete uniform dual requires 1 <= k <= n, got k={k} n={n}")));
    }
    let m = binomial(n, k);
    if m > 64 {
        return Err(Error::GroundSetTooLarge(m as usize));
    }
    let blocks = (1..=n)
        .combinations(k)
        .map(|pts| Block::new(n, &pts))
        .collect::<Result<Vec<_>>>()?;
    let complete = SetSystem::new(n, blocks)?;
    Ok(Decoder::new(complete.dual()?))
}

/// Dual of a verified (r, lambda)-design: an r-uniform system whose blocks
/// pairwise meet in exactly lambda points, hence (r - lambda)-diffbounded.
pub fn rlambda_dual(s: &SetSystem, r: usize, lambda: usize) -> Result<Decoder> {
    for point in 1..=s.order() {
        let count = s.blocks().iter().filter(|b| b.contains(point)).count();
        if count != r {
            return Err(Error::NotRLambdaDesign(format!(
                "point {point} lies in {count} blocks, expected r = {r}"
            )));
        }
    }
    for pair in (1..=s.order()).combinations(2) {
        let probe = Block::new(s.order(), &pair)?;
        let count = s.blocks().iter().filter(|b| probe.is_subset_of(b)).count();
        if count != lambda {
            return Err(Error::NotRLambdaDesign(format!(
                "pair {{{}, {}}} lies in {count} blocks, expected lambda = {lambda}",
                pair[0], pair[1]
            )));
        }
    }
    Ok(Decoder::new(s.dual()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;
    use crate::setsystem::hamming_distance;
    use crate::testutil::fano;

    #[test]
    fn middle_layer_examples() {
        let s = middle_layer(4).unwrap();
        assert_eq!(s.size(), 6);
        assert!(s.blocks().iter().all(|b| b.cardinality() == 2));
        assert!(s.is_antichain());

        let degenerate = middle_layer(1).unwrap();
        assert_eq!(degenerate.size(), 1);
        assert_eq!(degenerate.blocks()[0], Block::empty(1));

        let s7 = middle_layer(7).unwrap();
        assert_eq!(s7.size(), 35);
        assert!(s7.is_antichain());
    }

    #[test]
    fn disjoint_pair_examples() {
        let d = disjoint_pair(4, 1).unwrap();
        assert_eq!(d.system(), &crate::testutil::system(4, &[&[1, 2], &[3, 4]]));
        assert!(d.is_ftsnd(1));

        let wide = disjoint_pair(16, 7).unwrap();
        assert_eq!(wide.size(), 2);
        assert!(wide.system().blocks().iter().all(|b| b.cardinality() == 8));
        assert!(wide.is_ftsnd(7));

        assert!(disjoint_pair(3, 1).is_err());
    }

    #[test]
    fn greedy_examples() {
        let code = greedy_constant_weight(4, 2, 2, GreedyOrder::Lexicographic).unwrap();
        assert_eq!(code.len(), 2);
        for (u, v) in code.iter().tuple_combinations() {
            assert!(hamming_distance(u, v).unwrap() >= 4);
        }

        // d = 1: all C(n, w) words survive.
        let all = greedy_constant_weight(5, 1, 2, GreedyOrder::Colexicographic).unwrap();
        assert_eq!(all.len(), 10);

        let big = greedy_constant_weight(15, 2, 7, GreedyOrder::Lexicographic).unwrap();
        assert!(big.len() >= 113, "got {}", big.len());
        for (u, v) in big.iter().tuple_combinations() {
            assert!(hamming_distance(u, v).unwrap() >= 4);
        }
    }

    #[test]
    fn greedy_is_deterministic_per_order() {
        for order in [
            GreedyOrder::Lexicographic,
            GreedyOrder::Colexicographic,
            GreedyOrder::SeededRandom(42),
        ] {
            let a = greedy_constant_weight(10, 2, 5, order).unwrap();
            let b = greedy_constant_weight(10, 2, 5, order).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn greedy_meets_levenshtein_guarantee_sampled() {
        for n in [6, 9, 12] {
            for d in 1..=3 {
                for w in 0..=n {
                    let code = greedy_constant_weight(n, d, w, GreedyOrder::Lexicographic).unwrap();
                    let (num, den) = bounds::levenshtein_fraction(n, d, w).unwrap();
                    assert!(
                        code.len() as u128 >= num.div_ceil(den),
                        "greedy({n},{d},{w}) size {} below guarantee",
                        code.len()
                    );
                }
            }
        }
    }

    #[test]
    fn complete_uniform_dual_examples() {
        let d = complete_uniform_dual(4, 2).unwrap();
        assert_eq!(d.order(), 6);
        assert_eq!(d.size(), 4);
        assert!(d.is_ftsnd(1));

        let big = complete_uniform_dual(6, 3).unwrap();
        assert_eq!(big.order(), 20);
        assert_eq!(big.size(), 6);
        assert!(big.is_ftsnd(5));

        // k = 1 degenerates to the identity incidence.
        let identity = complete_uniform_dual(3, 1).unwrap();
        assert_eq!(identity.order(), 3);
        assert_eq!(identity.size(), 3);
        assert!(identity.system().blocks().iter().all(|b| b.cardinality() == 1));
    }

    #[test]
    fn rlambda_dual_examples() {
        // Complete 2-subsets of [4] form a (3, 1)-design of order 4.
        let complete = SetSystem::new(
            4,
            (1..=4)
                .combinations(2)
                .map(|pts| Block::new(4, &pts).unwrap())
                .collect(),
        )
        .unwrap();
        let d = rlambda_dual(&complete, 3, 1).unwrap();
        assert_eq!(d.system(), complete_uniform_dual(4, 2).unwrap().system());

        let dual_fano = rlambda_dual(&fano(), 3, 1).unwrap();
        assert_eq!(dual_fano.system().min_one_sided_difference(), 2);

        assert!(matches!(
            rlambda_dual(&fano(), 4, 1),
            Err(Error::NotRLambdaDesign(_))
        ));
    }

    #[test]
    fn greedy_order_parsing() {
        assert_eq!("lex".parse::<GreedyOrder>().unwrap(), GreedyOrder::Lexicographic);
        assert_eq!("colex".parse::<GreedyOrder>().unwrap(), GreedyOrder::Colexicographic);
        assert_eq!(
            "seed=7".parse::<GreedyOrder>().unwrap(),
            GreedyOrder::SeededRandom(7)
        );
        assert!("random".parse::<GreedyOrder>().is_err());
    }
}
