//! Set systems over a ground set [m] and their verifiers.
//!
//! A set system is the complete description of a simple nanowire decoder:
//! block i is the set of mesowires controlling nanowire i. The verifiers
//! here (antichain, diffbounded, t-design) are the primitives every bound,
//! construction, and search in this crate is checked against.

use itertools::Itertools;

use crate::combin::binomial;
use crate::error::{Error, Result};

/// A subset of the ground set [m], stored as a bit mask.
///
/// Bit i of the mask is set iff point i+1 belongs to the block.
/// Ground sets up to m = 64 fit in one word; larger orders are rejected.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    mask: u64,
    m: usize,
}

impl Block {
    pub fn new(m: usize, points: &[usize]) -> Result<Self> {
        check_order(m)?;
        let mut mask = 0u64;
        for &p in points {
            if p == 0 || p > m {
                return Err(Error::PointOutOfRange { point: p, m });
            }
            mask |= 1 << (p - 1);
        }
        Ok(Block { mask, m })
    }

    pub fn from_mask(m: usize, mask: u64) -> Result<Self> {
        check_order(m)?;
        if m < 64 && mask >> m != 0 {
            return Err(Error::PointOutOfRange {
                point: 64 - mask.leading_zeros() as usize,
                m,
            });
        }
        Ok(Block { mask, m })
    }

    pub fn empty(m: usize) -> Self {
        Block { mask: 0, m }
    }

    pub fn full(m: usize) -> Self {
        Block {
            mask: ground_mask(m),
            m,
        }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn cardinality(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, point: usize) -> bool {
        point >= 1 && point <= self.m && self.mask >> (point - 1) & 1 == 1
    }

    /// Points of the block in ascending order.
    pub fn points(&self) -> Vec<usize> {
        (1..=self.m).filter(|&p| self.contains(p)).collect()
    }

    /// |self \ other|.
    pub fn difference_count(&self, other: &Block) -> usize {
        (self.mask & !other.mask).count_ones() as usize
    }

    pub fn is_subset_of(&self, other: &Block) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn intersection_count(&self, other: &Block) -> usize {
        (self.mask & other.mask).count_ones() as usize
    }

    pub fn union(&self, other: &Block) -> Block {
        Block {
            mask: self.mask | other.mask,
            m: self.m,
        }
    }

    /// The block with one point removed. The point must be present.
    pub fn without(&self, point: usize) -> Result<Block> {
        if !self.contains(point) {
            return Err(Error::PointOutOfRange { point, m: self.m });
        }
        Ok(Block {
            mask: self.mask & !(1 << (point - 1)),
            m: self.m,
        })
    }

    /// [m] \ self.
    pub fn complement(&self) -> Block {
        Block {
            mask: !self.mask & ground_mask(self.m),
            m: self.m,
        }
    }

    /// The incidence vector: a word of length m with bit i-1 set iff i is a point.
    pub fn incidence_vector(&self) -> BinaryWord {
        BinaryWord {
            bits: self.mask,
            len: self.m,
        }
    }
}

impl std::fmt::Debug for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}/{}", self.m)
    }
}

fn check_order(m: usize) -> Result<()> {
    if m > 64 {
        return Err(Error::GroundSetTooLarge(m));
    }
    Ok(())
}

fn ground_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1 << m) - 1
    }
}

/// A fixed-length binary word in Hamming space H(n).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: u64,
    len: usize,
}

impl BinaryWord {
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        check_order(len)?;
        if len < 64 && bits >> len != 0 {
            return Err(Error::LengthMismatch(len, 64 - bits.leading_zeros() as usize));
        }
        Ok(BinaryWord { bits, len })
    }

    /// Parse from a string of '0'/'1' characters, most significant position first.
    ///
    /// Position 1 of the word is the leftmost character, matching the
    /// incidence-vector convention.
    pub fn parse(s: &str) -> Result<Self> {
        let len = s.len();
        check_order(len)?;
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid bit character {c:?}"),
                    })
                }
            }
        }
        Ok(BinaryWord { bits, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn get(&self, pos: usize) -> bool {
        self.bits >> (pos - 1) & 1 == 1
    }

    /// supp(u) as a block over [len].
    pub fn support(&self) -> Block {
        Block {
            mask: self.bits,
            m: self.len,
        }
    }
}

impl std::fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 1..=self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// The Hamming distance between two words of equal length.
pub fn hamming_distance(u: &BinaryWord, v: &BinaryWord) -> Result<usize> {
    if u.len != v.len {
        return Err(Error::LengthMismatch(u.len, v.len));
    }
    Ok((u.bits ^ v.bits).count_ones() as usize)
}

/// Parameters of a t-(v, k, lambda) design.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
}

impl DesignParams {
    pub fn new(t: usize, v: usize, k: usize, lambda: usize) -> Result<Self> {
        if !(t <= k && k <= v) {
            return Err(Error::Usage(format!(
                "design parameters require t <= k <= v, got t={t} k={k} v={v}"
            )));
        }
        if lambda == 0 {
            return Err(Error::Usage("design parameter lambda must be >= 1".into()));
        }
        Ok(DesignParams { t, v, k, lambda })
    }
}

/// An ordered list of blocks over a common ground set [m].
///
/// Block order is meaningful: block i is the control set of nanowire i.
/// Duplicate blocks are representable; the verifiers reject them.
#[derive(Clone, PartialEq, Eq)]
pub struct SetSystem {
    m: usize,
    blocks: Vec<Block>,
}

impl SetSystem {
    pub fn new(m: usize, blocks: Vec<Block>) -> Result<Self> {
        check_order(m)?;
        for b in &blocks {
            if b.order() != m {
                return Err(Error::Usage(format!(
                    "block {:?} has ground set order {}, system has {}",
                    b,
                    b.order(),
                    m
                )));
            }
        }
        Ok(SetSystem { m, blocks })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> Result<&Block> {
        self.blocks.get(i).ok_or(Error::NanowireOutOfRange {
            index: i,
            n: self.blocks.len(),
        })
    }

    /// The dual system: point j of [n] lies in dual block i iff point i
    /// of [m] lies in block j. Equivalently the incidence matrix transposed.
    pub fn dual(&self) -> Result<SetSystem> {
        let n = self.blocks.len();
        check_order(n)?;
        let mut dual_blocks = Vec::with_capacity(self.m);
        for point in 1..=self.m {
            let mut mask = 0u64;
            for (j, b) in self.blocks.iter().enumerate() {
                if b.contains(point) {
                    mask |= 1 << j;
                }
            }
            dual_blocks.push(Block { mask, m: n });
        }
        SetSystem::new(n, dual_blocks)
    }

    /// min over ordered pairs of distinct blocks (A, B) of |A \ B|.
    ///
    /// With fewer than two blocks the system satisfies every diff bound
    /// vacuously; the sentinel m+1 is returned so such systems verify at
    /// any e < m.
    pub fn min_one_sided_difference(&self) -> usize {
        if self.blocks.len() < 2 {
            return self.m + 1;
        }
        let mut min = usize::MAX;
        for (i, a) in self.blocks.iter().enumerate() {
            for (j, b) in self.blocks.iter().enumerate() {
                if i != j {
                    min = min.min(a.difference_count(b));
                }
            }
        }
        min
    }

    /// First ordered pair (i, j) of distinct blocks with |A_i \ A_j| < d,
    /// if the system is not d-diffbounded. Indices are 0-based.
    pub fn violating_pair(&self, d: usize) -> Option<(usize, usize)> {
        for (i, a) in self.blocks.iter().enumerate() {
            for (j, b) in self.blocks.iter().enumerate() {
                if i != j && a.difference_count(b) < d {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// No block contained in another; equivalently 1-diffbounded.
    pub fn is_antichain(&self) -> bool {
        self.min_one_sided_difference() >= 1
    }

    /// Is this a t-(v, k, lambda) design?
    ///
    /// Requires the ground set order to equal v, every block to have size k,
    /// and every t-subset of [v] to lie in exactly lambda blocks.
    pub fn is_t_design(&self, p: &DesignParams) -> bool {
        if self.m != p.v {
            return false;
        }
        if self.blocks.iter().any(|b| b.cardinality() != p.k) {
            return false;
        }
        for tset in (1..=p.v).combinations(p.t) {
            let probe = Block::new(self.m, &tset).expect("t-subset of [v]");
            let count = self
                .blocks
                .iter()
                .filter(|b| probe.is_subset_of(b))
                .count();
            if count != p.lambda {
                return false;
            }
        }
        true
    }

    /// The expected block count lambda * C(v, t) / C(k, t) of a t-design.
    pub fn design_size(p: &DesignParams) -> u128 {
        p.lambda as u128 * binomial(p.v, p.t) / binomial(p.k, p.t)
    }

    /// Build the system whose blocks are the supports of the given words.
    pub fn from_code(code: &[BinaryWord]) -> Result<SetSystem> {
        let m = match code.first() {
            Some(w) => w.len(),
            None => 0,
        };
        for (i, w) in code.iter().enumerate() {
            if w.len() != m {
                return Err(Error::RaggedCode {
                    index: i,
                    got: w.len(),
                    expected: m,
                });
            }
        }
        SetSystem::new(m, code.iter().map(|w| w.support()).collect())
    }

    /// The incidence vectors of the blocks, in block order.
    pub fn to_code(&self) -> Vec<BinaryWord> {
        self.blocks.iter().map(|b| b.incidence_vector()).collect()
    }
}

impl std::fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetSystem(m={}, blocks={:?})", self.m, self.blocks)
    }
}
