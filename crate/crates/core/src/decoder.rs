//! Decoder semantics: activation, addressing, fault injection, and the
//! brute-force fault-tolerance oracle.
//!
//! Nanowire and mesowire indices are 1-based throughout, matching the
//! ground-set convention of [`SetSystem`].

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::setsystem::{Block, SetSystem};

/// Cap on the number of fault sets the brute-force oracle will enumerate.
pub const DEFAULT_FAULT_SET_CAP: u128 = 10_000_000;

/// An activation pattern: the set V of mesowires currently carrying voltage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActivationPattern(pub Block);

/// A fabrication error: mesowire control over one nanowire becomes
/// unreliable, which deletes the mesowire from that nanowire's block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaultEvent {
    /// Nanowire index in [n].
    pub nanowire: usize,
    /// Mesowire (point) in [m].
    pub mesowire: usize,
}

/// A simple nanowire decoder: block i is the control set of nanowire i.
///
/// Arbitrary set systems are representable, including non-antichains;
/// the verifiers report on them rather than forbidding construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoder {
    system: SetSystem,
}

impl Decoder {
    pub fn new(system: SetSystem) -> Self {
        Decoder { system }
    }

    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn order(&self) -> usize {
        self.system.order()
    }

    pub fn size(&self) -> usize {
        self.system.size()
    }

    /// Nanowires addressed under V: those whose block avoids V entirely.
    pub fn addressed(&self, v: &ActivationPattern) -> Vec<usize> {
        self.system
            .blocks()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.intersection_count(&v.0) == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The canonical witness pattern for nanowire i: activate [m] \ A_i.
    pub fn witness_pattern(&self, i: usize) -> Result<ActivationPattern> {
        let block = self.system.block(i.wrapping_sub(1))?;
        Ok(ActivationPattern(block.complement()))
    }

    /// Does some activation pattern address exactly nanowire i?
    ///
    /// Decided via the witness V = [m] \ A_i, which addresses exactly the
    /// nanowires whose blocks are contained in A_i.
    pub fn independently_addressable(&self, i: usize) -> Result<bool> {
        let v = self.witness_pattern(i)?;
        Ok(self.addressed(&v) == vec![i])
    }

    /// Exhaustive variant of [`Self::independently_addressable`]: scans all
    /// 2^m activation patterns. Test oracle; exponential in m.
    pub fn independently_addressable_exhaustive(&self, i: usize) -> Result<bool> {
        self.system.block(i.wrapping_sub(1))?;
        let m = self.order();
        for mask in 0..1u64 << m {
            let v = ActivationPattern(Block::from_mask(m, mask)?);
            if self.addressed(&v) == vec![i] {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// All nanowires independently addressable, i.e. the system is an antichain.
    pub fn all_independently_addressable(&self) -> bool {
        self.system.is_antichain()
    }

    /// A new decoder with the named mesowires deleted from the named blocks.
    pub fn apply_faults(&self, faults: &[FaultEvent]) -> Result<Decoder> {
        let mut blocks = self.system.blocks().to_vec();
        for f in faults {
            let idx = f
                .nanowire
                .checked_sub(1)
                .filter(|&i| i < blocks.len())
                .ok_or(Error::NanowireOutOfRange {
                    index: f.nanowire,
                    n: blocks.len(),
                })?;
            if !blocks[idx].contains(f.mesowire) {
                return Err(Error::InapplicableFault {
                    nanowire: f.nanowire,
                    mesowire: f.mesowire,
                });
            }
            blocks[idx] = blocks[idx].without(f.mesowire)?;
        }
        Ok(Decoder::new(SetSystem::new(self.order(), blocks)?))
    }

    /// Diagnostic only: the number of activated mesowires controlling
    /// nanowire i, a stand-in for the summed control resistance.
    pub fn resistance_units(&self, v: &ActivationPattern, i: usize) -> Result<usize> {
        Ok(self.system.block(i.wrapping_sub(1))?.intersection_count(&v.0))
    }

    /// Fault-tolerance by definition: every set of at most e applicable
    /// faults leaves all nanowires independently addressable.
    ///
    /// Exponential in the number of (nanowire, mesowire) control pairs;
    /// refuses instances whose fault-set count exceeds `cap`.
    pub fn tolerates_errors_bruteforce(&self, e: usize, cap: u128) -> Result<bool> {
        let pairs: Vec<FaultEvent> = self
            .system
            .blocks()
            .iter()
            .enumerate()
            .flat_map(|(i, b)| {
                b.points()
                    .into_iter()
                    .map(move |p| FaultEvent {
                        nanowire: i + 1,
                        mesowire: p,
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let e = e.min(pairs.len());
        let total: u128 = (0..=e).map(|k| crate::combin::binomial(pairs.len(), k)).sum();
        if total > cap {
            return Err(Error::EnumerationTooLarge(total, cap));
        }
        for k in 0..=e {
            for faults in pairs.iter().copied().combinations(k) {
                if !self.apply_faults(&faults)?.all_independently_addressable() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Fault-tolerance by the pairwise characterization: the system is
    /// (e+1)-diffbounded. Systems with fewer than two blocks tolerate any
    /// number of errors (there is no pair to confuse), including e >= m
    /// where the sentinel of [`SetSystem::min_one_sided_difference`] would
    /// fall short.
    pub fn is_ftsnd(&self, e: usize) -> bool {
        self.size() < 2 || self.system.min_one_sided_difference() >= e + 1
    }
}

impl From<SetSystem> for Decoder {
    fn from(system: SetSystem) -> Self {
        Decoder::new(system)
    }
}
