//! Closed-form bounds and exact-value formulas for N(m, e), the maximum
//! number of independently addressable nanowires of an (m, n, e)-FTSND,
//! plus an aggregator that combines them into a best-known bracket.
//!
//! All integer-valued bounds use exact arithmetic. Floating point appears
//! only in the diagnostic envelope and the randomized-contact formula.

use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::format::AndTable;

/// Ground-set orders above this are out of contract for the bound calculators.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
    Diagnostic,
}

/// One named bound on N(m, e) with provenance.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub name: String,
    pub kind: BoundKind,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Value(u128),
    /// Diagnostic envelopes only; never fed into a bracket.
    Real(f64),
    NotApplicable(String),
}

impl BoundReport {
    fn value(name: &str, kind: BoundKind, value: u128) -> Self {
        BoundReport {
            name: name.into(),
            kind,
            outcome: Outcome::Value(value),
        }
    }

    fn not_applicable(name: &str, kind: BoundKind, reason: impl Into<String>) -> Self {
        BoundReport {
            name: name.into(),
            kind,
            outcome: Outcome::NotApplicable(reason.into()),
        }
    }

    pub fn applicable_value(&self) -> Option<u128> {
        match self.outcome {
            Outcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
            BoundKind::Diagnostic => "diagnostic",
        };
        match &self.outcome {
            Outcome::Value(v) => write!(f, "{:<16} {kind:<10} {v}", self.name),
            Outcome::Real(v) => write!(f, "{:<16} {kind:<10} {v:.3}", self.name),
            Outcome::NotApplicable(r) => {
                write!(f, "{:<16} {kind:<10} not applicable ({r})", self.name)
            }
        }
    }
}

/// Best-known lower/upper bracket for one N(m, e) cell.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub lower: u128,
    pub lower_by: String,
    pub upper: u128,
    pub upper_by: String,
    pub exact: Option<u128>,
    /// Every bound consulted, applicable or not.
    pub reports: Vec<BoundReport>,
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Usage("m must be >= 1".into()));
    }
    if m > MAX_ORDER {
        return Err(Error::GroundSetTooLarge(m));
    }
    Ok(())
}

/// Sperner's theorem: N(m, 0) = C(m, floor(m/2)) exactly. For e > 0 the
/// same value still upper-bounds N(m, e) by monotonicity in e.
pub fn sperner(m: usize) -> Result<BoundReport> {
    check_order(m)?;
    Ok(BoundReport::value(
        "sperner",
        BoundKind::Exact,
        binomial(m, m / 2),
    ))
}

/// The Plotkin bound specialization: applicable only for m <= 4(e+1).
pub fn plotkin(m: usize, e: usize) -> Result<BoundReport> {
    check_order(m)?;
    let four = 4 * (e + 1);
    let report = if m < four {
        // The bound statement only constrains systems of size >= 2, so a
        // computed value of 0 still means N <= 1, never N = 0.
        BoundReport::value(
            "plotkin",
            BoundKind::Upper,
            (2 * (2 * (e as u128 + 1) / (four - m) as u128)).max(1),
        )
    } else if m == four {
        BoundReport::value("plotkin", BoundKind::Upper, 8 * (e as u128 + 1))
    } else {
        BoundReport::not_applicable("plotkin", BoundKind::Upper, format!("requires m <= 4(e+1) = {four}"))
    };
    Ok(report)
}

/// The Balding-Torney constant K_e as an exact fraction (numerator, denominator).
///
/// The printed form of the odd-e divisor does not reproduce the Steiner
/// equalities N(m,1) = C(m, floor(m/2)-1)/floor(m/2); the reading used here,
/// T = floor(m/2) - (e-1)/2 with paired binomials
/// C(floor(m/2), s) * C(ceil(m/2), s), does, and is calibrated against those
/// equalities at m in {7, 8, 11, 12}.
fn balding_torney_constant(m: usize, e: usize) -> Result<(u128, u128)> {
    let h = m / 2;
    let even_part: u128 = (0..=e / 2).map(|s| binomial(h, s) * binomial(m - h, s)).sum();
    if e % 2 == 0 {
        return Ok((even_part, 1));
    }
    let s = (e + 1) / 2;
    let paired = binomial(h, s) * binomial(m - h, s);
    if paired == 0 {
        return Ok((even_part, 1));
    }
    let t = h
        .checked_sub((e - 1) / 2)
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::NotSupported(format!("Balding-Torney divisor vanishes at m={m}, e={e}")))?
        as u128;
    Ok((even_part * t + paired, t))
}

/// The Balding-Torney upper bound floor(C(m, floor(m/2)) / K_e).
pub fn balding_torney(m: usize, e: usize) -> Result<BoundReport> {
    check_order(m)?;
    let central = binomial(m, m / 2);
    match balding_torney_constant(m, e) {
        Ok((num, den)) => Ok(BoundReport::value(
            "balding_torney",
            BoundKind::Upper,
            central * den / num,
        )),
        Err(e) => Ok(BoundReport::not_applicable(
            "balding_torney",
            BoundKind::Upper,
            e.to_string(),
        )),
    }
}

/// Orders m for which the S(floor(m/2)-1, floor(m/2), m) Steiner system is
/// known to exist and is shipped by the constructors module.
pub const STEINER_ORDERS: [usize; 5] = [4, 7, 8, 11, 12];

/// Exact value N(m, 1) = C(m, floor(m/2)-1) / floor(m/2), valid when the
/// matching Steiner system exists.
pub fn steiner_exact(m: usize) -> Result<BoundReport> {
    check_order(m)?;
    if !STEINER_ORDERS.contains(&m) {
        return Ok(BoundReport::not_applicable(
            "steiner",
            BoundKind::Exact,
            "Steiner system existence unknown/absent for this order",
        ));
    }
    let h = m / 2;
    Ok(BoundReport::value(
        "steiner",
        BoundKind::Exact,
        binomial(m, h - 1) / h as u128,
    ))
}

/// N(m, e) = 1 when m <= 2e+1 and 2 when 2e+2 <= m <= 3e+2.
pub fn trivial_small(m: usize, e: usize) -> Result<BoundReport> {
    check_order(m)?;
    let report = if m <= 2 * e + 1 {
        BoundReport::value("trivial_small", BoundKind::Exact, 1)
    } else if m <= 3 * e + 2 {
        BoundReport::value("trivial_small", BoundKind::Exact, 2)
    } else {
        BoundReport::not_applicable("trivial_small", BoundKind::Exact, format!("requires m <= 3e+2 = {}", 3 * e + 2))
    };
    Ok(report)
}

/// Exact value N(4e+2, e) = 2e+2 from the Hadamard-design construction,
/// applicable when a Hadamard matrix of order 4(e+1) is constructible.
pub fn hadamard_exact(m: usize, e: usize) -> Result<BoundReport> {
    check_order(m)?;
    let report = if m == 4 * e + 2 {
        let order = 4 * (e + 1);
        if crate::constructors::hadamard_order_constructible(order) {
            BoundReport::value("hadamard", BoundKind::Exact, 2 * e as u128 + 2)
        } else {
            BoundReport::not_applicable(
                "hadamard",
                BoundKind::Exact,
                format!("no Hadamard matrix of order {order} constructible here"),
            )
        }
    } else {
        BoundReport::not_applicable("hadamard", BoundKind::Exact, format!("requires m = 4e+2 = {}", 4 * e + 2))
    };
    Ok(report)
}

/// Lower bound from the dual of the complete k-uniform system on [n]:
/// N(C(n,k), C(n-2,k-1) - 1) >= n. Reports the best n whose dual tolerates
/// at least e errors at order exactly m.
pub fn complete_uniform_lower(m: usize, e: usize) -> Result<BoundReport> {
    check_order(m)?;
    let mut best: Option<usize> = None;
    for n in 2..=2 * m.max(2) {
        for k in 1..=n {
            if binomial(n, k) == m as u128 && binomial(n - 2, k - 1) >= e as u128 + 1 {
                best = Some(best.map_or(n, |b: usize| b.max(n)));
            }
        }
    }
    Ok(match best {
        Some(n) => BoundReport::value("complete_uniform", BoundKind::Lower, n as u128),
        None => BoundReport::not_applicable(
            "complete_uniform",
            BoundKind::Lower,
            "no complete k-uniform dual of this order tolerates e errors",
        ),
    })
}

/// Leading-term envelopes of the Katona bound for (e+1)-diffbounded systems.
///
/// The o(m) corrections are dropped, so neither value is certified at
/// finite m; these never enter a bracket.
#[derive(Clone, Copy, Debug)]
pub struct KatonaEnvelope {
    pub lower: f64,
    pub upper: f64,
}

pub fn katona_envelope(m: usize, e: usize) -> Result<KatonaEnvelope> {
    check_order(m)?;
    let s = (e + 1) as f64;
    let scale = 2f64.powi(m as i32) / (m as f64).powf(s - 0.5);
    let c = (2.0 / std::f64::consts::PI).sqrt();
    let alpha = c / 2f64.powf(s);
    let factorial: f64 = (1..=e).map(|i| i as f64).product();
    let beta = c * 2f64.powf(s - 1.0) * factorial;
    Ok(KatonaEnvelope {
        lower: alpha * scale,
        upper: beta * scale,
    })
}

/// The Levenshtein (constant-weight Gilbert-Varshamov) lower bound
/// C(n,w) / sum_{i<d} C(w,i) C(n-w,i) on A(n, 2d, w), as an exact fraction.
pub fn levenshtein_fraction(n: usize, d: usize, w: usize) -> Result<(u128, u128)> {
    check_order(n)?;
    if w > n {
        return Err(Error::Usage(format!("weight {w} exceeds length {n}")));
    }
    if d == 0 {
        return Err(Error::Usage("distance parameter d must be >= 1".into()));
    }
    let num = binomial(n, w);
    let den: u128 = (0..d).map(|i| binomial(w, i) * binomial(n - w, i)).sum();
    Ok((num, den))
}

pub fn levenshtein_lower(n: usize, d: usize, w: usize) -> Result<f64> {
    let (num, den) = levenshtein_fraction(n, d, w)?;
    Ok(num as f64 / den as f64)
}

/// ceil of the best Levenshtein fraction over all weights w, at d = e+1.
/// A constant-weight code of this size exists, so this is a certified
/// lower bound on N(m, e).
pub fn best_levenshtein(m: usize, e: usize) -> Result<BoundReport> {
    check_order(m)?;
    let d = e + 1;
    let mut best = (1u128, 1u128);
    for w in 0..=m {
        let (num, den) = levenshtein_fraction(m, d, w)?;
        if num * best.1 > best.0 * den {
            best = (num, den);
        }
    }
    let ceil = best.0.div_ceil(best.1);
    Ok(BoundReport::value("levenshtein", BoundKind::Lower, ceil))
}

/// The specialization of the Levenshtein bound at w = floor(m/2): the
/// central-weight fraction with paired binomial denominators.
pub fn central_levenshtein_fraction(m: usize, e: usize) -> Result<(u128, u128)> {
    levenshtein_fraction(m, e + 1, m / 2)
}

/// Upper bound N(m, e) <= A(m, 2(e+1)) read from a user-supplied table.
pub fn external_code_upper(m: usize, e: usize, table: &AndTable) -> Result<BoundReport> {
    check_order(m)?;
    let d = 2 * (e + 1);
    Ok(match table.get(m, d) {
        Some(v) => BoundReport::value("external_code", BoundKind::Upper, v),
        None => BoundReport::not_applicable(
            "external_code",
            BoundKind::Upper,
            format!("table has no entry for A({m}, {d})"),
        ),
    })
}

/// Mesowire count sufficient for an ideal randomized contact decoder to
/// address all n nanowires under e errors with probability >= 1 - epsilon.
pub fn randomized_contact_requirement(n: usize, e: usize, epsilon: f64, p: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Usage("n must be >= 1".into()));
    }
    if !(0.0 < p && p < 1.0) {
        return Err(Error::Usage(format!("contact probability p must lie in (0, 1), got {p}")));
    }
    if !(0.0 < epsilon && epsilon < 1.0) {
        return Err(Error::Usage(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let e = e as f64;
    let n = n as f64;
    let log_term = (n * n / epsilon).ln();
    let root = (e * e + 4.0 * log_term).sqrt();
    Ok((e + root).powi(2) / (4.0 * p * (1.0 - p)))
}

/// Information bits of a code of size n: floor(log2 n).
pub fn info_bits(n: u128) -> Result<u32> {
    if n == 0 {
        return Err(Error::Usage("code size must be >= 1".into()));
    }
    Ok(n.ilog2())
}

/// Extra inputs to [`aggregate`].
#[derive(Default)]
pub struct AggregateOptions<'a> {
    /// Best-known A(n, d) values for the external-code upper bound
    /// N(m, e) <= A(m, 2(e+1)).
    pub and_table: Option<&'a AndTable>,
    /// Additional certified lower bounds, e.g. from search witnesses or
    /// certificate files, as (provenance, value) pairs.
    pub extra_lower: Vec<(String, u128)>,
    /// Additional certified upper bounds, e.g. an exact search result.
    pub extra_upper: Vec<(String, u128)>,
}

/// Best-known bracket for N(m, e) from every applicable closed form plus
/// the caller-provided certificates.
pub fn aggregate(m: usize, e: usize, options: &AggregateOptions) -> Result<Bracket> {
    check_order(m)?;
    let mut reports = vec![
        sperner(m)?,
        plotkin(m, e)?,
        balding_torney(m, e)?,
        trivial_small(m, e)?,
        steiner_exact_for(m, e)?,
        hadamard_exact(m, e)?,
        complete_uniform_lower(m, e)?,
        best_levenshtein(m, e)?,
    ];
    if let Some(table) = options.and_table {
        reports.push(external_code_upper(m, e, table)?);
    }
    for (name, v) in &options.extra_lower {
        reports.push(BoundReport::value(name, BoundKind::Lower, *v));
    }
    for (name, v) in &options.extra_upper {
        reports.push(BoundReport::value(name, BoundKind::Upper, *v));
    }

    // A single block is always a valid decoder.
    let mut lower = (1u128, "trivial".to_string());
    let mut upper: Option<(u128, String)> = None;
    for r in &reports {
        let Some(v) = r.applicable_value() else { continue };
        // Sperner is exact only at e = 0; for e > 0 it is an upper bound.
        let kind = if r.name == "sperner" && e > 0 {
            BoundKind::Upper
        } else {
            r.kind
        };
        if matches!(kind, BoundKind::Lower | BoundKind::Exact) && v > lower.0 {
            lower = (v, r.name.clone());
        }
        if matches!(kind, BoundKind::Upper | BoundKind::Exact)
            && upper.as_ref().is_none_or(|(u, _)| v < *u)
        {
            upper = Some((v, r.name.clone()));
        }
    }
    let (upper, upper_by) = upper.expect("sperner always applies");
    if lower.0 > upper {
        return Err(Error::Usage(format!(
            "inconsistent bounds for N({m}, {e}): lower {} from {} exceeds upper {} from {}",
            lower.0, lower.1, upper, upper_by
        )));
    }
    Ok(Bracket {
        exact: (lower.0 == upper).then_some(upper),
        lower: lower.0,
        lower_by: lower.1,
        upper,
        upper_by,
        reports,
    })
}

/// [`steiner_exact`] gated on e = 1, for the aggregator.
fn steiner_exact_for(m: usize, e: usize) -> Result<BoundReport> {
    if e == 1 {
        steiner_exact(m)
    } else {
        Ok(BoundReport::not_applicable(
            "steiner",
            BoundKind::Exact,
            "applies only at e = 1",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Published Table-3 values: exact or (lo, hi), for 0 <= e < m <= 16.
    /// Unlisted trailing cells are 1.
    pub(crate) fn published(m: usize, e: usize) -> (u128, u128) {
        let exact = |v: u128| (v, v);
        let row: Vec<(u128, u128)> = match m {
            1 => vec![exact(1)],
            2 => vec![exact(2)],
            3 => vec![exact(3)],
            4 => vec![exact(6), exact(2)],
            5 => vec![exact(10), exact(2)],
            6 => vec![exact(20), exact(4), exact(2)],
            7 => vec![exact(35), exact(7), exact(2)],
            8 => vec![exact(70), exact(14), exact(2), exact(2)],
            9 => vec![exact(126), exact(18), exact(3), exact(2)],
            10 => vec![exact(252), exact(36), exact(6), exact(2), exact(2)],
            11 => vec![exact(462), exact(66), exact(11), exact(2), exact(2)],
            12 => vec![exact(924), exact(132), exact(22), exact(4), exact(2), exact(2)],
            13 => vec![exact(1716), (166, 256), (26, 32), exact(4), exact(2), exact(2)],
            14 => vec![exact(3432), (325, 512), (42, 64), exact(8), exact(2), exact(2), exact(2)],
            15 => vec![exact(6435), (585, 1024), (70, 128), (15, 16), exact(3), exact(2), exact(2)],
            16 => vec![
                exact(12870),
                (1170, 2048),
                (120, 256),
                (30, 32),
                exact(4),
                exact(2),
                exact(2),
                exact(2),
            ],
            _ => panic!("published table covers m <= 16"),
        };
        row.get(e).copied().unwrap_or(exact(1))
    }

    #[test]
    fn sperner_examples() {
        assert_eq!(sperner(4).unwrap().applicable_value(), Some(6));
        assert_eq!(sperner(1).unwrap().applicable_value(), Some(1));
        assert_eq!(sperner(16).unwrap().applicable_value(), Some(12870));
        assert!(sperner(0).is_err());
        assert!(sperner(65).is_err());
    }

    #[test]
    fn plotkin_examples() {
        assert_eq!(plotkin(6, 1).unwrap().applicable_value(), Some(4));
        assert_eq!(plotkin(20, 5).unwrap().applicable_value(), Some(6));
        assert_eq!(plotkin(8, 1).unwrap().applicable_value(), Some(16));
        assert!(plotkin(9, 1).unwrap().applicable_value().is_none());
        // The matching upper bound of the Hadamard family.
        for e in 0..=7usize {
            assert_eq!(
                plotkin(4 * e + 2, e).unwrap().applicable_value(),
                Some(2 * e as u128 + 2)
            );
        }
    }

    #[test]
    fn balding_torney_reduces_to_sperner_at_e0() {
        for m in 1..=16 {
            assert_eq!(
                balding_torney(m, 0).unwrap().applicable_value(),
                sperner(m).unwrap().applicable_value()
            );
        }
    }

    #[test]
    fn balding_torney_steiner_calibration() {
        // Forced by the Steiner equalities.
        for (m, expected) in [(7, 7), (8, 14), (11, 66), (12, 132)] {
            assert_eq!(balding_torney(m, 1).unwrap().applicable_value(), Some(expected));
            assert_eq!(steiner_exact(m).unwrap().applicable_value(), Some(expected));
        }
    }

    #[test]
    fn balding_torney_never_below_published() {
        for m in 1..=16 {
            for e in 0..m {
                let bt = balding_torney(m, e).unwrap().applicable_value().unwrap();
                let (lo, _) = published(m, e);
                assert!(bt >= lo, "BT({m},{e}) = {bt} below published lower {lo}");
            }
        }
    }

    #[test]
    fn steiner_exact_examples() {
        assert_eq!(steiner_exact(7).unwrap().applicable_value(), Some(7));
        assert_eq!(steiner_exact(8).unwrap().applicable_value(), Some(14));
        assert_eq!(steiner_exact(11).unwrap().applicable_value(), Some(66));
        assert!(steiner_exact(9).unwrap().applicable_value().is_none());
    }

    #[test]
    fn trivial_small_examples() {
        assert_eq!(trivial_small(3, 1).unwrap().applicable_value(), Some(1));
        assert_eq!(trivial_small(5, 1).unwrap().applicable_value(), Some(2));
        assert_eq!(trivial_small(16, 7).unwrap().applicable_value(), Some(2));
        assert!(trivial_small(6, 1).unwrap().applicable_value().is_none());
    }

    #[test]
    fn katona_envelope_properties() {
        for m in 1..=64 {
            for e in 0..=7 {
                let env = katona_envelope(m, e).unwrap();
                assert!(env.lower <= env.upper);
                // Envelope ratio is 2^(2s-1) (s-1)!, independent of m.
                let s = e + 1;
                let expected =
                    2f64.powi(2 * s as i32 - 1) * (1..s).map(|i| i as f64).product::<f64>();
                assert!((env.upper / env.lower - expected).abs() < 1e-9 * expected);
            }
        }
        // e = 0 envelope brackets the central binomial coefficient.
        for m in 1..=30 {
            let env = katona_envelope(m, 0).unwrap();
            let exact = binomial(m, m / 2) as f64;
            assert!(env.lower <= exact * 2.0 && exact <= env.upper * 2.0);
        }
    }

    #[test]
    fn levenshtein_examples() {
        assert_eq!(levenshtein_fraction(4, 2, 2).unwrap(), (6, 5));
        assert_eq!(central_levenshtein_fraction(15, 1).unwrap(), (6435, 57));
        assert_eq!(levenshtein_fraction(9, 1, 0).unwrap(), (1, 1));
        assert_eq!(levenshtein_fraction(9, 1, 9).unwrap(), (1, 1));
        assert!(levenshtein_fraction(4, 0, 2).is_err());
        assert!(levenshtein_fraction(4, 2, 5).is_err());
    }

    #[test]
    fn best_levenshtein_dominates_central_weight() {
        for m in 1..=16 {
            for e in 0..=3.min(m - 1) {
                let best = best_levenshtein(m, e).unwrap().applicable_value().unwrap();
                let (num, den) = central_levenshtein_fraction(m, e).unwrap();
                assert!(
                    best >= num.div_ceil(den),
                    "best_levenshtein({m},{e}) = {best} below central value {num}/{den}"
                );
            }
        }
        // The explicit value behind the published N(15, 1) discussion.
        assert!(best_levenshtein(15, 1).unwrap().applicable_value().unwrap() >= 113);
    }

    #[test]
    fn external_code_upper_examples() {
        let table = AndTable::parse("13 4 256\n14 4 512\n").unwrap();
        assert_eq!(external_code_upper(13, 1, &table).unwrap().applicable_value(), Some(256));
        assert_eq!(external_code_upper(14, 1, &table).unwrap().applicable_value(), Some(512));
        assert!(external_code_upper(12, 1, &table).unwrap().applicable_value().is_none());
    }

    #[test]
    fn randomized_contact_examples() {
        // e = 0 collapses the square to 4 ln(n^2 / eps) / (4 p (1-p)).
        let v = randomized_contact_requirement(1, 0, 0.5, 0.5).unwrap();
        assert!((v - 4.0 * (1.0 / 0.5f64).ln()).abs() < 1e-12);
        // Monotone in n and e; minimized at p = 1/2.
        let base = randomized_contact_requirement(100, 1, 0.01, 0.5).unwrap();
        assert!(randomized_contact_requirement(200, 1, 0.01, 0.5).unwrap() > base);
        assert!(randomized_contact_requirement(100, 2, 0.01, 0.5).unwrap() > base);
        assert!(randomized_contact_requirement(100, 1, 0.01, 0.3).unwrap() > base);
        assert!(randomized_contact_requirement(100, 1, 0.01, 0.7).unwrap() > base);
        assert!(randomized_contact_requirement(100, 1, 0.01, 0.0).is_err());
        assert!(randomized_contact_requirement(100, 1, 0.01, 1.0).is_err());
    }

    #[test]
    fn info_bits_examples() {
        assert_eq!(info_bits(7).unwrap(), 2);
        assert_eq!(info_bits(512).unwrap(), 9);
        assert_eq!(info_bits(1).unwrap(), 0);
        assert!(info_bits(0).is_err());
    }

    #[test]
    fn aggregate_examples() {
        let opts = AggregateOptions::default();
        assert_eq!(aggregate(6, 1, &opts).unwrap().exact, Some(4));
        assert_eq!(aggregate(2, 0, &opts).unwrap().exact, Some(2));
        // (12, 2) needs a search witness for exactness; closed forms alone
        // bracket it below 24.
        let b = aggregate(12, 2, &opts).unwrap();
        assert!(b.exact.is_none());
        assert_eq!(b.upper, 24);
        let with_witness = aggregate(
            12,
            2,
            &AggregateOptions {
                extra_lower: vec![("search".into(), 22)],
                extra_upper: vec![("search".into(), 22)],
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(with_witness.exact, Some(22));
    }

    #[test]
    fn aggregate_brackets_contain_published_values() {
        let opts = AggregateOptions::default();
        for m in 1..=16 {
            for e in 0..m {
                let b = aggregate(m, e, &opts).unwrap();
                assert!(b.lower <= b.upper);
                let (lo, hi) = published(m, e);
                assert!(
                    b.lower <= hi && b.upper >= lo,
                    "bracket [{}, {}] for N({m},{e}) misses published [{lo}, {hi}]",
                    b.lower,
                    b.upper
                );
                if let Some(x) = b.exact {
                    assert!(lo <= x && x <= hi, "exact {x} for N({m},{e}) outside published");
                }
            }
        }
    }

    #[test]
    fn complete_uniform_examples() {
        // Duals of complete 2-subsets of [4] and 3-subsets of [6].
        assert_eq!(complete_uniform_lower(6, 1).unwrap().applicable_value(), Some(4));
        assert_eq!(complete_uniform_lower(20, 5).unwrap().applicable_value(), Some(6));
    }
}
