//! Small exact combinatorics helpers.

/// Binomial coefficient C(n, k) in exact integer arithmetic.
///
/// Values stay well inside `u128` for every n <= 64 this crate accepts.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
