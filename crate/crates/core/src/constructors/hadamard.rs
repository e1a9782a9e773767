//! Hadamard matrices by Sylvester doubling and the Paley construction,
//! and the decoder family they yield: a (4e+2, 2e+2, e)-FTSND whenever a
//! Hadamard matrix of order 4(e+1) exists.

use crate::decoder::Decoder;
use crate::error::{Error, Result};
use crate::setsystem::{Block, DesignParams, SetSystem};

/// Prime powers q = 3 (mod 4) with a field implementation here; each gives
/// a Paley matrix of order q + 1.
const PALEY_PRIME_POWERS: [usize; 6] = [3, 7, 11, 19, 23, 27];

/// An exact {-1, +1} square matrix satisfying H H^T = order * I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardMatrix {
    order: usize,
    rows: Vec<Vec<i8>>,
}

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.rows[i][j]
    }

    /// Exact integer check of the defining identity H H^T = order * I.
    pub fn verify(&self) -> bool {
        let n = self.order;
        if self.rows.len() != n || self.rows.iter().any(|r| r.len() != n) {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let dot: i64 = (0..n).map(|k| self.rows[i][k] as i64 * self.rows[j][k] as i64).sum();
                let expect = if i == j { n as i64 } else { 0 };
                if dot != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Row and column negations making the first row and column all +1.
    pub fn normalized(&self) -> HadamardMatrix {
        let n = self.order;
        let mut rows = self.rows.clone();
        for j in 0..n {
            if rows[0][j] == -1 {
                for row in rows.iter_mut() {
                    row[j] = -row[j];
                }
            }
        }
        for row in rows.iter_mut() {
            if row[0] == -1 {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
        }
        HadamardMatrix { order: n, rows }
    }

    fn doubled(&self) -> HadamardMatrix {
        let n = self.order;
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..2 * n {
            let mut row = Vec::with_capacity(2 * n);
            for j in 0..2 * n {
                let mut v = self.rows[i % n][j % n];
                if i >= n && j >= n {
                    v = -v;
                }
                row.push(v);
            }
            rows.push(row);
        }
        HadamardMatrix { order: 2 * n, rows }
    }
}

/// Is `order` reachable by the methods implemented here? A `false` means
/// "not constructible by this crate", not nonexistence.
pub fn hadamard_order_constructible(order: usize) -> bool {
    match order {
        0 => false,
        1 | 2 => true,
        _ => {
            if order % 4 != 0 {
                return false;
            }
            if PALEY_PRIME_POWERS.contains(&(order - 1)) {
                return true;
            }
            order % 2 == 0 && hadamard_order_constructible(order / 2)
        }
    }
}

pub fn hadamard_matrix(order: usize) -> Result<HadamardMatrix> {
    match order {
        0 => Err(not_supported(order)),
        1 => Ok(HadamardMatrix {
            order: 1,
            rows: vec![vec![1]],
        }),
        _ => {
            if order % 4 != 0 && order != 2 {
                return Err(not_supported(order));
            }
            if PALEY_PRIME_POWERS.contains(&(order - 1)) {
                return paley(order - 1);
            }
            if order % 2 == 0 && hadamard_order_constructible(order / 2) {
                return Ok(hadamard_matrix(order / 2)?.doubled());
            }
            Err(not_supported(order))
        }
    }
}

fn not_supported(order: usize) -> Error {
    Error::NotSupported(format!(
        "no Hadamard matrix of order {order} constructible by Sylvester doubling or Paley over q in {PALEY_PRIME_POWERS:?}"
    ))
}

/// Paley type I: for a prime power q = 3 (mod 4), index rows and columns by
/// {inf} followed by the field elements; off-diagonal field entries carry
/// the quadratic character of the difference.
fn paley(q: usize) -> Result<HadamardMatrix> {
    let field = SmallField::new(q)?;
    let chi = field.quadratic_character();
    let n = q + 1;
    let mut rows = vec![vec![0i8; n]; n];
    rows[0] = vec![1; n];
    for a in 0..q {
        rows[a + 1][0] = -1;
        for b in 0..q {
            rows[a + 1][b + 1] = if a == b { 1 } else { chi[field.sub(a, b)] };
        }
    }
    let h = HadamardMatrix { order: n, rows };
    debug_assert!(h.verify());
    Ok(h)
}

/// Arithmetic in GF(p^k) for the few prime powers the Paley construction
/// needs. Elements are encoded as base-p digit strings packed in a usize.
struct SmallField {
    p: usize,
    k: usize,
    q: usize,
    /// Reduction rule: x^k = sum of reduction[i] * x^i.
    reduction: Vec<usize>,
}

impl SmallField {
    fn new(q: usize) -> Result<SmallField> {
        // Irreducible polynomials for the non-prime orders in use.
        // 27: x^3 = x + 1  (x^3 - x - 1 has no roots mod 3).
        let (p, k, reduction) = match q {
            27 => (3, 3, vec![1, 1, 0]),
            _ if is_prime(q) => (q, 1, vec![0]),
            _ => {
                return Err(Error::NotSupported(format!(
                    "no field implementation for order {q}"
                )))
            }
        };
        Ok(SmallField { p, k, q, reduction })
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k);
        let mut x = x;
        for _ in 0..self.k {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        let av = self.digits(a);
        let bv = self.digits(b);
        let diff: Vec<usize> = av
            .iter()
            .zip(&bv)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        self.pack(&diff)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let av = self.digits(a);
        let bv = self.digits(b);
        // Polynomial product, then reduce degree >= k terms by the rule.
        let mut prod = vec![0usize; 2 * self.k - 1];
        for (i, &x) in av.iter().enumerate() {
            for (j, &y) in bv.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for deg in (self.k..prod.len()).rev() {
            let coeff = prod[deg];
            if coeff != 0 {
                prod[deg] = 0;
                for (i, &r) in self.reduction.iter().enumerate() {
                    prod[deg - self.k + i] = (prod[deg - self.k + i] + coeff * r) % self.p;
                }
            }
        }
        self.pack(&prod[..self.k])
    }

    /// chi[x] = +1 if x is a nonzero square, -1 if a nonsquare; chi[0] = 0.
    fn quadratic_character(&self) -> Vec<i8> {
        let mut chi = vec![-1i8; self.q];
        for x in 1..self.q {
            chi[self.mul(x, x)] = 1;
        }
        chi[0] = 0;
        chi
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The Hadamard-design decoder: normalize a Hadamard matrix of order 4(e+1),
/// extract the symmetric (4e+3, 2e+1, e)-BIBD from its core, and keep the
/// 2e+2 blocks avoiding a fixed point.
pub fn hadamard_ftsnd(e: usize) -> Result<Decoder> {
    let order = 4 * (e + 1);
    let h = hadamard_matrix(order)?.normalized();
    let v = order - 1;

    // Rows 1..order over columns 1..order, +1 entries as incidence.
    let mut bibd_blocks = Vec::with_capacity(v);
    for i in 1..order {
        let pts: Vec<usize> = (1..order).filter(|&j| h.entry(i, j) == 1).collect();
        bibd_blocks.push(Block::new(v, &pts)?);
    }
    let bibd = SetSystem::new(v, bibd_blocks)?;
    if e >= 1 {
        let params = DesignParams::new(2, v, 2 * e + 1, e)?;
        if !bibd.is_t_design(&params) {
            return Err(Error::NotSupported(format!(
                "derived design of order {v} failed the (v, k, lambda) check"
            )));
        }
    }

    // Delete point 1 and keep the blocks avoiding it; relabel p -> p-1.
    let kept = bibd
        .blocks()
        .iter()
        .filter(|b| !b.contains(1))
        .map(|b| {
            let pts: Vec<usize> = b.points().iter().map(|p| p - 1).collect();
            Block::new(v - 1, &pts)
        })
        .collect::<Result<Vec<_>>>()?;
    let system = SetSystem::new(v - 1, kept)?;
    debug_assert_eq!(system.size(), 2 * e + 2);
    Ok(Decoder::new(system))
}
