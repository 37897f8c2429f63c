use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Field order used whenever the caller does not choose one. Q(zeta_72)
/// contains zeta_18, sqrt(2), sqrt(3) and i.
pub const DEFAULT_ORDER: u32 = 72;

pub(crate) struct FieldData {
    pub order: u32,
    pub degree: usize,
    /// Phi_n, lowest coefficient first, monic.
    pub modulus: Vec<i64>,
    /// `powers[k]` is x^k mod Phi_n for 0 <= k < n.
    pub powers: Vec<Vec<i64>>,
}

/// Handle on Q(zeta_n). Cheap to clone; equal handles describe the same field.
#[derive(Clone)]
pub struct CyclotomicField(pub(crate) Arc<FieldData>);

impl CyclotomicField {
    /// Returns the (cached) field Q(zeta_n).
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, CyclotomicField>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        if let Some(f) = guard.get(&order) {
            return Ok(f.clone());
        }
        let field = CyclotomicField(Arc::new(FieldData::build(order)));
        guard.insert(order, field.clone());
        Ok(field)
    }

    pub fn default_field() -> Self {
        Self::new(DEFAULT_ORDER).expect("default order is valid")
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// phi(n), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Coefficients of the n-th cyclotomic polynomial, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.0.modulus
    }

    /// Number of roots of unity in the field: n for even n, 2n for odd n.
    pub fn roots_of_unity_count(&self) -> u32 {
        if self.0.order % 2 == 0 {
            self.0.order
        } else {
            2 * self.0.order
        }
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}

impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.order)
    }
}

impl FieldData {
    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let n = order as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce x^degree = -sum modulus[j] x^j
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] = cur[j]
                        .checked_sub(top.checked_mul(modulus[j]).expect("power table overflow"))
                        .expect("power table overflow");
                }
            }
        }
        FieldData { order, degree, modulus, powers }
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Phi_n by exact division of x^n - 1 by Phi_d for every proper divisor d.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let q = cyclotomic_polynomial(d);
        p = exact_div_monic(&p, &q);
    }
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "non-exact cyclotomic division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi72_is_sparse() {
        // Phi_72(x) = x^24 - x^12 + 1
        let p = cyclotomic_polynomial(72);
        assert_eq!(p.len(), 25);
        let nonzero: Vec<(usize, i64)> =
            p.iter().copied().enumerate().filter(|(_, c)| *c != 0).collect();
        assert_eq!(nonzero, vec![(0, 1), (12, -1), (24, 1)]);
    }

    #[test]
    fn power_table_wraps() {
        let f = CyclotomicField::new(72).unwrap();
        assert_eq!(f.degree(), 24);
        // x^36 = -1
        let mut minus_one = vec![0; 24];
        minus_one[0] = -1;
        assert_eq!(f.0.powers[36], minus_one);
    }

    #[test]
    fn zero_order_rejected() {
        assert!(matches!(CyclotomicField::new(0), Err(Error::ZeroOrder)));
    }
}
