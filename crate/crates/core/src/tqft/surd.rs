//! Exact arithmetic in Q(sqrt 3), where every level-4 quantum integer lives.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cyclo::{CyclotomicField, CyclotomicNumber};
use crate::error::Result;

/// `a + b sqrt(3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Surd3 {
    pub a: BigRational,
    pub b: BigRational,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational square root, if `q` is the square of a rational.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (p, d) = (q.numer(), q.denom());
    let (sp, sd) = (p.sqrt(), d.sqrt());
    (&(&sp * &sp) == p && &(&sd * &sd) == d).then(|| BigRational::new(sp, sd))
}

impl Surd3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Surd3 { a, b }
    }

    pub fn from_int(v: i64) -> Self {
        Surd3 { a: int(v), b: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of the real number `a + b sqrt(3)`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a^2 with 3 b^2
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * int(3);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        let norm = &self.a * &self.a - &self.b * &self.b * int(3);
        if norm.is_zero() {
            return None;
        }
        Some(Surd3 { a: &self.a / &norm, b: -&self.b / &norm })
    }

    /// Positive square root of a positive value, as `sqrt(s) * r` with
    /// `s` in {1, 2, 3, 6} and `r` in Q(sqrt 3).
    pub fn sqrt(&self) -> Option<(u32, Surd3)> {
        if self.signum() != Ordering::Greater {
            return None;
        }
        for s in [1u32, 2, 3, 6] {
            let u = &self.a / int(s as i64);
            let v = &self.b / int(s as i64);
            // (x + y sqrt3)^2 = u + v sqrt3  <=>  x^2 + 3y^2 = u, 2xy = v
            let mut candidates = Vec::new();
            if v.is_zero() {
                if let Some(x) = rational_sqrt(&u) {
                    candidates.push(Surd3::new(x, BigRational::zero()));
                }
                if let Some(y) = rational_sqrt(&(&u / int(3))) {
                    candidates.push(Surd3::new(BigRational::zero(), y));
                }
            } else if let Some(d) = rational_sqrt(&(&u * &u - &v * &v * int(3))) {
                for x2 in [(&u + &d) / int(2), (&u - &d) / int(2)] {
                    if let Some(x) = rational_sqrt(&x2) {
                        if x.is_zero() {
                            continue;
                        }
                        let y = &v / (&x * int(2));
                        candidates.push(Surd3::new(x, y));
                    }
                }
            }
            for c in candidates {
                let c = if c.signum() == Ordering::Less { -c } else { c };
                if &c * &c == Surd3::new(u.clone(), v.clone()) {
                    return Some((s, c));
                }
            }
        }
        None
    }

    pub fn to_cyclotomic(&self, field: &CyclotomicField) -> Result<CyclotomicNumber> {
        let r3 = CyclotomicNumber::sqrt_constant(field, 3)?;
        Ok(&CyclotomicNumber::from_rational(field, &self.a) + &r3.scale(&self.b))
    }

    #[cfg(test)]
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

impl Add for &Surd3 {
    type Output = Surd3;
    fn add(self, o: &Surd3) -> Surd3 {
        Surd3 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &Surd3 {
    type Output = Surd3;
    fn sub(self, o: &Surd3) -> Surd3 {
        Surd3 { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &Surd3 {
    type Output = Surd3;
    fn mul(self, o: &Surd3) -> Surd3 {
        Surd3 { a: &self.a * &o.a + &self.b * &o.b * int(3), b: &self.a * &o.b + &self.b * &o.a }
    }
}

impl Neg for Surd3 {
    type Output = Surd3;
    fn neg(self) -> Surd3 {
        Surd3 { a: -self.a, b: -self.b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: (i64, i64), b: (i64, i64)) -> Surd3 {
        Surd3::new(BigRational::new(a.0.into(), a.1.into()), BigRational::new(b.0.into(), b.1.into()))
    }

    #[test]
    fn signs() {
        assert_eq!(s((2, 1), (-1, 1)).signum(), Ordering::Greater); // 2 - 1.73
        assert_eq!(s((1, 1), (-1, 1)).signum(), Ordering::Less);
        assert_eq!(s((0, 1), (0, 1)).signum(), Ordering::Equal);
    }

    #[test]
    fn square_roots_square_back() {
        for v in [s((2, 1), (1, 1)), s((1, 3), (0, 1)), s((3, 1), (0, 1)), s((4, 1), (-2, 1)), s((1, 6), (0, 1))] {
            let (k, r) = v.sqrt().unwrap();
            assert_eq!(r.signum(), Ordering::Greater);
            let sq = &r * &r;
            let scaled = Surd3::new(&sq.a * int(k as i64), &sq.b * int(k as i64));
            assert_eq!(scaled, v);
            let approx = (k as f64).sqrt() * r.to_f64();
            assert!((approx - v.to_f64().sqrt()).abs() < 1e-12);
        }
        assert!(s((-1, 1), (0, 1)).sqrt().is_none());
        // sqrt(1 + sqrt 3) is not of the supported shape
        assert!(s((1, 1), (1, 1)).sqrt().is_none());
    }

    #[test]
    fn inverse() {
        let v = s((2, 1), (1, 1));
        let i = v.inverse().unwrap();
        assert_eq!(&v * &i, Surd3::from_int(1));
    }
}
