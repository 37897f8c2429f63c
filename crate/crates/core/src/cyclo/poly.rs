//! Dense polynomials over Q, only what the field inverse needs.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled_shifted(a: &mut Poly, b: &Poly, c: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        a[i + shift] -= c * bi;
    }
    trim(a);
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        quot[shift] = c.clone();
        sub_scaled_shifted(&mut rem, b, &c, shift);
    }
    trim(&mut quot);
    (quot, rem)
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Returns `s` with `s * a = 1 mod m`, or `None` if `gcd(a, m) != 1`.
pub(crate) fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    let mut r0 = m.clone();
    let mut r1 = a.clone();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Poly = s0.into_iter().map(|x| x / &c).collect();
    let (_, rem) = div_rem(&inv, m);
    inv = rem;
    Some(inv)
}
