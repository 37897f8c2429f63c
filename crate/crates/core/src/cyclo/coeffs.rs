//! Coefficient storage for cyclotomic numbers.
//!
//! A value is `num / den` coordinate-wise with `den > 0` and
//! `gcd(den, num...) = 1`. Values that fit in `i64` are always stored in the
//! `Small` variant, so derived equality and hashing are canonical.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::FieldData;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Coeffs {
    Small { num: Box<[i64]>, den: i64 },
    Big { num: Box<[BigInt]>, den: BigInt },
}

/// Integer arithmetic with overflow reporting. `i128` overflows, `BigInt`
/// never does.
pub(crate) trait Int: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
}

impl Int for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Int for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

fn normalize<T: Int>(mut num: Vec<T>, mut den: T) -> Option<(Vec<T>, T)> {
    debug_assert!(!den.is_zero());
    if den.is_neg() {
        den = den.neg()?;
        for c in num.iter_mut() {
            *c = c.neg()?;
        }
    }
    if num.iter().all(Int::is_zero) {
        return Some((num, T::from_i64(1)));
    }
    let mut g = den.clone();
    for c in &num {
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    if g != T::from_i64(1) {
        for c in num.iter_mut() {
            *c = c.div_exact(&g);
        }
        den = den.div_exact(&g);
    }
    Some((num, den))
}

fn add_generic<T: Int>(an: &[T], ad: &T, bn: &[T], bd: &T, negate_b: bool) -> Option<(Vec<T>, T)> {
    let g = ad.gcd(bd);
    let fa = bd.div_exact(&g);
    let fb = ad.div_exact(&g);
    let den = ad.mul(&fa)?;
    let mut out = Vec::with_capacity(an.len());
    for (x, y) in an.iter().zip(bn) {
        let l = x.mul(&fa)?;
        let r = y.mul(&fb)?;
        out.push(if negate_b { l.sub(&r)? } else { l.add(&r)? });
    }
    normalize(out, den)
}

fn mul_generic<T: Int>(an: &[T], ad: &T, bn: &[T], bd: &T, field: &FieldData) -> Option<(Vec<T>, T)> {
    let deg = field.degree;
    let n = field.order as usize;
    let zero = T::from_i64(0);
    let mut conv = vec![zero.clone(); 2 * deg - 1];
    for (i, x) in an.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in bn.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            conv[i + j] = conv[i + j].add(&x.mul(y)?)?;
        }
    }
    let mut out: Vec<T> = conv[..deg].to_vec();
    for (k, c) in conv.iter().enumerate().skip(deg) {
        if c.is_zero() {
            continue;
        }
        let row = &field.powers[k % n];
        for (o, &p) in out.iter_mut().zip(row) {
            if p != 0 {
                *o = o.add(&c.mul(&T::from_i64(p))?)?;
            }
        }
    }
    normalize(out, ad.mul(bd)?)
}

/// Linear map `sum_j c_j x^{map(j)}` reduced through the power table.
fn remap_generic<T: Int>(an: &[T], ad: &T, field: &FieldData, map: impl Fn(usize) -> usize) -> Option<(Vec<T>, T)> {
    let mut out = vec![T::from_i64(0); field.degree];
    for (j, c) in an.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let row = &field.powers[map(j) % field.order as usize];
        for (o, &p) in out.iter_mut().zip(row) {
            if p != 0 {
                *o = o.add(&c.mul(&T::from_i64(p))?)?;
            }
        }
    }
    normalize(out, ad.clone())
}

impl Coeffs {
    pub fn zero(degree: usize) -> Self {
        Coeffs::Small { num: vec![0; degree].into_boxed_slice(), den: 1 }
    }

    pub fn from_integer_vec(num: Vec<i64>) -> Self {
        Self::from_i128(num.into_iter().map(|v| v as i128).collect(), 1)
    }

    fn from_i128(num: Vec<i128>, den: i128) -> Self {
        match normalize(num.clone(), den) {
            Some((num, den)) => {
                let small: Option<Vec<i64>> = num.iter().map(|&c| i64::try_from(c).ok()).collect();
                match (small, i64::try_from(den)) {
                    (Some(num), Ok(den)) => Coeffs::Small { num: num.into_boxed_slice(), den },
                    _ => Self::from_big(num.into_iter().map(BigInt::from).collect(), BigInt::from(den)),
                }
            }
            None => Self::from_big(num.into_iter().map(BigInt::from).collect(), BigInt::from(den)),
        }
    }

    pub fn from_big(num: Vec<BigInt>, den: BigInt) -> Self {
        let (num, den) = normalize(num, den).expect("bigint arithmetic cannot overflow");
        let small: Option<Vec<i64>> = num.iter().map(|c| c.to_i64()).collect();
        match (small, den.to_i64()) {
            (Some(num), Some(den)) => Coeffs::Small { num: num.into_boxed_slice(), den },
            _ => Coeffs::Big { num: num.into_boxed_slice(), den },
        }
    }

    pub fn from_rationals(values: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for v in values {
            den = den.lcm(v.denom());
        }
        let num = values.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        Self::from_big(num, den)
    }

    fn as_i128(&self) -> Option<(Vec<i128>, i128)> {
        match self {
            Coeffs::Small { num, den } => Some((num.iter().map(|&c| c as i128).collect(), *den as i128)),
            Coeffs::Big { .. } => None,
        }
    }

    fn as_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Coeffs::Small { num, den } => (num.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den)),
            Coeffs::Big { num, den } => (num.to_vec(), den.clone()),
        }
    }

    fn binary(
        &self,
        other: &Self,
        small: impl Fn(&[i128], &i128, &[i128], &i128) -> Option<(Vec<i128>, i128)>,
        big: impl Fn(&[BigInt], &BigInt, &[BigInt], &BigInt) -> Option<(Vec<BigInt>, BigInt)>,
    ) -> Self {
        if let (Some((an, ad)), Some((bn, bd))) = (self.as_i128(), other.as_i128()) {
            if let Some((num, den)) = small(&an, &ad, &bn, &bd) {
                return Self::from_i128(num, den);
            }
        }
        let (an, ad) = self.as_big();
        let (bn, bd) = other.as_big();
        let (num, den) = big(&an, &ad, &bn, &bd).expect("bigint arithmetic cannot overflow");
        Self::from_big(num, den)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binary(
            other,
            |a, ad, b, bd| add_generic(a, ad, b, bd, false),
            |a, ad, b, bd| add_generic(a, ad, b, bd, false),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.binary(
            other,
            |a, ad, b, bd| add_generic(a, ad, b, bd, true),
            |a, ad, b, bd| add_generic(a, ad, b, bd, true),
        )
    }

    pub fn mul(&self, other: &Self, field: &FieldData) -> Self {
        self.binary(
            other,
            |a, ad, b, bd| mul_generic(a, ad, b, bd, field),
            |a, ad, b, bd| mul_generic(a, ad, b, bd, field),
        )
    }

    pub fn remap(&self, field: &FieldData, map: impl Fn(usize) -> usize) -> Self {
        if let Some((an, ad)) = self.as_i128() {
            if let Some((num, den)) = remap_generic(&an, &ad, field, &map) {
                return Self::from_i128(num, den);
            }
        }
        let (an, ad) = self.as_big();
        let (num, den) = remap_generic(&an, &ad, field, &map).expect("bigint arithmetic cannot overflow");
        Self::from_big(num, den)
    }

    pub fn neg(&self) -> Self {
        match self {
            Coeffs::Small { num, den } if num.iter().all(|&c| c != i64::MIN) => {
                Coeffs::Small { num: num.iter().map(|c| -c).collect(), den: *den }
            }
            _ => {
                let (num, den) = self.as_big();
                Self::from_big(num.into_iter().map(|c| -c).collect(), den)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeffs::Small { num, .. } => num.iter().all(|&c| c == 0),
            Coeffs::Big { num, .. } => num.iter().all(Zero::is_zero),
        }
    }

    /// Only the constant coordinate may be nonzero.
    pub fn is_rational(&self) -> bool {
        match self {
            Coeffs::Small { num, .. } => num[1..].iter().all(|&c| c == 0),
            Coeffs::Big { num, .. } => num[1..].iter().all(Zero::is_zero),
        }
    }

    pub fn rationals(&self) -> Vec<BigRational> {
        let (num, den) = self.as_big();
        num.into_iter().map(|c| BigRational::new(c, den.clone())).collect()
    }

    pub fn rational_at(&self, i: usize) -> BigRational {
        match self {
            Coeffs::Small { num, den } => BigRational::new(BigInt::from(num[i]), BigInt::from(*den)),
            Coeffs::Big { num, den } => BigRational::new(num[i].clone(), den.clone()),
        }
    }

    /// Lexicographic comparison of the rational coordinate vectors.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        if let (Coeffs::Small { num: a, den: ad }, Coeffs::Small { num: b, den: bd }) = (self, other) {
            for (x, y) in a.iter().zip(b.iter()) {
                let l = *x as i128 * *bd as i128;
                let r = *y as i128 * *ad as i128;
                match l.cmp(&r) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            return Ordering::Equal;
        }
        let (a, ad) = self.as_big();
        let (b, bd) = other.as_big();
        for (x, y) in a.iter().zip(b.iter()) {
            match (x * &bd).cmp(&(y * &ad)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let (num, den) = self.as_big();
        Self::from_big(num.into_iter().map(|c| c * r.numer()).collect(), den * r.denom())
    }
}
