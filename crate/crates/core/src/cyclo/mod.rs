//! Exact arithmetic in the cyclotomic field Q(zeta_n).
//!
//! Elements are stored on the power basis `1, zeta, ..., zeta^{phi(n)-1}`
//! after reduction modulo the n-th cyclotomic polynomial, so two values are
//! equal iff their coordinate vectors are identical.

mod coeffs;
mod field;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use coeffs::Coeffs;
pub use field::{CyclotomicField, DEFAULT_ORDER};

/// An exact element of Q(zeta_n).
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: CyclotomicField,
    coeffs: Coeffs,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl CyclotomicNumber {
    pub fn zero(field: &CyclotomicField) -> Self {
        CyclotomicNumber { field: field.clone(), coeffs: Coeffs::zero(field.degree()) }
    }

    pub fn one(field: &CyclotomicField) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &CyclotomicField, v: i64) -> Self {
        let mut num = vec![0; field.degree()];
        num[0] = v;
        CyclotomicNumber { field: field.clone(), coeffs: Coeffs::from_integer_vec(num) }
    }

    pub fn from_rational(field: &CyclotomicField, v: &BigRational) -> Self {
        let mut vals = vec![BigRational::zero(); field.degree()];
        vals[0] = v.clone();
        CyclotomicNumber { field: field.clone(), coeffs: Coeffs::from_rationals(&vals) }
    }

    /// Builds a value from its power-basis coordinates.
    pub fn from_coefficients(field: &CyclotomicField, values: &[BigRational]) -> Result<Self> {
        if values.len() != field.degree() {
            return Err(Error::DimensionMismatch { left: values.len(), right: field.degree() });
        }
        Ok(CyclotomicNumber { field: field.clone(), coeffs: Coeffs::from_rationals(values) })
    }

    /// `zeta_field^k` for the field's own order; `k` may be negative.
    pub fn zeta(field: &CyclotomicField, k: i64) -> Self {
        let n = field.order() as i64;
        let idx = k.rem_euclid(n) as usize;
        CyclotomicNumber { field: field.clone(), coeffs: Coeffs::from_integer_vec(field.0.powers[idx].clone()) }
    }

    /// `zeta_n^k` embedded in `field`; `n` must divide the field order.
    pub fn root_of_unity(field: &CyclotomicField, k: i64, n: u32) -> Result<Self> {
        if n == 0 || field.order() % n != 0 {
            return Err(Error::OrderNotDividing { requested: n, ambient: field.order() });
        }
        let step = (field.order() / n) as i64;
        Ok(Self::zeta(field, k * step))
    }

    /// Positive square root of 2, 3 or 6. Fails when the root is not in the field.
    ///
    /// sqrt(2) = zeta_8 + zeta_8^-1 needs 8 | n, sqrt(3) = zeta_12 + zeta_12^-1 needs
    /// 12 | n and sqrt(6) needs 24 | n (the conductors of the quadratic fields).
    pub fn sqrt_constant(field: &CyclotomicField, m: u32) -> Result<Self> {
        let n = field.order();
        let too_small = Error::FieldTooSmall { radicand: m, order: n };
        match m {
            2 => {
                if n % 8 != 0 {
                    return Err(too_small);
                }
                Ok(&Self::root_of_unity(field, 1, 8)? + &Self::root_of_unity(field, -1, 8)?)
            }
            3 => {
                if n % 12 != 0 {
                    return Err(too_small);
                }
                Ok(&Self::root_of_unity(field, 1, 12)? + &Self::root_of_unity(field, -1, 12)?)
            }
            6 => {
                if n % 24 != 0 {
                    return Err(too_small);
                }
                Ok(&Self::sqrt_constant(field, 2)? * &Self::sqrt_constant(field, 3)?)
            }
            other => Err(Error::UnsupportedRadicand(other)),
        }
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    fn with(&self, coeffs: Coeffs) -> Self {
        CyclotomicNumber { field: self.field.clone(), coeffs }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.with(self.coeffs.add(&other.coeffs)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.with(self.coeffs.sub(&other.coeffs)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.with(self.coeffs.mul(&other.coeffs, &self.field.0)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(&self.field)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.is_rational()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs.rational_at(0))
    }

    /// Power-basis coordinates.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.coeffs.rationals()
    }

    /// The automorphism zeta -> zeta^k; `k` must be a unit mod n.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order() as i64;
        let k = k.rem_euclid(n) as usize;
        self.with(self.coeffs.remap(&self.field.0, |j| j * k))
    }

    /// Complex conjugation, zeta -> zeta^-1.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// `self * zeta^k`, computed by index shifting.
    pub fn mul_zeta(&self, k: i64) -> Self {
        let n = self.order() as i64;
        let k = k.rem_euclid(n) as usize;
        self.with(self.coeffs.remap(&self.field.0, |j| j + k))
    }

    /// `self * conj(self)`, the squared modulus under the standard embedding.
    pub fn abs_squared(&self) -> Self {
        self * &self.conj()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRational> =
            self.field.modulus().iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        let inv = poly::inverse_mod(&self.coefficients(), &modulus).ok_or(Error::DivisionByZero)?;
        let mut vals = vec![BigRational::zero(); self.field.degree()];
        for (i, v) in inv.into_iter().enumerate() {
            vals[i] = v;
        }
        Ok(self.with(Coeffs::from_rationals(&vals)))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        self.with(self.coeffs.scale_rational(r))
    }

    /// Float image under zeta -> exp(2 pi i / n). Display only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * j as f64 / n;
            acc += Complex64::from_polar(v, ang);
        }
        acc
    }

    /// Writes the value as `r * zeta_n^k` with rational `r` if possible.
    /// `k` is the smallest such exponent; `r` may be negative.
    pub fn as_root_of_unity_multiple(&self) -> Option<(BigRational, u32)> {
        if self.is_zero() {
            return Some((BigRational::zero(), 0));
        }
        let n = self.order();
        (0..n).find_map(|k| self.mul_zeta(-(k as i64)).as_rational().map(|r| (r, k)))
    }

    /// If the value is a root of unity, its exponent `k` with value = zeta_m^k,
    /// where `m` is [`CyclotomicField::roots_of_unity_count`].
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        let (r, k) = self.as_root_of_unity_multiple()?;
        let n = self.order();
        let m = self.field.roots_of_unity_count();
        let scale = m / n;
        if r.is_one() {
            Some(k * scale)
        } else if r == -BigRational::one() {
            Some((k * scale + m / 2) % m)
        } else {
            None
        }
    }

    /// Lexicographic order on the coordinate vector. Used only to pick
    /// deterministic representatives.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.field.order().cmp(&other.field.order()).then_with(|| self.coeffs.cmp_lex(&other.coeffs))
    }

    /// `r*zeta(n)^k` when the value is a rational multiple of a root of unity.
    pub fn pretty(&self) -> Option<String> {
        let (r, k) = self.as_root_of_unity_multiple()?;
        Some(format!("{}*zeta({})^{}", fmt_rational(&r), self.order(), k))
    }

    /// Phase notation such as `-e^{4i\pi/9}` or `\frac{\sqrt{2}}{2}e^{7i\pi/9}`.
    /// Falls back to the canonical form when no such expression is found.
    pub fn phase_notation(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        for m in [1u32, 2, 3, 6] {
            let candidate = if m == 1 {
                Some(self.clone())
            } else {
                Self::sqrt_constant(&self.field, m)
                    .ok()
                    .map(|s| (self * &s).scale(&BigRational::new(BigInt::one(), BigInt::from(m))))
            };
            let Some(c) = candidate else { continue };
            let Some((r, k)) = c.as_root_of_unity_multiple() else { continue };
            // angle in units of pi: 2k/n
            let n = self.order() as i64;
            let mut num = 2 * k as i64;
            let mut den = n;
            if r.is_negative() {
                num += den;
            }
            num = num.rem_euclid(2 * den);
            let mut negative = false;
            if num >= den {
                negative = true;
                num -= den;
            }
            let g = num.gcd(&den).max(1);
            num /= g;
            den /= g;
            let r = r.abs();
            let mut out = String::new();
            if negative {
                out.push('-');
            }
            let coef = match (m, r.is_one()) {
                (1, true) => String::new(),
                (1, false) if r.denom().is_one() => r.numer().to_string(),
                (1, false) => format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom()),
                (m, _) => {
                    let p = r.numer();
                    let q = r.denom();
                    let top = if p.is_one() { format!("\\sqrt{{{m}}}") } else { format!("{p}\\sqrt{{{m}}}") };
                    if q.is_one() {
                        top
                    } else {
                        format!("\\frac{{{top}}}{{{q}}}")
                    }
                }
            };
            out.push_str(&coef);
            if num == 0 {
                if coef.is_empty() {
                    out.push('1');
                }
            } else {
                let lead = if num == 1 { String::new() } else { num.to_string() };
                if den == 1 {
                    out.push_str(&format!("e^{{{lead}i\\pi}}"));
                } else {
                    out.push_str(&format!("e^{{{lead}i\\pi/{den}}}"));
                }
            }
            return out;
        }
        self.to_string()
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc({})[", self.order())?;
        for (i, c) in self.coefficients().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(c))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pretty() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "{self}"),
        }
    }
}

impl FromStr for CyclotomicNumber {
    type Err = Error;

    /// Accepts the canonical `cyc(n)[c0, ...]` form and the `r*zeta(n)^k` form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cyc(") {
            let (n, rest) = rest.split_once(')').ok_or_else(|| Error::Parse(s.to_string()))?;
            let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad order in {s:?}")))?;
            let body = rest
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("missing brackets in {s:?}")))?;
            let field = CyclotomicField::new(n)?;
            let vals = body.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
            return Self::from_coefficients(&field, &vals);
        }
        let (r, rest) = s.split_once("*zeta(").ok_or_else(|| Error::Parse(format!("unrecognised form {s:?}")))?;
        let (n, k) = rest.split_once(")^").ok_or_else(|| Error::Parse(format!("unrecognised form {s:?}")))?;
        let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad order in {s:?}")))?;
        let k: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
        let field = CyclotomicField::new(n)?;
        Ok(Self::zeta(&field, k).scale(&parse_rational(r)?))
    }
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.with(self.coeffs.neg())
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}
