//! SU(2) level-4 category data in the Kauffman-Jones normalisation:
//! fusion rules, quantum dimensions, unitary F-symbols, R-symbols and twists,
//! all exact in Q(zeta_n).
//!
//! Charges use the twice-spin convention, 0..=4.

mod surd;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::cyclo::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::par::Execution;
use surd::Surd3;

pub const LEVEL: u8 = 4;

/// Topological charge, `0..=LEVEL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct AnyonCharge(u8);

impl AnyonCharge {
    pub const VACUUM: AnyonCharge = AnyonCharge(0);

    pub fn new(v: u8) -> Result<Self> {
        if v > LEVEL {
            return Err(Error::InvalidCharge(v));
        }
        Ok(AnyonCharge(v))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = AnyonCharge> {
        (0..=LEVEL).map(AnyonCharge)
    }
}

impl TryFrom<u8> for AnyonCharge {
    type Error = Error;
    fn try_from(v: u8) -> Result<Self> {
        AnyonCharge::new(v)
    }
}

impl From<AnyonCharge> for u8 {
    fn from(c: AnyonCharge) -> u8 {
        c.0
    }
}

impl fmt::Display for AnyonCharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Truncated Clebsch-Gordan rule at level 4.
pub fn fusion_allowed(a: AnyonCharge, b: AnyonCharge, c: AnyonCharge) -> bool {
    admissible(a.0, b.0, c.0)
}

pub(crate) fn admissible(a: u8, b: u8, c: u8) -> bool {
    let k = LEVEL as i32;
    let (a, b, c) = (a as i32, b as i32, c as i32);
    a <= k && b <= k && c <= k && (a - b).abs() <= c && c <= (a + b).min(2 * k - a - b) && (a + b + c) % 2 == 0
}

/// Channels `c` of `a x b`.
pub(crate) fn channels(a: u8, b: u8) -> impl Iterator<Item = u8> {
    (0..=LEVEL).filter(move |&c| admissible(a, b, c))
}

/// Quantum integer [n] = sin(n pi/6) / sin(pi/6).
fn qint(n: i32) -> Surd3 {
    let table = [(0, 0), (1, 0), (0, 1), (2, 0), (0, 1), (1, 0), (0, 0), (-1, 0), (0, -1), (-2, 0), (0, -1), (-1, 0)];
    let (a, b) = table[n.rem_euclid(12) as usize];
    Surd3::new(BigRational::from_integer(BigInt::from(a)), BigRational::from_integer(BigInt::from(b)))
}

fn qfact(n: i32) -> Surd3 {
    (1..=n).fold(Surd3::from_int(1), |acc, k| &acc * &qint(k))
}

/// Triangle coefficient squared.
fn delta_sq(a: i32, b: i32, c: i32) -> Surd3 {
    let num = &(&qfact((a + b - c) / 2) * &qfact((a - b + c) / 2)) * &qfact((-a + b + c) / 2);
    &num * &qfact((a + b + c) / 2 + 1).inverse().expect("admissible triangle")
}

/// Unitary F-symbol before the vertex gauge: `sign * sqrt(P) * S` with `P > 0` and `S` in Q(sqrt3).
fn raw_f_symbol(field: &CyclotomicField, [a, b, c, d, e, f]: [u8; 6]) -> Result<CyclotomicNumber> {
    let (a, b, c, d, e, f) = (a as i32, b as i32, c as i32, d as i32, e as i32, f as i32);
    let mut sum = Surd3::from_int(0);
    let lo = [(a + b + e) / 2, (e + c + d) / 2, (b + c + f) / 2, (a + f + d) / 2].into_iter().max().unwrap();
    let hi = [(a + b + c + d) / 2, (a + c + e + f) / 2, (b + d + e + f) / 2].into_iter().min().unwrap();
    for z in lo..=hi {
        let num = qfact(z + 1);
        if num.is_zero() {
            continue;
        }
        let den = [
            z - (a + b + e) / 2,
            z - (e + c + d) / 2,
            z - (b + c + f) / 2,
            z - (a + f + d) / 2,
            (a + b + c + d) / 2 - z,
            (a + c + e + f) / 2 - z,
            (b + d + e + f) / 2 - z,
        ]
        .into_iter()
        .fold(Surd3::from_int(1), |acc, k| &acc * &qfact(k));
        let term = &num * &den.inverse().ok_or(Error::DivisionByZero)?;
        sum = if z % 2 == 0 { &sum + &term } else { &sum - &term };
    }
    if sum.is_zero() {
        return Ok(CyclotomicNumber::zero(field));
    }
    let norm = [delta_sq(a, b, e), delta_sq(e, c, d), delta_sq(b, c, f), delta_sq(a, f, d)]
        .iter()
        .fold(&qint(e + 1) * &qint(f + 1), |acc, x| &acc * x);
    let (s, root) = norm.sqrt().ok_or(Error::UnsupportedRadicand(0))?;
    let sqrt_s = if s == 1 { CyclotomicNumber::one(field) } else { CyclotomicNumber::sqrt_constant(field, s)? };
    let value = &(&sqrt_s * &root.to_cyclotomic(field)?) * &sum.to_cyclotomic(field)?;
    Ok(if ((a + b + c + d) / 2) % 2 == 0 { value } else { -value })
}

/// Vertex gauge. Cyclically symmetric, so F-symbols with a vacuum label stay 1;
/// chosen so the braid matrices on the 2222, 1221 and 2211 spaces come out in
/// the standard published form.
fn vertex_gauge(field: &CyclotomicField, a: u8, b: u8, c: u8) -> CyclotomicNumber {
    let i = CyclotomicNumber::root_of_unity(field, 1, 4).expect("4 divides the order");
    match (a, b, c) {
        (2, 2, 2) | (1, 2, 1) | (2, 1, 1) | (1, 1, 2) | (2, 1, 3) | (1, 3, 2) | (3, 2, 1) => i,
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => -i,
        _ => CyclotomicNumber::one(field),
    }
}

/// Kauffman variable and loop value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoryParams {
    pub level: u8,
    /// A = zeta_24^{a_exponent}.
    pub a_exponent: i64,
    pub a: CyclotomicNumber,
    /// d = -A^2 - A^-2.
    pub loop_value: CyclotomicNumber,
}

/// The full level-4 data set; immutable after construction.
#[derive(Clone, Debug)]
pub struct Theory {
    field: CyclotomicField,
    params: TheoryParams,
    dims: Vec<CyclotomicNumber>,
    twists: Vec<CyclotomicNumber>,
    f: BTreeMap<[u8; 6], CyclotomicNumber>,
    r: BTreeMap<[u8; 3], CyclotomicNumber>,
}

impl Theory {
    /// Picks the Kauffman variable among `e^{-i pi/12}` and its conjugate so that
    /// sigma_1 on (2,2,2,2 -> 0) is a multiple of the catalog `G1`.
    pub fn new(field: &CyclotomicField) -> Result<Self> {
        let catalog = Catalog::new(field)?;
        let g1 = catalog.get("G1")?;
        for exp in [-1i64, 1] {
            let theory = Self::with_kauffman_exponent(field, exp)?;
            let sigma1 = ExactMatrix::diagonal(
                [0u8, 2, 4].iter().map(|&c| theory.r_symbol_raw(2, 2, c)).collect(),
            );
            if sigma1.scalar_multiple_of(g1).is_some() {
                return Ok(theory);
            }
        }
        Err(Error::NoMatchingConvention)
    }

    pub fn default_field() -> Result<Self> {
        Self::new(&CyclotomicField::default_field())
    }

    /// Data for `A = zeta_24^exp` with no convention check.
    pub fn with_kauffman_exponent(field: &CyclotomicField, exp: i64) -> Result<Self> {
        let a = CyclotomicNumber::root_of_unity(field, exp, 24)?;
        let a2 = &a * &a;
        let loop_value = -(&a2 + &a2.inverse()?);
        let params = TheoryParams { level: LEVEL, a_exponent: exp, a: a.clone(), loop_value };

        let mut f = BTreeMap::new();
        for a_ in 0..=LEVEL {
            for b in 0..=LEVEL {
                for c in 0..=LEVEL {
                    for d in 0..=LEVEL {
                        for e in (0..=LEVEL).filter(|&e| admissible(a_, b, e) && admissible(e, c, d)) {
                            for g in (0..=LEVEL).filter(|&g| admissible(b, c, g) && admissible(a_, g, d)) {
                                let raw = raw_f_symbol(field, [a_, b, c, d, e, g])?;
                                let u = |x, y, z| vertex_gauge(field, x, y, z);
                                let num = &u(a_, b, e) * &u(e, c, d);
                                let den = &u(b, c, g) * &u(a_, g, d);
                                f.insert([a_, b, c, d, e, g], &(&raw * &num) * &den.inverse()?);
                            }
                        }
                    }
                }
            }
        }

        let mut r = BTreeMap::new();
        for x in 0..=LEVEL {
            for y in 0..=LEVEL {
                for z in channels(x, y) {
                    let (xi, yi, zi) = (x as i64, y as i64, z as i64);
                    let sign = if ((xi + yi - zi) / 2) % 2 == 0 { 1 } else { -1 };
                    let power = (zi * (zi + 2) - xi * (xi + 2) - yi * (yi + 2)) / 2;
                    let kauffman = a.pow(power)?.scale(&BigRational::from_integer(BigInt::from(sign)));
                    let ratio = vertex_gauge(field, x, y, z).try_div(&vertex_gauge(field, y, x, z))?;
                    r.insert([x, y, z], &kauffman * &ratio);
                }
            }
        }

        let dims: Vec<CyclotomicNumber> =
            (0..=LEVEL as i32).map(|x| qint(x + 1).to_cyclotomic(field)).collect::<Result<_>>()?;
        let mut twists = Vec::new();
        for x in 0..=LEVEL {
            let mut acc = CyclotomicNumber::zero(field);
            for c in channels(x, x) {
                acc = &acc + &(&dims[c as usize] * &r[&[x, x, c]]);
            }
            twists.push(acc.try_div(&dims[x as usize])?);
        }

        Ok(Theory { field: field.clone(), params, dims, twists, f, r })
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn params(&self) -> &TheoryParams {
        &self.params
    }

    pub fn quantum_dimension(&self, a: AnyonCharge) -> &CyclotomicNumber {
        &self.dims[a.0 as usize]
    }

    /// Topological spin theta_a = (1/d_a) sum_c d_c R^{aa}_c.
    pub fn twist(&self, a: AnyonCharge) -> &CyclotomicNumber {
        &self.twists[a.0 as usize]
    }

    pub fn r_symbol(&self, a: AnyonCharge, b: AnyonCharge, c: AnyonCharge) -> Result<CyclotomicNumber> {
        self.r.get(&[a.0, b.0, c.0]).cloned().ok_or(Error::Inadmissible(vec![a.0, b.0, c.0]))
    }

    pub(crate) fn r_symbol_raw(&self, a: u8, b: u8, c: u8) -> CyclotomicNumber {
        self.r.get(&[a, b, c]).cloned().unwrap_or_else(|| CyclotomicNumber::zero(&self.field))
    }

    /// `F^{abc}_d[e, f]`, zero when any vertex is inadmissible.
    pub fn f_symbol(&self, labels: [AnyonCharge; 6]) -> CyclotomicNumber {
        self.f_symbol_raw(labels.map(|c| c.0))
    }

    pub(crate) fn f_symbol_raw(&self, labels: [u8; 6]) -> CyclotomicNumber {
        self.f.get(&labels).cloned().unwrap_or_else(|| CyclotomicNumber::zero(&self.field))
    }

    /// Internal channels of `((ab)_e c)_d` (rows) and `(a(bc)_f)_d` (columns).
    pub fn f_channels(a: AnyonCharge, b: AnyonCharge, c: AnyonCharge, d: AnyonCharge) -> (Vec<u8>, Vec<u8>) {
        let (a, b, c, d) = (a.0, b.0, c.0, d.0);
        let es = (0..=LEVEL).filter(|&e| admissible(a, b, e) && admissible(e, c, d)).collect();
        let fs = (0..=LEVEL).filter(|&f| admissible(b, c, f) && admissible(a, f, d)).collect();
        (es, fs)
    }

    /// The F-move `((ab)_e c)_d = sum_f F[e,f] (a(bc)_f)_d` as a matrix, rows `e`, columns `f`.
    pub fn f_matrix(&self, a: AnyonCharge, b: AnyonCharge, c: AnyonCharge, d: AnyonCharge) -> Result<ExactMatrix> {
        let (es, fs) = Self::f_channels(a, b, c, d);
        if es.is_empty() {
            return Err(Error::Inadmissible(vec![a.0, b.0, c.0, d.0]));
        }
        let rows =
            es.iter().map(|&e| fs.iter().map(|&f| self.f_symbol_raw([a.0, b.0, c.0, d.0, e, f])).collect()).collect();
        ExactMatrix::from_rows(rows)
    }

    /// Unitary-normalised theta symbol sqrt(d_a d_b d_c).
    pub fn theta_symbol(&self, a: AnyonCharge, b: AnyonCharge, c: AnyonCharge) -> Result<CyclotomicNumber> {
        if !fusion_allowed(a, b, c) {
            return Err(Error::Inadmissible(vec![a.0, b.0, c.0]));
        }
        let prod = [a, b, c].iter().fold(Surd3::from_int(1), |acc, x| &acc * &qint(x.0 as i32 + 1));
        let (s, root) = prod.sqrt().ok_or(Error::UnsupportedRadicand(0))?;
        let sqrt_s = if s == 1 { CyclotomicNumber::one(&self.field) } else { CyclotomicNumber::sqrt_constant(&self.field, s)? };
        Ok(&sqrt_s * &root.to_cyclotomic(&self.field)?)
    }

    /// Exhaustive pentagon, hexagon, ribbon, unitarity and vacuum checks.
    pub fn consistency_check(&self, exec: Execution) -> Result<ConsistencyReport> {
        let l = 0..=LEVEL;
        let adm = admissible;

        // unitarity and vacuum legs
        let mut unitary = 0;
        let mut vacuum = 0;
        for a in l.clone() {
            for b in l.clone() {
                for c in l.clone() {
                    for d in l.clone() {
                        let q = [a, b, c, d].map(AnyonCharge);
                        let Ok(m) = self.f_matrix(q[0], q[1], q[2], q[3]) else { continue };
                        if !m.is_unitary() {
                            return Err(Error::ConsistencyViolation { identity: "unitarity", labels: vec![a, b, c, d] });
                        }
                        unitary += 1;
                        if [a, b, c, d].contains(&0) {
                            if !m.is_identity() {
                                return Err(Error::ConsistencyViolation {
                                    identity: "vacuum",
                                    labels: vec![a, b, c, d],
                                });
                            }
                            vacuum += 1;
                        }
                    }
                }
            }
        }

        // pentagon: F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
        let mut tuples = Vec::new();
        for a in l.clone() {
            for b in l.clone() {
                for c in l.clone() {
                    for d in l.clone() {
                        for e in l.clone() {
                            for f in channels(a, b) {
                                for g in channels(f, c).filter(|&g| adm(g, d, e)) {
                                    for l_ in channels(c, d) {
                                        for k in channels(b, l_).filter(|&k| adm(a, k, e)) {
                                            tuples.push([a, b, c, d, e, f, g, k, l_]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let fs = |x: [u8; 6]| self.f_symbol_raw(x);
        let pentagon_failures = exec.map(&tuples, |&[a, b, c, d, e, f, g, k, l_]| {
            let lhs = &fs([f, c, d, e, g, l_]) * &fs([a, b, l_, e, f, k]);
            let rhs = (0..=LEVEL).fold(CyclotomicNumber::zero(&self.field), |acc, h| {
                let t = fs([a, b, c, g, f, h]);
                if t.is_zero() {
                    return acc;
                }
                &acc + &(&(&t * &fs([a, h, d, e, g, k])) * &fs([b, c, d, k, h, l_]))
            });
            (lhs != rhs).then(|| vec![a, b, c, d, e, f, g, k, l_])
        });
        if let Some(bad) = pentagon_failures.into_iter().flatten().next() {
            return Err(Error::ConsistencyViolation { identity: "pentagon", labels: bad });
        }
        let pentagon = tuples.len();

        // hexagons: R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]
        // and the same with R^{xy}_z replaced by 1 / R^{yx}_z.
        let mut hex = Vec::new();
        for a in l.clone() {
            for b in l.clone() {
                for c in l.clone() {
                    for d in l.clone() {
                        for e in channels(c, a).filter(|&e| adm(e, b, d)) {
                            for g in channels(c, b).filter(|&g| adm(a, g, d)) {
                                hex.push([a, b, c, d, e, g]);
                            }
                        }
                    }
                }
            }
        }
        for inverse in [false, true] {
            let rr = |x: u8, y: u8, z: u8| -> CyclotomicNumber {
                if inverse {
                    self.r_symbol_raw(y, x, z).inverse().expect("unit")
                } else {
                    self.r_symbol_raw(x, y, z)
                }
            };
            let failures = exec.map(&hex, |&[a, b, c, d, e, g]| {
                let lhs = &(&rr(c, a, e) * &fs([a, c, b, d, e, g])) * &rr(c, b, g);
                let rhs = channels(a, b).filter(|&f| adm(c, f, d)).fold(CyclotomicNumber::zero(&self.field), |acc, f| {
                    &acc + &(&(&fs([c, a, b, d, e, f]) * &rr(c, f, d)) * &fs([a, b, c, d, f, g]))
                });
                (lhs != rhs).then(|| vec![a, b, c, d, e, g])
            });
            if let Some(bad) = failures.into_iter().flatten().next() {
                let identity = if inverse { "hexagon (inverse braiding)" } else { "hexagon" };
                return Err(Error::ConsistencyViolation { identity, labels: bad });
            }
        }

        // ribbon: R^{ab}_c R^{ba}_c = theta_c / (theta_a theta_b)
        let mut ribbon = 0;
        for a in l.clone() {
            for b in l.clone() {
                for c in channels(a, b) {
                    let lhs = &self.r_symbol_raw(a, b, c) * &self.r_symbol_raw(b, a, c);
                    let rhs = self.twists[c as usize].try_div(&(&self.twists[a as usize] * &self.twists[b as usize]))?;
                    if lhs != rhs {
                        return Err(Error::ConsistencyViolation { identity: "ribbon", labels: vec![a, b, c] });
                    }
                    ribbon += 1;
                }
            }
        }

        Ok(ConsistencyReport { unitary_f_matrices: unitary, vacuum_f_matrices: vacuum, pentagon, hexagon: hex.len(), hexagon_inverse: hex.len(), ribbon })
    }

    /// Every table, for inspection and regression snapshots.
    pub fn dump(&self) -> TqftDump {
        let entry = |v: &CyclotomicNumber| Entry { exact: v.to_string(), notation: v.phase_notation() };
        TqftDump {
            level: LEVEL,
            field_order: self.field.order(),
            kauffman_variable: entry(&self.params.a),
            loop_value: entry(&self.params.loop_value),
            quantum_dimensions: self.dims.iter().map(entry).collect(),
            twists: self.twists.iter().map(entry).collect(),
            r_symbols: self.r.iter().map(|(k, v)| Labelled { labels: k.to_vec(), value: entry(v) }).collect(),
            f_symbols: self
                .f
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| Labelled { labels: k.to_vec(), value: entry(v) })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub unitary_f_matrices: usize,
    pub vacuum_f_matrices: usize,
    pub pentagon: usize,
    pub hexagon: usize,
    pub hexagon_inverse: usize,
    pub ribbon: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub exact: String,
    pub notation: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Labelled {
    pub labels: Vec<u8>,
    pub value: Entry,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TqftDump {
    pub level: u8,
    pub field_order: u32,
    pub kauffman_variable: Entry,
    pub loop_value: Entry,
    pub quantum_dimensions: Vec<Entry>,
    pub twists: Vec<Entry>,
    pub r_symbols: Vec<Labelled>,
    pub f_symbols: Vec<Labelled>,
}
