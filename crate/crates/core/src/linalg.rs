//! Small dense matrices and state vectors over a cyclotomic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclo::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};

/// Square matrix, row-major, all entries in one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<CyclotomicNumber>,
}

/// Which scalars are quotiented out by [`ExactMatrix::canonical_projective_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarSet {
    /// Powers of zeta_3 (the centre of SU(3)); only the identity if zeta_3 is not in the field.
    Center,
    /// Every root of unity of the field.
    AllUnits,
}

impl ExactMatrix {
    pub fn new(dim: usize, entries: Vec<CyclotomicNumber>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { left: entries.len(), right: dim * dim });
        }
        let order = entries[0].order();
        if let Some(bad) = entries.iter().find(|e| e.order() != order) {
            return Err(Error::FieldMismatch { left: order, right: bad.order() });
        }
        Ok(ExactMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<CyclotomicNumber>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { left: r.len(), right: dim });
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn identity(field: &CyclotomicField, dim: usize) -> Self {
        Self::scalar(&CyclotomicNumber::one(field), dim)
    }

    pub fn zeros(field: &CyclotomicField, dim: usize) -> Self {
        ExactMatrix { dim, entries: vec![CyclotomicNumber::zero(field); dim * dim] }
    }

    pub fn scalar(value: &CyclotomicNumber, dim: usize) -> Self {
        Self::diagonal(vec![value.clone(); dim])
    }

    pub fn diagonal(values: Vec<CyclotomicNumber>) -> Self {
        let dim = values.len();
        let field = values[0].field().clone();
        let mut m = Self::zeros(&field, dim);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * dim + i] = v;
        }
        m
    }

    /// Permutation matrix with `perm[j]` the row holding the 1 of column j.
    pub fn permutation(field: &CyclotomicField, perm: &[usize]) -> Self {
        let dim = perm.len();
        let mut m = Self::zeros(field, dim);
        for (j, &i) in perm.iter().enumerate() {
            m.entries[i * dim + j] = CyclotomicNumber::one(field);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &CyclotomicField {
        self.entries[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[CyclotomicNumber] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<CyclotomicNumber>> {
        self.entries.chunks(self.dim).map(<[_]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> StateVector {
        StateVector { entries: (0..self.dim).map(|i| self.get(i, j).clone()).collect() }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch { left: self.field().order(), right: other.field().order() });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.dim;
        let field = self.field();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CyclotomicNumber::zero(field);
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.push(acc);
            }
        }
        Ok(ExactMatrix { dim: n, entries: out })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { dim: self.dim, entries })
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        let field = self.field();
        let entries = (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(CyclotomicNumber::zero(field), |acc, k| {
                    let a = self.get(i, k);
                    if a.is_zero() || v.entries[k].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &v.entries[k])
                    }
                })
            })
            .collect();
        Ok(StateVector { entries })
    }

    pub fn scale(&self, s: &CyclotomicNumber) -> Self {
        ExactMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let entries = (0..n * n).map(|idx| self.get(idx % n, idx / n).clone()).collect();
        ExactMatrix { dim: n, entries }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.dim;
        let entries = (0..n * n).map(|idx| self.get(idx % n, idx / n).conj()).collect();
        ExactMatrix { dim: n, entries }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// `M M^dagger = I`, checked exactly.
    pub fn is_unitary(&self) -> bool {
        self.try_mul(&self.dagger()).map(|p| p.is_identity()).unwrap_or(false)
    }

    pub fn determinant(&self) -> CyclotomicNumber {
        let g = |i, j| self.get(i, j);
        match self.dim {
            1 => g(0, 0).clone(),
            2 => &(g(0, 0) * g(1, 1)) - &(g(0, 1) * g(1, 0)),
            3 => {
                let m0 = &(g(1, 1) * g(2, 2)) - &(g(1, 2) * g(2, 1));
                let m1 = &(g(1, 0) * g(2, 2)) - &(g(1, 2) * g(2, 0));
                let m2 = &(g(1, 0) * g(2, 1)) - &(g(1, 1) * g(2, 0));
                &(&(g(0, 0) * &m0) - &(g(0, 1) * &m1)) + &(g(0, 2) * &m2)
            }
            _ => self.gauss_determinant(),
        }
    }

    fn gauss_determinant(&self) -> CyclotomicNumber {
        let n = self.dim;
        let field = self.field().clone();
        let mut a = self.rows();
        let mut det = CyclotomicNumber::one(&field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return CyclotomicNumber::zero(&field);
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("nonzero pivot");
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let factor = &a[r][c] * &inv;
                for k in c..n {
                    let t = &factor * &a[c][k];
                    a[r][k] = &a[r][k] - &t;
                }
            }
        }
        det
    }

    /// Exact inverse; uses the adjoint when the matrix is unitary.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_unitary() {
            return Ok(self.dagger());
        }
        let n = self.dim;
        let field = self.field().clone();
        let mut a = self.rows();
        let mut inv = Self::identity(&field, n).rows();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, c);
            inv.swap(p, c);
            let pinv = a[c][c].inverse()?;
            for k in 0..n {
                a[c][k] = &a[c][k] * &pinv;
                inv[c][k] = &inv[c][k] * &pinv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let factor = a[r][c].clone();
                for k in 0..n {
                    let t = &factor * &a[c][k];
                    a[r][k] = &a[r][k] - &t;
                    let t = &factor * &inv[c][k];
                    inv[r][k] = &inv[r][k] - &t;
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.field(), self.dim);
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

    /// `P^-1 M P`.
    pub fn conjugate_by(&self, p: &Self) -> Result<Self> {
        p.inverse()?.try_mul(self)?.try_mul(p)
    }

    /// `lambda` with `self = lambda * other`, if any.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<CyclotomicNumber> {
        if self.check_compatible(other).is_err() {
            return None;
        }
        let Some(p) = other.entries.iter().position(|e| !e.is_zero()) else {
            // other = 0: only 0 is a multiple of it
            return self.entries.iter().all(CyclotomicNumber::is_zero).then(|| CyclotomicNumber::one(self.field()));
        };
        let lambda = self.entries[p].try_div(&other.entries[p]).ok()?;
        (other.scale(&lambda) == *self).then_some(lambda)
    }

    /// Lexicographic order on the flattened coefficient tuple.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.dim.cmp(&other.dim).then_with(|| {
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.cmp_canonical(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    fn scalar_candidates(&self, scalars: ScalarSet) -> Vec<CyclotomicNumber> {
        let field = self.field();
        match scalars {
            ScalarSet::Center if field.order() % 3 == 0 => {
                (0..3).map(|k| CyclotomicNumber::root_of_unity(field, k, 3).expect("3 divides order")).collect()
            }
            ScalarSet::Center => vec![CyclotomicNumber::one(field)],
            ScalarSet::AllUnits => all_roots_of_unity(field),
        }
    }

    /// Deterministic representative of the orbit `{lambda * self}`: the
    /// lexicographically minimal one.
    pub fn canonical_projective_form(&self, scalars: ScalarSet) -> Self {
        self.scalar_candidates(scalars)
            .iter()
            .map(|l| self.scale(l))
            .min_by(|a, b| a.cmp_canonical(b))
            .expect("at least one scalar")
    }

    /// Rescales by a root of unity to determinant 1, choosing the
    /// canonically minimal result among all valid rescalings.
    pub fn su_normalize(&self) -> Result<Self> {
        let field = self.field().clone();
        let phase_err = Error::PhaseOutsideField { order: field.order() };
        let det = self.determinant();
        let e = det.root_of_unity_exponent().ok_or(phase_err.clone())? as u64;
        let m = field.roots_of_unity_count() as u64;
        let step = (field.order() as u64 * if field.order() % 2 == 0 { 1 } else { 2 }) / m;
        let n = self.dim as u64;
        // lambda = w^k, w a primitive m-th root: need k * n + e = 0 mod m
        (0..m)
            .filter(|k| (k * n + e) % m == 0)
            .map(|k| {
                let lambda = if field.order() % 2 == 0 {
                    CyclotomicNumber::zeta(&field, (k * step) as i64)
                } else {
                    // odd order: roots of unity are +-zeta^j; w = -zeta^((n+1)/2)
                    let w = -CyclotomicNumber::zeta(&field, ((field.order() + 1) / 2) as i64);
                    w.pow(k as i64).expect("nonnegative power")
                };
                self.scale(&lambda)
            })
            .min_by(|a, b| a.cmp_canonical(b))
            .ok_or(phase_err)
    }

    /// Multiplicative order, or an error past `cap`.
    pub fn order(&self, cap: usize) -> Result<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = &acc * self;
        }
        Err(Error::OrderCapExceeded { cap })
    }

    /// LaTeX `pmatrix` with entries in phase notation.
    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(CyclotomicNumber::phase_notation).collect::<Vec<_>>().join(" & "))
            .collect();
        format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", rows.join(" \\\\ "))
    }

    /// One row per line, entries in phase notation.
    pub fn pretty(&self) -> String {
        self.rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(CyclotomicNumber::phase_notation).collect::<Vec<_>>().join(", ")))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Float image, for display only.
    pub fn to_complex_rows(&self) -> Vec<Vec<(f64, f64)>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|e| {
                let c = e.to_complex();
                (c.re, c.im)
            }).collect())
            .collect()
    }
}

/// Every root of unity in the field, in exponent order.
pub fn all_roots_of_unity(field: &CyclotomicField) -> Vec<CyclotomicNumber> {
    let n = field.order() as i64;
    let mut out: Vec<CyclotomicNumber> = (0..n).map(|k| CyclotomicNumber::zeta(field, k)).collect();
    if n % 2 == 1 {
        let neg: Vec<_> = out.iter().map(|z| -z).collect();
        out.extend(neg);
    }
    out
}

impl Mul<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: ExactMatrix) -> ExactMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over {:?}", self.dim, self.dim, self.field())?;
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<CyclotomicNumber>>::deserialize(d)?;
        ExactMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Coordinates of a state in a declared basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StateVector {
    entries: Vec<CyclotomicNumber>,
}

impl StateVector {
    pub fn new(entries: Vec<CyclotomicNumber>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch { left: 0, right: 1 });
        }
        let order = entries[0].order();
        if let Some(bad) = entries.iter().find(|e| e.order() != order) {
            return Err(Error::FieldMismatch { left: order, right: bad.order() });
        }
        Ok(StateVector { entries })
    }

    /// The i-th standard basis vector.
    pub fn basis(field: &CyclotomicField, dim: usize, i: usize) -> Self {
        let mut entries = vec![CyclotomicNumber::zero(field); dim];
        entries[i] = CyclotomicNumber::one(field);
        StateVector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> &CyclotomicField {
        self.entries[0].field()
    }

    pub fn entries(&self) -> &[CyclotomicNumber] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &CyclotomicNumber {
        &self.entries[i]
    }

    pub fn scale(&self, s: &CyclotomicNumber) -> Self {
        StateVector { entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(StateVector { entries })
    }

    /// `<self|other>`, antilinear in the first argument.
    pub fn inner(&self, other: &Self) -> Result<CyclotomicNumber> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        let mut acc = CyclotomicNumber::zero(self.field());
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc.try_add(&a.conj().try_mul(b)?)?;
        }
        Ok(acc)
    }

    /// Sum of `|c_i|^2`, exact.
    pub fn norm_squared(&self) -> CyclotomicNumber {
        self.entries.iter().fold(CyclotomicNumber::zero(self.field()), |acc, e| &acc + &e.abs_squared())
    }

    pub fn is_normalized(&self) -> bool {
        self.norm_squared().is_one()
    }

    /// `lambda` with `self = lambda * other`, if any.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<CyclotomicNumber> {
        if self.dim() != other.dim() {
            return None;
        }
        let p = other.entries.iter().position(|e| !e.is_zero())?;
        let lambda = self.entries[p].try_div(&other.entries[p]).ok()?;
        (other.scale(&lambda) == *self).then_some(lambda)
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(CyclotomicNumber::phase_notation).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> CyclotomicField {
        CyclotomicField::new(72).unwrap()
    }

    fn e(k: i64) -> CyclotomicNumber {
        // e^{k i pi / 9}
        CyclotomicNumber::root_of_unity(&f(), k, 18).unwrap()
    }

    fn zero() -> CyclotomicNumber {
        CyclotomicNumber::zero(&f())
    }

    #[test]
    fn multiply_and_invert() {
        let m = ExactMatrix::from_rows(vec![
            vec![zero(), e(7), zero()],
            vec![e(7), zero(), zero()],
            vec![zero(), zero(), -e(4)],
        ])
        .unwrap();
        assert!(m.is_unitary());
        assert!((&m * &m.inverse().unwrap()).is_identity());
        assert_eq!(m.determinant(), CyclotomicNumber::one(&f()));
    }

    #[test]
    fn gaussian_paths_agree_with_cofactors() {
        let rows = vec![
            vec![e(1), CyclotomicNumber::from_int(&f(), 2), zero()],
            vec![e(3), e(5), CyclotomicNumber::from_int(&f(), -1)],
            vec![zero(), e(2), e(7)],
        ];
        let m = ExactMatrix::from_rows(rows).unwrap();
        assert_eq!(m.gauss_determinant(), m.determinant());
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let one = CyclotomicNumber::one(&f());
        let m = ExactMatrix::from_rows(vec![vec![one.clone(), one.clone()], vec![one.clone(), one]]).unwrap();
        assert_eq!(m.inverse(), Err(Error::Singular));
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn dimension_and_field_checks() {
        let a = ExactMatrix::identity(&f(), 2);
        let b = ExactMatrix::identity(&f(), 3);
        assert!(matches!(a.try_mul(&b), Err(Error::DimensionMismatch { .. })));
        let c = ExactMatrix::identity(&CyclotomicField::new(36).unwrap(), 2);
        assert!(matches!(a.try_mul(&c), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn scalar_multiples() {
        let m = ExactMatrix::diagonal(vec![e(1), e(3), e(14)]);
        assert!(m.scalar_multiple_of(&m).unwrap().is_one());
        let minus = m.scale(&CyclotomicNumber::from_int(&f(), -1));
        assert_eq!(minus.scalar_multiple_of(&m).unwrap(), CyclotomicNumber::from_int(&f(), -1));
        let other = ExactMatrix::diagonal(vec![e(1), e(3), e(13)]);
        assert!(other.scalar_multiple_of(&m).is_none());
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let m = ExactMatrix::diagonal(vec![e(1), e(3), e(14)]);
        let w = CyclotomicNumber::root_of_unity(&f(), 1, 3).unwrap();
        let c = m.canonical_projective_form(ScalarSet::Center);
        assert_eq!(c, m.scale(&w).canonical_projective_form(ScalarSet::Center));
        assert_eq!(c.canonical_projective_form(ScalarSet::Center), c);
        let u = m.canonical_projective_form(ScalarSet::AllUnits);
        assert_eq!(u, m.scale(&e(5)).canonical_projective_form(ScalarSet::AllUnits));
    }

    #[test]
    fn su_normalize_examples() {
        let minus = ExactMatrix::scalar(&CyclotomicNumber::from_int(&f(), -1), 3);
        let n = minus.su_normalize().unwrap();
        assert!(n.determinant().is_one());
        // candidates are the three cube roots of unity; the minimal one is returned
        assert!(n.scalar_multiple_of(&ExactMatrix::identity(&f(), 3)).is_some());
        let raw_n = ExactMatrix::diagonal(vec![e(8), e(8), e(2)]);
        assert!(raw_n.determinant().is_one());
        // i * I in dimension 2 has det -1; rescaled by +-i
        let two = ExactMatrix::scalar(&e(9), 2);
        assert!(two.su_normalize().unwrap().determinant().is_one());
        // in Q(zeta_9) the determinant zeta_9 has no cube root: phase outside field
        let f9 = CyclotomicField::new(9).unwrap();
        let one9 = CyclotomicNumber::one(&f9);
        let m = ExactMatrix::diagonal(vec![CyclotomicNumber::zeta(&f9, 1), one9.clone(), one9]);
        assert_eq!(m.su_normalize(), Err(Error::PhaseOutsideField { order: 9 }));
    }

    #[test]
    fn json_round_trip() {
        let m = ExactMatrix::diagonal(vec![e(1), e(3), -e(14)]);
        let text = serde_json::to_string(&m).unwrap();
        let back: ExactMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn latex_notation() {
        let m = ExactMatrix::diagonal(vec![-e(4), e(7)]);
        assert_eq!(m.to_latex(), "\\begin{pmatrix} -e^{4i\\pi/9} & 0 \\\\ 0 & e^{7i\\pi/9} \\end{pmatrix}");
    }

    #[test]
    fn state_vectors() {
        let v = StateVector::basis(&f(), 3, 1);
        assert!(v.is_normalized());
        let m = ExactMatrix::permutation(&f(), &[1, 0, 2]);
        assert_eq!(m.apply(&v).unwrap(), StateVector::basis(&f(), 3, 0));
        assert!(m.apply(&StateVector::basis(&f(), 2, 0)).is_err());
    }
}
