//! Fusion-tree spaces on the left-associated (caterpillar) tree and the braid
//! group acting on them.
//!
//! For leaves `l1..ln` with total charge `t`, a basis vector is the path
//! `y1 = l1, y2, .., yn = t` with `y_k` in `y_{k-1} x l_k`; the stored tuple is
//! the internal part `y2..y_{n-1}`. Tree edge `e` (1-based) carries `y_{e+1}`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::cyclo::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, StateVector};
use crate::tqft::{admissible, AnyonCharge, Theory};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FusionSpace {
    leaves: Vec<AnyonCharge>,
    total: AnyonCharge,
    basis: Vec<Vec<u8>>,
}

impl FusionSpace {
    /// All admissible labelings, in lexicographic order.
    pub fn enumerate_basis(leaves: &[AnyonCharge], total: AnyonCharge) -> Self {
        let raw: Vec<u8> = leaves.iter().map(|c| c.value()).collect();
        let mut basis = Vec::new();
        if let Some((&first, rest)) = raw.split_first() {
            let mut path = Vec::new();
            extend(first, rest, total.value(), &mut path, &mut basis);
        }
        FusionSpace { leaves: leaves.to_vec(), total, basis }
    }

    pub fn from_values(leaves: &[u8], total: u8) -> Result<Self> {
        let leaves = leaves.iter().map(|&v| AnyonCharge::new(v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::enumerate_basis(&leaves, AnyonCharge::new(total)?))
    }

    pub fn leaves(&self) -> &[AnyonCharge] {
        &self.leaves
    }

    pub fn total(&self) -> AnyonCharge {
        self.total
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of internal edges, `n - 2` for `n >= 2` leaves.
    pub fn edges(&self) -> usize {
        self.leaves.len().saturating_sub(2)
    }

    pub fn index_of(&self, internal: &[u8]) -> Option<usize> {
        self.basis.binary_search_by(|b| b.as_slice().cmp(internal)).ok()
    }

    /// Full path `y1..yn` of basis vector `k`.
    fn path(&self, k: usize) -> Vec<u8> {
        let mut p = Vec::with_capacity(self.leaves.len());
        p.push(self.leaves[0].value());
        p.extend_from_slice(&self.basis[k]);
        if self.leaves.len() > 1 {
            p.push(self.total.value());
        }
        p
    }

    fn swapped(&self, i: usize) -> Self {
        let mut leaves = self.leaves.clone();
        leaves.swap(i - 1, i);
        Self::enumerate_basis(&leaves, self.total)
    }

    fn leaf_string(&self) -> String {
        self.leaves.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("")
    }
}

fn extend(prev: u8, rest: &[u8], total: u8, path: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    match rest {
        [] => {
            if prev == total {
                out.push(path.clone());
            }
        }
        [last] => {
            if admissible(prev, *last, total) {
                out.push(path.clone());
            }
        }
        [next, tail @ ..] => {
            for y in 0..=crate::tqft::LEVEL {
                if admissible(prev, *next, y) {
                    path.push(y);
                    extend(y, tail, total, path, out);
                    path.pop();
                }
            }
        }
    }
}

impl fmt::Display for FusionSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {})", self.leaf_string(), self.total)
    }
}

/// One braid generator: `sigma_index^{sign}` exchanging strands `index`, `index + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(index: usize, sign: i8) -> Self {
        BraidLetter { index, inverse: sign < 0 }
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}:{}", self.index, self.sign())
    }
}

/// Sequence of generators applied left to right; text form `s2:-1,s2:1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BraidWord(pub Vec<BraidLetter>);

impl BraidWord {
    pub fn letters(&self) -> &[BraidLetter] {
        &self.0
    }

    pub fn push(&mut self, index: usize, sign: i8) {
        self.0.push(BraidLetter::new(index, sign));
    }

    /// `sigma_i` twice.
    pub fn full_twist(i: usize) -> Self {
        BraidWord(vec![BraidLetter::new(i, 1); 2])
    }

    pub fn inverse(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|l| BraidLetter { index: l.index, inverse: !l.inverse }).collect())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut word = BraidWord::default();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("bad braid letter {tok:?}, expected s<i>:<+-1>"));
            let body = tok.strip_prefix('s').ok_or_else(bad)?;
            let (idx, sign) = body.split_once(':').unwrap_or((body, "1"));
            let index: usize = idx.parse().map_err(|_| bad())?;
            let sign = match sign.trim_start_matches('+') {
                "1" => 1,
                "-1" => -1,
                _ => return Err(bad()),
            };
            if index == 0 {
                return Err(bad());
            }
            word.push(index, sign);
        }
        Ok(word)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl TryFrom<String> for BraidWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BraidWord> for String {
    fn from(w: BraidWord) -> String {
        w.to_string()
    }
}

/// Braid matrices for a fixed theory.
#[derive(Clone, Debug)]
pub struct BraidSimulator {
    theory: Theory,
}

impl BraidSimulator {
    pub fn new(theory: Theory) -> Self {
        BraidSimulator { theory }
    }

    pub fn default_field() -> Result<Self> {
        Ok(Self::new(Theory::default_field()?))
    }

    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn field(&self) -> &CyclotomicField {
        self.theory.field()
    }

    /// Matrix of `sigma_i^{sign}` from `space` to the space with leaves `i`, `i+1`
    /// exchanged (returned alongside).
    pub fn sigma_matrix(&self, space: &FusionSpace, i: usize, sign: i8) -> Result<(ExactMatrix, FusionSpace)> {
        let n = space.leaves.len();
        if i == 0 || i >= n {
            return Err(Error::StrandOutOfRange { index: i, strands: n });
        }
        if space.dim() == 0 {
            return Err(Error::EmptySpace(space.to_string()));
        }
        let target = space.swapped(i);
        let field = self.field();
        let a = space.leaves[i - 1].value();
        let b = space.leaves[i].value();
        // R for the exchange a,b -> b,a; the inverse braid uses 1/R^{ba}
        let r = |c: u8| -> Result<CyclotomicNumber> {
            if sign > 0 {
                Ok(self.theory.r_symbol_raw(a, b, c))
            } else {
                self.theory.r_symbol_raw(b, a, c).inverse()
            }
        };
        if target.dim() != space.dim() {
            // braiding preserves dimension; reaching here means a bookkeeping bug
            return Err(Error::DimensionMismatch { left: space.dim(), right: target.dim() });
        }
        let mut entries = vec![CyclotomicNumber::zero(field); target.dim() * space.dim()];
        for col in 0..space.dim() {
            let y = space.path(col);
            for row in 0..target.dim() {
                let yn = target.path(row);
                let same_elsewhere = (1..n).filter(|&k| i == 1 || k != i - 1).all(|k| y[k] == yn[k]);
                if !same_elsewhere {
                    continue;
                }
                let value = if i == 1 {
                    r(y[1])?
                } else {
                    let (prev, next) = (y[i - 2], y[i]);
                    let mut acc = CyclotomicNumber::zero(field);
                    for c in 0..=crate::tqft::LEVEL {
                        if !admissible(a, b, c) {
                            continue;
                        }
                        let old = self.theory.f_symbol_raw([prev, a, b, next, y[i - 1], c]);
                        let new = self.theory.f_symbol_raw([prev, b, a, next, yn[i - 1], c]);
                        if old.is_zero() || new.is_zero() {
                            continue;
                        }
                        acc = &acc + &(&(&new.conj() * &r(c)?) * &old);
                    }
                    acc
                };
                entries[row * space.dim() + col] = value;
            }
        }
        Ok((ExactMatrix::new(space.dim(), entries)?, target))
    }

    /// Product of a word's generator matrices (first letter acts first).
    pub fn word_matrix(&self, space: &FusionSpace, word: &BraidWord) -> Result<(ExactMatrix, FusionSpace)> {
        if space.dim() == 0 {
            return Err(Error::EmptySpace(space.to_string()));
        }
        let mut acc = ExactMatrix::identity(self.field(), space.dim());
        let mut current = space.clone();
        for l in word.letters() {
            let (m, next) = self.sigma_matrix(&current, l.index, l.sign())?;
            acc = m.try_mul(&acc)?;
            current = next;
        }
        Ok((acc, current))
    }

    pub fn apply_word(
        &self,
        space: &FusionSpace,
        word: &BraidWord,
        state: &StateVector,
    ) -> Result<(StateVector, FusionSpace)> {
        if state.dim() != space.dim() {
            return Err(Error::DimensionMismatch { left: state.dim(), right: space.dim() });
        }
        let mut v = state.clone();
        let mut current = space.clone();
        for l in word.letters() {
            let (m, next) = self.sigma_matrix(&current, l.index, l.sign())?;
            v = m.apply(&v)?;
            current = next;
        }
        Ok((v, current))
    }

    /// `sigma_i^2`; leaves return to their original order.
    pub fn full_twist(&self, space: &FusionSpace, i: usize) -> Result<ExactMatrix> {
        Ok(self.word_matrix(space, &BraidWord::full_twist(i))?.0)
    }

    /// `sigma_2` from `(2,2,1,1 -> 0)` with basis `(|0>, |2>)` to `(2,1,2,1 -> 0)`
    /// with basis `(|1>, |3>)`.
    pub fn middle_braid_2211(&self) -> Result<ExactMatrix> {
        let space = FusionSpace::from_values(&[2, 2, 1, 1], 0)?;
        Ok(self.sigma_matrix(&space, 2, 1)?.0)
    }

    /// Prepares `(|1> +- |3>)/sqrt 2` from `(2,2,1,1)`; see [`AncillaReport`].
    pub fn ancilla_protocol(&self, target: AncillaTarget) -> Result<AncillaOutcome> {
        let field = self.field().clone();
        let start_space = FusionSpace::from_values(&[2, 2, 1, 1], 0)?;
        let start_label = match target {
            AncillaTarget::Plus => 0u8,
            AncillaTarget::Minus => 2u8,
        };
        let start_index = start_space.index_of(&[start_label, 1]).expect("2211 basis holds 0 and 2");
        let start = StateVector::basis(&field, start_space.dim(), start_index);
        let mut word = BraidWord::default();
        word.push(2, 1);
        let (after_middle, middle_space) = self.apply_word(&start_space, &word, &start)?;
        let half = CyclotomicNumber::from_rational(&field, &BigRational::new(BigInt::from(1), BigInt::from(2)));
        let equal_moduli = after_middle.entries().iter().all(|c| c.abs_squared() == half);

        // exhaustive search over diagonal braids: states are (leaf order, relative phase)
        let diagonal = |s: &FusionSpace, i: usize| -> Result<Option<(ExactMatrix, FusionSpace)>> {
            let (m, t) = self.sigma_matrix(s, i, 1)?;
            Ok(m.is_diagonal().then_some((m, t)))
        };
        let relative = |v: &StateVector| v.get(1).try_div(v.get(0));
        let mut seen: BTreeMap<(String, CyclotomicNumberKey), BraidWord> = BTreeMap::new();
        let mut queue = VecDeque::new();
        let start_key = (middle_space.leaf_string(), CyclotomicNumberKey(relative(&after_middle)?));
        seen.insert(start_key, BraidWord::default());
        queue.push_back((middle_space.clone(), after_middle.clone(), BraidWord::default()));
        let mut best: Option<(StateVector, FusionSpace, BraidWord)> = None;
        let goal = match target {
            AncillaTarget::Plus => CyclotomicNumber::one(&field),
            AncillaTarget::Minus => CyclotomicNumber::from_int(&field, -1),
        };
        while let Some((space, v, w)) = queue.pop_front() {
            if best.is_none() && relative(&v)? == goal {
                best = Some((v.clone(), space.clone(), w.clone()));
            }
            for i in 1..space.leaves.len() {
                for sign in [1i8, -1] {
                    let Some((m, next)) = diagonal(&space, i)? else { continue };
                    let m = if sign > 0 { m } else { self.sigma_matrix(&space, i, -1)?.0 };
                    let nv = m.apply(&v)?;
                    let key = (next.leaf_string(), CyclotomicNumberKey(relative(&nv)?));
                    if !seen.contains_key(&key) {
                        let mut nw = w.clone();
                        nw.push(i, sign);
                        seen.insert(key, nw.clone());
                        queue.push_back((next, nv, nw));
                    }
                }
            }
        }
        let mut phases: Vec<CyclotomicNumber> = seen.keys().map(|(_, p)| p.0.clone()).collect();
        phases.sort_by(|a, b| a.cmp_canonical(b));
        phases.dedup();
        let reachable = phases.into_iter().map(|p| PhaseEntry { notation: p.phase_notation(), value: p }).collect();
        let (state, space, search_word) = match best {
            Some((v, s, w)) => (v, s, Some(w)),
            None => (after_middle.clone(), middle_space.clone(), None),
        };
        let mut full_word = word.clone();
        if let Some(w) = &search_word {
            full_word.0.extend_from_slice(w.letters());
        }
        Ok(AncillaOutcome {
            target,
            start_label,
            after_middle_braid: after_middle,
            middle_leaves: middle_space.leaves.iter().map(|c| c.value()).collect(),
            equal_moduli,
            reachable_relative_phases: reachable,
            certified: search_word.is_some(),
            word: full_word,
            state,
            leaves: space.leaves.iter().map(|c| c.value()).collect(),
        })
    }

    /// `P(edge = charge) |state>` and its Born weight.
    pub fn project_internal(
        &self,
        space: &FusionSpace,
        edge: usize,
        charge: AnyonCharge,
        state: &StateVector,
    ) -> Result<(StateVector, CyclotomicNumber)> {
        project_internal(space, edge, charge, state)
    }
}

/// `P(edge = charge) |state>` and its Born weight.
pub fn project_internal(
    space: &FusionSpace,
    edge: usize,
    charge: AnyonCharge,
    state: &StateVector,
) -> Result<(StateVector, CyclotomicNumber)> {
    if edge == 0 || edge > space.edges() {
        return Err(Error::EdgeOutOfRange { edge, max: space.edges() });
    }
    if state.dim() != space.dim() {
        return Err(Error::DimensionMismatch { left: state.dim(), right: space.dim() });
    }
    let field = state.field().clone();
    let entries = space
        .basis
        .iter()
        .zip(state.entries())
        .map(|(b, c)| if b[edge - 1] == charge.value() { c.clone() } else { CyclotomicNumber::zero(&field) })
        .collect();
    let v = StateVector::new(entries)?;
    let p = v.norm_squared();
    Ok((v, p))
}

/// `O^T M O`, the (e1, e2, e3) basis with `O` as in the catalog.
pub fn change_basis_qutrit(m: &ExactMatrix) -> Result<ExactMatrix> {
    conjugate_orthogonal(m, "O")
}

/// `P^T M P` with `P = [e1 e2 e3]`, `e3 = (|0> - |4>)/sqrt 2`.
pub fn to_e_basis(m: &ExactMatrix) -> Result<ExactMatrix> {
    conjugate_orthogonal(m, "EBasis")
}

fn conjugate_orthogonal(m: &ExactMatrix, name: &str) -> Result<ExactMatrix> {
    if m.dim() != 3 {
        return Err(Error::DimensionMismatch { left: m.dim(), right: 3 });
    }
    let catalog = Catalog::new(m.field())?;
    let p = catalog.get(name)?;
    p.transpose().try_mul(m)?.try_mul(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AncillaTarget {
    Plus,
    Minus,
}

impl FromStr for AncillaTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(AncillaTarget::Plus),
            "minus" | "-" => Ok(AncillaTarget::Minus),
            _ => Err(Error::Parse(format!("ancilla target {s:?}, expected plus or minus"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseEntry {
    pub value: CyclotomicNumber,
    pub notation: String,
}

/// Result of the ancilla search.
///
/// `word` is the full braid applied to the starting `(2,2,1,1)` vector: the
/// middle braid followed by the shortest diagonal braid found. `state` lives
/// in the basis of `leaves`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AncillaOutcome {
    pub target: AncillaTarget,
    pub start_label: u8,
    pub after_middle_braid: StateVector,
    pub middle_leaves: Vec<u8>,
    pub equal_moduli: bool,
    pub reachable_relative_phases: Vec<PhaseEntry>,
    pub certified: bool,
    pub word: BraidWord,
    pub state: StateVector,
    pub leaves: Vec<u8>,
}

/// Orders cyclotomic numbers canonically so they can key a `BTreeMap`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct CyclotomicNumberKey(CyclotomicNumber);

impl PartialOrd for CyclotomicNumberKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclotomicNumberKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp_canonical(&other.0)
    }
}
