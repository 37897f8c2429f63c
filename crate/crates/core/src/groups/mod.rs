//! Finite matrix groups by breadth-first closure, with the right-regular
//! action of each generator recorded so that structural queries (orders,
//! centre, classes, derived subgroup) run on permutations, not matrices.

mod identities;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, ScalarSet};
use crate::par::Execution;

pub use identities::{identity_suite, IdentityCheck, IdentityReport};

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMode {
    /// Elements are stored as-is.
    #[default]
    Exact,
    /// Elements are identified modulo the zeta_3 scalars (SU(3) -> PU(3)).
    #[serde(alias = "pu")]
    ModCenter,
}

impl FromStr for ClosureMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ClosureMode::Exact),
            "pu" | "mod_center" | "mod-center" => Ok(ClosureMode::ModCenter),
            _ => Err(Error::Parse(format!("closure mode {s:?}, expected exact or pu"))),
        }
    }
}

impl fmt::Display for ClosureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureMode::Exact => "exact",
            ClosureMode::ModCenter => "mod_center",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    pub mode: ClosureMode,
    pub cap: usize,
    pub exec: Execution,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { mode: ClosureMode::Exact, cap: DEFAULT_CAP, exec: Execution::default() }
    }
}

impl ClosureOptions {
    pub fn mode(mut self, mode: ClosureMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }
}

/// A finished closure. Element 0 is the identity; element order is BFS
/// order (frontier in insertion order, generators in list order), which
/// does not depend on the execution mode.
#[derive(Clone, Debug)]
pub struct GroupClosure {
    mode: ClosureMode,
    names: Vec<String>,
    generators: Vec<ExactMatrix>,
    elements: Vec<ExactMatrix>,
    index: HashMap<ExactMatrix, usize>,
    /// `(parent, generator)` with `element = parent * generator`.
    parent: Vec<Option<(usize, usize)>>,
    /// `right[g][i]` is the index of `element_i * generator_g`.
    right: Vec<Vec<u32>>,
    right_inv: Vec<Vec<u32>>,
    generator_index: Vec<usize>,
}

fn canonical(m: &ExactMatrix, mode: ClosureMode) -> ExactMatrix {
    match mode {
        ClosureMode::Exact => m.clone(),
        ClosureMode::ModCenter => m.canonical_projective_form(ScalarSet::Center),
    }
}

/// Closure of named generators.
pub fn closure(generators: &[(String, ExactMatrix)], opts: ClosureOptions) -> Result<GroupClosure> {
    let (first_name, first) = generators.first().ok_or(Error::EmptyGenerators)?;
    let dim = first.dim();
    let field = first.field().clone();
    for (name, g) in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch { left: dim, right: g.dim() });
        }
        if g.field() != &field {
            return Err(Error::FieldMismatch { left: field.order(), right: g.field().order() });
        }
        if !g.is_unitary() {
            return Err(Error::NotUnitary(name.clone()));
        }
    }
    let _ = first_name;
    let mode = opts.mode;
    let gens: Vec<ExactMatrix> = generators.iter().map(|(_, g)| canonical(g, mode)).collect();
    let identity = canonical(&ExactMatrix::identity(&field, dim), mode);

    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut parent = vec![None];
    let mut right = vec![Vec::<u32>::new(); gens.len()];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let products: Vec<Vec<ExactMatrix>> = opts.exec.map(&frontier, |&i| {
            gens.iter().map(|g| canonical(&(&elements[i] * g), mode)).collect()
        });
        let mut next = Vec::new();
        for (&i, prods) in frontier.iter().zip(products) {
            for (g, m) in prods.into_iter().enumerate() {
                let k = match index.get(&m) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        if k >= opts.cap {
                            return Err(Error::CapExceeded { cap: opts.cap });
                        }
                        index.insert(m.clone(), k);
                        elements.push(m);
                        parent.push(Some((i, g)));
                        next.push(k);
                        k
                    }
                };
                let row = &mut right[g];
                if row.len() <= i {
                    row.resize(i + 1, u32::MAX);
                }
                row[i] = k as u32;
            }
        }
        frontier = next;
    }
    let n = elements.len();
    let right_inv: Vec<Vec<u32>> = right
        .iter()
        .map(|perm| {
            let mut inv = vec![0u32; n];
            for (i, &k) in perm.iter().enumerate() {
                inv[k as usize] = i as u32;
            }
            inv
        })
        .collect();
    let generator_index = (0..gens.len()).map(|g| right[g][0] as usize).collect();
    Ok(GroupClosure {
        mode,
        names: generators.iter().map(|(n, _)| n.clone()).collect(),
        generators: gens,
        elements,
        index,
        parent,
        right,
        right_inv,
        generator_index,
    })
}

/// Closure with generators named `g1, g2, ..`.
pub fn closure_of(generators: &[ExactMatrix], opts: ClosureOptions) -> Result<GroupClosure> {
    let named: Vec<(String, ExactMatrix)> =
        generators.iter().enumerate().map(|(i, g)| (format!("g{}", i + 1), g.clone())).collect();
    closure(&named, opts)
}

impl GroupClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mode(&self) -> ClosureMode {
        self.mode
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        m.dim() == self.dim() && m.field() == self.elements[0].field() && self.index.contains_key(&canonical(m, self.mode))
    }

    pub fn index_of(&self, m: &ExactMatrix) -> Option<usize> {
        self.index.get(&canonical(m, self.mode)).copied()
    }

    pub fn equal_as_sets(&self, other: &GroupClosure) -> bool {
        self.mode == other.mode && self.order() == other.order() && other.elements.iter().all(|m| self.contains(m))
    }

    /// Generator indices of the shortest word found for element `i`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while let Some((p, g)) = self.parent[cur] {
            w.push(g);
            cur = p;
        }
        w.reverse();
        w
    }

    /// `G1t^2*FUMt`; the identity is `I`.
    pub fn word_string(&self, i: usize) -> String {
        let w = self.word(i);
        if w.is_empty() {
            return "I".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < w.len() {
            let run = w[k..].iter().take_while(|&&g| g == w[k]).count();
            let name = &self.names[w[k]];
            parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
            k += run;
        }
        parts.join("*")
    }

    /// Multiplies the generator matrices along the word of element `i`.
    pub fn evaluate_word(&self, i: usize) -> ExactMatrix {
        let id = ExactMatrix::identity(self.elements[0].field(), self.dim());
        let m = self.word(i).iter().fold(id, |acc, &g| &acc * &self.generators[g]);
        canonical(&m, self.mode)
    }

    fn walk(&self, mut from: usize, word: &[usize]) -> usize {
        for &g in word {
            from = self.right[g][from] as usize;
        }
        from
    }

    /// Index of `element_i * element_j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.walk(i, &self.word(j))
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.word(i).iter().rev().fold(0, |cur, &g| self.right_inv[g][cur] as usize)
    }

    /// Order of element `i` in this group (projective order in mod-centre mode).
    pub fn element_order(&self, i: usize) -> usize {
        let w = self.word(i);
        let mut cur = i;
        let mut k = 1;
        while cur != 0 {
            cur = self.walk(cur, &w);
            k += 1;
        }
        k
    }

    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for i in 0..self.order() {
            *h.entry(self.element_order(i)).or_insert(0) += 1;
        }
        h
    }

    /// Indices of elements commuting with every generator.
    pub fn center_indices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| self.generator_index.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn center(&self) -> Result<GroupClosure> {
        let gens: Vec<(String, ExactMatrix)> =
            self.center_indices().into_iter().map(|i| (self.word_string(i), self.elements[i].clone())).collect();
        closure(&gens, ClosureOptions::default().mode(self.mode).cap(self.order() + 1))
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let gen_inv: Vec<usize> = self.generator_index.iter().map(|&g| self.inverse(g)).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for (&g, &gi) in self.generator_index.iter().zip(&gen_inv) {
                    let y = self.mul(self.mul(gi, x), g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Subgroup generated by the given elements, as sorted indices.
    pub fn subgroup_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut members = vec![0];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        members
    }

    /// Commutator subgroup: generated by the conjugacy classes of the
    /// generator commutators.
    pub fn derived_subgroup_indices(&self) -> Vec<usize> {
        let classes = self.conjugacy_classes();
        let mut class_of = vec![0; self.order()];
        for (c, members) in classes.iter().enumerate() {
            for &m in members {
                class_of[m] = c;
            }
        }
        let mut gens = Vec::new();
        for &a in &self.generator_index {
            for &b in &self.generator_index {
                let ab = self.mul(a, b);
                let ba = self.mul(b, a);
                let comm = self.mul(self.inverse(ba), ab);
                gens.extend_from_slice(&classes[class_of[comm]]);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.subgroup_indices(&gens)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order(),
            center_order: self.center_indices().len(),
            order_histogram: self.order_histogram(),
            class_count: self.conjugacy_classes().len(),
            derived_order: self.derived_subgroup_indices().len(),
        }
    }

    /// `P^-1 M P` for every element; words and structure carry over.
    pub fn conjugate_group(&self, p: &ExactMatrix) -> Result<GroupClosure> {
        let p_inv = p.inverse()?;
        self.map_elements(|m| p_inv.try_mul(m)?.try_mul(p))
    }

    /// `P^T M P`, for orthogonal `P`.
    pub fn conjugate_group_by_transpose(&self, p: &ExactMatrix) -> Result<GroupClosure> {
        let pt = p.transpose();
        if !pt.try_mul(p)?.is_identity() {
            return Err(Error::NotOrthogonal);
        }
        self.map_elements(|m| pt.try_mul(m)?.try_mul(p))
    }

    fn map_elements(&self, f: impl Fn(&ExactMatrix) -> Result<ExactMatrix>) -> Result<GroupClosure> {
        let mode = self.mode;
        let elements: Vec<ExactMatrix> =
            self.elements.iter().map(|m| f(m).map(|x| canonical(&x, mode))).collect::<Result<_>>()?;
        let generators = self.generators.iter().map(|m| f(m).map(|x| canonical(&x, mode))).collect::<Result<_>>()?;
        let index = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(GroupClosure { elements, generators, index, ..self.clone() })
    }

    /// Indices of diagonal elements.
    pub fn diagonal_indices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.elements[i].is_diagonal()).collect()
    }

    pub fn export(&self) -> ClosureExport {
        ClosureExport {
            order: self.order(),
            mode: self.mode,
            generators: self
                .names
                .iter()
                .zip(&self.generators)
                .map(|(name, matrix)| NamedMatrix { name: name.clone(), matrix: matrix.clone() })
                .collect(),
            elements: (0..self.order())
                .map(|i| ElementRecord {
                    matrix: self.elements[i].clone(),
                    word: self.word_string(i),
                    order: self.element_order(i),
                })
                .collect(),
            fingerprint: self.fingerprint(),
        }
    }
}

/// Isomorphism-invariant summary; each field is brute-forced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub class_count: usize,
    pub derived_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: ExactMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub matrix: ExactMatrix,
    pub word: String,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureExport {
    pub order: usize,
    pub mode: ClosureMode,
    pub generators: Vec<NamedMatrix>,
    pub elements: Vec<ElementRecord>,
    pub fingerprint: Fingerprint,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{CyclotomicField, CyclotomicNumber};

    fn field() -> CyclotomicField {
        CyclotomicField::new(12).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = closure_of(&[ExactMatrix::identity(&field(), 2)], ClosureOptions::default()).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.word_string(0), "I");
        assert_eq!(g.fingerprint().class_count, 1);
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let f = field();
        let s = ExactMatrix::permutation(&f, &[1, 0, 2]);
        let c = ExactMatrix::permutation(&f, &[1, 2, 0]);
        let g = closure_of(&[s, c], ClosureOptions::default()).unwrap();
        let fp = g.fingerprint();
        assert_eq!(fp.order, 6);
        assert_eq!(fp.center_order, 1);
        assert_eq!(fp.class_count, 3);
        assert_eq!(fp.derived_order, 3);
        assert_eq!(fp.order_histogram, BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
        for i in 0..g.order() {
            assert_eq!(g.evaluate_word(i), g.elements()[i]);
            assert_eq!(g.mul(i, g.inverse(i)), 0);
        }
    }

    #[test]
    fn cap_and_validation() {
        let f = field();
        let z = ExactMatrix::scalar(&CyclotomicNumber::zeta(&f, 1), 2);
        assert_eq!(closure_of(&[z.clone()], ClosureOptions::default().cap(5)).unwrap_err(), Error::CapExceeded { cap: 5 });
        assert_eq!(closure_of(&[z], ClosureOptions::default()).unwrap().order(), 12);
        assert_eq!(closure_of(&[], ClosureOptions::default()).unwrap_err(), Error::EmptyGenerators);
        let two = ExactMatrix::scalar(&CyclotomicNumber::from_int(&f, 2), 2);
        assert!(matches!(closure_of(&[two], ClosureOptions::default()), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn mod_center_quotients_cube_roots() {
        let f = field();
        let w = ExactMatrix::scalar(&CyclotomicNumber::root_of_unity(&f, 1, 3).unwrap(), 3);
        let p = ExactMatrix::permutation(&f, &[1, 2, 0]);
        let exact = closure_of(&[w.clone(), p.clone()], ClosureOptions::default()).unwrap();
        let pu = closure_of(&[w, p], ClosureOptions::default().mode(ClosureMode::ModCenter)).unwrap();
        assert_eq!(exact.order(), 9);
        assert_eq!(pu.order(), 3);
    }
}
