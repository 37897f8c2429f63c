//! Named qutrit matrices: the braid generators, the fusion gate, the
//! Blichfeld generators and the elements used in the group presentation.
//!
//! Basis conventions: `G1`, `G2`, `FUM` act on `(|0>, |2>, |4>)`; the tilde
//! versions act on `((|0>+|4>)/sqrt2, |2>, (|4>-|0>)/sqrt2)`, reached by the
//! orthogonal matrix `O`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Entry order of [`Catalog::names`].
pub const NAMES: &[&str] = &[
    "G1", "G2", "G1t", "G2t", "FUM", "FUMt", "N", "O", "EBasis", "J", "F18", "F9", "E", "Btilde", "x6", "x18", "t1",
    "t2", "t3", "c1", "c2", "KleinA", "KleinB",
];

#[derive(Clone, Debug)]
pub struct Catalog {
    field: CyclotomicField,
    entries: Vec<(String, ExactMatrix)>,
}

struct Builder {
    field: CyclotomicField,
    inv_sqrt2: CyclotomicNumber,
}

impl Builder {
    /// e^{k i pi / 9}
    fn e(&self, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(&self.field, k, 18).expect("18 divides the order")
    }

    fn int(&self, v: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_int(&self.field, v)
    }

    fn half(&self, v: &CyclotomicNumber) -> CyclotomicNumber {
        v.scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    fn m(&self, rows: [[CyclotomicNumber; 3]; 3]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3")
    }
}

impl Catalog {
    /// Builds every entry. The field must contain zeta_18 and sqrt(2), so 72 | n.
    pub fn new(field: &CyclotomicField) -> Result<Self> {
        if field.order() % 18 != 0 {
            return Err(Error::OrderNotDividing { requested: 18, ambient: field.order() });
        }
        let sqrt2 = CyclotomicNumber::sqrt_constant(field, 2)?;
        let b = Builder { field: field.clone(), inv_sqrt2: sqrt2.scale(&BigRational::new(1.into(), 2.into())) };
        let z = b.int(0);
        let one = b.int(1);
        let r = &b.inv_sqrt2;

        let g1 = ExactMatrix::diagonal(vec![b.e(7), -b.e(4), -b.e(7)]);
        let g2 = b.m([
            [-b.half(&b.e(4)), &b.e(7) * r, b.half(&b.e(4))],
            [&b.e(7) * r, z.clone(), &b.e(7) * r],
            [b.half(&b.e(4)), &b.e(7) * r, -b.half(&b.e(4))],
        ]);
        let g1t = b.m([
            [z.clone(), z.clone(), b.e(7)],
            [z.clone(), -b.e(4), z.clone()],
            [b.e(7), z.clone(), z.clone()],
        ]);
        let g2t = b.m([
            [z.clone(), b.e(7), z.clone()],
            [b.e(7), z.clone(), z.clone()],
            [z.clone(), z.clone(), -b.e(4)],
        ]);
        let omega = b.e(6);
        let fumt = ExactMatrix::diagonal(vec![-omega.clone(), -omega.clone(), omega.clone()]);
        let n = ExactMatrix::diagonal(vec![b.e(8), b.e(8), b.e(2)]);
        let o = b.m([[r.clone(), z.clone(), -r.clone()], [z.clone(), one.clone(), z.clone()], [r.clone(), z.clone(), r.clone()]]);
        // columns e1 = (|0>+|4>)/sqrt2, e2 = |2>, e3 = (|0>-|4>)/sqrt2
        let ebasis =
            b.m([[r.clone(), z.clone(), r.clone()], [z.clone(), one.clone(), z.clone()], [r.clone(), z.clone(), -r.clone()]]);
        // FUM in the (|0>,|2>,|4>) basis: O FUMt O^T
        let fum = &(&o * &fumt) * &o.transpose();
        let j = ExactMatrix::permutation(field, &[2, 1, 0]);
        let f18 = ExactMatrix::diagonal(vec![b.e(1), b.e(1), b.e(-2)]);
        let f9 = ExactMatrix::diagonal(vec![b.e(2), b.e(2), b.e(-4)]);
        let e = b.m([[z.clone(), one.clone(), z.clone()], [z.clone(), z.clone(), one.clone()], [one.clone(), z.clone(), z.clone()]]);
        let btilde = b.m([
            [-one.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), -one.clone()],
            [z.clone(), -one.clone(), z.clone()],
        ]);

        let pow = |m: &ExactMatrix, k: i64| m.pow(k).expect("unitary");
        let fum3 = pow(&fumt, 3);
        let g1t_inv = pow(&g1t, -1);
        let x6 = &(&pow(&n, 2) * &pow(&g1t, 2)) * &fum3;
        let x18 = &(&(&n * &g1t) * &fum3) * &g1t_inv;
        let t1 = pow(&g2t, 9);
        let t3 = pow(&g1t, 9);
        let t2 = &(&g2t * &g1t) * &g2t;
        let c1 = &t3 * &t1;
        let c2 = &t1 * &t3;
        let klein_b = &(&g1t * &fum3) * &g1t_inv;

        let entries = vec![
            ("G1", g1),
            ("G2", g2),
            ("G1t", g1t),
            ("G2t", g2t),
            ("FUM", fum),
            ("FUMt", fumt),
            ("N", n),
            ("O", o),
            ("EBasis", ebasis),
            ("J", j),
            ("F18", f18),
            ("F9", f9),
            ("E", e),
            ("Btilde", btilde),
            ("x6", x6),
            ("x18", x18),
            ("t1", t1),
            ("t2", t2),
            ("t3", t3),
            ("c1", c1),
            ("c2", c2),
            ("KleinA", fum3),
            ("KleinB", klein_b),
        ];
        debug_assert_eq!(entries.iter().map(|(k, _)| *k).collect::<Vec<_>>(), NAMES);
        Ok(Catalog { field: field.clone(), entries: entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect() })
    }

    pub fn default_field() -> Self {
        Self::new(&CyclotomicField::default_field()).expect("default field holds every entry")
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn get(&self, name: &str) -> Result<&ExactMatrix> {
        self.entries
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ExactMatrix)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Replaces one entry; used for negative controls.
    pub fn with_override(mut self, name: &str, m: ExactMatrix) -> Result<Self> {
        let slot = self
            .entries
            .iter_mut()
            .find(|(k, _)| k == name)
            .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))?;
        slot.1 = m;
        Ok(self)
    }

    /// Resolves a comma-separated list of names.
    pub fn resolve(&self, names: &str) -> Result<Vec<(String, ExactMatrix)>> {
        names
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|n| self.get(n).map(|m| (n.to_string(), m.clone())))
            .collect()
    }
}
