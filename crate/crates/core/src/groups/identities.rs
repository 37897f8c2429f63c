//! Exact checks of the displayed structure of the order-648 group: the
//! Klein pair, the cyclic factors, the S3 complement, the generator
//! decompositions, the Blichfeld generators and the presentation relators.

use serde::{Deserialize, Serialize};

use super::{closure, ClosureOptions, GroupClosure};
use crate::catalog::Catalog;
use crate::cyclo::CyclotomicNumber;
use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::par::Execution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(IdentityCheck { name: name.to_string(), passed, detail });
    }

    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<bool>) {
        match f() {
            Ok(p) => self.push(name, p, None),
            Err(e) => self.push(name, false, Some(e.to_string())),
        }
    }
}

/// Runs every check; failures are report entries, not errors.
pub fn identity_suite(catalog: &Catalog, exec: Execution) -> IdentityReport {
    let mut r = IdentityReport::default();
    let field = catalog.field().clone();
    let get = |n: &str| catalog.get(n).cloned();
    let pow = |m: &ExactMatrix, k: i64| m.pow(k);
    let mul = |ms: &[&ExactMatrix]| -> Result<ExactMatrix> {
        ms.iter().skip(1).try_fold(ms[0].clone(), |acc, m| acc.try_mul(m))
    };
    let e = |k: i64, n: u32| CyclotomicNumber::root_of_unity(&field, k, n);
    let int = |v: i64| CyclotomicNumber::from_int(&field, v);
    let diag = |v: Vec<Result<CyclotomicNumber>>| -> Result<ExactMatrix> {
        Ok(ExactMatrix::diagonal(v.into_iter().collect::<Result<_>>()?))
    };
    let id = ExactMatrix::identity(&field, 3);

    // Klein pair
    r.check("klein_a_display", || Ok(pow(&get("FUMt")?, 3)? == diag(vec![Ok(int(-1)), Ok(int(-1)), Ok(int(1))])?));
    r.check("klein_b_display", || {
        let (g1t, fumt) = (get("G1t")?, get("FUMt")?);
        Ok(mul(&[&g1t, &pow(&fumt, 3)?, &pow(&g1t, -1)?])? == diag(vec![Ok(int(1)), Ok(int(-1)), Ok(int(-1))])?)
    });
    r.check("klein_catalog_entries", || {
        let (g1t, fumt) = (get("G1t")?, get("FUMt")?);
        Ok(get("KleinA")? == pow(&fumt, 3)? && get("KleinB")? == mul(&[&g1t, &pow(&fumt, 3)?, &pow(&g1t, -1)?])?)
    });
    r.check("klein_group_of_order_4", || {
        let (a, b) = (get("KleinA")?, get("KleinB")?);
        let ab = a.try_mul(&b)?;
        let g = closure(&[("a".into(), a.clone()), ("b".into(), b.clone())], ClosureOptions::default().cap(16))?;
        Ok(a.order(4)? == 2 && b.order(4)? == 2 && ab == b.try_mul(&a)? && g.order() == 4)
    });

    // cyclic factors of the diagonal subgroup
    r.check("g1t_squared_display", || Ok(pow(&get("G1t")?, 2)? == diag(vec![e(-4, 18), e(8, 18), e(-4, 18)])?));
    r.check("n_display", || Ok(get("N")? == diag(vec![e(8, 18), e(8, 18), e(2, 18)])?));
    r.check("n2_g1t2_display", || {
        Ok(mul(&[&pow(&get("N")?, 2)?, &pow(&get("G1t")?, 2)?])? == diag(vec![e(2, 3), e(1, 3), Ok(int(1))])?)
    });
    r.check("n2_g1t2_squared_display", || {
        let b = mul(&[&pow(&get("N")?, 2)?, &pow(&get("G1t")?, 2)?])?;
        Ok(pow(&b, 2)? == diag(vec![e(1, 3), e(2, 3), Ok(int(1))])?)
    });
    r.check("cyclic_intersection_trivial", || {
        let b = mul(&[&pow(&get("N")?, 2)?, &pow(&get("G1t")?, 2)?])?;
        let n = get("N")?;
        let bs = powers(&b, 64)?;
        Ok(powers(&n, 64)?.iter().filter(|m| bs.contains(m)).count() == 1)
    });
    r.check("odd_cyclics_miss_klein", || {
        let b = mul(&[&pow(&get("N")?, 2)?, &pow(&get("G1t")?, 2)?])?;
        let klein = [get("KleinA")?, get("KleinB")?, get("KleinA")?.try_mul(&get("KleinB")?)?];
        let hits = [powers(&b, 64)?, powers(&get("N")?, 64)?].iter().flatten().filter(|m| klein.contains(m)).count();
        Ok(hits == 0)
    });

    // S3 complement
    r.check("t3_display", || {
        Ok(get("t3")? == pow(&get("G1t")?, 9)? && get("t3")? == ExactMatrix::permutation(&field, &[2, 1, 0]).scale(&int(-1)))
    });
    r.check("t1_display", || {
        Ok(get("t1")? == pow(&get("G2t")?, 9)? && get("t1")? == ExactMatrix::permutation(&field, &[1, 0, 2]).scale(&int(-1)))
    });
    r.check("t2_display", || {
        let expected = ExactMatrix::permutation(&field, &[0, 2, 1]).scale(&int(-1));
        Ok(get("t2")? == mul(&[&get("G2t")?, &get("G1t")?, &get("G2t")?])? && get("t2")? == expected)
    });
    r.check("s3_three_cycles_are_permutations", || {
        let c1 = mul(&[&get("G1t")?.pow(9)?, &get("G2t")?.pow(9)?])?;
        let c2 = mul(&[&get("G2t")?.pow(9)?, &get("G1t")?.pow(9)?])?;
        let is_perm = |m: &ExactMatrix| {
            m.entries().iter().all(|x| x.is_zero() || x.is_one()) && m.order(3).map(|o| o == 3).unwrap_or(false)
        };
        Ok(c1 == get("c1")? && c2 == get("c2")? && is_perm(&c1) && is_perm(&c2))
    });
    r.check("s3_closure", || {
        let set: Vec<ExactMatrix> =
            vec![id.clone(), get("t1")?, get("t2")?, get("t3")?, get("c1")?, get("c2")?];
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&(a * b))));
        let nonabelian = get("t1")?.try_mul(&get("t2")?)? != get("t2")?.try_mul(&get("t1")?)?;
        let distinct = (0..6).all(|i| (0..i).all(|j| set[i] != set[j]));
        Ok(closed && nonabelian && distinct)
    });

    // generator decompositions
    r.check("g1t_decomposition", || {
        let (n, g1t) = (get("N")?, get("G1t")?);
        let b = mul(&[&pow(&n, 2)?, &pow(&g1t, 2)?])?;
        Ok(g1t == mul(&[&pow(&n, -10)?, &pow(&b, 5)?, &pow(&g1t, 9)?])?)
    });
    r.check("fum4_eq_n3", || Ok(pow(&get("FUMt")?, 4)? == pow(&get("N")?, 3)?));
    r.check("fum_eq_n3_fum_minus3", || Ok(get("FUMt")? == mul(&[&pow(&get("N")?, 3)?, &pow(&get("FUMt")?, -3)?])?));
    r.check("n2_g2t2_eq_fum2", || Ok(mul(&[&pow(&get("N")?, 2)?, &pow(&get("G2t")?, 2)?])? == pow(&get("FUMt")?, 2)?));
    r.check("g2t_decomposition", || {
        let g2t = get("G2t")?;
        Ok(g2t == mul(&[&pow(&pow(&g2t, 2)?, 5)?, &pow(&g2t, 9)?])?)
    });

    // Blichfeld generators
    r.check("f18_display", || Ok(get("F18")? == diag(vec![e(1, 18), e(1, 18), e(-2, 18)])?));
    r.check("e_eq_g2t9_g1t9", || Ok(get("E")? == mul(&[&pow(&get("G2t")?, 9)?, &pow(&get("G1t")?, 9)?])?));
    r.check("btilde_eq_g2t_g1t_g2t", || Ok(get("Btilde")? == mul(&[&get("G2t")?, &get("G1t")?, &get("G2t")?])?));
    r.check("f18_eq_fum3_n_inverse", || Ok(get("F18")? == mul(&[&pow(&get("FUMt")?, 3)?, &pow(&get("N")?, -1)?])?));

    // N from braiding
    r.check("n_eq_f9_4", || Ok(get("N")? == pow(&get("F9")?, 4)?));
    r.check("f9_inverse_eq_g2t_t1", || Ok(pow(&get("F9")?, -1)? == mul(&[&get("G2t")?, &get("t1")?])?));
    r.check("f9_eq_g2t8", || Ok(get("F9")? == pow(&get("G2t")?, 8)?));
    r.check("n_eq_g2t_minus4", || Ok(get("N")? == pow(&get("G2t")?, -4)?));

    // element orders
    for (name, expected) in [("N", 9usize), ("G1t", 18), ("x6", 6), ("x18", 18)] {
        r.check(&format!("order_{name}_{expected}"), || Ok(get(name)?.order(64)? == expected));
    }
    r.check("x6_x18_definitions", || {
        let (n, g1t, fumt) = (get("N")?, get("G1t")?, get("FUMt")?);
        let f3 = pow(&fumt, 3)?;
        Ok(get("x6")? == mul(&[&pow(&n, 2)?, &pow(&g1t, 2)?, &f3])?
            && get("x18")? == mul(&[&n, &g1t, &f3, &pow(&g1t, -1)?])?)
    });

    // presentation relators under the catalog assignment
    let relators: [(&str, &[(&str, i64)]); 10] = [
        ("t1^2", &[("t1", 2)]),
        ("t2^2", &[("t2", 2)]),
        ("x6^6", &[("x6", 6)]),
        ("x18^18", &[("x18", 18)]),
        ("[x6,x18]", &[("x6", -1), ("x18", -1), ("x6", 1), ("x18", 1)]),
        ("(t1*t2)^3", &[("t1", 1), ("t2", 1), ("t1", 1), ("t2", 1), ("t1", 1), ("t2", 1)]),
        ("t1*x6*t1 = x6^-1", &[("t1", 1), ("x6", 1), ("t1", 1), ("x6", 1)]),
        ("t1*x18*t1 = x6^3*x18", &[("t1", 1), ("x18", 1), ("t1", 1), ("x18", -1), ("x6", -3)]),
        ("t2*x6*t2 = x6^5*x18^3", &[("t2", 1), ("x6", 1), ("t2", 1), ("x18", -3), ("x6", -5)]),
        ("t2*x18*t2 = x6^4*x18^13", &[("t2", 1), ("x18", 1), ("t2", 1), ("x18", -13), ("x6", -4)]),
    ];
    for (label, word) in relators {
        r.check(&format!("relator {label}"), || {
            let mut acc = id.clone();
            for &(g, k) in word {
                acc = acc.try_mul(&pow(&get(g)?, k)?)?;
            }
            Ok(acc.is_identity())
        });
    }

    // whole-group statements
    let gt = catalog.resolve("G1t,G2t,FUMt").and_then(|g| closure(&g, ClosureOptions::default().exec(exec)));
    match gt {
        Ok(gt) => group_checks(&mut r, catalog, &gt),
        Err(err) => r.push("closure_G1t_G2t_FUMt", false, Some(err.to_string())),
    }
    r
}

fn group_checks(r: &mut IdentityReport, catalog: &Catalog, gt: &GroupClosure) {
    let get = |n: &str| catalog.get(n).cloned();
    r.push("closure_G1t_G2t_FUMt_order_648", gt.order() == 648, Some(format!("order {}", gt.order())));
    r.check("n_in_closure", || Ok(gt.contains(&get("N")?)));
    r.check("diagonal_subgroup_108", || {
        let d = gt.diagonal_indices().len();
        let x = closure(&catalog.resolve("x6,x18")?, ClosureOptions::default())?;
        Ok(d == 108 && x.order() == 108 && x.elements().iter().all(|m| m.is_diagonal()))
    });
}

/// `m^0 .. m^(order-1)`.
fn powers(m: &ExactMatrix, cap: usize) -> Result<Vec<ExactMatrix>> {
    let k = m.order(cap)?;
    let mut out = vec![ExactMatrix::identity(m.field(), m.dim())];
    for _ in 1..k {
        let next = out.last().expect("nonempty").try_mul(m)?;
        out.push(next);
    }
    Ok(out)
}
