use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use qutrit_braids::groups::{closure_of, identity_suite};
use qutrit_braids::{
    closure, Catalog, ClosureMode, ClosureOptions, CyclotomicNumber, Error, ExactMatrix, Execution, GroupClosure,
};

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::default_field)
}

fn group(names: &str, mode: ClosureMode) -> GroupClosure {
    closure(&catalog().resolve(names).unwrap(), ClosureOptions::default().mode(mode)).unwrap()
}

fn gamma() -> &'static GroupClosure {
    static G: OnceLock<GroupClosure> = OnceLock::new();
    G.get_or_init(|| group("G1t,G2t,FUMt", ClosureMode::Exact))
}

fn freedman() -> &'static GroupClosure {
    static G: OnceLock<GroupClosure> = OnceLock::new();
    G.get_or_init(|| group("G1,G2,FUM", ClosureMode::Exact))
}

fn braid_group() -> &'static GroupClosure {
    static G: OnceLock<GroupClosure> = OnceLock::new();
    G.get_or_init(|| group("G1,G2", ClosureMode::Exact))
}

fn get(n: &str) -> ExactMatrix {
    catalog().get(n).unwrap().clone()
}

#[test]
fn gamma_has_order_648_and_contains_n() {
    let g = gamma();
    assert_eq!(g.order(), 648);
    assert!(g.contains(&get("N")));
    for m in g.elements() {
        assert!(m.is_unitary());
        assert!(m.determinant().is_one());
    }
    // closed under products with the generators (BFS invariant), and under inverses
    for m in g.elements() {
        assert!(g.contains(&m.dagger()));
    }
}

#[test]
fn blichfeld_generators_give_the_same_set() {
    let d = group("F18,E,Btilde", ClosureMode::Exact);
    assert!(d.equal_as_sets(gamma()));
    assert!(gamma().equal_as_sets(&d));
}

#[test]
fn braid_only_subgroup_has_order_162_and_contains_the_center() {
    let b = braid_group();
    assert_eq!(b.order(), 162);
    let w = CyclotomicNumber::root_of_unity(catalog().field(), 1, 3).unwrap();
    assert!(b.contains(&ExactMatrix::scalar(&w, 3)));
    assert_eq!(b.center().unwrap().order(), 3);
}

#[test]
fn projective_counts() {
    assert_eq!(group("G1t,G2t,FUMt", ClosureMode::ModCenter).order(), 216);
    assert_eq!(group("G1,G2", ClosureMode::ModCenter).order(), 54);
    let z = gamma().center().unwrap();
    assert_eq!(z.order(), 3);
    for m in z.elements() {
        let s = m.get(0, 0).clone();
        assert_eq!(m, &ExactMatrix::scalar(&s, 3));
        assert!(s.pow(3).unwrap().is_one());
    }
}

#[test]
fn conjugation_by_o_and_the_row_swap() {
    let o = get("O");
    let conj = freedman().conjugate_group_by_transpose(&o).unwrap();
    assert!(conj.equal_as_sets(gamma()));
    let via_inverse = freedman().conjugate_group(&o).unwrap();
    assert!(via_inverse.equal_as_sets(gamma()));
    let j = get("J");
    assert!(freedman().conjugate_group(&j).unwrap().equal_as_sets(freedman()));
    // a non-orthogonal matrix is rejected by the transpose form
    let two = ExactMatrix::scalar(&CyclotomicNumber::from_int(catalog().field(), 2), 3);
    assert_eq!(freedman().conjugate_group_by_transpose(&two).unwrap_err(), Error::NotOrthogonal);
    let zero = ExactMatrix::zeros(catalog().field(), 3);
    assert!(freedman().conjugate_group(&zero).is_err());
}

#[test]
fn element_orders() {
    let g = gamma();
    for (name, expected) in [("N", 9), ("G1t", 18), ("x6", 6), ("x18", 18), ("G2t", 18)] {
        let i = g.index_of(&get(name)).unwrap();
        assert_eq!(g.element_order(i), expected, "{name}");
        assert_eq!(get(name).order(100).unwrap(), expected);
    }
    // permutation-derived orders agree with matrix powers everywhere
    for (i, m) in g.elements().iter().enumerate() {
        assert_eq!(g.element_order(i), m.order(100).unwrap());
    }
}

#[test]
fn provenance_words_evaluate_back() {
    for g in [gamma(), braid_group()] {
        for i in 0..g.order() {
            assert_eq!(&g.evaluate_word(i), &g.elements()[i]);
        }
    }
    let pu = group("G1t,G2t,FUMt", ClosureMode::ModCenter);
    for i in 0..pu.order() {
        assert_eq!(&pu.evaluate_word(i), &pu.elements()[i]);
    }
    assert_eq!(gamma().word_string(0), "I");
}

#[test]
fn closure_is_independent_of_generator_order_and_execution() {
    let base = gamma();
    for names in ["G2t,FUMt,G1t", "FUMt,G1t,G2t", "G1t,FUMt,G2t"] {
        assert!(group(names, ClosureMode::Exact).equal_as_sets(base));
    }
    let gens = catalog().resolve("G1t,G2t,FUMt").unwrap();
    let seq = closure(&gens, ClosureOptions::default().exec(Execution::Sequential)).unwrap();
    assert_eq!(seq.elements(), base.elements());
    assert_eq!((0..seq.order()).map(|i| seq.word(i)).collect::<Vec<_>>(), (0..base.order()).map(|i| base.word(i)).collect::<Vec<_>>());
}

#[test]
fn fingerprints_of_conjugate_groups_agree() {
    let a = gamma().fingerprint();
    let b = freedman().fingerprint();
    assert_eq!(a, b);
    assert_eq!(a.order, 648);
    assert_eq!(a.center_order, 3);
    assert_eq!(a.order_histogram.values().sum::<usize>(), 648);
}

/// Brute-force oracle on matrices: classes, centre and derived subgroup of
/// the order-162 group, compared with the permutation-based computations.
#[test]
fn structure_matches_brute_force_on_matrices() {
    let g = braid_group();
    let els = g.elements();
    let inv: Vec<ExactMatrix> = els.iter().map(|m| m.dagger()).collect();
    let mut seen = HashSet::new();
    let mut classes = 0;
    for x in els {
        if seen.contains(x) {
            continue;
        }
        classes += 1;
        for (y, yi) in els.iter().zip(&inv) {
            seen.insert(&(yi * x) * y);
        }
    }
    let fp = g.fingerprint();
    assert_eq!(fp.class_count, classes);

    let center = els.iter().filter(|z| els.iter().all(|y| &(*z * y) == &(y * *z))).count();
    assert_eq!(fp.center_order, center);

    let mut comms: HashSet<ExactMatrix> = HashSet::new();
    for (a, ai) in els.iter().zip(&inv) {
        for (b, bi) in els.iter().zip(&inv) {
            comms.insert(&(&(ai * bi) * a) * b);
        }
    }
    let comms: Vec<ExactMatrix> = comms.into_iter().collect();
    let derived = closure_of(&comms, ClosureOptions::default()).unwrap();
    assert_eq!(fp.derived_order, derived.order());

    let mut hist = BTreeMap::new();
    for m in els {
        *hist.entry(m.order(100).unwrap()).or_insert(0) += 1;
    }
    assert_eq!(fp.order_histogram, hist);
}

#[test]
fn identity_suite_passes_and_detects_corruption() {
    let report = identity_suite(catalog(), Execution::Parallel);
    assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    for name in ["fum4_eq_n3", "n_eq_g2t_minus4", "diagonal_subgroup_108", "s3_closure", "cyclic_intersection_trivial"] {
        assert!(report.get(name).unwrap().passed, "{name}");
    }
    let f = catalog().field();
    let corrupted = catalog().clone().with_override("N", ExactMatrix::identity(f, 3)).unwrap();
    let bad = identity_suite(&corrupted, Execution::Parallel);
    assert!(!bad.all_passed());
    assert!(!bad.get("fum4_eq_n3").unwrap().passed);
}

#[test]
fn cap_guards_runaway() {
    let gens = catalog().resolve("G1t,G2t,FUMt").unwrap();
    let err = closure(&gens, ClosureOptions::default().cap(100)).unwrap_err();
    assert_eq!(err, Error::CapExceeded { cap: 100 });
}
