use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qutrit_braids::braid::{change_basis_qutrit, project_internal, to_e_basis, AncillaTarget};
use qutrit_braids::{AnyonCharge, BraidSimulator, BraidWord, Catalog, CyclotomicField, CyclotomicNumber, ExactMatrix, FusionSpace, StateVector};
use std::sync::OnceLock;

fn sim() -> &'static BraidSimulator {
    static SIM: OnceLock<BraidSimulator> = OnceLock::new();
    SIM.get_or_init(|| BraidSimulator::default_field().unwrap())
}

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::default_field)
}

fn field() -> &'static CyclotomicField {
    sim().field()
}

fn space(leaves: &[u8], total: u8) -> FusionSpace {
    FusionSpace::from_values(leaves, total).unwrap()
}

fn sigma(s: &FusionSpace, i: usize) -> ExactMatrix {
    sim().sigma_matrix(s, i, 1).unwrap().0
}

fn word(s: &FusionSpace, w: &str) -> (ExactMatrix, FusionSpace) {
    sim().word_matrix(s, &w.parse().unwrap()).unwrap()
}

/// e^{k i pi / n}
fn e(k: i64, n: u32) -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(field(), k, 2 * n).unwrap()
}

fn num(v: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_int(field(), v)
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn inv_sqrt2() -> CyclotomicNumber {
    CyclotomicNumber::sqrt_constant(field(), 2).unwrap().scale(&rat(1, 2))
}

fn mat(rows: Vec<Vec<CyclotomicNumber>>) -> ExactMatrix {
    ExactMatrix::from_rows(rows).unwrap()
}

/// Independent dimension count: fusion-rule matrices multiplied out.
fn dim_oracle(leaves: &[u8], total: u8) -> usize {
    let rule = |a: i32, b: i32, c: i32| c >= (a - b).abs() && c <= (a + b).min(8 - a - b) && (a + b + c) % 2 == 0;
    let mut v = [0usize; 5];
    v[0] = 1; // start from the vacuum, fuse in each leaf
    for &l in leaves {
        let mut w = [0usize; 5];
        for a in 0..5 {
            for c in 0..5 {
                if rule(a, l as i32, c) {
                    w[c as usize] += v[a as usize];
                }
            }
        }
        v = w;
    }
    v[total as usize]
}

#[test]
fn basis_dimensions() {
    let q = space(&[2, 2, 2, 2], 0);
    assert_eq!(q.dim(), 3);
    assert_eq!(q.basis(), &[vec![0, 2], vec![2, 2], vec![4, 2]]);
    assert_eq!(space(&[1, 2, 2, 1], 0).dim(), 2);
    let s = space(&[2, 2, 1, 1], 0);
    assert_eq!(s.basis(), &[vec![0, 1], vec![2, 1]]);
    assert_eq!(space(&[1, 1], 0).dim(), 1);
    let six = space(&[2, 2, 2, 2, 1, 1], 0);
    assert_eq!(six.dim(), dim_oracle(&[2, 2, 2, 2, 1, 1], 0));
    assert_eq!(six.dim(), 8);
    for leaves in [vec![1u8, 2, 3, 2, 1], vec![2, 2, 2, 2, 2, 2], vec![4, 1, 3, 2], vec![1, 1, 1, 1, 1, 1, 1]] {
        for t in 0..=4 {
            assert_eq!(space(&leaves, t).dim(), dim_oracle(&leaves, t), "{leaves:?} -> {t}");
        }
    }
    // lexicographic order
    assert!(six.basis().windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn qutrit_generators_match_g1_g2() {
    let q = space(&[2, 2, 2, 2], 0);
    assert!(sigma(&q, 1).scalar_multiple_of(catalog().get("G1").unwrap()).is_some());
    assert!(sigma(&q, 2).scalar_multiple_of(catalog().get("G2").unwrap()).is_some());
    // the outer pair braids like the first
    assert_eq!(sigma(&q, 3), sigma(&q, 1));
}

#[test]
fn qubit_1221_sigma2() {
    let s = space(&[1, 2, 2, 1], 0);
    let (m, leaves) = sim().sigma_matrix(&s, 2, 1).unwrap();
    assert_eq!(leaves, s);
    let half = num(1).scale(&rat(1, 2));
    let off = &CyclotomicNumber::sqrt_constant(field(), 3).unwrap() * &e(1, 2).scale(&rat(1, 2));
    let expected = mat(vec![vec![-half.clone(), off.clone()], vec![off, -half]]);
    assert!(m.scalar_multiple_of(&expected).is_some());
}

#[test]
fn middle_braid_and_full_twist_on_2211() {
    let m = sim().middle_braid_2211().unwrap();
    let r = inv_sqrt2();
    let expected = mat(vec![
        vec![&e(2, 3) * &r, r.clone()],
        vec![&e(-5, 6) * &r, &-e(1, 2) * &r],
    ]);
    assert!(m.is_unitary());
    assert!(m.scalar_multiple_of(&expected).is_some());
    let half = num(1).scale(&rat(1, 2));
    assert_eq!(m.get(0, 0).abs_squared(), half);
    assert_eq!(m.get(1, 0).abs_squared(), half);

    let s = space(&[2, 2, 1, 1], 0);
    let twist = sim().full_twist(&s, 2).unwrap();
    assert!(twist.get(0, 0).is_zero() && twist.get(1, 1).is_zero());
    assert!(twist.is_unitary());
}

#[test]
fn g2_action_identities() {
    let g2 = sigma(&space(&[2, 2, 2, 2], 0), 2);
    let phase = g2.scalar_multiple_of(catalog().get("G2").unwrap()).unwrap();
    let r = inv_sqrt2();
    let ket = |i| StateVector::basis(field(), 3, i);
    let e1 = ket(0).try_add(&ket(2)).unwrap().scale(&r);
    let e3 = ket(0).try_add(&ket(2).scale(&num(-1))).unwrap().scale(&r);
    assert_eq!(g2.apply(&ket(1)).unwrap(), e1.scale(&(&phase * &e(7, 9))));
    assert_eq!(g2.apply(&e3).unwrap(), e3.scale(&(&phase * &-e(4, 9))));
}

#[test]
fn basis_changes() {
    let c = catalog();
    let (g1, g2) = (c.get("G1").unwrap(), c.get("G2").unwrap());
    let (g1t, g2t) = (c.get("G1t").unwrap(), c.get("G2t").unwrap());
    assert_eq!(&change_basis_qutrit(g2).unwrap(), g2t);
    // with O the corner signs of G1t flip (a Klein element), the e-basis matrix is exact
    let flip = ExactMatrix::diagonal(vec![num(-1), num(1), num(-1)]);
    assert_eq!(change_basis_qutrit(g1).unwrap(), g1t * &flip);
    assert_eq!(&to_e_basis(g1).unwrap(), g1t);
    assert_eq!(&to_e_basis(g2).unwrap(), g2t);
    let id = ExactMatrix::identity(field(), 3);
    assert_eq!(change_basis_qutrit(&id).unwrap(), id);
    assert!(change_basis_qutrit(&ExactMatrix::identity(field(), 2)).is_err());
}

#[test]
fn n_is_four_inverse_middle_braids() {
    let q = space(&[2, 2, 2, 2], 0);
    let state = StateVector::basis(field(), 3, 1);
    let w: BraidWord = "s2:-1,s2:-1,s2:-1,s2:-1".parse().unwrap();
    let (out, leaves) = sim().apply_word(&q, &w, &state).unwrap();
    assert_eq!(leaves, q);
    let (m, _) = sim().word_matrix(&q, &w).unwrap();
    assert_eq!(m.apply(&state).unwrap(), out);
    assert!(to_e_basis(&m).unwrap().scalar_multiple_of(catalog().get("N").unwrap()).is_some());
}

#[test]
fn projections() {
    let q = space(&[2, 2, 2, 2], 0);
    let two = StateVector::basis(field(), 3, 1);
    let (v, p) = project_internal(&q, 1, AnyonCharge::new(2).unwrap(), &two).unwrap();
    assert_eq!(v, two);
    assert!(p.is_one());
    let r = inv_sqrt2();
    let plus = StateVector::new(vec![r.clone(), num(0), r.clone()]).unwrap();
    let (v, p) = project_internal(&q, 1, AnyonCharge::VACUUM, &plus).unwrap();
    assert_eq!(v, StateVector::new(vec![r, num(0), num(0)]).unwrap());
    assert_eq!(p, num(1).scale(&rat(1, 2)));
    // braiding anyons 2,3 keeps the |2> line (a charge-line statement)
    let g2t = to_e_basis(&sigma(&q, 2)).unwrap();
    let moved = g2t.apply(&StateVector::basis(field(), 3, 2)).unwrap();
    assert_eq!(moved.get(0), &num(0));
    assert_eq!(moved.get(1), &num(0));
}

#[test]
fn middle_braid_phase_on_the_two_line() {
    let mut phases = Vec::new();
    for first in [4u8, 0] {
        let s = space(&[first, 2, 2, 2], 0);
        assert_eq!(s.dim(), 1);
        let m = sigma(&s, 2);
        phases.push(m.get(0, 0).clone());
        // total 2: restricted to the internal-2 line
        let s2 = space(&[first, 2, 2, 2], 2);
        let m2 = sigma(&s2, 2);
        let k = s2.index_of(&[2, 2]).unwrap();
        phases.push(m2.get(k, k).clone());
    }
    assert!(phases.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(phases[0], e(4, 3));
}

#[test]
fn braid_relations_hold() {
    for (leaves, total) in [(vec![2u8, 2, 2, 2], 0), (vec![2, 2, 2, 2, 1, 1], 0), (vec![1, 2, 2, 1], 0), (vec![2, 1, 3, 2, 1], 1)] {
        let s = space(&leaves, total);
        assert!(s.dim() > 0);
        let n = leaves.len();
        for i in 1..n {
            // sigma sigma^-1 = 1
            let (m, back) = word(&s, &format!("s{i}:1,s{i}:-1"));
            assert_eq!(back, s);
            assert!(m.is_identity());
            let (single, _) = word(&s, &format!("s{i}:1"));
            assert!(single.is_unitary());
            if i + 1 < n {
                let (l, ll) = word(&s, &format!("s{i}:1,s{}:1,s{i}:1", i + 1));
                let (r, rl) = word(&s, &format!("s{}:1,s{i}:1,s{}:1", i + 1, i + 1));
                assert_eq!(ll, rl);
                assert_eq!(l, r, "Yang-Baxter at {i} on {leaves:?}");
            }
            for j in (i + 2)..n {
                let (l, ll) = word(&s, &format!("s{i}:1,s{j}:1"));
                let (r, rl) = word(&s, &format!("s{j}:1,s{i}:1"));
                assert_eq!(ll, rl);
                assert_eq!(l, r, "commutation {i},{j} on {leaves:?}");
                // full twists commute with distant braids
                let (l, _) = word(&s, &format!("s{i}:1,s{i}:1,s{j}:-1"));
                let (r, _) = word(&s, &format!("s{j}:-1,s{i}:1,s{i}:1"));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn ancilla_targets_are_reached() {
    let r = inv_sqrt2();
    let half = num(1).scale(&rat(1, 2));
    for (target, sign) in [(AncillaTarget::Plus, 1), (AncillaTarget::Minus, -1)] {
        let out = sim().ancilla_protocol(target).unwrap();
        assert!(out.equal_moduli);
        assert!(out.state.entries().iter().all(|c| c.abs_squared() == half));
        let phases: Vec<_> = out.reachable_relative_phases.iter().map(|p| p.value.clone()).collect();
        assert!(phases.contains(&num(1)) && phases.contains(&num(-1)));
        assert!(out.certified);
        let expected = StateVector::new(vec![r.clone(), &r * &num(sign)]).unwrap();
        assert!(out.state.scalar_multiple_of(&expected).is_some());
        // replaying the reported word reproduces the state
        let start = space(&[2, 2, 1, 1], 0);
        let v0 = StateVector::basis(field(), 2, start.index_of(&[out.start_label, 1]).unwrap());
        let (v, leaves) = sim().apply_word(&start, &out.word, &v0).unwrap();
        assert_eq!(v, out.state);
        assert_eq!(leaves.leaves().iter().map(|c| c.value()).collect::<Vec<_>>(), out.leaves);
    }
    // first column of the middle braid, up to global phase
    let out = sim().ancilla_protocol(AncillaTarget::Plus).unwrap();
    let expected = StateVector::new(vec![&e(2, 3) * &r, &e(-5, 6) * &r]).unwrap();
    assert!(out.after_middle_braid.scalar_multiple_of(&expected).is_some());
}

fn arb_word(strands: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, prop::bool::ANY), 0..6).prop_map(|ls| {
        let mut w = BraidWord::default();
        for (i, inv) in ls {
            w.push(i, if inv { -1 } else { 1 });
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn words_are_unitary_and_invertible(w in arb_word(6)) {
        let s = space(&[2, 2, 2, 2, 1, 1], 0);
        let (m, leaves) = sim().word_matrix(&s, &w).unwrap();
        prop_assert!(m.is_unitary());
        prop_assert_eq!(leaves.dim(), s.dim());
        let (back, home) = sim().word_matrix(&leaves, &w.inverse()).unwrap();
        prop_assert_eq!(home, s);
        prop_assert!((&back * &m).is_identity());
    }

    #[test]
    fn word_text_round_trips(w in arb_word(9)) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<BraidWord>().unwrap(), w);
    }
}
