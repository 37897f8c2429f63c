use num_bigint::BigInt;
use num_rational::BigRational;
use qutrit_braids::tqft::{fusion_allowed, Theory};
use qutrit_braids::{AnyonCharge, Catalog, CyclotomicField, CyclotomicNumber, ExactMatrix, Execution};

fn q(v: u8) -> AnyonCharge {
    AnyonCharge::new(v).unwrap()
}

fn theory() -> Theory {
    Theory::default_field().unwrap()
}

fn int(f: &CyclotomicField, v: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_int(f, v)
}

#[test]
fn kauffman_variable_is_pinned_by_g1() {
    let t = theory();
    assert_eq!(t.params().a_exponent, -1);
    let a = &t.params().a;
    assert_eq!(a.pow(24).unwrap(), int(t.field(), 1));
    for k in 1..24 {
        assert!(!a.pow(k).unwrap().is_one(), "A must have order exactly 24");
    }
    // the conjugate choice does not reproduce G1
    let f = CyclotomicField::default_field();
    let other = Theory::with_kauffman_exponent(&f, 1).unwrap();
    let sigma1 = ExactMatrix::diagonal([0, 2, 4].iter().map(|&c| other.r_symbol(q(2), q(2), q(c)).unwrap()).collect());
    let g1 = Catalog::default_field().get("G1").unwrap().clone();
    assert!(sigma1.scalar_multiple_of(&g1).is_none());
}

#[test]
fn quantum_dimensions_follow_chebyshev() {
    let t = theory();
    let f = t.field().clone();
    // Kauffman loop polynomials: D_0 = 1, D_1 = d, D_{j+1} = d D_j - D_{j-1}; quantum
    // dimension of charge j is |D_j| = (-1)^j D_j for d = -sqrt 3.
    let d = t.params().loop_value.clone();
    assert_eq!(&d * &d, int(&f, 3));
    let mut cheb = vec![int(&f, 1), d.clone()];
    for j in 1..4 {
        let next = &(&d * &cheb[j]) - &cheb[j - 1];
        cheb.push(next);
    }
    // level 4: D_5 vanishes
    assert!((&(&d * &cheb[4]) - &cheb[3]).is_zero());
    for (j, dj) in cheb.iter().enumerate() {
        let expected = if j % 2 == 0 { dj.clone() } else { -dj.clone() };
        assert_eq!(t.quantum_dimension(q(j as u8)), &expected, "d_{j}");
        assert!(expected.to_complex().re > 0.0);
        assert_eq!(expected.conj(), expected);
    }
    assert_eq!(t.quantum_dimension(q(1)), t.quantum_dimension(q(3)));
    let d1 = t.quantum_dimension(q(1));
    assert_eq!(d1 * d1, int(&f, 3));
    assert_eq!(t.quantum_dimension(q(2)), &int(&f, 2));
    // fusion algebra: d_a d_b = sum_c d_c over channels
    for a in AnyonCharge::all() {
        for b in AnyonCharge::all() {
            let sum = AnyonCharge::all()
                .filter(|&c| fusion_allowed(a, b, c))
                .fold(int(&f, 0), |acc, c| &acc + t.quantum_dimension(c));
            assert_eq!(t.quantum_dimension(a) * t.quantum_dimension(b), sum);
        }
    }
}

#[test]
fn r_symbol_examples() {
    let t = theory();
    let f = t.field().clone();
    for b in 0..=4 {
        assert!(t.r_symbol(q(0), q(b), q(b)).unwrap().is_one());
    }
    assert!(t.r_symbol(q(1), q(1), q(1)).is_err());
    // diagonal ratios of G1 = diag(e^{7i pi/9}, -e^{4i pi/9}, -e^{7i pi/9})
    let e = |k| CyclotomicNumber::root_of_unity(&f, k, 18).unwrap();
    let r = |c| t.r_symbol(q(2), q(2), q(c)).unwrap();
    assert_eq!(r(0).try_div(&r(2)).unwrap(), e(7).try_div(&-e(4)).unwrap());
    assert_eq!(r(4).try_div(&r(2)).unwrap(), (-e(7)).try_div(&-e(4)).unwrap());
    // 1221 sigma_1 phases, unit modulus
    for c in [0, 2] {
        assert!(t.r_symbol(q(1), q(1), q(c)).unwrap().abs_squared().is_one());
    }
}

#[test]
fn theta_symbols_for_charges_one_and_three_agree() {
    let t = theory();
    let f = t.field().clone();
    let a = t.theta_symbol(q(1), q(2), q(1)).unwrap();
    let b = t.theta_symbol(q(1), q(2), q(3)).unwrap();
    assert_eq!(a, b);
    assert_eq!(&a * &a, int(&f, 6));
    // unitary theta normalisation: |F^{abb}_a[0,c]|^2 = d_c / (d_a d_b) = d_c^2 / theta(a,b,c)^2
    for (x, y) in [(1u8, 2u8), (2, 2), (1, 1), (3, 2)] {
        for c in (0..=4).filter(|&c| fusion_allowed(q(x), q(y), q(c))) {
            let fv = t.f_symbol([q(x), q(x), q(y), q(y), q(0), q(c)]);
            let th = t.theta_symbol(q(x), q(y), q(c)).unwrap();
            let dc = t.quantum_dimension(q(c));
            assert_eq!(&fv.abs_squared() * &(&th * &th), dc * dc, "({x},{y},{c})");
        }
    }
}

#[test]
fn f_matrices_are_unitary_and_trivial_on_vacuum() {
    let t = theory();
    for a in AnyonCharge::all() {
        for b in AnyonCharge::all() {
            for c in AnyonCharge::all() {
                for d in AnyonCharge::all() {
                    let Ok(m) = t.f_matrix(a, b, c, d) else { continue };
                    assert!(m.is_unitary());
                    if [a, b, c, d].contains(&AnyonCharge::VACUUM) {
                        assert_eq!(m.dim(), 1);
                        assert!(m.is_identity());
                    }
                }
            }
        }
    }
    assert!(t.f_matrix(q(1), q(1), q(1), q(0)).is_err());
}

#[test]
fn g2_from_f_conjugation() {
    let t = theory();
    let cat = Catalog::default_field();
    let f = t.f_matrix(q(2), q(2), q(2), q(2)).unwrap();
    assert_eq!(f.dim(), 3);
    let conj_f = ExactMatrix::from_rows(f.rows().iter().map(|r| r.iter().map(|x| x.conj()).collect()).collect()).unwrap();
    let r = ExactMatrix::diagonal([0, 2, 4].iter().map(|&c| t.r_symbol(q(2), q(2), q(c)).unwrap()).collect());
    let sigma2 = &(&conj_f * &r) * &f.transpose();
    assert!(sigma2.scalar_multiple_of(cat.get("G2").unwrap()).is_some());
    let sigma1 = r;
    assert!(sigma1.scalar_multiple_of(cat.get("G1").unwrap()).is_some());
    // braid relation on the displayed pair
    let (g1, g2) = (cat.get("G1").unwrap(), cat.get("G2").unwrap());
    assert_eq!(&(g1 * g2) * g1, &(g2 * g1) * g2);
}

#[test]
fn consistency_check_passes_everywhere() {
    let t = theory();
    let report = t.consistency_check(Execution::Parallel).unwrap();
    assert_eq!(report.pentagon, 3611);
    assert_eq!(report.hexagon, 329);
    assert_eq!(report.hexagon_inverse, 329);
    assert!(report.ribbon > 0 && report.unitary_f_matrices > 0 && report.vacuum_f_matrices > 0);
    let seq = t.consistency_check(Execution::Sequential).unwrap();
    assert_eq!(seq, report);
}

#[test]
fn twists_match_the_conformal_weights() {
    // theta_j = exp(2 pi i h_j) with h_j = j(j+2)/24 up to the overall sign/orientation of A
    let t = theory();
    let f = t.field().clone();
    for j in 0..=4i64 {
        let h = j * (j + 2);
        let expected = CyclotomicNumber::root_of_unity(&f, -h, 24).unwrap();
        assert_eq!(t.twist(q(j as u8)), &expected, "theta_{j}");
    }
}

#[test]
fn dump_is_deterministic() {
    let a = serde_json::to_string(&theory().dump()).unwrap();
    let b = serde_json::to_string(&theory().dump()).unwrap();
    assert_eq!(a, b);
    let _ = BigRational::from_integer(BigInt::from(1));
}
