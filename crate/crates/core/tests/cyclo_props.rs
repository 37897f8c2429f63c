use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qutrit_braids::{CyclotomicField, CyclotomicNumber, Error};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn element(coeffs: Vec<(i64, i64)>) -> CyclotomicNumber {
    let f = CyclotomicField::new(72).unwrap();
    let vals: Vec<BigRational> = coeffs.into_iter().map(|(p, q)| rat(p, q)).collect();
    CyclotomicNumber::from_coefficients(&f, &vals).unwrap()
}

fn arb_element() -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-50i64..50, 1i64..9), 24).prop_map(element)
}

fn sparse_element() -> impl Strategy<Value = CyclotomicNumber> {
    // a few roots of unity with small rational weights; exercises reduction
    prop::collection::vec((0i64..72, -5i64..5, 1i64..5), 1..5).prop_map(|terms| {
        let f = CyclotomicField::new(72).unwrap();
        terms.into_iter().fold(CyclotomicNumber::zero(&f), |acc, (k, p, q)| {
            &acc + &CyclotomicNumber::zeta(&f, k).scale(&rat(p, q))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in arb_element(), b in sparse_element(), c in sparse_element()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in sparse_element(), b in arb_element(), c in arb_element()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn text_round_trip_is_byte_exact(a in arb_element()) {
        let text = a.to_string();
        let back: CyclotomicNumber = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn conj_is_an_involutive_automorphism(a in sparse_element(), b in sparse_element()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        let n = a.abs_squared();
        prop_assert_eq!(n.conj(), n);
    }

    #[test]
    fn inverse_is_two_sided(a in sparse_element()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&inv * &a).is_one());
    }

    #[test]
    fn root_of_unity_has_exact_order(k in -100i64..100, n in prop::sample::select(vec![1u32, 2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72])) {
        let f = CyclotomicField::new(72).unwrap();
        let z = CyclotomicNumber::root_of_unity(&f, k, n).unwrap();
        let expected = n as i64 / num_integer::gcd(k, n as i64);
        let mut acc = z.clone();
        let mut order = 1;
        while !acc.is_one() {
            acc = &acc * &z;
            order += 1;
            prop_assert!(order <= 72);
        }
        prop_assert_eq!(order, expected);
    }
}

/// Gaussian elimination over Q returning a basis of the null space of `m` (rows x cols).
fn null_space(mut m: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); cols];
            v[fc] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][fc].clone();
            }
            v
        })
        .collect()
}

fn is_rational_square(q: &BigRational) -> bool {
    if q.is_negative() {
        return false;
    }
    let (p, d) = (q.numer(), q.denom());
    let sp = p.sqrt();
    let sd = d.sqrt();
    &(&sp * &sp) == p && &(&sd * &sd) == d
}

#[test]
fn sqrt2_is_not_in_q_zeta9() {
    // If v^2 = 2 then sigma(v) = +-v for the generator sigma: zeta -> zeta^2 of the
    // (cyclic) Galois group. sigma(v) = v would make v rational, impossible.
    // So v lies in the -1 eigenspace of sigma; compute it and show no element
    // of it squares to 2.
    let f9 = CyclotomicField::new(9).unwrap();
    let deg = f9.degree();
    assert_eq!(deg, 6);
    // column j of (sigma + I) is sigma(zeta^j) + zeta^j
    let cols: Vec<Vec<BigRational>> = (0..deg as i64)
        .map(|j| {
            let z = CyclotomicNumber::zeta(&f9, j);
            (&z.galois(2) + &z).coefficients()
        })
        .collect();
    let m: Vec<Vec<BigRational>> = (0..deg).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let kernel = null_space(m);
    assert_eq!(kernel.len(), 1, "the -1 eigenspace is the quadratic subfield direction");
    let w = CyclotomicNumber::from_coefficients(&f9, &kernel[0]).unwrap();
    assert_eq!(w.galois(2), -w.clone());
    let r = (&w * &w).as_rational().expect("w^2 is fixed by sigma, hence rational");
    // (c w)^2 = 2 needs 2 / r to be a rational square
    assert!(!is_rational_square(&(rat(2, 1) / &r)));
    // and the rational case: 2 is not a square in Q
    assert!(!is_rational_square(&rat(2, 1)));

    assert_eq!(
        CyclotomicNumber::sqrt_constant(&f9, 2),
        Err(Error::FieldTooSmall { radicand: 2, order: 9 })
    );
}
