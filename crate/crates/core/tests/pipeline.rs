use num_bigint::BigInt;
use num_traits::Zero;
use one_radical::verify::{generate_cubic_instance, verify_certificate, InstanceSampler};
use one_radical::{decide_polynomial, Error, Outcome, QPoly, Rational};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn poly(c: &[i64]) -> QPoly {
    QPoly::new(c.iter().map(|&v| q(v, 1)).collect())
}

#[test]
fn shifted_and_scaled_inputs() {
    // (x + 1)³ − 2, root ∛2 − 1
    let f = poly(&[-1, 3, 3, 1]);
    let v = decide_polynomial(&f).unwrap();
    let c = v.certificate().expect("one_radical");
    assert_eq!(c.shift(), &q(1, 1));
    assert!(verify_certificate(&f, c).unwrap());

    // 3x⁴ − 6: same verdict as x⁴ − 2
    let f = poly(&[-6, 0, 0, 0, 3]);
    assert!(decide_polynomial(&f).unwrap().certificate().is_some());

    // 2x² − 4: √2 with radicand 2
    let v = decide_polynomial(&poly(&[-4, 0, 2])).unwrap();
    assert_eq!(v.certificate().unwrap().descriptor().radicand(), &q(2, 1));
}

#[test]
fn trivial_degrees() {
    assert_eq!(decide_polynomial(&poly(&[3, 2])).unwrap().outcome, Outcome::RationalRoot(q(-3, 2)));
    assert!(matches!(decide_polynomial(&poly(&[4])).unwrap().outcome, Outcome::NotOneSolvable(_)));
    assert_eq!(decide_polynomial(&QPoly::zero()), Err(Error::ZeroPolynomial));
    assert_eq!(decide_polynomial(&poly(&[1, 0, 0, 0, 0, 1])), Err(Error::UnsupportedDegree(5)));
}

#[test]
fn reducible_inputs_report_rational_roots() {
    // x³ − x has roots −1, 0, 1
    assert_eq!(decide_polynomial(&poly(&[0, -1, 0, 1])).unwrap().outcome, Outcome::RationalRoot(q(-1, 1)));
    // (x² − 2)(x² − 3): a root in ℚ[√2]
    let f = &poly(&[-2, 0, 1]) * &poly(&[-3, 0, 1]);
    let v = decide_polynomial(&f).unwrap();
    assert!(verify_certificate(&f, v.certificate().unwrap()).unwrap());
    // (x² + 1)(x² + 2): no real roots
    let f = &poly(&[1, 0, 1]) * &poly(&[2, 0, 1]);
    assert!(matches!(decide_polynomial(&f).unwrap().outcome, Outcome::NotOneSolvable(_)));
}

#[test]
fn sampler_streams_do_not_overlap_across_seeds() {
    let a: Vec<_> = (0..5)
        .map({
            let mut s = InstanceSampler::new(1);
            move |_| s.next_cubic().unwrap().polynomial
        })
        .collect();
    let b: Vec<_> = (0..5)
        .map({
            let mut s = InstanceSampler::new(2);
            move |_| s.next_cubic().unwrap().polynomial
        })
        .collect();
    assert_ne!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// A cubic with root a + br + cr² and a ≠ 0 is not depressed; the decider
    /// must still find a root after shifting back.
    #[test]
    fn undepressed_cubic_round_trip(
        a in (-9i64..=9, 1i64..=5),
        b in (-9i64..=9, 1i64..=5),
        c in (-9i64..=9, 1i64..=5),
        t in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10]),
    ) {
        let (a, b, c) = (q(a.0, a.1), q(b.0, b.1), q(c.0, c.1));
        prop_assume!(!(b.is_zero() && c.is_zero()));
        let inst = generate_cubic_instance(&a, &b, &c, &q(t, 1)).unwrap();
        let v = decide_polynomial(&inst.polynomial).unwrap();
        let cert = v.certificate().expect("one_radical");
        prop_assert!(verify_certificate(&inst.polynomial, cert).unwrap());
        prop_assert_eq!(cert.descriptor().index(), 3);
    }

    /// Scaling by a nonzero rational never changes the verdict tag.
    #[test]
    fn verdict_is_scale_invariant(
        c in proptest::collection::vec(-12i64..=12, 4..=5),
        k in (1i64..=7, 1i64..=7, any::<bool>()),
    ) {
        let f = poly(&c);
        prop_assume!(f.degree() == Some(c.len() - 1));
        let scale = if k.2 { q(k.0, k.1) } else { -q(k.0, k.1) };
        let g = f.scale(&scale);
        let (vf, vg) = (decide_polynomial(&f).unwrap(), decide_polynomial(&g).unwrap());
        prop_assert_eq!(vf.outcome.tag(), vg.outcome.tag());
    }
}
