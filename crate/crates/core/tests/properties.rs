use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use spherectl_core::bundle::{BundleClass, Orientation};
use spherectl_core::classify::{
    census, gz_family, homeomorphic, oriented_diffeomorphic, unoriented_diffeomorphic, Answer, Theta7Element,
};
use spherectl_core::exactnum::{QmodZ, Rat};
use spherectl_core::moduli::{deduce_pontryagin_numbers, index_forms_dim8, separation_certificate, SeparationVerdict};
use spherectl_core::space::{cohomology, mu_invariant, p1_squared_w, realized_mu_set};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn bundle(n: i64, k: i64) -> BundleClass<BigInt> {
    BundleClass::new(big(n), big(k)).unwrap()
}

fn milnor(k: i64) -> BundleClass<BigInt> {
    bundle(1, k)
}

// Closed form h(h−1)/2 / 28 with k = 2h − 1, computed on plain integers.
fn mu_closed_form(k: i64) -> (i64, i64) {
    let h = (k + 1) / 2;
    let r = (h * (h - 1) / 2).rem_euclid(28);
    let g = gcd(r, 28);
    (r / g, 28 / g)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn mu(k: i64) -> QmodZ<BigInt> {
    mu_invariant(&milnor(k), Orientation::Positive).unwrap()
}

fn qz(pair: (i64, i64)) -> QmodZ<BigInt> {
    QmodZ::new(big(pair.0), big(pair.1)).unwrap()
}

fn odd() -> impl Strategy<Value = i64> {
    (-100_000i64..100_000).prop_map(|j| 2 * j + 1)
}

fn small_q() -> impl Strategy<Value = QmodZ<BigInt>> {
    (-500i64..500, 1i64..300).prop_map(|(n, d)| qz((n, d)))
}

fn rat() -> impl Strategy<Value = Rat<BigInt>> {
    (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rat::new(big(n), big(d)).unwrap())
}

fn valid_bundle() -> impl Strategy<Value = BundleClass<BigInt>> {
    (1i64..6, -300i64..300, any::<bool>()).prop_map(|(n, j, flip)| {
        let b = bundle(n, n + 2 * j);
        if flip {
            b.reverse_orientation()
        } else {
            b
        }
    })
}

// --- exact arithmetic -------------------------------------------------------

proptest! {
    #[test]
    fn qmodz_add_commutes(a in small_q(), b in small_q()) {
        prop_assert_eq!(a.clone() + b.clone(), b + a);
    }

    #[test]
    fn qmodz_inverse(a in small_q()) {
        prop_assert_eq!(a.clone() + (-a), QmodZ::zero());
    }

    #[test]
    fn qmodz_canonical_form(n in -10_000i64..10_000, d in 1i64..10_000, t in 1i64..1000) {
        let a = qz((n, d));
        let b = qz((n * t, d * t));
        prop_assert_eq!(&a, &b);
        prop_assert!(!a.numer().is_negative() && a.numer() < a.denom());
        prop_assert_eq!(num_integer::gcd(a.numer().clone(), a.denom().clone()), if a.is_zero() { a.denom().clone() } else { big(1) });
    }

    #[test]
    fn qmodz_add_associates(a in small_q(), b in small_q(), c in small_q()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // Each result is checked by cross-multiplying against the unreduced
    // fraction built from the raw integers.
    #[test]
    fn rational_ops_match_cross_multiplication(a in rat(), b in rat()) {
        let (an, ad) = (a.numer().clone(), a.denom().clone());
        let (bn, bd) = (b.numer().clone(), b.denom().clone());
        let check = |r: &Rat<BigInt>, num: BigInt, den: BigInt| {
            r.denom().is_positive()
                && num_integer::gcd(r.numer().clone(), r.denom().clone()) == big(1)
                && r.numer().clone() * den == num * r.denom().clone()
        };
        prop_assert!(check(&(&a + &b), &an * &bd + &bn * &ad, &ad * &bd));
        prop_assert!(check(&(&a - &b), &an * &bd - &bn * &ad, &ad * &bd));
        prop_assert!(check(&(&a * &b), &an * &bn, &ad * &bd));
        if !bn.is_zero() {
            let (num, den) = if bn.is_negative() { (-(&an * &bd), -(&ad * &bn)) } else { (&an * &bd, &ad * &bn) };
            prop_assert!(check(&a.checked_div(&b).unwrap(), num, den));
        }
        prop_assert_eq!(a.cmp(&b), (&an * &bd).cmp(&(&bn * &ad)));
    }
}

// --- space ---------------------------------------------------------------

#[test]
fn mu_matches_closed_form_on_window() {
    for k in (-223..=223).step_by(2) {
        assert_eq!(mu(k), qz(mu_closed_form(k)), "k = {k}");
    }
}

proptest! {
    #[test]
    fn mu_matches_closed_form(k in odd()) {
        prop_assert_eq!(mu(k), qz(mu_closed_form(k)));
    }

    #[test]
    fn mu_has_period_112(k in odd()) {
        prop_assert_eq!(mu(k), mu(k + 112));
    }

    #[test]
    fn mu_orientation_negates(k in odd()) {
        let b = milnor(k);
        let neg = mu_invariant(&b, Orientation::Negative).unwrap();
        prop_assert_eq!(neg, -mu_invariant(&b, Orientation::Positive).unwrap());
    }

    #[test]
    fn cohomology_ignores_k_and_sign(n in 1i64..50, j1 in -500i64..500, j2 in -500i64..500) {
        let a = cohomology(&bundle(n, n + 2 * j1));
        prop_assert_eq!(&a, &cohomology(&bundle(n, n + 2 * j2)));
        prop_assert_eq!(&a, &cohomology(&bundle(-n, n + 2 * j2)));
        prop_assert_eq!(a.degree(4).order(), Some(big(n)));
        for i in [1usize, 2, 3, 5, 6] {
            prop_assert!(a.degree(i).is_zero());
        }
        prop_assert_eq!(a.is_sphere_like(), n == 1);
    }

    #[test]
    fn p1_squared_for_milnor_is_4k2(k in odd()) {
        prop_assert_eq!(p1_squared_w(&milnor(k)), Rat::from_integer(big(4 * k * k)));
    }

    // 4k²/n against the Thom-class computation x = (2k/n)τ, ⟨τ², [W]⟩ = n.
    #[test]
    fn p1_squared_matches_thom_class(n in 1i64..200, j in -1000i64..1000) {
        let k = n + 2 * j;
        let coeff = Rat::new(big(2 * k), big(n)).unwrap();
        let expected = &(&coeff * &coeff) * &Rat::from_integer(big(n));
        prop_assert_eq!(p1_squared_w(&bundle(n, k)), expected);
    }
}

#[test]
fn realized_mu_values_attained_twice_per_period() {
    for value in realized_mu_set::<BigInt>() {
        let hits = (0..56).filter(|h| mu(2 * h - 1) == value).count();
        assert!(hits >= 2, "{value} attained {hits} times");
    }
}

// --- classify ------------------------------------------------------------

proptest! {
    #[test]
    fn deciders_are_symmetric(a in valid_bundle(), b in valid_bundle()) {
        prop_assert_eq!(homeomorphic(&a, &b), homeomorphic(&b, &a));
        prop_assert_eq!(oriented_diffeomorphic(&a, &b), oriented_diffeomorphic(&b, &a));
        prop_assert_eq!(unoriented_diffeomorphic(&a, &b), unoriented_diffeomorphic(&b, &a));
    }

    #[test]
    fn deciders_are_reflexive(a in valid_bundle()) {
        prop_assert_eq!(homeomorphic(&a, &a).answer(), Answer::Yes);
        prop_assert_eq!(oriented_diffeomorphic(&a, &a).answer(), Answer::Yes);
        prop_assert_eq!(unoriented_diffeomorphic(&a, &a).answer(), Answer::Yes);
    }

    #[test]
    fn diffeomorphic_implies_not_non_homeomorphic(a in valid_bundle(), b in valid_bundle()) {
        if oriented_diffeomorphic(&a, &b).answer() == Answer::Yes {
            prop_assert_ne!(homeomorphic(&a, &b).answer(), Answer::No);
        }
        if oriented_diffeomorphic(&a, &b).answer() == Answer::Yes {
            prop_assert_eq!(unoriented_diffeomorphic(&a, &b).answer(), Answer::Yes);
        }
    }

    #[test]
    fn yes_is_transitive_for_milnor_spheres(a in -40i64..40, b in -40i64..40, c in -40i64..40) {
        let (a, b, c) = (2 * a + 1, 2 * b + 1, 2 * c + 1);
        let (a, b, c) = (milnor(a), milnor(b), milnor(c));
        if oriented_diffeomorphic(&a, &b).answer() == Answer::Yes
            && oriented_diffeomorphic(&b, &c).answer() == Answer::Yes
        {
            prop_assert_eq!(oriented_diffeomorphic(&a, &c).answer(), Answer::Yes);
        }
    }

    #[test]
    fn family_members_are_diffeomorphic(n in 1i64..20, j in -100i64..100, count in 0usize..8) {
        let base = bundle(n, n + 2 * j);
        let fam = gz_family(&base, count);
        prop_assert_eq!(fam.len(), count);
        for m in &fam {
            prop_assert_eq!(oriented_diffeomorphic(&base, m).answer(), Answer::Yes);
            prop_assert!((m.pont() - m.euler()) % big(2) == big(0));
        }
    }

    #[test]
    fn theta7_is_z28_and_matches_mu(a in -100i64..100, b in -100i64..100, c in -100i64..100) {
        let (ta, tb, tc) = (Theta7Element::new(big(a)), Theta7Element::new(big(b)), Theta7Element::new(big(c)));
        prop_assert_eq!(ta.clone() + tb.clone(), tb.clone() + ta.clone());
        prop_assert_eq!((ta.clone() + tb.clone()) + tc.clone(), ta.clone() + (tb.clone() + tc));
        prop_assert_eq!(ta.clone() + (-ta.clone()), Theta7Element::new(big(0)));
        prop_assert_eq!((ta.clone() + tb.clone()).to_mu(), ta.to_mu() + tb.to_mu());
        prop_assert_eq!((-ta.clone()).to_mu(), -ta.to_mu());
        prop_assert_eq!(Theta7Element::from_mu(&ta.to_mu()), Some(ta));
    }

    #[test]
    fn milnor_window_has_16_classes(start in -10_000i64..10_000) {
        let from = 2 * start + 1;
        let to = from + 2 * 111;
        let r = census(&big(1), &big(from), &big(to), false).unwrap();
        prop_assert_eq!(r.valid_count(), 112);
        prop_assert_eq!(r.classes.len(), 16);
        let u = census(&big(1), &big(from), &big(to), true).unwrap();
        prop_assert_eq!(u.classes.len(), 11);
    }
}

#[test]
fn census_classes_agree_with_decider() {
    for (n, from, to) in [(1i64, -51, 61), (3, 1, 700), (2, -10, 500)] {
        let r = census(&big(n), &big(from), &big(to), false).unwrap();
        let valid: Vec<i64> = (from..=to).filter(|k| (k - n) % 2 == 0).collect();
        let class_of = |k: i64| -> usize {
            r.classes
                .iter()
                .position(|c| {
                    oriented_diffeomorphic(&bundle(n, k), &bundle(n, c.representative.clone().try_into().unwrap()))
                        .answer()
                        == Answer::Yes
                })
                .unwrap()
        };
        let classes: Vec<usize> = valid.iter().map(|&k| class_of(k)).collect();
        let mut sizes = vec![0u64; r.classes.len()];
        let mut unknown = 0u128;
        for (i, &a) in valid.iter().enumerate() {
            sizes[classes[i]] += 1;
            for (j, &b) in valid.iter().enumerate().skip(i + 1) {
                let v = oriented_diffeomorphic(&bundle(n, a), &bundle(n, b));
                assert_eq!(v.answer() == Answer::Yes, classes[i] == classes[j], "{a} vs {b}");
                if v.answer() == Answer::Unknown {
                    unknown += 1;
                }
            }
        }
        assert_eq!(sizes, r.classes.iter().map(|c| c.members_count).collect::<Vec<_>>());
        assert_eq!(unknown, r.unknown_pairs_count);
    }
}

// --- moduli --------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn index_forms_round_trip(p1sq in rat(), p2 in rat()) {
        let (ahat, sign) = index_forms_dim8(&p1sq, &p2);
        prop_assert_eq!(deduce_pontryagin_numbers(&ahat, &sign), (p1sq.clone(), p2.clone()));
        let (x, y) = deduce_pontryagin_numbers(&p1sq, &p2);
        prop_assert_eq!(index_forms_dim8(&x, &y), (p1sq, p2));
    }
}

proptest! {
    #[test]
    fn certificate_signature_vanishes(n in 1i64..30, j0 in -500i64..500, j1 in -500i64..500) {
        let c = separation_certificate(&bundle(n, n + 2 * j0), &bundle(n, n + 2 * j1)).unwrap();
        prop_assert!(c.glued.sign_x.is_zero());
    }

    #[test]
    fn family_pairs_are_separated(n in 1i64..30, j in 0i64..500, count in 2usize..6) {
        let fam = gz_family(&bundle(n, n + 2 * j), count);
        for (i, a) in fam.iter().enumerate() {
            for b in &fam[i + 1..] {
                prop_assert_eq!(separation_certificate(a, b).unwrap().verdict, SeparationVerdict::DistinctComponents);
            }
        }
    }

    #[test]
    fn certificate_is_antisymmetric(n in 1i64..30, j0 in -500i64..500, j1 in -500i64..500) {
        let (a, b) = (bundle(n, n + 2 * j0), bundle(n, n + 2 * j1));
        let ab = separation_certificate(&a, &b).unwrap();
        let ba = separation_certificate(&b, &a).unwrap();
        prop_assert_eq!(ab.verdict, ba.verdict);
        prop_assert_eq!(ab.contradiction_value, -ba.contradiction_value);
    }

    #[test]
    fn milnor_certificate_is_difference_of_squares(k0 in odd(), k1 in odd()) {
        let c = separation_certificate(&milnor(k0), &milnor(k1)).unwrap();
        prop_assert_eq!(c.contradiction_value, Rat::from_integer(big((2 * k0).pow(2) - (2 * k1).pow(2))));
        prop_assert_eq!(c.verdict == SeparationVerdict::DistinctComponents, k0.abs() != k1.abs());
    }
}

#[test]
fn huge_parameters_stay_exact() {
    let l: BigInt = "1000000000000000000000000000001".parse().unwrap();
    let b = BundleClass::new(big(7), l.clone()).unwrap();
    let fam = gz_family(&b, 3);
    let c = separation_certificate(&fam[0], &fam[2]).unwrap();
    let k1 = l.clone() + big(2 * 112 * 7);
    let expected = Rat::new(big(4) * (l.clone() * l - k1.clone() * k1), big(7)).unwrap();
    assert_eq!(c.contradiction_value, expected);
    assert!(c.contradiction_value.is_integer());
}
