//! Randomized laws for the reduced Wick-type product on the disc and the
//! restriction map that produces it.

use num_complex::Complex64;
use proptest::prelude::*;

use starprod::disc::{
    classical_product, classical_restriction, eval_cn, eval_disc, kernel_membership,
    metric_minus_one, morphism_check, quantum_restriction, reduced_poisson_bracket, reduced_star,
    sample_z_point, semiclassical_limit, wick_star, CnPolynomial, DiscElement, DiscIndex,
};
use starprod::multiindex::MultiIndex;
use starprod::rng::SplitMix64;
use starprod::scalar::{GaussianRational, Scalar};

fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
    ((-3i64..=3), (1i64..=2), (-3i64..=3), (1i64..=2))
        .prop_map(|(rp, rq, ip, iq)| GaussianRational::from_parts(rp, rq, ip, iq))
}

fn reduced_index(n: usize, per_slot: u32) -> impl Strategy<Value = DiscIndex> {
    (
        prop::collection::vec(0..=per_slot, n),
        prop::collection::vec(0..=per_slot, n),
    )
        .prop_map(|(p, q)| DiscIndex::new(MultiIndex(p), MultiIndex(q)))
}

fn disc_element(n: usize, per_slot: u32, max_terms: usize) -> impl Strategy<Value = DiscElement> {
    prop::collection::vec((reduced_index(n, per_slot), small_gaussian()), 1..=max_terms).prop_map(
        move |terms| {
            let mut out = DiscElement::zero(n);
            for (idx, c) in terms {
                out.add_term(idx, Scalar::from_gaussian(c));
            }
            out
        },
    )
}

/// Invariant polynomial upstairs: a sum of monomials with equal holomorphic
/// and antiholomorphic total degree.
fn invariant_polynomial(n: usize, max_total: u32, max_terms: usize) -> impl Strategy<Value = CnPolynomial> {
    let indices = move |total: u32| {
        let all = MultiIndex::all_with_total(n + 1, total);
        prop::sample::select(all)
    };
    prop::collection::vec(
        (0..=max_total).prop_flat_map(move |t| (indices(t), indices(t), small_gaussian())),
        1..=max_terms,
    )
    .prop_map(move |terms| {
        let mut out = CnPolynomial::zero(n);
        for (p, q, c) in terms {
            out.add_term(p, q, Scalar::from_gaussian(c));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_star_is_associative(
        a in disc_element(1, 2, 2),
        b in disc_element(1, 2, 2),
        c in disc_element(1, 2, 2),
    ) {
        let ab = reduced_star(&a, &b).unwrap();
        let bc = reduced_star(&b, &c).unwrap();
        prop_assert_eq!(
            reduced_star(&ab, &c).unwrap(),
            reduced_star(&a, &bc).unwrap()
        );
    }

    #[test]
    fn reduced_star_is_bilinear_with_unit(
        a in disc_element(1, 2, 2),
        b in disc_element(1, 2, 2),
        c in disc_element(1, 2, 2),
    ) {
        let sum = reduced_star(&a.add(&b), &c).unwrap();
        let split = reduced_star(&a, &c).unwrap().add(&reduced_star(&b, &c).unwrap());
        prop_assert_eq!(sum, split);
        let one = DiscElement::one(1);
        prop_assert_eq!(reduced_star(&one, &a).unwrap(), a.clone());
        prop_assert_eq!(reduced_star(&a, &one).unwrap(), a);
    }

    #[test]
    fn products_with_the_level_generator_vanish_after_restriction(
        c in invariant_polynomial(1, 2, 2),
        n2 in invariant_polynomial(2, 2, 2),
    ) {
        for poly in [&c, &n2] {
            let gm1 = metric_minus_one(poly.n());
            prop_assert!(kernel_membership(&wick_star(poly, &gm1).unwrap()).unwrap());
            prop_assert!(kernel_membership(&wick_star(&gm1, poly).unwrap()).unwrap());
        }
    }

    #[test]
    fn restriction_intertwines_random_invariant_pairs(
        a in invariant_polynomial(1, 2, 2),
        b in invariant_polynomial(1, 2, 2),
    ) {
        let report = morphism_check(&a, &b).unwrap();
        prop_assert!(report.matches);
        prop_assert_eq!(report.restricted_product, report.product_of_restrictions);
    }

    #[test]
    fn parameter_free_limits_match_the_classical_geometry(
        a in disc_element(1, 1, 2),
        b in disc_element(1, 1, 2),
    ) {
        let lim = semiclassical_limit(&a, &b).unwrap();
        prop_assert_eq!(lim.product, classical_product(&a, &b).unwrap());
        prop_assert_eq!(lim.bracket, reduced_poisson_bracket(&a, &b).unwrap());
    }

    #[test]
    fn serialization_round_trips(a in disc_element(2, 2, 3), c in invariant_polynomial(2, 2, 2)) {
        let json = serde_json::to_string(&a).unwrap();
        let back: DiscElement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(a, back);
        let json = serde_json::to_string(&c).unwrap();
        let back: CnPolynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(c, back);
    }
}

/// The restriction of an invariant polynomial takes the same values on the
/// level set as the polynomial itself, evaluated through the chart.
#[test]
fn classical_restriction_evaluates_pointwise_on_the_level_set() {
    let mut rng = SplitMix64::new(0xd1cefa11);
    for n in 1..=2 {
        let mut c = CnPolynomial::zero(n);
        let dim = n + 1;
        for total in 0..=2u32 {
            for p in MultiIndex::all_with_total(dim, total) {
                for q in MultiIndex::all_with_total(dim, total) {
                    if (rng.next_u64() & 3) == 0 {
                        c.add_term(
                            p.clone(),
                            q,
                            Scalar::from_gaussian(GaussianRational::from_int(
                                rng.next_range(-2, 2),
                            )),
                        );
                    }
                }
            }
        }
        let restricted = classical_restriction(&c).unwrap();
        let quantum_at_zero = quantum_restriction(&c)
            .unwrap()
            .evaluate_param(&GaussianRational::zero())
            .unwrap();
        assert_eq!(restricted, quantum_at_zero);
        let h = Complex64::new(0.0, 0.0);
        for _ in 0..10 {
            let pt = sample_z_point(n, &mut rng);
            let up = eval_cn(&c, &pt, h).unwrap();
            let down = eval_disc(&restricted, &pt, h).unwrap();
            assert!((up - down).norm() < 1e-9, "n={n}: {up} vs {down}");
        }
    }
}
