//! Randomized laws for the constant-form star product and its seminorms.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use starprod::multiindex::MultiIndex;
use starprod::scalar::{GaussianRational, Scalar};
use starprod::weyl::{
    evaluate_character, expand_orders, poisson_bracket_const, seminorm_pr, sym_mul,
    BilinearForm, SeminormSpec, SeminormValue, SymElement,
};
use starprod::weyl::weyl_star;

fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
    ((-3i64..=3), (1i64..=2), (-3i64..=3), (1i64..=2))
        .prop_map(|(rp, rq, ip, iq)| GaussianRational::from_parts(rp, rq, ip, iq))
}

fn small_real() -> impl Strategy<Value = GaussianRational> {
    ((-3i64..=3), (1i64..=3)).prop_map(|(p, q)| GaussianRational::from_parts(p, q, 0, 1))
}

fn multi_index(dim: usize, per_slot: u32) -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(0..=per_slot, dim).prop_map(MultiIndex)
}

fn sym_element(dim: usize, per_slot: u32) -> impl Strategy<Value = SymElement> {
    prop::collection::vec((multi_index(dim, per_slot), small_gaussian()), 1..=3).prop_map(
        move |terms| {
            let mut out = SymElement::zero(dim);
            for (idx, c) in terms {
                out.add_term(idx, Scalar::from_gaussian(c));
            }
            out
        },
    )
}

fn real_sym_element(dim: usize, per_slot: u32) -> impl Strategy<Value = SymElement> {
    prop::collection::vec((multi_index(dim, per_slot), small_real()), 1..=3).prop_map(
        move |terms| {
            let mut out = SymElement::zero(dim);
            for (idx, c) in terms {
                out.add_term(idx, Scalar::from_gaussian(c));
            }
            out
        },
    )
}

fn bilinear_form(dim: usize) -> impl Strategy<Value = BilinearForm> {
    prop::collection::vec(small_gaussian(), dim * dim).prop_map(move |entries| {
        BilinearForm::new(dim, entries.into_iter().map(Scalar::from_gaussian).collect()).unwrap()
    })
}

/// Form together with three elements of matching dimension.
fn form_and_triple(
    per_slot: u32,
) -> impl Strategy<Value = (BilinearForm, SymElement, SymElement, SymElement)> {
    (1usize..=3).prop_flat_map(move |dim| {
        (
            bilinear_form(dim),
            sym_element(dim, per_slot),
            sym_element(dim, per_slot),
            sym_element(dim, per_slot),
        )
    })
}

fn form_and_pair(per_slot: u32) -> impl Strategy<Value = (BilinearForm, SymElement, SymElement)> {
    (1usize..=3).prop_flat_map(move |dim| {
        (
            bilinear_form(dim),
            sym_element(dim, per_slot),
            sym_element(dim, per_slot),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn star_is_associative((lambda, a, b, c) in form_and_triple(2)) {
        let ab = weyl_star(&lambda, &a, &b).unwrap();
        let bc = weyl_star(&lambda, &b, &c).unwrap();
        let left = weyl_star(&lambda, &ab, &c).unwrap();
        let right = weyl_star(&lambda, &a, &bc).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_bilinear((lambda, a, b, c) in form_and_triple(2)) {
        let sum_first = weyl_star(&lambda, &a.add(&b), &c).unwrap();
        let split_first = weyl_star(&lambda, &a, &c).unwrap().add(&weyl_star(&lambda, &b, &c).unwrap());
        prop_assert_eq!(sum_first, split_first);
        let sum_second = weyl_star(&lambda, &a, &b.add(&c)).unwrap();
        let split_second = weyl_star(&lambda, &a, &b).unwrap().add(&weyl_star(&lambda, &a, &c).unwrap());
        prop_assert_eq!(sum_second, split_second);
    }

    #[test]
    fn constants_are_central((lambda, a, b) in form_and_pair(2), k in small_gaussian()) {
        let unit = SymElement::one(a.dim()).scale(&Scalar::from_gaussian(k));
        let left = weyl_star(&lambda, &unit, &a).unwrap();
        let right = weyl_star(&lambda, &a, &unit).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, a.scale(&Scalar::from_gaussian(
            unit.coeff(&MultiIndex::zero(b.dim())).as_constant().unwrap())));
    }

    #[test]
    fn zeroth_order_is_the_plain_product((lambda, a, b) in form_and_pair(2)) {
        let orders = expand_orders(&weyl_star(&lambda, &a, &b).unwrap()).unwrap();
        prop_assert_eq!(orders[0].clone(), sym_mul(&a, &b).unwrap());
    }

    #[test]
    fn first_order_antisymmetrization_is_the_poisson_bracket((lambda, a, b) in form_and_pair(2)) {
        let ab = expand_orders(&weyl_star(&lambda, &a, &b).unwrap()).unwrap();
        let ba = expand_orders(&weyl_star(&lambda, &b, &a).unwrap()).unwrap();
        let c1_anti = if ab.len() > 1 { ab[1].clone() } else { SymElement::zero(a.dim()) }
            .sub(&if ba.len() > 1 { ba[1].clone() } else { SymElement::zero(a.dim()) });
        prop_assert_eq!(c1_anti, poisson_bracket_const(&lambda, &a, &b).unwrap());
    }

    #[test]
    fn symmetric_form_gives_a_commutative_product((lambda, a, b) in form_and_pair(2)) {
        // Symmetrize the sampled form; tau P tau = P then kills the commutator
        // in every order, not only the first.
        let dim = lambda.dim();
        let mut sym = BilinearForm::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let half = Scalar::from_frac(1, 2);
                sym.set(i, j, &half * &(lambda.get(i, j) + lambda.get(j, i)));
            }
        }
        let left = weyl_star(&sym, &a, &b).unwrap();
        let right = weyl_star(&sym, &b, &a).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bracket_depends_only_on_the_antisymmetric_part((lambda, a, b) in form_and_pair(2)) {
        // Doubling the antisymmetric part doubles the bracket, and the
        // symmetric part contributes nothing: { , }_Lambda = { , }_{Lambda - Lambda^T} / 2.
        let dim = lambda.dim();
        let mut anti = BilinearForm::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                anti.set(i, j, &lambda.get(i, j).clone() - lambda.get(j, i));
            }
        }
        let doubled = poisson_bracket_const(&anti, &a, &b).unwrap();
        let base = poisson_bracket_const(&lambda, &a, &b).unwrap();
        prop_assert_eq!(doubled, base.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn order_r_of_a_monomial_product_has_degree_p_plus_q_minus_2r(
        (lambda, p, q) in (1usize..=3).prop_flat_map(|dim| {
            (bilinear_form(dim), multi_index(dim, 3), multi_index(dim, 3))
        })
    ) {
        let dim = lambda.dim();
        let a = SymElement::monomial(dim, p.clone(), Scalar::one());
        let b = SymElement::monomial(dim, q.clone(), Scalar::one());
        let orders = expand_orders(&weyl_star(&lambda, &a, &b).unwrap()).unwrap();
        for (r, part) in orders.iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let expected = p.total() + q.total() - 2 * r as u32;
            prop_assert_eq!(part.degree(), Some(expected));
            for (idx, _) in part.terms() {
                prop_assert_eq!(idx.total(), expected);
            }
        }
    }
}

fn exact_value(v: &SeminormValue) -> BigRational {
    match v {
        SeminormValue::Exact(x) => x.clone(),
        other => panic!("expected an exact seminorm value, got {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weight_only_seminorm_is_submultiplicative(
        (a, b) in (1usize..=3).prop_flat_map(|dim| (real_sym_element(dim, 2), real_sym_element(dim, 2))),
        wp in 1i64..=3, wq in 1i64..=3,
    ) {
        // Real rational coefficients keep every p_0 value exact, so the
        // inequality is checked in BigRational arithmetic.
        let dim = a.dim();
        let w = BigRational::new(wp.into(), wq.into());
        let spec = SeminormSpec::uniform(dim, w, BigRational::zero()).unwrap();
        let prod = sym_mul(&a, &b).unwrap();
        let lhs = exact_value(&seminorm_pr(&spec, &prod).unwrap());
        let ra = exact_value(&seminorm_pr(&spec, &a).unwrap());
        let rb = exact_value(&seminorm_pr(&spec, &b).unwrap());
        prop_assert!(lhs <= ra * rb);
    }

    #[test]
    fn seminorms_grow_with_the_factorial_exponent(
        a in (1usize..=3).prop_flat_map(|dim| real_sym_element(dim, 2)),
        wp in 1i64..=3, wq in 1i64..=3,
    ) {
        let dim = a.dim();
        let w = BigRational::new(wp.into(), wq.into());
        let ladder = [
            BigRational::zero(),
            BigRational::new(1.into(), 2.into()),
            BigRational::one(),
            BigRational::from_integer(2.into()),
        ];
        let mut prev: Option<SeminormValue> = None;
        for r in ladder {
            let spec = SeminormSpec::uniform(dim, w.clone(), r).unwrap();
            let val = seminorm_pr(&spec, &a).unwrap();
            if let Some(p) = prev {
                prop_assert_ne!(p.compare(&val), std::cmp::Ordering::Greater);
            }
            prev = Some(val);
        }
    }

    #[test]
    fn characters_are_multiplicative_and_dominated_by_the_seminorm(
        (a, b, phi_nums) in (1usize..=3).prop_flat_map(|dim| {
            (
                real_sym_element(dim, 2),
                real_sym_element(dim, 2),
                prop::collection::vec((-2i64..=2, 1i64..=2), dim),
            )
        }),
    ) {
        let phi: Vec<Scalar> = phi_nums
            .iter()
            .map(|&(p, q)| Scalar::from_frac(p, q))
            .collect();
        let da = evaluate_character(&phi, &a).unwrap();
        let db = evaluate_character(&phi, &b).unwrap();
        let dab = evaluate_character(&phi, &sym_mul(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(dab, &da * &db);

        // With weights at least |phi_i| the character is bounded by p_R for
        // every R >= 0; check the weakest member R = 0 of the family.
        let weights: Vec<BigRational> = phi_nums
            .iter()
            .map(|&(p, q)| BigRational::new(p.abs().max(1).into(), q.into()))
            .collect();
        let spec = SeminormSpec::new(weights, BigRational::zero()).unwrap();
        let bound = exact_value(&seminorm_pr(&spec, &a).unwrap());
        let val = da.as_constant().unwrap();
        prop_assert!(val.is_real());
        prop_assert!(val.re.abs() <= bound);
    }
}

#[test]
fn serialization_round_trips_elements_and_forms() {
    let mut a = SymElement::zero(2);
    a.add_term(MultiIndex(vec![2, 1]), Scalar::from_frac(3, 4));
    a.add_term(
        MultiIndex(vec![0, 3]),
        &Scalar::from_gaussian(GaussianRational::i()) * &Scalar::param(),
    );
    let json = serde_json::to_string(&a).unwrap();
    let back: SymElement = serde_json::from_str(&json).unwrap();
    assert_eq!(a, back);

    let lambda = BilinearForm::symplectic_2d();
    let json = serde_json::to_string(&lambda).unwrap();
    let back: BilinearForm = serde_json::from_str(&json).unwrap();
    assert_eq!(lambda, back);
}
