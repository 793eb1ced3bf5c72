//! Acceptance checklist: one test per criterion, each at a fixed scale with
//! tolerances pinned in the code. Every test prints a single summary line
//! once its assertions have passed (visible with `--nocapture`).

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use starprod::disc::{
    cauchy_coefficient, classical_product, classical_restriction, eval_cn, eval_disc,
    eval_quantum_restriction_direct, kernel_membership, metric_minus_one, morphism_check,
    pole_report, quantum_restriction, reduced_poisson_bracket, sample_z_point,
    semiclassical_limit, wick_star, CauchyOptions, CnPolynomial, DiscElement, DiscIndex,
    ReducedStarEngine,
};
use starprod::gutt::{
    bch_truncated, exp_gutt_bch_check, goldberg_rows, FreeAlgElement, LieStructure, PbwEngine,
    Word,
};
use starprod::multiindex::MultiIndex;
use starprod::numeric::FxComplex;
use starprod::rng::SplitMix64;
use starprod::scalar::{pole_set, GaussianRational, Scalar};
use starprod::weyl::{
    expand_orders, poisson_bracket_const, seminorm_pr, sym_mul, weyl_star, BilinearForm,
    SeminormSpec, SymElement,
};

fn random_gaussian(rng: &mut SplitMix64) -> GaussianRational {
    GaussianRational::from_parts(
        rng.next_range(-3, 3),
        rng.next_range(1, 2),
        rng.next_range(-3, 3),
        rng.next_range(1, 2),
    )
}

fn random_index(rng: &mut SplitMix64, dim: usize, max_total: u32) -> MultiIndex {
    let total = rng.next_below(u64::from(max_total) + 1) as u32;
    let mut idx = MultiIndex::zero(dim);
    for _ in 0..total {
        idx = idx.with_bumped(rng.next_below(dim as u64) as usize, 1);
    }
    idx
}

fn random_element(rng: &mut SplitMix64, dim: usize, max_total: u32, terms: usize) -> SymElement {
    let mut out = SymElement::zero(dim);
    for _ in 0..terms {
        out.add_term(
            random_index(rng, dim, max_total),
            Scalar::from_gaussian(random_gaussian(rng)),
        );
    }
    out
}

fn random_form(rng: &mut SplitMix64, dim: usize) -> BilinearForm {
    let entries = (0..dim * dim)
        .map(|_| Scalar::from_gaussian(random_gaussian(rng)))
        .collect();
    BilinearForm::new(dim, entries).expect("square entry table")
}

/// Criterion 1: exact associativity of the constant-form product on 200
/// random triples, dimensions up to 4, element degrees up to 6.
#[test]
fn c01_constant_form_associativity_at_scale() {
    let mut rng = SplitMix64::new(101);
    for trial in 0..200 {
        let dim = 1 + (trial % 4);
        let lambda = random_form(&mut rng, dim);
        let a = random_element(&mut rng, dim, 6, 3);
        let b = random_element(&mut rng, dim, 6, 3);
        let c = random_element(&mut rng, dim, 6, 3);
        let left = weyl_star(&lambda, &weyl_star(&lambda, &a, &b).unwrap(), &c).unwrap();
        let right = weyl_star(&lambda, &a, &weyl_star(&lambda, &b, &c).unwrap()).unwrap();
        assert_eq!(left, right, "trial {trial}");
    }
    println!("criterion 01 (associativity, 200 random triples, dim <= 4, degree <= 6): pass");
}

fn order_of(orders: &[SymElement], r: usize, dim: usize) -> SymElement {
    orders.get(r).cloned().unwrap_or_else(|| SymElement::zero(dim))
}

/// Criterion 2: the parameter-order components of the product compose like
/// a Cauchy product, order by order through r = 4, on 50 random triples.
#[test]
fn c02_order_chain_identities() {
    let mut rng = SplitMix64::new(202);
    for trial in 0..50 {
        let dim = 1 + (trial % 3);
        let lambda = random_form(&mut rng, dim);
        let a = random_element(&mut rng, dim, 4, 2);
        let b = random_element(&mut rng, dim, 4, 2);
        let c = random_element(&mut rng, dim, 4, 2);
        let ab = expand_orders(&weyl_star(&lambda, &a, &b).unwrap()).unwrap();
        let bc = expand_orders(&weyl_star(&lambda, &b, &c).unwrap()).unwrap();
        for r in 0..=4usize {
            let mut left = SymElement::zero(dim);
            let mut right = SymElement::zero(dim);
            for j in 0..=r {
                let lj = expand_orders(
                    &weyl_star(&lambda, &order_of(&ab, j, dim), &c).unwrap(),
                )
                .unwrap();
                left = left.add(&order_of(&lj, r - j, dim));
                let rj = expand_orders(
                    &weyl_star(&lambda, &a, &order_of(&bc, j, dim)).unwrap(),
                )
                .unwrap();
                right = right.add(&order_of(&rj, r - j, dim));
            }
            assert_eq!(left, right, "trial {trial}, order {r}");
        }
    }
    println!("criterion 02 (order-by-order chain identities, r <= 4, 50 random triples): pass");
}

/// Criterion 3: the constant term of the product is the plain product and
/// the antisymmetrized first order is the Poisson bracket, on 100 pairs.
#[test]
fn c03_semiclassical_constant_form() {
    let mut rng = SplitMix64::new(303);
    for trial in 0..100 {
        let dim = 1 + (trial % 3);
        let lambda = random_form(&mut rng, dim);
        let a = random_element(&mut rng, dim, 4, 3);
        let b = random_element(&mut rng, dim, 4, 3);
        let ab = expand_orders(&weyl_star(&lambda, &a, &b).unwrap()).unwrap();
        let ba = expand_orders(&weyl_star(&lambda, &b, &a).unwrap()).unwrap();
        assert_eq!(order_of(&ab, 0, dim), sym_mul(&a, &b).unwrap(), "trial {trial}");
        let first = order_of(&ab, 1, dim).sub(&order_of(&ba, 1, dim));
        assert_eq!(
            first,
            poisson_bracket_const(&lambda, &a, &b).unwrap(),
            "trial {trial}"
        );
    }
    println!("criterion 03 (constant term and first-order bracket, 100 random pairs): pass");
}

/// Criterion 4: the normal-ordered product agrees with the constant-form
/// engine under the embedding that treats holomorphic and antiholomorphic
/// letters as separate formal variables, on every monomial pair of combined
/// degree <= 4 over the first two disc sizes.
#[test]
fn c04_wick_matches_the_constant_form_engine() {
    for n in 1..=2usize {
        let d = n + 1;
        let dim = 2 * d;
        let mut lambda = BilinearForm::zero(dim);
        lambda.set(0, d, Scalar::from_int(-2));
        for k in 1..=n {
            lambda.set(k, d + k, Scalar::from_int(2));
        }
        let embed = |a: &CnPolynomial| -> SymElement {
            let mut e = SymElement::zero(dim);
            for ((p, q), c) in a.terms() {
                let idx = MultiIndex(p.0.iter().chain(q.0.iter()).copied().collect());
                e.add_term(idx, c.clone());
            }
            e
        };
        let mut monomials = Vec::new();
        for total in 0..=4u32 {
            for split in 0..=total {
                for p in MultiIndex::all_with_total(d, split) {
                    for q in MultiIndex::all_with_total(d, total - split) {
                        monomials.push(CnPolynomial::monomial(
                            n,
                            p.clone(),
                            q,
                            Scalar::one(),
                        ));
                    }
                }
            }
        }
        for a in &monomials {
            for b in &monomials {
                let direct = embed(&wick_star(a, b).unwrap());
                let via_form = weyl_star(&lambda, &embed(a), &embed(b)).unwrap();
                assert_eq!(direct, via_form, "n={n}");
            }
        }
    }
    println!("criterion 04 (normal-ordered vs constant-form engine, all pairs of degree <= 4, n <= 2): pass");
}

/// Criterion 5: the symmetrization map intertwines the star product at
/// parameter one with the enveloping-algebra product, and the product is
/// associative as a polynomial identity in the parameter, over the three
/// catalog algebras at degree <= 4.
#[test]
fn c05_lie_star_morphism_and_associativity() {
    let mut rng = SplitMix64::new(505);
    for lie in [
        LieStructure::heisenberg(),
        LieStructure::so3(),
        LieStructure::solvable2(),
    ] {
        let d = lie.dim();
        let mut engine = PbwEngine::new(lie);
        for _ in 0..12 {
            let x = random_element(&mut rng, d, 4, 2);
            let y = random_element(&mut rng, d, 4, 2);
            let star = engine.gutt_star(&x, &y).unwrap();
            let at_one = star.evaluate_param(&GaussianRational::one()).unwrap();
            let lhs = engine.symmetrize(&at_one).unwrap();
            let qx = engine.symmetrize(&x).unwrap();
            let qy = engine.symmetrize(&y).unwrap();
            assert_eq!(lhs, engine.ue_mul(&qx, &qy).unwrap());
        }
        for trial in 0..8 {
            // Two low-degree random triples for every degree-4 monomial one.
            let (x, y, w) = if trial % 3 == 0 {
                (
                    SymElement::monomial(d, random_index(&mut rng, d, 4), Scalar::one()),
                    SymElement::monomial(d, random_index(&mut rng, d, 4), Scalar::one()),
                    SymElement::monomial(d, random_index(&mut rng, d, 4), Scalar::one()),
                )
            } else {
                (
                    random_element(&mut rng, d, 2, 2),
                    random_element(&mut rng, d, 2, 2),
                    random_element(&mut rng, d, 2, 2),
                )
            };
            let xy = engine.gutt_star(&x, &y).unwrap();
            let yw = engine.gutt_star(&y, &w).unwrap();
            let left = engine.gutt_star(&xy, &w).unwrap();
            let right = engine.gutt_star(&x, &yw).unwrap();
            assert_eq!(left, right);
        }
    }
    println!("criterion 05 (symmetrization morphism at parameter one and associativity, degree <= 4, three algebras): pass");
}

fn word_of(letters: &[u8]) -> Word {
    let mut w = Word::empty();
    for &l in letters {
        w = w.concat(&Word::letter(l));
    }
    w
}

/// Criterion 6: the closed combinatorial series starts with the expected
/// degree-2 and degree-3 terms, and the per-degree coefficient mass obeys
/// the 2/n bound with equality exactly in degrees 1, 2, 3, through n = 8.
#[test]
fn c06_bch_low_orders_and_goldberg_bounds() {
    let series = bch_truncated(8).unwrap();

    let half = BigRational::new(1.into(), 2.into());
    let twelfth = BigRational::new(1.into(), 12.into());
    let mut expected2 = FreeAlgElement::zero(8);
    expected2.add_term(word_of(&[0, 1]), half.clone());
    expected2.add_term(word_of(&[1, 0]), -half);
    assert_eq!(series.component(2), expected2, "degree-2 term");

    let mut expected3 = FreeAlgElement::zero(8);
    // ([x,[x,y]] + [y,[y,x]]) / 12, expanded into words.
    expected3.add_term(word_of(&[0, 0, 1]), twelfth.clone());
    expected3.add_term(word_of(&[0, 1, 0]), -(&twelfth + &twelfth));
    expected3.add_term(word_of(&[1, 0, 0]), twelfth.clone());
    expected3.add_term(word_of(&[1, 1, 0]), twelfth.clone());
    expected3.add_term(word_of(&[1, 0, 1]), -(&twelfth + &twelfth));
    expected3.add_term(word_of(&[0, 1, 1]), twelfth);
    assert_eq!(series.component(3), expected3, "degree-3 term");

    let rows = goldberg_rows(8).unwrap();
    assert_eq!(rows.len(), 8);
    for row in &rows {
        assert_eq!(row.bound, BigRational::new(2.into(), row.n.into()));
        assert!(row.sum_abs <= row.bound, "degree {}", row.n);
        assert_eq!(row.attained, row.n <= 3, "degree {}", row.n);
        assert_eq!(row.sum_abs == row.bound, row.n <= 3, "degree {}", row.n);
    }
    println!("criterion 06 (series through degree 8: low-order terms and 2/n coefficient bounds, equality exactly at 1, 2, 3): pass");
}

/// Criterion 7: multiplying exponentials in the nilpotent catalog algebra
/// reproduces the combinatorial series through total weight 4, exactly.
#[test]
fn c07_exponential_product_matches_the_series() {
    let mut engine = PbwEngine::new(LieStructure::heisenberg());
    let cases = [
        (
            vec![
                GaussianRational::one(),
                GaussianRational::from_parts(1, 2, 0, 1),
                GaussianRational::from_int(-1),
            ],
            vec![
                GaussianRational::from_int(2),
                GaussianRational::from_int(-1),
                GaussianRational::from_parts(1, 3, 0, 1),
            ],
        ),
        (
            vec![
                GaussianRational::from_parts(2, 3, 0, 1),
                GaussianRational::zero(),
                GaussianRational::one(),
            ],
            vec![
                GaussianRational::zero(),
                GaussianRational::from_parts(-3, 4, 0, 1),
                GaussianRational::from_int(1),
            ],
        ),
    ];
    for (xi, eta) in &cases {
        let report = exp_gutt_bch_check(&mut engine, xi, eta, 4).unwrap();
        assert!(report.matches, "difference: {:?}", report.difference);
    }
    println!("criterion 07 (exponential product vs combinatorial series, nilpotent algebra, weight <= 4): pass");
}

/// Invariant monomials z^A zbar^B with |A| = |B| <= max_total.
fn invariant_monomials(n: usize, max_total: u32) -> Vec<CnPolynomial> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for a in MultiIndex::all_with_total(n + 1, total) {
            for b in MultiIndex::all_with_total(n + 1, total) {
                out.push(CnPolynomial::monomial(n, a.clone(), b, Scalar::one()));
            }
        }
    }
    out
}

/// Criterion 8: the restriction annihilates both one-sided products of any
/// invariant monomial of degree <= 3 with the shifted level generator.
#[test]
fn c08_level_ideal_is_annihilated() {
    for n in 1..=2usize {
        let gm1 = metric_minus_one(n);
        for c in invariant_monomials(n, 3) {
            assert!(
                kernel_membership(&wick_star(&c, &gm1).unwrap()).unwrap(),
                "right multiplication, n={n}"
            );
            assert!(
                kernel_membership(&wick_star(&gm1, &c).unwrap()).unwrap(),
                "left multiplication, n={n}"
            );
        }
    }
    println!("criterion 08 (restriction kills both one-sided level-ideal products, invariant monomials degree <= 3, n <= 2): pass");
}

/// Criterion 9: restriction intertwines the products on every pair of
/// invariant monomials of degree <= 3, and the reduced product is
/// associative on every basis triple with index totals <= 2, for both disc
/// sizes. Exact rational-function arithmetic throughout.
#[test]
fn c09_reduction_morphism_and_associativity() {
    for n in 1..=2usize {
        let monomials = invariant_monomials(n, 3);
        for a in &monomials {
            for b in &monomials {
                let report = morphism_check(a, b).unwrap();
                assert!(report.matches, "n={n}");
            }
        }

        let singles = MultiIndex::all_up_to(n, 2);
        let mut basis = Vec::new();
        for p in &singles {
            for q in &singles {
                basis.push(DiscElement::monomial(
                    DiscIndex::new(p.clone(), q.clone()),
                    Scalar::one(),
                ));
            }
        }
        let mut engine = ReducedStarEngine::new(n);
        for a in &basis {
            for b in &basis {
                let ab = engine.star(a, b).unwrap();
                for c in &basis {
                    let bc = engine.star(b, c).unwrap();
                    let left = engine.star(&ab, c).unwrap();
                    let right = engine.star(a, &bc).unwrap();
                    assert_eq!(left, right, "n={n}");
                }
            }
        }
    }
    println!("criterion 09 (restriction morphism on all degree <= 3 invariant pairs; associativity on all basis triples with totals <= 2, n <= 2): pass");
}

/// Criterion 10: every coefficient produced by the basis products of
/// criterion 9 has poles only at -1/(2m) for m <= 4, in particular none at
/// the origin.
#[test]
fn c10_poles_stay_in_the_expected_family() {
    for n in 1..=2usize {
        let rows = pole_report(n, 2).unwrap();
        assert!(!rows.is_empty());
        let singles = MultiIndex::all_up_to(n, 2);
        let mut engine = ReducedStarEngine::new(n);
        for p in &singles {
            for q in &singles {
                for r in &singles {
                    for s in &singles {
                        let a = DiscElement::monomial(
                            DiscIndex::new(p.clone(), q.clone()),
                            Scalar::one(),
                        );
                        let b = DiscElement::monomial(
                            DiscIndex::new(r.clone(), s.clone()),
                            Scalar::one(),
                        );
                        let prod = engine.star(&a, &b).unwrap();
                        for (_, coeff) in prod.terms() {
                            assert!(
                                pole_set(coeff).is_confined(4),
                                "n={n}: pole outside -1/(2m), m <= 4"
                            );
                        }
                    }
                }
            }
        }
    }
    println!("criterion 10 (all basis-product poles lie in -1/(2m), m <= 4, none at the origin, n <= 2): pass");
}

/// Criterion 11: the parameter-free limit of the reduced product is the
/// classical product, and the first-order commutator is the reduced Poisson
/// bracket, on every basis pair with index totals <= 2 on the smallest disc.
#[test]
fn c11_reduced_semiclassical_limits() {
    let n = 1usize;
    let singles = MultiIndex::all_up_to(n, 2);
    let mut basis = Vec::new();
    for p in &singles {
        for q in &singles {
            basis.push(DiscElement::monomial(
                DiscIndex::new(p.clone(), q.clone()),
                Scalar::one(),
            ));
        }
    }
    for a in &basis {
        for b in &basis {
            let lim = semiclassical_limit(a, b).unwrap();
            assert_eq!(lim.product, classical_product(a, b).unwrap());
            assert_eq!(lim.bracket, reduced_poisson_bracket(a, b).unwrap());
        }
    }
    println!("criterion 11 (reduced product limits: classical product and reduced bracket, all basis pairs with totals <= 2, n = 1): pass");
}

/// Criterion 12: numeric geometry. The restriction of an invariant monomial
/// evaluates like the monomial itself at 50 sampled level-set points, and
/// the quantum restriction route agrees with the reduced-product route at
/// parameter 0.1 on 20 points.
#[test]
fn c12_geometric_oracle_agreement() {
    const EXPANSION_TOL: f64 = 1e-9;
    const MORPHISM_TOL: f64 = 1e-8;
    let h0 = Complex64::new(0.1, 0.0);
    let mut rng = SplitMix64::new(1212);
    for trial in 0..50 {
        let n = 1 + (trial % 2);
        let dim = n + 1;
        let mut p = MultiIndex::zero(dim);
        let mut q = MultiIndex::zero(dim);
        let total = 1 + rng.next_below(3) as u32;
        for _ in 0..total {
            p = p.with_bumped(rng.next_below(dim as u64) as usize, 1);
            q = q.with_bumped(rng.next_below(dim as u64) as usize, 1);
        }
        let c = CnPolynomial::monomial(n, p, q, Scalar::one());
        let restricted = classical_restriction(&c).unwrap();
        let pt = sample_z_point(n, &mut rng);
        let up = eval_cn(&c, &pt, h0).unwrap();
        let down = eval_disc(&restricted, &pt, h0).unwrap();
        assert!(
            (up - down).norm() < EXPANSION_TOL,
            "trial {trial}: {up} vs {down}"
        );
    }

    let n = 1usize;
    let mi = |v: &[u32]| MultiIndex(v.to_vec());
    let pairs = [
        (
            CnPolynomial::monomial(n, mi(&[0, 1]), mi(&[1, 0]), Scalar::one()),
            CnPolynomial::monomial(n, mi(&[0, 1]), mi(&[0, 1]), Scalar::one()),
        ),
        (
            CnPolynomial::monomial(n, mi(&[0, 2]), mi(&[1, 1]), Scalar::one()),
            CnPolynomial::monomial(n, mi(&[0, 1]), mi(&[0, 1]), Scalar::from_int(2)),
        ),
    ];
    let mut engine = ReducedStarEngine::new(n);
    let mut checked = 0usize;
    for (a, b) in &pairs {
        let product = wick_star(a, b).unwrap();
        let reduced = engine
            .star(
                &quantum_restriction(a).unwrap(),
                &quantum_restriction(b).unwrap(),
            )
            .unwrap();
        for _ in 0..10 {
            let pt = sample_z_point(n, &mut rng);
            let direct = eval_quantum_restriction_direct(&product, &pt, h0).unwrap();
            let via_algebra = eval_disc(&reduced, &pt, h0).unwrap();
            assert!((direct - via_algebra).norm() < MORPHISM_TOL);
            checked += 1;
        }
    }
    assert_eq!(checked, 20);
    println!("criterion 12 (pointwise restriction identity at 50 points to 1e-9; quantum routes at 20 points to 1e-8): pass");
}

/// Criterion 13: contour integration in extended precision recovers the
/// coefficients of a degree <= 3 element on the smallest disc to 1e-6.
#[test]
fn c13_contour_coefficient_recovery() {
    const TOL: f64 = 1e-6;
    let n = 1usize;
    let mi = |v: &[u32]| MultiIndex(v.to_vec());
    let mut a = DiscElement::zero(n);
    a.add_term(
        DiscIndex::new(mi(&[3]), mi(&[1])),
        &Scalar::one() + &Scalar::param_pow(GaussianRational::from_int(2), 1),
    );
    a.add_term(DiscIndex::new(mi(&[1]), mi(&[1])), Scalar::from_frac(-3, 4));
    a.add_term(
        DiscIndex::new(mi(&[2]), mi(&[2])),
        Scalar::param_pow(GaussianRational::one(), 2),
    );
    let one_plus_2h = &Scalar::one() + &Scalar::param_pow(GaussianRational::from_int(2), 1);
    a.add_term(DiscIndex::new(mi(&[0]), mi(&[0])), one_plus_2h.inv().unwrap());
    let opts = CauchyOptions {
        hbar: 0.25,
        ..CauchyOptions::default()
    };
    let h = Complex64::new(opts.hbar, 0.0);
    let mut targets: Vec<DiscIndex> = a.terms().map(|(idx, _)| idx.clone()).collect();
    targets.push(DiscIndex::new(mi(&[2]), mi(&[0])));
    for idx in &targets {
        let got = cauchy_coefficient::<FxComplex>(&a, idx, &opts).unwrap();
        let expected = a.coeff(idx).evaluate_numeric(h).unwrap();
        assert!(
            (got.value - expected).norm() < TOL,
            "{idx}: {} vs {expected}",
            got.value
        );
    }
    println!("criterion 13 (extended-precision contour recovery of degree <= 3 coefficients to 1e-6, n = 1): pass");
}

/// Criterion 14: convergence demonstrations. The seminorm differences of the
/// partial products in the flat demo fall monotonically below 1e-6 by
/// N = 40, while the Lie demo ratio grows by more than three orders of
/// magnitude through N = 30 and its factorial-weighted counterpart stays
/// bounded.
#[test]
fn c14_convergence_demonstrations() {
    // Flat demo: dim-2 symplectic form, truncated exponentials in the first
    // generator, seminorm with factorial exponent 1/2 and weights 1/2.
    let lambda = BilinearForm::symplectic_2d();
    let spec = SeminormSpec::uniform(
        2,
        BigRational::new(1.into(), 2.into()),
        BigRational::new(1.into(), 2.into()),
    )
    .unwrap();
    let mut partial = SymElement::zero(2);
    let mut factorial = BigRational::one();
    let mut prev_product: Option<SymElement> = None;
    let mut prev_diff = f64::INFINITY;
    let mut final_diff = f64::INFINITY;
    for k in 0..=40u32 {
        if k > 0 {
            factorial *= BigRational::from_integer(k.into());
        }
        partial.add_term(
            MultiIndex(vec![k, 0]),
            Scalar::from_rational(factorial.recip()),
        );
        let product = weyl_star(&lambda, &partial, &partial).unwrap();
        if let Some(prev) = prev_product.replace(product.clone()) {
            let diff = seminorm_pr(&spec, &product.sub(&prev)).unwrap().as_f64();
            if k >= 2 {
                assert!(
                    diff < prev_diff,
                    "difference grew at N = {k}: {diff} vs {prev_diff}"
                );
            }
            prev_diff = diff;
            final_diff = diff;
        }
    }
    assert!(
        final_diff < 1e-6,
        "difference at N = 40 still {final_diff}"
    );

    // Lie demo: powers of the two noncentral generators. With factorial
    // exponent 1/2 the product-to-factors seminorm ratio blows up, while at
    // exponent 1 a weight rescaling (1/2 upstairs, 3/2 on the factors)
    // keeps the same ratio bounded and in fact decaying.
    let mut engine = PbwEngine::new(LieStructure::heisenberg());
    let half = BigRational::new(1.into(), 2.into());
    let spec_half = SeminormSpec::uniform(3, half.clone(), half.clone()).unwrap();
    let spec_num = SeminormSpec::uniform(3, half, BigRational::one()).unwrap();
    let spec_den = SeminormSpec::uniform(
        3,
        BigRational::new(3.into(), 2.into()),
        BigRational::one(),
    )
    .unwrap();
    let mut blowup = Vec::new();
    let mut rescued = Vec::new();
    for big_n in 1..=30u32 {
        let p = SymElement::monomial(3, MultiIndex(vec![big_n, 0, 0]), Scalar::one());
        let q = SymElement::monomial(3, MultiIndex(vec![0, big_n, 0]), Scalar::one());
        let star = engine
            .gutt_star(&p, &q)
            .unwrap()
            .evaluate_param(&GaussianRational::one())
            .unwrap();
        let ratio = |top: &SeminormSpec, bottom: &SeminormSpec| {
            seminorm_pr(top, &star).unwrap().as_f64()
                / (seminorm_pr(bottom, &p).unwrap().as_f64()
                    * seminorm_pr(bottom, &q).unwrap().as_f64())
        };
        blowup.push(ratio(&spec_half, &spec_half));
        rescued.push(ratio(&spec_num, &spec_den));
    }
    for w in blowup.windows(2) {
        assert!(w[1] > w[0], "blow-up ratio failed to grow");
    }
    assert!(
        blowup[29] > 1e3 * blowup[4],
        "expected three orders of growth, got {} -> {}",
        blowup[4],
        blowup[29]
    );
    for (i, r) in rescued.iter().enumerate() {
        assert!(*r <= 0.5, "rescaled ratio escaped at N = {}: {r}", i + 1);
        if i > 0 {
            assert!(*r < rescued[i - 1], "rescaled ratio grew at N = {}", i + 1);
        }
    }
    println!("criterion 14 (flat demo monotone below 1e-6 by N = 40; blow-up ratio grows 3+ orders by N = 30 while the rescaled ratio decays): pass");
}
