//! Acceptance suite: every criterion below runs at its stated tolerance
//! (everything here is exact) and prints one pass/fail line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use gentle_lab::classify::{
    self, check_corollary_kg, check_theorem_main, is_quasi_tilted, kg_dimension, shape_class,
    KgValue, ShapeTag,
};
use gentle_lab::cma::{
    build_cma, corner_algebra, gproj_catalog, quotient_by_idempotent, recover_gentle_presentation,
    verify_recollement_package,
};
use gentle_lab::corpus;
use gentle_lab::derived::{
    check_width_criterion, enumerate_homotopy_strings, hw, parse_homotopy_literal,
};
use gentle_lab::forbidden::{check_lemma_forbcyc, find_forbidden_cycles, CycleArrowIndex};
use gentle_lab::generate::{generate, GeneratorConfig, ShapeConstraint};
use gentle_lab::homdim::{
    band_dims, finitistic_dimension, global_dimension, inj_dim_string, proj_dim_string,
    reverse_over_opposite, HomDim,
};
use gentle_lab::linalg::rat;
use gentle_lab::quiver::{
    arrow_ids, bound_quiver_isomorphism, disjoint_union, opposite, validate_gentle, BoundQuiver,
};
use gentle_lab::rep::{
    band_module, resolve_id, resolve_pd, string_module, JordanSpec, ResolveOutcome,
};
use gentle_lab::strings::{
    enumerate_strings, parse_string_literal, reachable_end_pairs, EndState, StringAutomaton,
    StringWord,
};

const ORACLE_CAP: usize = 16;

fn random_samples() -> Vec<(String, BoundQuiver)> {
    (1..=50u64)
        .map(|seed| {
            let shape = match seed % 3 {
                0 => ShapeConstraint::Any,
                1 => ShapeConstraint::Tree,
                _ => ShapeConstraint::OneCycle,
            };
            let config = GeneratorConfig {
                min_vertices: 2,
                max_vertices: 8,
                extra_arrows: 2,
                relation_bias: 60,
                seed,
                shape,
            };
            (format!("random-{seed}"), generate(&config).expect("generator succeeds"))
        })
        .collect()
}

fn all_samples() -> Vec<(String, BoundQuiver)> {
    let mut out: Vec<(String, BoundQuiver)> =
        corpus::all().into_iter().map(|(n, b)| (n.to_string(), b)).collect();
    out.extend(random_samples());
    out
}

fn agrees(formula: HomDim, oracle: ResolveOutcome) -> bool {
    match (formula, oracle) {
        (HomDim::Finite(n), ResolveOutcome::Finite(m)) => n == m,
        (HomDim::Infinite, ResolveOutcome::CapReached) => true,
        _ => false,
    }
}

#[test]
fn criterion_1_paper_example_end_to_end() {
    let e1 = corpus::e1();
    assert!(validate_gentle(&e1).is_empty(), "e1 must be gentle");

    let ids = arrow_ids(&e1);
    let cycles = find_forbidden_cycles(&e1);
    assert_eq!(
        cycles,
        vec![
            vec![ids["a12"], ids["a23"], ids["a31"]],
            vec![ids["a78"], ids["a89"], ids["a97"]],
        ],
        "forbidden cycles must be exactly the two triangles"
    );

    assert_eq!(gproj_catalog(&e1).unwrap().entries.len(), 6);

    let cma = build_cma(&e1).unwrap();
    assert_eq!((cma.algebra.vertex_count(), cma.algebra.arrow_count()), (15, 18));
    assert!(validate_gentle(&cma.algebra).is_empty(), "the CM-Auslander algebra must be gentle");

    let tilde = quotient_by_idempotent(&cma.algebra, &cma.catalog_support()).unwrap();
    let e2 = corpus::e2();
    let reference = disjoint_union(&[("c1_", &e2), ("c2_", &e2), ("c3_", &e2)]);
    assert!(
        bound_quiver_isomorphism(&tilde, &reference).is_some(),
        "catalog quotient must be three disjoint chains"
    );
    println!("criterion 1: PASS - cycles, catalog, CM-Auslander counts, quotient shape all exact");
}

#[test]
fn criterion_2_dimension_facts() {
    let e1 = corpus::e1();
    let pd = |lit: &str| proj_dim_string(&e1, &parse_string_literal(&e1, lit).unwrap());
    let id = |lit: &str| inj_dim_string(&e1, &parse_string_literal(&e1, lit).unwrap());

    assert_eq!(pd("e:4"), HomDim::Finite(1));
    assert_eq!(id("e:4"), HomDim::Finite(1));
    assert_eq!(pd("e:1"), HomDim::Infinite);
    assert_eq!(pd("e:7"), HomDim::Infinite);
    assert_eq!(pd("a41"), HomDim::Infinite);
    assert_eq!(id("a74"), HomDim::Infinite);
    for v in ["4", "5", "6"] {
        let s = format!("e:{v}");
        let (p, i) = (pd(&s), id(&s));
        assert_eq!(
            (p, i),
            (HomDim::Finite(1), HomDim::Finite(1)),
            "pd + id of the simple at {v} must be 2"
        );
    }

    let index = CycleArrowIndex::new(&e1);
    let off_cycle = enumerate_strings(&e1, 2, |l| !index.on_cycle(l.arrow));
    assert_eq!(off_cycle.len(), 15, "15 non-forbidden classes at length <= 2");
    println!("criterion 2: PASS - all stated dimensions and the 15-class count are exact");
}

#[test]
fn criterion_3_oracle_equivalence() {
    let mut checked = 0usize;
    for (name, bq) in all_samples() {
        let op = opposite(&bq);
        for s in enumerate_strings(&bq, 8, |_| true) {
            let formula_pd = proj_dim_string(&bq, &s);
            let formula_id = inj_dim_string(&bq, &s);
            let m = string_module(&bq, &s).unwrap();
            let oracle_pd = resolve_pd(&bq, &m, ORACLE_CAP).unwrap();
            let oracle_id = resolve_id(&bq, &m, ORACLE_CAP).unwrap();
            assert!(
                agrees(formula_pd, oracle_pd),
                "pd disagreement on {name}, string {}: formula {formula_pd}, oracle {oracle_pd:?}",
                s.display(&bq)
            );
            assert!(
                agrees(formula_id, oracle_id),
                "id disagreement on {name}, string {}: formula {formula_id}, oracle {oracle_id:?}",
                s.display(&bq)
            );
            checked += 2;
        }
        let _ = op;
    }
    println!("criterion 3: PASS - {checked} formula/oracle comparisons, zero disagreements");
}

#[test]
fn criterion_4_main_theorem_harness() {
    let e1 = corpus::e1();
    let r1 = check_theorem_main(&e1).unwrap();
    assert!(r1.tilde_quasi_tilted && r1.conditions.cond1 && r1.conditions.cond2 && r1.agree);

    let mut divergence_notes = 0;
    for (name, bq) in all_samples() {
        let r = check_theorem_main(&bq).unwrap();
        assert!(
            r.agree,
            "FALSIFICATION on {name}: quotient quasi-tilted = {}, conditions = ({}, {})",
            r.tilde_quasi_tilted, r.conditions.cond1, r.conditions.cond2
        );
        // Informational: compare the stricter reading (every forbidden
        // string with both dimensions finite satisfying pd + id <= 2) and
        // log divergences without asserting anything.
        let index = CycleArrowIndex::new(&bq);
        let mut strict_holds = true;
        for s in enumerate_strings(&bq, 2 * bq.arrow_count(), |_| true) {
            let forbidden = s.letters().iter().any(|l| index.on_cycle(l.arrow));
            if !forbidden {
                continue;
            }
            if let (HomDim::Finite(p), HomDim::Finite(i)) =
                (proj_dim_string(&bq, &s), inj_dim_string(&bq, &s))
            {
                if p + i > 2 {
                    strict_holds = false;
                }
            }
        }
        if strict_holds != (r.conditions.cond1 && r.conditions.cond2) {
            divergence_notes += 1;
            println!(
                "  note: on {name} the forbidden-module reading ({strict_holds}) diverges from the non-forbidden reading ({})",
                r.conditions.cond1 && r.conditions.cond2
            );
        }
    }
    println!(
        "criterion 4: PASS - equivalence agrees on every sample ({divergence_notes} informational divergence notes)"
    );
}

#[test]
fn criterion_5_recollement_package() {
    for (name, bq) in [("e1", corpus::e1()), ("e3", corpus::e3())] {
        let r = verify_recollement_package(&bq).unwrap();
        assert!(r.corner_recovers_original, "{name}: corner must recover the original");
        assert!(!r.projective_restrictions.is_empty());
        for (entry, ok) in &r.projective_restrictions {
            assert!(ok, "{name}: restriction of the projective at {entry} must match its ideal");
        }
        for (entry, nonprojective, back) in &r.tensor_images {
            assert!(nonprojective, "{name}: split-path ideal at {entry} must be non-projective");
            assert!(back, "{name}: split-path ideal at {entry} must restrict back");
        }
        assert!(r.top_quotient_semisimple, "{name}: top quotient must have no arrows");
    }
    println!("criterion 5: PASS - recollement package verified on e1 and e3");
}

#[test]
fn criterion_6_cma_global_dimension() {
    let mut with_cycle = 0usize;
    for (name, bq) in all_samples() {
        if find_forbidden_cycles(&bq).is_empty() {
            continue;
        }
        with_cycle += 1;
        let cma = build_cma(&bq).unwrap();
        let fin = finitistic_dimension(&bq)
            .finite()
            .expect("finitistic dimension is always finite");
        assert_eq!(
            global_dimension(&cma.algebra),
            HomDim::Finite(fin.max(2)),
            "gl.dim of the CM-Auslander algebra of {name} must be max(2, fin.dim)"
        );
    }
    assert!(with_cycle >= 3, "sample set must exercise forbidden cycles, got {with_cycle}");
    println!("criterion 6: PASS - gl.dim(CMA) = max(2, fin.dim) on {with_cycle} cyclic samples");
}

#[test]
fn criterion_7_derived_layer() {
    // Every off-cycle homotopy string with at most six letters on e1 has
    // width at most two. (Complex validity, including d after d vanishing,
    // is asserted by construction for every complex built here.)
    let e1 = corpus::e1();
    let index = CycleArrowIndex::new(&e1);
    let words = enumerate_homotopy_strings(&e1, 6, &|a| !index.on_cycle(a)).unwrap();
    assert!(!words.is_empty());
    for w in &words {
        let r = hw(&e1, w, 0).unwrap();
        assert!(r.width <= 2, "width {} > 2 for {}", r.width, w.display(&e1));
    }
    let r1 = check_width_criterion(&e1, 6).unwrap();
    assert!(r1.side_widths_bounded && r1.side_conditions && r1.agree);

    // Shift- and inversion-invariance on one hundred random words.
    let mut tested = 0usize;
    'outer: for (_, bq) in all_samples() {
        for w in enumerate_homotopy_strings(&bq, 3, &|_| true).unwrap() {
            let base = hw(&bq, &w, 0).unwrap().width;
            for anchor in [1, -3] {
                assert_eq!(hw(&bq, &w, anchor).unwrap().width, base);
            }
            assert_eq!(hw(&bq, &w.inverse(), 0).unwrap().width, base);
            tested += 1;
            if tested >= 100 {
                break 'outer;
            }
        }
    }
    assert!(tested >= 100);
    println!("criterion 7 (derived layer): PASS - e1 widths bounded by 2; invariance on {tested} words");
}

#[test]
fn criterion_7_two_letter_width_on_e2_as_stated() {
    // Stated expectation: the homotopy string (a, b) on e2 yields width 3.
    // The faithful construction gives width 1: over 1 -> 2 -> 3 with a*b in
    // the ideal, the complex P(3) -> P(2) -> P(1) is the projective
    // resolution of the simple at 1 (the top map is injective because no
    // arrow leaves vertex 3), so its only cohomology sits in the last
    // degree. A width of 3 needs a fourth vertex: on 1 -> 2 -> 3 -> 4 with
    // a*b and b*c in the ideal the same word does have width 3 (see the
    // unit test width_three_needs_a_longer_chain). The assertion below is
    // kept as stated and fails honestly.
    let e2 = corpus::e2();
    let ab = parse_homotopy_literal(&e2, "a b").unwrap();
    let width = hw(&e2, &ab, 0).unwrap().width;
    if width == 3 {
        println!("criterion 7 (e2 width item): PASS");
    } else {
        println!(
            "criterion 7 (e2 width item): FAIL - computed width {width}, stated expectation 3 \
             (unattainable on the three-vertex chain; see the comment above)"
        );
    }
    assert_eq!(width, 3, "stated expectation: width 3 on e2 for the word (a, b)");
}

#[test]
fn criterion_8_kg_classification() {
    // Gentle forests sit at exactly zero.
    for seed in [1, 4, 7, 10] {
        let config = GeneratorConfig {
            seed,
            shape: ShapeConstraint::Tree,
            min_vertices: 2,
            max_vertices: 8,
            extra_arrows: 0,
            relation_bias: 60,
        };
        let tree = generate(&config).unwrap();
        let v = kg_dimension(&tree).unwrap();
        assert_eq!(v.value, KgValue::Exactly(0), "tree seed {seed}");
        assert!(v.provenance.starts_with("row 1"), "provenance recorded: {}", v.provenance);
    }
    let e2 = corpus::e2();
    assert_eq!(kg_dimension(&e2).unwrap().value, KgValue::Exactly(0));

    // The two-cycle example and its CM-Auslander algebra.
    let e3 = corpus::e3();
    let r = check_corollary_kg(&e3).unwrap();
    assert_eq!(r.kg_original.value, KgValue::Exactly(1));
    assert!(r.kg_original.provenance.starts_with("row 2"));
    assert_eq!(r.kg_cma.value, KgValue::Exactly(2));
    assert!(r.kg_cma.provenance.starts_with("row 2"));
    assert!(!r.isomorphic);
    assert!(r.clause_equality.ok() && r.clause_bounded.ok() && r.clause_tilde_zero.ok());
    assert_eq!(r.kg_tilde.value, KgValue::Exactly(0));

    // Catalog quotients that are forests sit at exactly zero.
    let mut forests = 0usize;
    for (name, bq) in all_samples() {
        let cma = build_cma(&bq).unwrap();
        let Some(tilde) = quotient_by_idempotent(&cma.algebra, &cma.catalog_support()) else {
            continue;
        };
        if shape_class(&tilde).tag == ShapeTag::Forest {
            forests += 1;
            let v = kg_dimension(&tilde).unwrap();
            assert_eq!(v.value, KgValue::Exactly(0), "forest quotient of {name}");
            assert!(v.provenance.starts_with("row 1"));
        }
    }
    assert!(forests >= 5);
    println!("criterion 8: PASS - table rows with provenance on trees, e3, and {forests} forest quotients");
}

#[test]
fn criterion_9_property_suites() {
    let samples = all_samples();

    // Maximal forbidden paths are cycle-pure or cycle-free.
    for (name, bq) in &samples {
        assert!(check_lemma_forbcyc(bq).is_ok(), "cycle-purity violated on {name}");
    }

    // Pumping soundness: the automaton's reachability closure equals the
    // end pairs harvested from enumeration at twice the arrow count.
    for (name, bq) in &samples {
        let aut = StringAutomaton::new(bq);
        let states: Vec<EndState> = aut.letters().iter().map(|&l| EndState::Letter(l)).collect();
        let closure = reachable_end_pairs(&aut, &states, &states);
        let mut harvested: BTreeSet<(EndState, EndState)> = BTreeSet::new();
        for w in enumerate_strings(bq, 2 * bq.arrow_count(), |_| true) {
            if let StringWord::Word(ls) = &w {
                for word in [ls.clone(), w.inverse().letters().to_vec()] {
                    harvested
                        .insert((EndState::Letter(word[0]), EndState::Letter(*word.last().unwrap())));
                }
            }
        }
        assert_eq!(closure, harvested, "pumping soundness failed on {name}");
    }

    // Band modules always have projective and injective dimension one,
    // against the oracle.
    let mut band_checks = 0usize;
    for (name, bq) in &samples {
        let Some(band) = StringAutomaton::new(bq).find_cycle() else { continue };
        for spec in [JordanSpec::new(rat(1), 1).unwrap(), JordanSpec::new(rat(3) / rat(2), 2).unwrap()] {
            let m = band_module(bq, &band, &spec).unwrap();
            assert_eq!(resolve_pd(bq, &m, ORACLE_CAP).unwrap(), ResolveOutcome::Finite(1), "{name}");
            assert_eq!(resolve_id(bq, &m, ORACLE_CAP).unwrap(), ResolveOutcome::Finite(1), "{name}");
            band_checks += 1;
        }
        assert_eq!(
            band_dims(bq, &band).unwrap(),
            (HomDim::Finite(1), HomDim::Finite(1))
        );
    }
    assert!(band_checks >= 2, "sample set must exercise bands");

    // Duality: injective dimension equals projective dimension of the
    // reversed word over the opposite algebra.
    for (name, bq) in &samples {
        let op = opposite(bq);
        for s in enumerate_strings(bq, 6, |_| true) {
            assert_eq!(
                inj_dim_string(bq, &s),
                proj_dim_string(&op, &reverse_over_opposite(&s)),
                "duality failed on {name} for {}",
                s.display(bq)
            );
        }
    }

    // The exact quasi-tilted decision agrees with the brute-force
    // definition on every sample.
    for (name, bq) in &samples {
        assert_eq!(
            is_quasi_tilted(bq).unwrap().quasi_tilted,
            classify::quasi_tilted_brute_force(bq).unwrap(),
            "quasi-tilted decision diverged on {name}"
        );
    }

    println!(
        "criterion 9: PASS - cycle purity, pumping soundness, {band_checks} band-module oracle checks, duality, brute-force agreement"
    );
}
