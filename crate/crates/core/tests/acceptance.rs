//! Acceptance gate: one test per criterion, each printing a single
//! `criterion N: PASS` line (visible with `--nocapture`) once its full
//! batch of checks has gone through.  Criteria with stated wall-clock
//! budgets assert them.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::HashMap;
use std::time::Instant;

use num::{BigRational, FromPrimitive};
use rowmotion_core::birational::{
    file_toggle, rowmotion_iterates, symbolic_chain_coords, symbolic_nvars, Labeling,
};
use rowmotion_core::cartan::{Family, Rat};
use rowmotion_core::catalog::{catalog, minuscule_weights, MinusculePoset};
use rowmotion_core::combinat;
use rowmotion_core::diamond::DiamondChart;
use rowmotion_core::identities::{
    file_components, fold_factor, fold_staircase_labeling, local_file_toggle_sides,
    local_rowmotion_sides,
};
use rowmotion_core::pl::{self, Variant};
use rowmotion_core::ratfun::RatFun;
use rowmotion_core::verify::{run_check, Mode, Status, Theorem};

fn build(family: Family, n: usize, weight: usize) -> MinusculePoset {
    MinusculePoset::build(family, n, weight).unwrap()
}

/// The named poset list shared by the combinatorial criteria: type A
/// through rank 5 with every weight, B_4, C_4, D_4 and D_5 with every
/// minuscule weight, and both exceptional types.
fn core_list() -> Vec<MinusculePoset> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for w in minuscule_weights(Family::A, n) {
            out.push(build(Family::A, n, w));
        }
    }
    out.push(build(Family::B, 4, 4));
    out.push(build(Family::C, 4, 1));
    for n in [4, 5] {
        for w in minuscule_weights(Family::D, n) {
            out.push(build(Family::D, n, w));
        }
    }
    for w in minuscule_weights(Family::E, 6) {
        out.push(build(Family::E, 6, w));
    }
    out.push(build(Family::E, 7, 7));
    out
}

/// Every catalog poset (ranks up to 7) with at most `max_elements`
/// elements.
fn catalog_up_to(max_elements: usize) -> Vec<MinusculePoset> {
    catalog(7)
        .into_iter()
        .map(|lie| build(lie.family(), lie.rank(), lie.weight()))
        .filter(|mp| mp.len() <= max_elements)
        .collect()
}

fn e7() -> MinusculePoset {
    build(Family::E, 7, 7)
}

const PROB: Mode = Mode::Probabilistic { seed: 1, trials: 20 };

fn assert_pass(mp: &MinusculePoset, theorem: Theorem, mode: &Mode) -> u128 {
    let record = run_check(mp, theorem, mode);
    assert_eq!(
        record.status,
        Status::Pass,
        "{} {} ({}): {:?}",
        record.poset,
        record.theorem,
        record.mode,
        record.witness
    );
    record.elapsed_ms
}

#[test]
fn criterion_01_combinatorial_periodicity() {
    let t0 = Instant::now();
    let posets = core_list();
    for mp in &posets {
        let order = combinat::rowmotion_order(mp.poset());
        assert_eq!(
            order,
            u64::from(mp.coxeter_number()),
            "{}: rowmotion order",
            mp.lie()
        );
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 10, "budget exceeded: {elapsed:?}");
    eprintln!(
        "criterion 1: PASS - rowmotion order equals the Coxeter number exactly on {} posets in {elapsed:?}",
        posets.len()
    );
}

#[test]
fn criterion_02_combinatorial_file_homomesy() {
    let t0 = Instant::now();
    let posets = core_list();
    let mut orbits_seen = 0usize;
    for mp in &posets {
        let weight = mp.lie().weight();
        for orbit in combinat::rowmotion_orbits(mp.poset()) {
            let averages = combinat::file_averages(mp, &orbit);
            for alpha in 1..=mp.cartan().rank() {
                assert_eq!(
                    averages[alpha - 1],
                    mp.cartan().pairing(alpha, weight),
                    "{}: color {alpha} orbit average",
                    mp.lie()
                );
            }
            orbits_seen += 1;
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 10, "budget exceeded: {elapsed:?}");
    eprintln!(
        "criterion 2: PASS - every orbit average matches the weight pairing across {orbits_seen} orbits in {elapsed:?}"
    );
}

#[test]
fn criterion_03_birational_periodicity() {
    let t0 = Instant::now();
    let small = catalog_up_to(16);
    for mp in &small {
        assert_pass(mp, Theorem::Periodicity, &Mode::Exact);
    }
    let ms = assert_pass(&e7(), Theorem::Periodicity, &PROB);
    assert!(ms < 60_000, "E7 probabilistic budget exceeded: {ms} ms");
    eprintln!(
        "criterion 3: PASS - exact symbolic periodicity with maximal-divisor order checks on {} posets, plus 20-trial E7 run in {ms} ms (total {:?})",
        small.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_04_reciprocity() {
    let t0 = Instant::now();
    let small = catalog_up_to(16);
    for mp in &small {
        assert_pass(mp, Theorem::Reciprocity, &Mode::Exact);
    }
    assert_pass(&e7(), Theorem::Reciprocity, &PROB);
    eprintln!(
        "criterion 4: PASS - reciprocity at every element on {} posets exactly and on E7 probabilistically (total {:?})",
        small.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_05_file_homomesy_with_cross_check() {
    let t0 = Instant::now();
    let small = catalog_up_to(16);
    for mp in &small {
        assert_pass(mp, Theorem::FileHomomesy, &Mode::Exact);
    }
    assert_pass(&e7(), Theorem::FileHomomesy, &PROB);

    // Independent cross-check of the exponents: the birational check used
    // inverse-Cartan pairings; combinatorial orbit averages must reproduce
    // them, color by color, after multiplying by the period.
    let mut cross_checked = 0usize;
    for mp in core_list() {
        let h = i64::from(mp.coxeter_number());
        let orbits = combinat::rowmotion_orbits(mp.poset());
        let averages = combinat::file_averages(&mp, &orbits[0]);
        for alpha in 1..=mp.cartan().rank() {
            let (ea, eb) = rowmotion_core::birational::file_homomesy_exponents(
                mp.cartan(),
                mp.lie().weight(),
                alpha,
            );
            let avg = averages[alpha - 1];
            let dual = averages[mp.cartan().minus_w0(alpha) - 1];
            assert_eq!(Rat::from_integer(eb), avg * Rat::from_integer(h));
            assert_eq!(Rat::from_integer(ea), dual * Rat::from_integer(h));
            cross_checked += 1;
        }
    }
    eprintln!(
        "criterion 5: PASS - file homomesy exact on {} posets and probabilistic on E7; {cross_checked} exponents cross-checked against orbit averages (total {:?})",
        small.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_06_coxeter_motion() {
    let t0 = Instant::now();
    let mut exact = 0usize;
    for mp in core_list() {
        // Rank at most 4 exercises every color order; higher ranks use five
        // seeded orders.  The one poset too large for symbolic toggle words
        // is checked probabilistically.
        let mode = if mp.len() > 16 { PROB } else { Mode::Exact };
        assert_pass(&mp, Theorem::CoxeterPeriodicity, &mode);
        assert_pass(&mp, Theorem::CoxeterHomomesy, &mode);
        if mode == Mode::Exact {
            exact += 1;
        }
    }
    eprintln!(
        "criterion 6: PASS - Coxeter-motion period and homomesy over full or seeded order sets ({exact} posets exact, E7 probabilistic) in {:?}",
        t0.elapsed()
    );
}

#[test]
fn criterion_07_hopkins_statistic() {
    let t0 = Instant::now();
    let posets = core_list();
    for mp in &posets {
        let mode = if mp.len() > 16 { PROB } else { Mode::Exact };
        assert_pass(mp, Theorem::Hopkins, &mode);
    }
    eprintln!(
        "criterion 7: PASS - down-ratio period product equals (top/bottom)^size on all {} posets in {:?}",
        posets.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_08_oracle_equivalences() {
    let t0 = Instant::now();

    // Closed-form fork-poset labels against the generic engine, full
    // iterate window.
    for n in 3..=6 {
        let mp = build(Family::D, n, 1);
        let chart = DiamondChart::new(&mp);
        let nv = symbolic_nvars(mp.len());
        let start = Labeling {
            vals: symbolic_chain_coords(mp.poset()).vals,
            a: RatFun::one(nv),
            b: RatFun::one(nv),
        };
        let its = rowmotion_iterates(mp.poset(), &start, mp.height() as usize + 1);
        for v in 0..mp.len() {
            assert_eq!(chart.initial_value(v), its[0].vals[v], "n={n} element {v}");
            for k in 1..=mp.rank(v) as usize {
                assert_eq!(
                    chart.iterate_value(k, v),
                    its[k].vals[v],
                    "n={n} element {v} step {k}"
                );
            }
        }
    }

    // Staircase dynamics against the folded symmetric rectangle.
    for r in 1..=3usize {
        let stair = build(Family::B, r + 1, r + 1);
        let rect = build(Family::A, 2 * r + 1, r + 1);
        let height = stair.height();
        let nv = symbolic_nvars(stair.len());
        let start = Labeling {
            vals: (0..stair.len()).map(|v| RatFun::var(nv, v)).collect(),
            a: RatFun::one(nv),
            b: RatFun::one(nv),
        };
        let folded = fold_staircase_labeling(&stair, &rect, &start);
        let its = rowmotion_iterates(stair.poset(), &start, height as usize + 2);
        let folded_its = rowmotion_iterates(rect.poset(), &folded, height as usize + 2);
        let rect_at: HashMap<(i64, i64), usize> =
            (0..rect.len()).map(|v| (rect.coord(v), v)).collect();
        for v in 0..stair.len() {
            let w = rect_at[&stair.coord(v)];
            for k in 1..=height as usize + 1 {
                let factor = RatFun::from_ratio(nv, fold_factor(k, stair.rank(v), height));
                assert_eq!(
                    its[k].vals[v],
                    folded_its[k].vals[w].mul(&factor),
                    "r={r} element {v} step {k}"
                );
            }
        }
    }

    // Local file-graph identities, both the iterate version and the
    // single-toggle version, on every small poset and color.
    let small = catalog_up_to(16);
    for mp in &small {
        let start = symbolic_chain_coords(mp.poset());
        let its = rowmotion_iterates(mp.poset(), &start, mp.height() as usize + 2);
        for alpha in 1..=mp.cartan().rank() {
            let mut after = start.clone();
            file_toggle(mp, &mut after, alpha);
            for comp in file_components(mp, alpha) {
                let (lhs, rhs) = local_rowmotion_sides(&comp, &its);
                assert_eq!(lhs, rhs, "{} color {alpha} iterate version", mp.lie());
                let (lhs, rhs) = local_file_toggle_sides(&comp, &start, &after);
                assert_eq!(lhs, rhs, "{} color {alpha} toggle version", mp.lie());
            }
        }
    }

    // Hand-derived two-element chain table.
    let chain = build(Family::A, 2, 1);
    let p = chain.poset();
    let bottom = p.minimal_elements()[0];
    let top = p.maximal_elements()[0];
    let nv = symbolic_nvars(2);
    let (x0, x1) = (RatFun::var(nv, bottom), RatFun::var(nv, top));
    let start = rowmotion_core::birational::symbolic(p);
    let a = start.a.clone();
    let b = start.b.clone();
    let its = rowmotion_iterates(p, &start, 4);
    assert_eq!(its[1].vals[top], x0.mul(&a).mul(&x1.inv()));
    assert_eq!(its[1].vals[bottom], a.mul(&b).mul(&x1.inv()));
    assert_eq!(its[2].vals[top], a.mul(&b).mul(&x0.inv()));
    assert_eq!(its[2].vals[bottom], x1.mul(&b).mul(&x0.inv()));
    assert_eq!(its[3], its[0]);

    eprintln!(
        "criterion 8: PASS - closed-form, folding, local-identity, and hand-table oracles all agree with the engine ({} small posets) in {:?}",
        small.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_09_piecewise_linear_bridge() {
    let t0 = Instant::now();
    let mut posets_covered = 0usize;
    let mut ideals_covered = 0usize;
    for mp in catalog_up_to(usize::MAX) {
        let p = mp.poset();
        let ideals = p.enumerate_ideals();
        if ideals.len() > 56 {
            continue;
        }
        for ideal in &ideals {
            let image = combinat::rowmotion(p, ideal);

            let mut chi_plus = pl::complement_indicator(p, ideal);
            pl::rowmotion(p, &mut chi_plus, Variant::Max);
            assert_eq!(chi_plus, pl::complement_indicator(p, &image), "{}", mp.lie());

            let mut chi_minus = pl::membership_indicator(p, ideal);
            pl::rowmotion(p, &mut chi_minus, Variant::Min);
            assert_eq!(chi_minus, pl::membership_indicator(p, &image), "{}", mp.lie());
        }
        posets_covered += 1;
        ideals_covered += ideals.len();
    }
    eprintln!(
        "criterion 9: PASS - both indicator lifts track combinatorial rowmotion on {ideals_covered} ideals across {posets_covered} posets in {:?}",
        t0.elapsed()
    );
}

#[test]
fn criterion_10_boundary_reduction_table() {
    let t0 = Instant::now();
    let posets = catalog_up_to(10);
    for mp in &posets {
        assert_pass(mp, Theorem::AbReduction, &Mode::Exact);
    }
    eprintln!(
        "criterion 10: PASS - boundary labels factor out by the full exponent table on {} posets in {:?}",
        posets.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_11_half_period_conjecture_evidence() {
    let t0 = Instant::now();
    let mut findings = Vec::new();
    let mut passes = 0usize;
    for mp in catalog_up_to(16) {
        let record = run_check(&mp, Theorem::HalfPeriodConjecture, &Mode::Exact);
        match record.status {
            Status::Pass => passes += 1,
            Status::Fail => findings.push(record),
        }
    }
    let record = run_check(&e7(), Theorem::HalfPeriodConjecture, &PROB);
    match record.status {
        Status::Pass => passes += 1,
        Status::Fail => findings.push(record),
    }
    // A failure here would be a research finding about an open conjecture,
    // not a build failure, so it is reported rather than asserted.
    for record in &findings {
        eprintln!(
            "criterion 11: research finding - {} fails the half-period identity ({:?})",
            record.poset, record.witness
        );
    }
    eprintln!(
        "criterion 11: {} - half-period reciprocity evidence on {passes} posets ({} findings) in {:?}",
        if findings.is_empty() { "PASS" } else { "EVIDENCE REPORTED" },
        findings.len(),
        t0.elapsed()
    );
}

#[test]
fn criterion_12_feasibility_benchmark() {
    let t0 = Instant::now();
    let e6 = build(Family::E, 6, 6);
    let record = run_check(&e6, Theorem::Periodicity, &Mode::Exact);
    assert_eq!(record.status, Status::Pass, "{:?}", record.witness);
    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "symbolic E6 period check exceeded ten minutes: {elapsed:?}"
    );
    eprintln!(
        "criterion 12: PASS - exact symbolic twelfth-power identity on the 16-element exceptional poset in {elapsed:?}"
    );
}

#[test]
fn probabilistic_trials_use_exact_rational_points() {
    // Companion guard for the probabilistic criteria: the sampled points
    // are exact rationals with 31-bit parts, so a passing trial is an exact
    // field identity at that point, not a floating-point approximation.
    let mp = build(Family::A, 3, 2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    let lab = rowmotion_core::birational::random_labeling(mp.poset(), &mut rng, 1 << 31);
    for v in 0..mp.len() {
        let q = &lab.vals[v];
        assert!(q > &BigRational::from_u64(0).unwrap());
        assert!(q.numer() < &num::BigInt::from(1u64 << 31));
        assert!(q.denom() < &num::BigInt::from(1u64 << 31));
    }
}

use rand::SeedableRng;
