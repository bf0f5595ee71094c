//! Theorem verification harness.
//!
//! Every statement the library certifies is an identity of rational maps,
//! so it can be checked two ways with the same generic code:
//!
//! * **exact**: run the dynamics on a symbolic labeling over the rational
//!   function field.  Identities are decided by canonical-form equality,
//!   so a pass is a proof for all inputs.  The symbolic start uses chain
//!   coordinates, an invertible substitution that keeps iterates small;
//!   identities of rational maps survive invertible changes of variables
//!   in both directions, so nothing is lost.
//! * **probabilistic**: evaluate at seeded random rational points with
//!   31-bit numerators and denominators.  Each trial is exact arithmetic;
//!   failure of a trial refutes the identity outright, while passes bound
//!   the error probability via degree counting.
//!
//! Each check returns a machine-readable record with a pass/fail status
//! and, on failure, a short human-readable witness.

use std::fmt;
use std::time::Instant;

use num::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::birational::{
    coxeter_iterates, down_ratio_product, dynkin_bipartition, file_homomesy_exponents,
    file_product, half_period_word, random_labeling, rowmotion_iterates,
    staggered_file_product, symbolic, symbolic_chain_coords,
    FieldElem, Labeling,
};
use crate::catalog::MinusculePoset;
use crate::identities::boundary_scaling_exponents;

/// The verifiable statements, named by their command-line tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// Rowmotion has order exactly the Coxeter number.
    Periodicity,
    /// Iterating to the rank of an element inverts the label at its
    /// involution partner, up to the boundary product.
    Reciprocity,
    /// File products over one period are boundary monomials with
    /// inverse-Cartan exponents.
    FileHomomesy,
    /// Every Coxeter-motion has order exactly the Coxeter number.
    CoxeterPeriodicity,
    /// File products along Coxeter-motion orbits match the rowmotion ones.
    CoxeterHomomesy,
    /// The product of down-ratio statistics over one period depends only
    /// on the boundary labels and the poset size.
    Hopkins,
    /// One-step relation between rank-staggered file products of adjacent
    /// colors.
    RelPhiPrime,
    /// Inverse-Cartan combination of full-period file products collapses
    /// to a boundary monomial.
    RelPhi,
    /// Conjectured reciprocity for the alternating half-period word.
    HalfPeriodConjecture,
    /// Boundary labels can be scaled out of a graded poset's dynamics by
    /// an explicit monomial factor table.
    AbReduction,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Periodicity,
        Theorem::Reciprocity,
        Theorem::FileHomomesy,
        Theorem::CoxeterPeriodicity,
        Theorem::CoxeterHomomesy,
        Theorem::Hopkins,
        Theorem::RelPhiPrime,
        Theorem::RelPhi,
        Theorem::HalfPeriodConjecture,
        Theorem::AbReduction,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Theorem::Periodicity => "periodicity",
            Theorem::Reciprocity => "reciprocity",
            Theorem::FileHomomesy => "file_homomesy",
            Theorem::CoxeterPeriodicity => "coxeter_periodicity",
            Theorem::CoxeterHomomesy => "coxeter_homomesy",
            Theorem::Hopkins => "hopkins",
            Theorem::RelPhiPrime => "rel_phi_prime",
            Theorem::RelPhi => "rel_phi",
            Theorem::HalfPeriodConjecture => "half_period_conjecture",
            Theorem::AbReduction => "ab_reduction",
        }
    }

    pub fn parse(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.token() == s)
    }

    /// Whether a failure refutes established mathematics (true) or merely
    /// reports evidence against an open conjecture (false).
    pub fn is_settled(self) -> bool {
        !matches!(self, Theorem::HalfPeriodConjecture)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// How to run a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Symbolic verification over the rational function field.
    Exact,
    /// Seeded random evaluation; every listed trial must pass.
    Probabilistic { seed: u64, trials: u32 },
}

impl Mode {
    pub fn token(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Probabilistic { .. } => "prob",
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

/// Machine-readable result of one (poset, theorem, mode) check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub poset: String,
    pub theorem: String,
    pub mode: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs one theorem check on one poset and reports the outcome.
pub fn run_check(mp: &MinusculePoset, theorem: Theorem, mode: &Mode) -> CheckRecord {
    let started = Instant::now();
    let outcome = match mode {
        Mode::Exact => {
            // Two faithful symbolic starts with complementary strengths:
            // chain coordinates keep rowmotion iterates tiny (free variables
            // stall on the larger posets), while free variables keep
            // file-toggle words tiny (chain coordinates stall there).
            let start = match theorem {
                Theorem::CoxeterPeriodicity
                | Theorem::CoxeterHomomesy
                | Theorem::HalfPeriodConjecture => symbolic(mp.poset()),
                _ => symbolic_chain_coords(mp.poset()),
            };
            let orderings = coxeter_orderings(mp.lie().rank(), 0);
            dispatch(mp, theorem, &start, &orderings)
        }
        Mode::Probabilistic { seed, trials } => {
            let orderings = coxeter_orderings(mp.lie().rank(), *seed);
            let mut outcome = Ok(());
            for trial in 0..*trials {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(u64::from(trial));
                let start = random_labeling(mp.poset(), &mut rng, 1 << 31);
                if let Err(w) = dispatch(mp, theorem, &start, &orderings) {
                    outcome = Err(format!("trial {trial}: {w}"));
                    break;
                }
            }
            outcome
        }
    };
    let (seed, trials) = match mode {
        Mode::Exact => (None, None),
        Mode::Probabilistic { seed, trials } => (Some(*seed), Some(*trials)),
    };
    CheckRecord {
        poset: mp.lie().to_string(),
        theorem: theorem.token().into(),
        mode: mode.token().into(),
        status: if outcome.is_ok() {
            Status::Pass
        } else {
            Status::Fail
        },
        seed,
        trials,
        elapsed_ms: started.elapsed().as_millis(),
        witness: outcome.err(),
    }
}

/// Runs every theorem on one poset.
pub fn run_all(mp: &MinusculePoset, mode: &Mode) -> Vec<CheckRecord> {
    Theorem::ALL
        .iter()
        .map(|&t| run_check(mp, t, mode))
        .collect()
}

/// Color orders used for Coxeter-motion checks: every permutation when the
/// rank is at most four, otherwise five seeded shuffles.
pub fn coxeter_orderings(n: usize, seed: u64) -> Vec<Vec<usize>> {
    let base: Vec<usize> = (1..=n).collect();
    if n <= 4 {
        let mut all = Vec::new();
        permute(&mut base.clone(), 0, &mut all);
        all
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0c0c_0c0c);
        let mut picks = vec![base.clone()];
        while picks.len() < 5 {
            let mut next = base.clone();
            next.shuffle(&mut rng);
            if !picks.contains(&next) {
                picks.push(next);
            }
        }
        picks
    }
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Divisors of the form `h / p` for the distinct primes `p` of `h`: a map
/// has order exactly `h` iff it closes at `h` and at none of these.
pub fn maximal_proper_divisors(h: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    let mut rest = h;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            divs.push(h / p);
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        divs.push(h / rest);
    }
    divs
}

fn boundary_power<T: FieldElem>(start: &Labeling<T>, ea: i64, eb: i64) -> T {
    start.a.powi(ea).mul(&start.b.powi(eb))
}

fn dispatch<T: FieldElem>(
    mp: &MinusculePoset,
    theorem: Theorem,
    start: &Labeling<T>,
    orderings: &[Vec<usize>],
) -> Result<(), String> {
    match theorem {
        Theorem::Periodicity => check_periodicity(mp, start),
        Theorem::Reciprocity => check_reciprocity(mp, start),
        Theorem::FileHomomesy => check_file_homomesy(mp, start),
        Theorem::CoxeterPeriodicity => check_coxeter_periodicity(mp, start, orderings),
        Theorem::CoxeterHomomesy => check_coxeter_homomesy(mp, start, orderings),
        Theorem::Hopkins => check_hopkins(mp, start),
        Theorem::RelPhiPrime => check_rel_phi_prime(mp, start),
        Theorem::RelPhi => check_rel_phi(mp, start),
        Theorem::HalfPeriodConjecture => check_half_period(mp, start),
        Theorem::AbReduction => check_boundary_scaling(mp, start),
    }
}

fn check_periodicity<T: FieldElem>(mp: &MinusculePoset, start: &Labeling<T>) -> Result<(), String> {
    let h = mp.coxeter_number() as usize;
    let its = rowmotion_iterates(mp.poset(), start, h + 1);
    if its[h] != its[0] {
        return Err(format!("labels fail to close after {h} steps"));
    }
    for d in maximal_proper_divisors(h) {
        if its[d] == its[0] {
            return Err(format!("order divides {d}, so it is not exactly {h}"));
        }
    }
    Ok(())
}

fn check_reciprocity<T: FieldElem>(mp: &MinusculePoset, start: &Labeling<T>) -> Result<(), String> {
    let its = rowmotion_iterates(mp.poset(), start, mp.height() as usize + 1);
    let ab = start.a.mul(&start.b);
    for v in 0..mp.len() {
        let k = mp.rank(v) as usize;
        let lhs = its[k].vals[v].mul(&start.vals[mp.iota(v)]);
        if lhs != ab {
            return Err(format!(
                "element {v}: step-{k} label times the partner label is not the boundary product"
            ));
        }
    }
    Ok(())
}

fn check_file_homomesy<T: FieldElem>(
    mp: &MinusculePoset,
    start: &Labeling<T>,
) -> Result<(), String> {
    let h = mp.coxeter_number() as usize;
    let its = rowmotion_iterates(mp.poset(), start, h);
    let weight = mp.lie().weight();
    for alpha in 1..=mp.lie().rank() {
        let mut prod = start.a.one();
        for it in &its {
            prod = prod.mul(&file_product(mp, it, alpha));
        }
        let (ea, eb) = file_homomesy_exponents(mp.cartan(), weight, alpha);
        if prod != boundary_power(start, ea, eb) {
            return Err(format!(
                "color {alpha}: period product is not the boundary monomial ({ea}, {eb})"
            ));
        }
    }
    Ok(())
}

fn check_coxeter_periodicity<T: FieldElem>(
    mp: &MinusculePoset,
    start: &Labeling<T>,
    orderings: &[Vec<usize>],
) -> Result<(), String> {
    let h = mp.coxeter_number() as usize;
    for order in orderings {
        let its = coxeter_iterates(mp, start, order, h + 1);
        if its[h] != its[0] {
            return Err(format!("order {order:?}: labels fail to close after {h} steps"));
        }
        for d in maximal_proper_divisors(h) {
            if its[d] == its[0] {
                return Err(format!(
                    "order {order:?}: period divides {d}, so it is not exactly {h}"
                ));
            }
        }
    }
    Ok(())
}

fn check_coxeter_homomesy<T: FieldElem>(
    mp: &MinusculePoset,
    start: &Labeling<T>,
    orderings: &[Vec<usize>],
) -> Result<(), String> {
    let h = mp.coxeter_number() as usize;
    let weight = mp.lie().weight();
    for order in orderings {
        let its = coxeter_iterates(mp, start, order, h);
        for alpha in 1..=mp.lie().rank() {
            let mut prod = start.a.one();
            for it in &its {
                prod = prod.mul(&file_product(mp, it, alpha));
            }
            let (ea, eb) = file_homomesy_exponents(mp.cartan(), weight, alpha);
            if prod != boundary_power(start, ea, eb) {
                return Err(format!(
                    "order {order:?}, color {alpha}: period product is not the boundary monomial"
                ));
            }
        }
    }
    Ok(())
}

fn check_hopkins<T: FieldElem>(mp: &MinusculePoset, start: &Labeling<T>) -> Result<(), String> {
    let h = mp.coxeter_number() as usize;
    let its = rowmotion_iterates(mp.poset(), start, h);
    let mut prod = start.a.one();
    for it in &its {
        prod = prod.mul(&down_ratio_product(mp.poset(), it));
    }
    let size = mp.len() as i64;
    if prod != boundary_power(start, size, -size) {
        return Err(format!(
            "period product of down-ratio statistics is not (top/bottom)^{size}"
        ));
    }
    Ok(())
}

fn check_rel_phi_prime<T: FieldElem>(
    mp: &MinusculePoset,
    start: &Labeling<T>,
) -> Result<(), String> {
    let p = mp.poset();
    let n = mp.lie().rank();
    // Staggered products read at most (height - 1) / 2 steps ahead, plus
    // one for the shifted factor on each side of the relation.
    let depth = (mp.height() as usize - 1) / 2 + 3;
    let its = rowmotion_iterates(p, start, depth);
    let alpha_max = mp.color(p.maximal_elements()[0]);
    let alpha_min = mp.color(p.minimal_elements()[0]);
    for alpha in 1..=n {
        let lhs = staggered_file_product(mp, &its[0..], alpha)
            .mul(&staggered_file_product(mp, &its[1..], alpha));
        let mut rhs = boundary_power(
            start,
            i64::from(alpha == alpha_max),
            i64::from(alpha == alpha_min),
        );
        for &beta in mp.cartan().neighbors(alpha) {
            let shift = usize::from(mp.rank(mp.file_base(beta)) > mp.rank(mp.file_base(alpha)));
            let exponent = -mp.cartan().entry(alpha, beta);
            rhs = rhs.mul(&staggered_file_product(mp, &its[shift..], beta).powi(exponent));
        }
        if lhs != rhs {
            return Err(format!(
                "color {alpha}: staggered product relation fails against its neighbors"
            ));
        }
    }
    Ok(())
}

fn check_rel_phi<T: FieldElem>(mp: &MinusculePoset, start: &Labeling<T>) -> Result<(), String> {
    let p = mp.poset();
    let n = mp.lie().rank();
    let h = mp.coxeter_number() as usize;
    let its = rowmotion_iterates(p, start, h);
    let alpha_max = mp.color(p.maximal_elements()[0]);
    let alpha_min = mp.color(p.minimal_elements()[0]);
    let period_products: Vec<T> = (0..=n)
        .map(|beta| {
            if beta == 0 {
                return start.a.one();
            }
            let mut prod = start.a.one();
            for it in &its {
                prod = prod.mul(&file_product(mp, it, beta));
            }
            prod
        })
        .collect();
    let h = h as i64;
    for alpha in 1..=n {
        let mut lhs = period_products[alpha].powi(mp.cartan().entry(alpha, alpha));
        for &beta in mp.cartan().neighbors(alpha) {
            lhs = lhs.mul(&period_products[beta].powi(mp.cartan().entry(alpha, beta)));
        }
        let rhs = boundary_power(
            start,
            h * i64::from(alpha == alpha_max),
            h * i64::from(alpha == alpha_min),
        );
        if lhs != rhs {
            return Err(format!(
                "color {alpha}: inverse-Cartan combination of period products is off"
            ));
        }
    }
    Ok(())
}

fn check_half_period<T: FieldElem>(mp: &MinusculePoset, start: &Labeling<T>) -> Result<(), String> {
    let classes = dynkin_bipartition(mp.cartan());
    let ab = start.a.mul(&start.b);
    for (label, pair) in [
        ("1|2", [classes[0].clone(), classes[1].clone()]),
        ("2|1", [classes[1].clone(), classes[0].clone()]),
    ] {
        let mut cur = start.clone();
        half_period_word(mp, &mut cur, &pair);
        for v in 0..mp.len() {
            if cur.vals[v].mul(&start.vals[mp.iota(v)]) != ab {
                return Err(format!(
                    "class order {label}, element {v}: half-period word misses the reciprocity value"
                ));
            }
        }
    }
    Ok(())
}

fn check_boundary_scaling<T: FieldElem>(
    mp: &MinusculePoset,
    start: &Labeling<T>,
) -> Result<(), String> {
    let p = mp.poset();
    let height = mp.height();
    let unit = Labeling {
        vals: start.vals.clone(),
        a: start.a.one(),
        b: start.b.one(),
    };
    let general = rowmotion_iterates(p, start, height as usize + 2);
    let scaled = rowmotion_iterates(p, &unit, height as usize + 2);
    for k in 0..=height as usize + 1 {
        for v in 0..p.len() {
            let (ea, eb) = boundary_scaling_exponents(k, mp.rank(v), height);
            let expected = scaled[k].vals[v].mul(&boundary_power(start, ea, eb));
            if general[k].vals[v] != expected {
                return Err(format!(
                    "step {k}, element {v}: boundary labels do not factor out as the table says"
                ));
            }
        }
    }
    Ok(())
}

/// Convenience wrapper for probabilistic runs on rational points.
pub fn probabilistic_trial(
    mp: &MinusculePoset,
    theorem: Theorem,
    seed: u64,
    trial: u64,
) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let start: Labeling<BigRational> = random_labeling(mp.poset(), &mut rng, 1 << 31);
    let orderings = coxeter_orderings(mp.lie().rank(), seed);
    dispatch(mp, theorem, &start, &orderings)
}
