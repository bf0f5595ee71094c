//! Piecewise-linear toggles and rowmotion.
//!
//! These are the tropicalizations of the birational maps: multiplication
//! becomes addition, division becomes subtraction, and addition becomes
//! either max or min depending on the sign variant.  The toggle at `v`
//! replaces `f(v)` by
//!
//! ```text
//! (max over lower covers of f) + (min over upper covers of f) - f(v)
//! ```
//!
//! for the max variant, and with max and min exchanged for the min variant,
//! covers taken in the bounded poset with boundary values `a` on top and
//! `b` on the bottom.  Specialized to 0/1 labelings these maps reproduce
//! the combinatorial toggles exactly, which is the bridge used to transfer
//! every multiplicative identity of the birational theory down to counting
//! statements about order ideals.

use num::{BigInt, BigRational};
use rand::Rng;

use crate::birational::Labeling;
use crate::catalog::MinusculePoset;
use crate::poset::{Ideal, Poset};

/// Which tropicalization of the birational toggle to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Max over lower covers plus min over upper covers.
    Max,
    /// Min over lower covers plus max over upper covers.
    Min,
}

fn extremum(vals: impl Iterator<Item = BigRational>, take_max: bool) -> BigRational {
    let mut best: Option<BigRational> = None;
    for x in vals {
        best = Some(match best {
            None => x,
            Some(b) => {
                if (x > b) == take_max {
                    x
                } else {
                    b
                }
            }
        });
    }
    best.expect("bounded poset gives every element a cover in each direction")
}

/// Applies the piecewise-linear toggle at `v`, in place.
pub fn toggle(p: &Poset, f: &mut Labeling<BigRational>, v: usize, variant: Variant) {
    let hat = p.hat();
    let lower = extremum(
        hat.lower_covers(v).into_iter().map(|w| f.get(w).clone()),
        variant == Variant::Max,
    );
    let upper = extremum(
        hat.upper_covers(v).into_iter().map(|z| f.get(z).clone()),
        variant == Variant::Min,
    );
    f.vals[v] = lower + upper - f.vals[v].clone();
}

/// Applies piecewise-linear rowmotion: toggles along a reversed linear
/// extension, so maximal elements are toggled first.
pub fn rowmotion(p: &Poset, f: &mut Labeling<BigRational>, variant: Variant) {
    let ext = p.linear_extension();
    for &v in ext.iter().rev() {
        toggle(p, f, v, variant);
    }
}

/// Applies the piecewise-linear file toggle of color `alpha`.
pub fn file_toggle(mp: &MinusculePoset, f: &mut Labeling<BigRational>, alpha: usize, variant: Variant) {
    for &v in mp.file(alpha) {
        toggle(mp.poset(), f, v, variant);
    }
}

/// Applies piecewise-linear Coxeter-motion; `color_order[0]` acts first.
pub fn coxeter_motion(
    mp: &MinusculePoset,
    f: &mut Labeling<BigRational>,
    color_order: &[usize],
    variant: Variant,
) {
    for &alpha in color_order {
        file_toggle(mp, f, alpha, variant);
    }
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Indicator labeling of the complement of an ideal: 0 on the ideal and the
/// bottom, 1 elsewhere, with boundary values 1 on top and 0 on the bottom.
/// Toggling with the max variant tracks the combinatorial toggle exactly.
pub fn complement_indicator(p: &Poset, ideal: &Ideal) -> Labeling<BigRational> {
    let vals = (0..p.len())
        .map(|v| if ideal.contains(v) { rat(0) } else { rat(1) })
        .collect();
    Labeling {
        vals,
        a: rat(1),
        b: rat(0),
    }
}

/// Indicator labeling of an ideal: 1 on the ideal and the bottom, 0
/// elsewhere, with boundary values 0 on top and 1 on the bottom.  Toggling
/// with the min variant tracks the combinatorial toggle exactly.
pub fn membership_indicator(p: &Poset, ideal: &Ideal) -> Labeling<BigRational> {
    let vals = (0..p.len())
        .map(|v| if ideal.contains(v) { rat(1) } else { rat(0) })
        .collect();
    Labeling {
        vals,
        a: rat(0),
        b: rat(1),
    }
}

/// Random rational labeling with numerators and denominators drawn
/// uniformly from `1..=bound`, for randomized piecewise-linear checks.
pub fn random_pl_labeling<R: Rng>(p: &Poset, rng: &mut R, bound: u64) -> Labeling<BigRational> {
    let draw = |rng: &mut R| {
        let num = rng.gen_range(1..=bound);
        let den = rng.gen_range(1..=bound);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    };
    let vals = (0..p.len()).map(|_| draw(rng)).collect();
    let a = draw(rng);
    let b = draw(rng);
    Labeling { vals, a, b }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat;
    use crate::cartan::Family;
    use crate::catalog::MinusculePoset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn indicator_toggles_track_combinatorial_toggles() {
        let mp = MinusculePoset::build(Family::B, 3, 3).unwrap();
        let p = mp.poset();
        for ideal in p.enumerate_ideals() {
            for v in 0..p.len() {
                let toggled = combinat::toggle(p, &ideal, v);

                let mut plus = complement_indicator(p, &ideal);
                toggle(p, &mut plus, v, Variant::Max);
                assert_eq!(plus, complement_indicator(p, &toggled));

                let mut minus = membership_indicator(p, &ideal);
                toggle(p, &mut minus, v, Variant::Min);
                assert_eq!(minus, membership_indicator(p, &toggled));
            }
        }
    }

    #[test]
    fn indicator_rowmotion_tracks_combinatorial_rowmotion() {
        let mp = MinusculePoset::build(Family::A, 3, 2).unwrap();
        let p = mp.poset();
        for ideal in p.enumerate_ideals() {
            let image = combinat::rowmotion(p, &ideal);

            let mut plus = complement_indicator(p, &ideal);
            rowmotion(p, &mut plus, Variant::Max);
            assert_eq!(plus, complement_indicator(p, &image));

            let mut minus = membership_indicator(p, &ideal);
            rowmotion(p, &mut minus, Variant::Min);
            assert_eq!(minus, membership_indicator(p, &image));
        }
    }

    #[test]
    fn indicator_coxeter_motion_tracks_combinatorial_coxeter_motion() {
        let mp = MinusculePoset::build(Family::B, 3, 3).unwrap();
        let p = mp.poset();
        let order = [2, 1, 3];
        for ideal in p.enumerate_ideals() {
            let image = combinat::coxeter_motion(&mp, &ideal, &order);
            let mut plus = complement_indicator(p, &ideal);
            coxeter_motion(&mp, &mut plus, &order, Variant::Max);
            assert_eq!(plus, complement_indicator(p, &image));
        }
    }

    #[test]
    fn pl_toggle_is_an_involution() {
        let mp = MinusculePoset::build(Family::D, 4, 1).unwrap();
        let p = mp.poset();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random_pl_labeling(p, &mut rng, 1000);
        for variant in [Variant::Max, Variant::Min] {
            for v in 0..p.len() {
                let mut g = f.clone();
                toggle(p, &mut g, v, variant);
                toggle(p, &mut g, v, variant);
                assert_eq!(g, f);
            }
        }
    }

    #[test]
    fn pl_rowmotion_has_period_equal_to_coxeter_number() {
        for (family, n, weight) in [(Family::A, 3, 2), (Family::B, 3, 3), (Family::D, 4, 4)] {
            let mp = MinusculePoset::build(family, n, weight).unwrap();
            let p = mp.poset();
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for variant in [Variant::Max, Variant::Min] {
                let f = random_pl_labeling(p, &mut rng, 1000);
                let mut cur = f.clone();
                for _ in 0..mp.coxeter_number() {
                    rowmotion(p, &mut cur, variant);
                }
                assert_eq!(cur, f, "{} {:?}", mp.lie(), variant);
            }
        }
    }

    #[test]
    fn pl_reciprocity_swaps_boundary_sum() {
        // Additive shadow of the multiplicative reciprocity: iterating to
        // the rank of an element evaluates there to a + b minus the initial
        // value at the involution partner.
        let mp = MinusculePoset::build(Family::C, 3, 1).unwrap();
        let p = mp.poset();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let f = random_pl_labeling(p, &mut rng, 1000);
        for variant in [Variant::Max, Variant::Min] {
            for v in 0..p.len() {
                let mut cur = f.clone();
                for _ in 0..mp.rank(v) {
                    rowmotion(p, &mut cur, variant);
                }
                let expected = f.a.clone() + f.b.clone() - f.vals[mp.iota(v)].clone();
                assert_eq!(cur.vals[v], expected, "element {v} {:?}", variant);
            }
        }
    }

    #[test]
    fn pl_file_sums_match_boundary_exponents_over_a_period() {
        // Additive shadow of file homomesy: summing a file over a full
        // period yields the boundary combination with the same exponents
        // as the multiplicative statement.
        use crate::birational::file_homomesy_exponents;
        let mp = MinusculePoset::build(Family::B, 2, 2).unwrap();
        let p = mp.poset();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let f = random_pl_labeling(p, &mut rng, 1000);
        let h = mp.coxeter_number() as usize;
        for alpha in 1..=2 {
            let mut total = rat(0);
            let mut cur = f.clone();
            for _ in 0..h {
                for &v in mp.file(alpha) {
                    total += cur.vals[v].clone();
                }
                rowmotion(p, &mut cur, Variant::Max);
            }
            let (ea, eb) = file_homomesy_exponents(mp.cartan(), 2, alpha);
            let expected = f.a.clone() * rat(ea) + f.b.clone() * rat(eb);
            assert_eq!(total, expected, "color {alpha}");
        }
    }
}
