//! Combinatorial rowmotion on order ideals.
//!
//! The primary route sends an ideal to the ideal generated by the minimal
//! elements of its complement. The toggle route composes single-element
//! toggles along a reversed linear extension (maximal elements first);
//! the two agree on every ideal, and the library keeps both so each can
//! serve as the other's oracle. File toggles (all elements of one color,
//! which are pairwise non-adjacent in the Hasse diagram) compose into
//! Coxeter-motion, the combinatorial shadow of its birational namesake.

use std::collections::HashMap;

use num::integer::lcm;

use crate::cartan::Rat;
use crate::catalog::MinusculePoset;
use crate::poset::{Ideal, Poset};

/// Toggles `v`: inserts or removes it when the result is still an ideal,
/// otherwise returns the ideal unchanged.
pub fn toggle(p: &Poset, ideal: &Ideal, v: usize) -> Ideal {
    if ideal.contains(v) {
        if p.up(v).iter().all(|&w| !ideal.contains(w)) {
            return ideal.without(v);
        }
    } else if p.down(v).iter().all(|&w| ideal.contains(w)) {
        return ideal.with(v);
    }
    ideal.clone()
}

/// Rowmotion: the ideal generated by the minimal elements of the
/// complement of `ideal`.
pub fn rowmotion(p: &Poset, ideal: &Ideal) -> Ideal {
    let gens: Vec<usize> = (0..p.len())
        .filter(|&v| !ideal.contains(v) && p.down(v).iter().all(|&w| ideal.contains(w)))
        .collect();
    p.downward_closure(&gens)
}

/// Rowmotion as a toggle composition along a reversed linear extension.
pub fn rowmotion_by_toggles(p: &Poset, ideal: &Ideal) -> Ideal {
    let mut out = ideal.clone();
    for &v in p.linear_extension().iter().rev() {
        out = toggle(p, &out, v);
    }
    out
}

/// Toggles every element of one file. The elements of a file are pairwise
/// non-adjacent in the Hasse diagram, so the order does not matter.
pub fn file_toggle(mp: &MinusculePoset, ideal: &Ideal, alpha: usize) -> Ideal {
    let mut out = ideal.clone();
    for &v in mp.file(alpha) {
        out = toggle(mp.poset(), &out, v);
    }
    out
}

/// Coxeter-motion: file toggles composed in the given color order, with
/// `color_order[0]` applied first.
pub fn coxeter_motion(mp: &MinusculePoset, ideal: &Ideal, color_order: &[usize]) -> Ideal {
    let mut out = ideal.clone();
    for &alpha in color_order {
        out = file_toggle(mp, &out, alpha);
    }
    out
}

/// The orbits of a map on the full ideal lattice, each orbit listed in
/// visiting order starting from its lexicographically smallest unseen seed.
pub fn orbits_of<F>(p: &Poset, step: F) -> Vec<Vec<Ideal>>
where
    F: Fn(&Ideal) -> Ideal,
{
    let all = p.enumerate_ideals();
    let index: HashMap<Ideal, usize> = all
        .iter()
        .enumerate()
        .map(|(i, ideal)| (ideal.clone(), i))
        .collect();
    let mut seen = vec![false; all.len()];
    let mut orbits = Vec::new();
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = all[start].clone();
        loop {
            let i = *index.get(&cur).expect("step preserves the ideal lattice");
            if seen[i] {
                break;
            }
            seen[i] = true;
            orbit.push(cur.clone());
            cur = step(&cur);
        }
        assert_eq!(
            orbit[0],
            cur,
            "orbit closes back to its seed; the map must be a bijection"
        );
        orbits.push(orbit);
    }
    orbits
}

/// Orbits of rowmotion on the ideal lattice.
pub fn rowmotion_orbits(p: &Poset) -> Vec<Vec<Ideal>> {
    orbits_of(p, |ideal| rowmotion(p, ideal))
}

/// The order of rowmotion: the least common multiple of its orbit sizes.
pub fn rowmotion_order(p: &Poset) -> u64 {
    rowmotion_orbits(p)
        .iter()
        .fold(1u64, |acc, orbit| lcm(acc, orbit.len() as u64))
}

/// Average of `#(I intersect file alpha)` over one orbit, for every color.
/// File homomesy says these averages agree across orbits and equal the
/// weight pairing `<omega_alpha^vee, lambda>`.
pub fn file_averages(mp: &MinusculePoset, orbit: &[Ideal]) -> Vec<Rat> {
    (1..=mp.cartan().rank())
        .map(|alpha| {
            let total: usize = orbit
                .iter()
                .map(|ideal| mp.file(alpha).iter().filter(|&&v| ideal.contains(v)).count())
                .sum();
            Rat::new(total as i64, orbit.len() as i64)
        })
        .collect()
}
