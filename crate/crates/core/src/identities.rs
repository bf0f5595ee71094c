//! Structural identities underlying periodicity and homomesy.
//!
//! The key local object is the bipartite cover graph of a file: its black
//! vertices are the elements of one color, its white vertices are all their
//! covers and cocovers in the bounded poset.  On every minuscule poset each
//! connected component of such a graph is one of two shapes:
//!
//! * `G(m)`: a ladder of `m` black vertices in which consecutive blacks
//!   share exactly two whites, capped by one white below the lowest black
//!   and one above the highest;
//! * `H(m)`: the same with exactly one shared white per consecutive pair.
//!
//! Products of labels over one component telescope under both rowmotion
//! and the file toggle, giving multiplicative identities that are local to
//! the component.  This module discovers the components, classifies their
//! shapes, and evaluates both sides of the local identities, together with
//! two global reductions: rescaling the boundary labels to one, and
//! folding the symmetric rectangle onto the staircase.

use std::collections::HashMap;

use crate::birational::{FieldElem, Labeling};
use crate::cartan::Rat;
use crate::catalog::MinusculePoset;
use crate::poset::HatElem;

/// Shape of one connected component of a file's cover graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentShape {
    /// Ladder with two whites between consecutive blacks; `G(1)` is the
    /// three-element chain.
    G(usize),
    /// Chain with one white between consecutive blacks.
    H(usize),
}

/// One connected component of the cover graph of a file.
#[derive(Clone, Debug)]
pub struct FileComponent {
    /// Black vertices in rank order, lowest first.
    pub blacks: Vec<usize>,
    /// `between[i]` holds the whites shared by `blacks[i]` and
    /// `blacks[i+1]`: two for the ladder shape, one for the chain shape.
    pub between: Vec<Vec<usize>>,
    /// The unique white below the lowest black.
    pub bottom: HatElem,
    /// The unique white above the highest black.
    pub top: HatElem,
    pub shape: ComponentShape,
}

/// Decomposes the cover graph of the file of color `alpha` into connected
/// components and classifies each one.  Panics if a component is neither a
/// ladder nor a chain; on the supported posets that never happens.
pub fn file_components(mp: &MinusculePoset, alpha: usize) -> Vec<FileComponent> {
    let p = mp.poset();
    let hat = p.hat();
    let file = mp.file(alpha);

    // Blacks sharing a white vertex belong to one component.  Walk the
    // file in rank order and union consecutive ranges via shared whites.
    let mut owner: HashMap<HatElem, usize> = HashMap::new();
    let mut parent: Vec<usize> = (0..file.len()).collect();
    fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (bi, &b) in file.iter().enumerate() {
        let mut whites: Vec<HatElem> = hat.lower_covers(b);
        whites.extend(hat.upper_covers(b));
        for w in whites {
            match owner.get(&w) {
                None => {
                    owner.insert(w, bi);
                }
                Some(&other) => {
                    let (ra, rb) = (root(&mut parent, bi), root(&mut parent, other));
                    parent[ra] = rb;
                }
            }
        }
    }

    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for bi in 0..file.len() {
        let r = root(&mut parent, bi);
        groups.entry(r).or_default().push(file[bi]);
    }

    let mut components: Vec<FileComponent> = groups
        .into_values()
        .map(|mut blacks| {
            blacks.sort_by_key(|&v| mp.rank(v));
            let m = blacks.len();

            let lower = hat.lower_covers(blacks[0]);
            assert_eq!(lower.len(), 1, "lowest black has a unique lower cover");
            let bottom = lower[0];
            let upper = hat.upper_covers(blacks[m - 1]);
            assert_eq!(upper.len(), 1, "highest black has a unique upper cover");
            let top = upper[0];

            let mut between = Vec::with_capacity(m - 1);
            let mut width = None;
            for pair in blacks.windows(2) {
                let mut up: Vec<HatElem> = hat.upper_covers(pair[0]);
                let mut down: Vec<HatElem> = hat.lower_covers(pair[1]);
                up.sort_unstable();
                down.sort_unstable();
                assert_eq!(
                    up, down,
                    "consecutive blacks share all their intermediate whites"
                );
                let mids: Vec<usize> = up
                    .into_iter()
                    .map(|w| match w {
                        HatElem::El(x) => x,
                        _ => panic!("intermediate whites are poset elements"),
                    })
                    .collect();
                assert!(
                    mids.len() == 1 || mids.len() == 2,
                    "component is a ladder or a chain"
                );
                match width {
                    None => width = Some(mids.len()),
                    Some(w) => assert_eq!(w, mids.len(), "uniform width along the component"),
                }
                between.push(mids);
            }

            let shape = match width {
                Some(1) => ComponentShape::H(m),
                _ => ComponentShape::G(m),
            };
            FileComponent {
                blacks,
                between,
                bottom,
                top,
                shape,
            }
        })
        .collect();
    components.sort_by_key(|c| mp.rank(c.blacks[0]));
    components
}

/// Multiset of component shapes of a file, sorted for comparison.
pub fn file_shape(mp: &MinusculePoset, alpha: usize) -> Vec<ComponentShape> {
    let mut shapes: Vec<ComponentShape> = file_components(mp, alpha)
        .iter()
        .map(|c| c.shape)
        .collect();
    shapes.sort();
    shapes
}

/// Evaluates both sides of the local rowmotion identity on one component.
/// With blacks `x_1 < ... < x_m`, the left side multiplies the labels of
/// `x_i` in iterates `i-1` and `i`; the right side multiplies the bottom
/// white in iterate 0, each intermediate white of slot `i` in iterate `i`
/// (squared when the slot holds a single white), and the top white in
/// iterate `m`.  `iterates[k]` must be the `k`-th rowmotion image.
pub fn local_rowmotion_sides<T: FieldElem>(
    comp: &FileComponent,
    iterates: &[Labeling<T>],
) -> (T, T) {
    let m = comp.blacks.len();
    let one = iterates[0].a.one();

    let mut lhs = one.clone();
    for (i, &x) in comp.blacks.iter().enumerate() {
        lhs = lhs.mul(&iterates[i].vals[x]).mul(&iterates[i + 1].vals[x]);
    }

    let mut rhs = iterates[0].get(comp.bottom).clone();
    for (i, slot) in comp.between.iter().enumerate() {
        let it = &iterates[i + 1];
        match slot.as_slice() {
            [y] => {
                let f = &it.vals[*y];
                rhs = rhs.mul(f).mul(f);
            }
            [y, z] => {
                rhs = rhs.mul(&it.vals[*y]).mul(&it.vals[*z]);
            }
            _ => unreachable!("slots hold one or two whites"),
        }
    }
    rhs = rhs.mul(iterates[m].get(comp.top));
    (lhs, rhs)
}

/// Evaluates both sides of the local file-toggle identity on one
/// component: `after` must be the image of `before` under the file toggle
/// of the component's color.  No iterates appear; every white is read from
/// `before`.
pub fn local_file_toggle_sides<T: FieldElem>(
    comp: &FileComponent,
    before: &Labeling<T>,
    after: &Labeling<T>,
) -> (T, T) {
    let mut lhs = before.a.one();
    for &x in &comp.blacks {
        lhs = lhs.mul(&before.vals[x]).mul(&after.vals[x]);
    }

    let mut rhs = before.get(comp.bottom).clone();
    for slot in &comp.between {
        match slot.as_slice() {
            [y] => {
                let f = &before.vals[*y];
                rhs = rhs.mul(f).mul(f);
            }
            [y, z] => {
                rhs = rhs.mul(&before.vals[*y]).mul(&before.vals[*z]);
            }
            _ => unreachable!("slots hold one or two whites"),
        }
    }
    rhs = rhs.mul(before.get(comp.top));
    (lhs, rhs)
}

/// Boundary-scaling exponents on a graded poset of the given height: after
/// `k` rowmotion steps, `0 <= k <= height + 1`, the label of an element of
/// the given rank under general boundaries equals the label under unit
/// boundaries times `A^ea * B^eb` with `(ea, eb)` as returned here.
pub fn boundary_scaling_exponents(k: usize, rank: u32, height: u32) -> (i64, i64) {
    let (rank, height) = (rank as usize, height as usize);
    assert!((1..=height).contains(&rank));
    assert!(k <= height + 1, "one full period plus the start");
    if k == 0 || k == height + 1 {
        (0, 0)
    } else if k < rank {
        (1, 0)
    } else if k == rank {
        (1, 1)
    } else {
        (0, 1)
    }
}

/// Folds a labeling of the staircase onto the rectangle by symmetrizing:
/// the rectangle cell with coordinates `(i, j)` receives the staircase
/// label at `(min(i,j), max(i,j))`.  Boundary labels are copied across.
pub fn fold_staircase_labeling<T: FieldElem>(
    stair: &MinusculePoset,
    rect: &MinusculePoset,
    lab: &Labeling<T>,
) -> Labeling<T> {
    let by_coord: HashMap<(i64, i64), usize> =
        (0..stair.len()).map(|v| (stair.coord(v), v)).collect();
    let vals = (0..rect.len())
        .map(|v| {
            let (i, j) = rect.coord(v);
            let key = (i.min(j), i.max(j));
            lab.vals[by_coord[&key]].clone()
        })
        .collect();
    Labeling {
        vals,
        a: lab.a.clone(),
        b: lab.b.clone(),
    }
}

/// Ratio of the staircase iterate to the folded rectangle iterate at one
/// element: `1/2` before the element's rank, `1` at the rank, `2` after it
/// up to the height, and `1` again at one full period.
pub fn fold_factor(k: usize, rank: u32, height: u32) -> Rat {
    let (ea, eb) = boundary_scaling_exponents(k, rank, height);
    // Same table as boundary scaling with A = 1/2 and B = 2.
    let mut f = Rat::from_integer(1);
    for _ in 0..ea {
        f = f * Rat::new(1, 2);
    }
    for _ in 0..eb {
        f = f * Rat::new(2, 1);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birational::{
        boundary_monomial, file_toggle, random_labeling, rowmotion_iterates, symbolic,
        symbolic_unit_boundary,
    };
    use crate::cartan::Family;
    use crate::poset::Poset;
    use crate::ratfun::RatFun;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use ComponentShape::{G, H};

    fn shapes(family: Family, n: usize, weight: usize) -> Vec<Vec<ComponentShape>> {
        let mp = MinusculePoset::build(family, n, weight).unwrap();
        (1..=n).map(|alpha| file_shape(&mp, alpha)).collect()
    }

    #[test]
    fn rectangle_files_are_single_ladders() {
        // Width-2 rectangle: the ladder size is capped by the distance to
        // either end of the diagram and by the rectangle's sides.
        assert_eq!(
            shapes(Family::A, 5, 2),
            vec![vec![G(1)], vec![G(2)], vec![G(2)], vec![G(2)], vec![G(1)]],
        );
    }

    #[test]
    fn odd_orthogonal_files_end_in_a_long_chain() {
        assert_eq!(
            shapes(Family::B, 4, 4),
            vec![vec![G(1)], vec![G(2)], vec![G(3)], vec![H(4)]],
        );
    }

    #[test]
    fn symplectic_files_split_into_short_pieces() {
        assert_eq!(
            shapes(Family::C, 4, 1),
            vec![vec![G(1), G(1)], vec![G(1), G(1)], vec![H(2)], vec![G(1)]],
        );
    }

    #[test]
    fn fork_poset_files_meet_at_one_ladder() {
        assert_eq!(
            shapes(Family::D, 5, 1),
            vec![
                vec![G(1), G(1)],
                vec![G(1), G(1)],
                vec![G(2)],
                vec![G(1)],
                vec![G(1)],
            ],
        );
    }

    #[test]
    fn shifted_staircase_files_grow_then_scatter() {
        assert_eq!(
            shapes(Family::D, 5, 5),
            vec![
                vec![G(1)],
                vec![G(2)],
                vec![G(3)],
                vec![G(1), G(1)],
                vec![G(1), G(1)],
            ],
        );
    }

    #[test]
    fn exceptional_files_match_the_classification() {
        assert_eq!(
            shapes(Family::E, 6, 6),
            vec![
                vec![G(1), G(1)],
                vec![G(1), G(1)],
                vec![G(1), G(2)],
                vec![G(4)],
                vec![G(1), G(2)],
                vec![G(1), G(1)],
            ],
        );
        assert_eq!(
            shapes(Family::E, 7, 7),
            vec![
                vec![G(1), G(1)],
                vec![G(1), G(1), G(1)],
                vec![G(2), G(2)],
                vec![G(6)],
                vec![G(1), G(1), G(3)],
                vec![G(1), G(1), G(2)],
                vec![G(1), G(1), G(1)],
            ],
        );
    }

    #[test]
    fn components_carry_their_caps_and_middles() {
        // Odd orthogonal spin column: the last file is the full diagonal,
        // a chain from the bottom of the poset to the top.
        let mp = MinusculePoset::build(Family::B, 3, 3).unwrap();
        let comps = file_components(&mp, 3);
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert_eq!(c.shape, H(3));
        assert_eq!(c.bottom, HatElem::Bottom);
        assert_eq!(c.top, HatElem::Top);
        assert_eq!(c.between.iter().map(Vec::len).collect::<Vec<_>>(), [1, 1]);
    }

    #[test]
    fn local_rowmotion_identity_holds_symbolically() {
        for (family, n, weight) in [
            (Family::A, 3, 2),
            (Family::B, 3, 3),
            (Family::C, 3, 1),
            (Family::D, 4, 1),
            (Family::D, 4, 4),
        ] {
            let mp = MinusculePoset::build(family, n, weight).unwrap();
            let lab = symbolic(mp.poset());
            for alpha in 1..=n {
                for comp in file_components(&mp, alpha) {
                    let m = comp.blacks.len();
                    let its = rowmotion_iterates(mp.poset(), &lab, m + 1);
                    let (lhs, rhs) = local_rowmotion_sides(&comp, &its);
                    assert_eq!(lhs, rhs, "{} color {alpha}", mp.lie());
                }
            }
        }
    }

    #[test]
    fn local_file_toggle_identity_holds_numerically() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for (family, n, weight) in [
            (Family::A, 4, 2),
            (Family::B, 4, 4),
            (Family::C, 4, 1),
            (Family::D, 5, 1),
            (Family::D, 5, 5),
        ] {
            let mp = MinusculePoset::build(family, n, weight).unwrap();
            let before = random_labeling(mp.poset(), &mut rng, 1000);
            for alpha in 1..=n {
                let mut after = before.clone();
                file_toggle(&mp, &mut after, alpha);
                for comp in file_components(&mp, alpha) {
                    let (lhs, rhs) = local_file_toggle_sides(&comp, &before, &after);
                    assert_eq!(lhs, rhs, "{} color {alpha}", mp.lie());
                }
            }
        }
    }

    #[test]
    fn boundary_scaling_matches_symbolic_iterates() {
        // Graded but not minuscule: one minimum under two maxima, and two
        // disjoint chains; plus a minuscule staircase for good measure.
        let vee = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let two_chains = Poset::from_covers(4, &[(0, 1), (2, 3)]).unwrap();
        let stair = MinusculePoset::build(Family::B, 3, 3).unwrap();
        for p in [&vee, &two_chains, stair.poset()] {
            let ranks = p.rank_function().expect("graded poset");
            let height = ranks.height();
            let general = rowmotion_iterates(p, &symbolic(p), height as usize + 2);
            let unit = rowmotion_iterates(p, &symbolic_unit_boundary(p), height as usize + 2);
            for k in 0..=height as usize + 1 {
                for v in 0..p.len() {
                    let (ea, eb) = boundary_scaling_exponents(k, ranks.rank(v), height);
                    let expected = unit[k].vals[v].mul(&boundary_monomial(p.len(), ea, eb));
                    assert_eq!(general[k].vals[v], expected, "step {k} element {v}");
                }
            }
        }
    }

    #[test]
    fn staircase_iterates_match_the_folded_rectangle() {
        for r in [1usize, 2] {
            let stair = MinusculePoset::build(Family::B, r + 1, r + 1).unwrap();
            let rect = MinusculePoset::build(Family::A, 2 * r + 1, r + 1).unwrap();
            let height = stair.height();
            assert_eq!(rect.height(), height);

            let nv = crate::birational::symbolic_nvars(stair.len());
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
                    let expected = folded_its[k].vals[w].mul(&factor);
                    assert_eq!(its[k].vals[v], expected, "r={r} element {v} step {k}");
                }
            }
        }
    }

    #[test]
    fn fold_factor_table() {
        // Height 3, rank 2: halve before the rank, unit at the rank,
        // double past it, unit at the full period.
        let f: Vec<Rat> = (0..=4).map(|k| fold_factor(k, 2, 3)).collect();
        let expect: Vec<Rat> = [(1, 1), (1, 2), (1, 1), (2, 1), (1, 1)]
            .iter()
            .map(|&(n, d)| Rat::new(n, d))
            .collect();
        assert_eq!(f, expect);
    }
}
