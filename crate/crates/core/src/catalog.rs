//! The catalog of minuscule posets.
//!
//! Each entry is a finite subset of `Z^2` under the componentwise order,
//! together with a coloring of elements by simple roots (files), the
//! rank-reversing involution, and the ambient Cartan data. The five shapes:
//!
//! * type A, weight r: the full rectangle `[1,r] x [1,n+1-r]`;
//! * type B, weight n: the shifted staircase `{1 <= i <= j <= n}`;
//! * type C, weight 1: a chain of `2n-1` elements;
//! * type D, weight 1: the double-tailed diamond (two tails of length
//!   `n-2` joined through an incomparable pair);
//! * type D, weights n-1 and n: the shifted staircase `{1 <= i <= j <= n-1}`
//!   with two colorings differing by the swap of the fork colors;
//! * types E6 and E7: fixed 16- and 27-element subsets of `Z^2`.
//!
//! Element indices are assigned by sorting coordinates by (rank, i), so
//! every consumer sees the same deterministic numbering. `build` always
//! runs a structural validation pass: gradedness, height `h - 1`, the
//! involution being a color-compatible order-reversing involution, and
//! files being rank-sparse.

use std::fmt;

use thiserror::Error;

use crate::cartan::{CartanData, Family};
use crate::poset::{Poset, RankFunction};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("rank {n} is not supported for family {family:?}")]
    IllegalRank { family: Family, n: usize },
    #[error("weight {weight} is not minuscule for {family:?}_{n}")]
    IllegalWeight {
        family: Family,
        n: usize,
        weight: usize,
    },
}

/// A legal (family, rank, minuscule weight) triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    n: usize,
    weight: usize,
}

impl LieType {
    pub fn new(family: Family, n: usize, weight: usize) -> Result<LieType, CatalogError> {
        if !family.rank_legal(n) {
            return Err(CatalogError::IllegalRank { family, n });
        }
        if !minuscule_weights(family, n).contains(&weight) {
            return Err(CatalogError::IllegalWeight { family, n, weight });
        }
        Ok(LieType { family, n, weight })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> usize {
        self.weight
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}w{}", self.family.letter(), self.n, self.weight)
    }
}

/// The minuscule weights of the given family and rank.
pub fn minuscule_weights(family: Family, n: usize) -> Vec<usize> {
    if !family.rank_legal(n) {
        return Vec::new();
    }
    match family {
        Family::A => (1..=n).collect(),
        Family::B => vec![n],
        Family::C => vec![1],
        Family::D => vec![1, n - 1, n],
        Family::E if n == 6 => vec![1, 6],
        Family::E => vec![7],
    }
}

/// Every legal entry with rank at most `max_rank`, in a fixed order.
pub fn catalog(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E] {
        for n in family.min_rank()..=max_rank {
            for w in minuscule_weights(family, n) {
                out.push(LieType { family, n, weight: w });
            }
        }
    }
    out
}

/// A minuscule poset: shape, coloring, involution, and Cartan data.
pub struct MinusculePoset {
    lie: LieType,
    poset: Poset,
    coords: Vec<(i64, i64)>,
    colors: Vec<usize>,
    iota: Vec<usize>,
    ranks: RankFunction,
    files: Vec<Vec<usize>>,
    cartan: CartanData,
}

impl MinusculePoset {
    pub fn build(family: Family, n: usize, weight: usize) -> Result<MinusculePoset, CatalogError> {
        let lie = LieType::new(family, n, weight)?;
        let (coords, color_of) = shape_and_coloring(lie);

        let mut coords = coords;
        coords.sort_by_key(|&(i, j)| (i + j, i));
        let len = coords.len();
        let index_of = |c: (i64, i64)| -> usize {
            coords
                .iter()
                .position(|&x| x == c)
                .expect("involution target exists")
        };

        let mut relations = Vec::new();
        for a in 0..len {
            for b in 0..len {
                if a != b && coords[a].0 <= coords[b].0 && coords[a].1 <= coords[b].1 {
                    relations.push((a, b));
                }
            }
        }
        let poset =
            Poset::from_relations(len, &relations).expect("componentwise order is acyclic");
        let colors: Vec<usize> = coords.iter().map(|&c| color_of(c)).collect();
        let iota: Vec<usize> = coords
            .iter()
            .map(|&c| index_of(involution_target(lie, c)))
            .collect();
        let ranks = poset.rank_function().expect("minuscule posets are graded");
        let mut files = vec![Vec::new(); n];
        for v in 0..len {
            files[colors[v] - 1].push(v);
        }
        for file in &mut files {
            file.sort_by_key(|&v| ranks.rank(v));
        }
        let cartan = CartanData::new(family, n);

        let mp = MinusculePoset {
            lie,
            poset,
            coords,
            colors,
            iota,
            ranks,
            files,
            cartan,
        };
        mp.validate();
        Ok(mp)
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn coord(&self, v: usize) -> (i64, i64) {
        self.coords[v]
    }

    /// Simple-root color of `v`, in `1..=rank`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// The order-reversing involution.
    pub fn iota(&self, v: usize) -> usize {
        self.iota[v]
    }

    pub fn rank(&self, v: usize) -> u32 {
        self.ranks.rank(v)
    }

    /// Height of the poset; always `coxeter_number() - 1`.
    pub fn height(&self) -> u32 {
        self.ranks.height()
    }

    pub fn coxeter_number(&self) -> u32 {
        self.cartan.coxeter_number()
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    /// Elements of color `alpha` (1-based), sorted by rank.
    pub fn file(&self, alpha: usize) -> &[usize] {
        &self.files[alpha - 1]
    }

    /// The minimum-rank element of file `alpha`.
    pub fn file_base(&self, alpha: usize) -> usize {
        self.files[alpha - 1][0]
    }

    /// Structural invariants, checked at every construction. These are
    /// cheap (quadratic in a poset of at most a few dozen elements) and
    /// guard the tables against transcription slips.
    fn validate(&self) {
        let p = &self.poset;
        let n = self.lie.n;
        let h = self.coxeter_number();
        assert_eq!(self.height() + 1, h, "{}: height is h - 1", self.lie);
        assert_eq!(p.minimal_elements().len(), 1, "{}: unique minimum", self.lie);
        assert_eq!(p.maximal_elements().len(), 1, "{}: unique maximum", self.lie);
        let bottom = p.minimal_elements()[0];
        assert_eq!(
            self.colors[bottom], self.lie.weight,
            "{}: the minimum is colored by the weight",
            self.lie
        );

        for v in 0..p.len() {
            let iv = self.iota[v];
            assert_eq!(self.iota[iv], v, "{}: involution squares to id", self.lie);
            assert_eq!(
                self.ranks.rank(v) + self.ranks.rank(iv),
                h,
                "{}: involution reverses rank",
                self.lie
            );
            assert_eq!(
                self.colors[iv],
                self.cartan.minus_w0(self.colors[v]),
                "{}: involution twists colors by -w0",
                self.lie
            );
            for &w in p.up(v) {
                assert!(
                    p.lt(self.iota[w], iv),
                    "{}: involution reverses order",
                    self.lie
                );
            }
        }

        for alpha in 1..=n {
            let file = &self.files[alpha - 1];
            assert!(!file.is_empty(), "{}: color {alpha} appears", self.lie);
            for pair in file.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let (ra, rb) = (self.ranks.rank(a), self.ranks.rank(b));
                assert!(
                    rb >= ra + 2,
                    "{}: file {alpha} ranks are distinct with gaps >= 2",
                    self.lie
                );
                assert_eq!(
                    (rb - ra) % 2,
                    0,
                    "{}: file {alpha} ranks share parity",
                    self.lie
                );
            }
        }
    }
}

type ColorFn = Box<dyn Fn((i64, i64)) -> usize>;

fn shape_and_coloring(lie: LieType) -> (Vec<(i64, i64)>, ColorFn) {
    let n = lie.n as i64;
    match (lie.family, lie.weight) {
        (Family::A, r) => {
            let r = r as i64;
            let mut cells = Vec::new();
            for i in 1..=r {
                for j in 1..=(n + 1 - r) {
                    cells.push((i, j));
                }
            }
            (cells, Box::new(move |(i, j)| (r - i + j) as usize))
        }
        (Family::B, _) => {
            let mut cells = Vec::new();
            for i in 1..=n {
                for j in i..=n {
                    cells.push((i, j));
                }
            }
            (cells, Box::new(move |(i, j)| (n - (j - i)) as usize))
        }
        (Family::C, _) => {
            let mut cells: Vec<(i64, i64)> = (1..=n).map(|j| (1, j)).collect();
            cells.extend((2..=n).map(|i| (i, n)));
            (
                cells,
                Box::new(move |(i, j)| {
                    let k = i + j - 1;
                    k.min(2 * n - k) as usize
                }),
            )
        }
        (Family::D, 1) => {
            let mut cells: Vec<(i64, i64)> = (1..=n - 1).map(|j| (1, j)).collect();
            cells.push((2, n - 2));
            cells.extend((2..=n - 1).map(|i| (i, n - 1)));
            (
                cells,
                Box::new(move |(i, j)| {
                    let k = i + j - 1;
                    if (i, j) == (1, n - 1) {
                        (n - 1) as usize
                    } else if (i, j) == (2, n - 2) {
                        n as usize
                    } else if k <= n - 2 {
                        k as usize
                    } else {
                        (2 * n - 2 - k) as usize
                    }
                }),
            )
        }
        (Family::D, w) => {
            // Shifted staircase; weight n-1 swaps the two fork colors.
            let swap = w == lie.n - 1;
            let mut cells = Vec::new();
            for i in 1..=n - 1 {
                for j in i..=n - 1 {
                    cells.push((i, j));
                }
            }
            (
                cells,
                Box::new(move |(i, j)| {
                    let c = if i == j {
                        if i % 2 == 1 {
                            n
                        } else {
                            n - 1
                        }
                    } else {
                        n - 1 - (j - i)
                    };
                    let c = c as usize;
                    if swap {
                        if c == n as usize {
                            n as usize - 1
                        } else if c == n as usize - 1 {
                            n as usize
                        } else {
                            c
                        }
                    } else {
                        c
                    }
                }),
            )
        }
        (Family::E, _) => {
            let (cells, colors): (&[(i64, i64)], &[usize]) = if lie.n == 6 {
                (&E6_CELLS, &E6_COLORS)
            } else {
                (&E7_CELLS, &E7_COLORS)
            };
            let table: Vec<((i64, i64), usize)> =
                cells.iter().copied().zip(colors.iter().copied()).collect();
            // The two E6 weights give the same shape; colors differ by the
            // diagram flip 1 <-> 6, 3 <-> 5.
            let flip = lie.n == 6 && lie.weight == 1;
            (
                cells.to_vec(),
                Box::new(move |c| {
                    let raw = table
                        .iter()
                        .find(|(cc, _)| *cc == c)
                        .expect("cell in table")
                        .1;
                    if flip {
                        match raw {
                            1 => 6,
                            6 => 1,
                            3 => 5,
                            5 => 3,
                            other => other,
                        }
                    } else {
                        raw
                    }
                }),
            )
        }
    }
}

fn involution_target(lie: LieType, (i, j): (i64, i64)) -> (i64, i64) {
    let n = lie.n as i64;
    match (lie.family, lie.weight) {
        (Family::A, r) => {
            let r = r as i64;
            (r + 1 - i, n + 2 - r - j)
        }
        (Family::B, _) => (n + 1 - j, n + 1 - i),
        (Family::C, _) => {
            let m = 2 * n - (i + j - 1);
            if m <= n {
                (1, m)
            } else {
                (m - n + 1, n)
            }
        }
        (Family::D, 1) => {
            if (i, j) == (1, n - 1) || (i, j) == (2, n - 2) {
                if n % 2 == 1 {
                    // Odd rank swaps the incomparable pair.
                    if (i, j) == (1, n - 1) {
                        (2, n - 2)
                    } else {
                        (1, n - 1)
                    }
                } else {
                    (i, j)
                }
            } else {
                let m = 2 * n - 2 - (i + j - 1);
                if m <= n - 2 {
                    (1, m)
                } else {
                    (m - n + 2, n - 1)
                }
            }
        }
        (Family::D, _) => (n - j, n - i),
        (Family::E, _) => {
            if lie.n == 6 {
                (9 - i, 5 - j)
            } else {
                (10 - j, 10 - i)
            }
        }
    }
}

const E6_CELLS: [(i64, i64); 16] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (5, 1),
    (3, 2),
    (4, 2),
    (5, 2),
    (4, 3),
    (5, 3),
    (6, 3),
    (4, 4),
    (5, 4),
    (6, 4),
    (7, 4),
    (8, 4),
];

const E6_COLORS: [usize; 16] = [6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1];

const E7_CELLS: [(i64, i64); 27] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 5),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (4, 7),
    (5, 5),
    (5, 6),
    (5, 7),
    (4, 8),
    (4, 9),
    (5, 8),
    (5, 9),
    (6, 8),
    (6, 9),
    (7, 9),
    (8, 9),
    (9, 9),
];

const E7_COLORS: [usize; 27] = [
    7, 6, 5, 4, 3, 1, 2, 4, 3, 5, 4, 2, 6, 5, 4, 7, 6, 5, 3, 1, 4, 3, 2, 4, 5, 6, 7,
];
