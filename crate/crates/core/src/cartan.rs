//! Cartan matrices of the finite simply-laced and B/C families, their exact
//! inverses, and the diagram data consumed by the homomesy exponents.
//!
//! The convention is `C[i][j] = <alpha_i^vee, alpha_j>`, so in type B the
//! entry `C[n][n-1]` equals -2 (the short root is alpha_n) and type C is the
//! transpose. Fundamental weights and coweights are paired by the inverse
//! matrix: `<omega_i^vee, omega_j> = (C^{-1})[i][j]`. All indices at this
//! API are 1-based to match the node numbering used throughout the catalog.

use num::rational::Ratio;
use num::{One, Zero};

pub type Rat = Ratio<i64>;

/// Dynkin family. E covers ranks 6 and 7 only; E8 has no minuscule weight
/// and nothing here needs it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    /// Smallest rank at which the family is defined here (avoiding the
    /// low-rank coincidences B_1 = A_1, C_1 = A_1, D_2 = A_1 x A_1).
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::E => 6,
        }
    }

    pub fn rank_legal(self, n: usize) -> bool {
        match self {
            Family::E => n == 6 || n == 7,
            f => n >= f.min_rank(),
        }
    }
}

/// Cartan matrix, its exact inverse, the diagram adjacency, and the
/// permutation induced by the longest Weyl element.
#[derive(Clone, Debug)]
pub struct CartanData {
    family: Family,
    n: usize,
    matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<Rat>>,
    neighbors: Vec<Vec<usize>>,
    minus_w0: Vec<usize>,
}

impl CartanData {
    pub fn new(family: Family, n: usize) -> CartanData {
        assert!(family.rank_legal(n), "{}_{n} is not supported", family.letter());
        let matrix = cartan_matrix(family, n);
        let inverse = invert_exact(&matrix);
        let mut neighbors = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && matrix[i][j] != 0 {
                    neighbors[i].push(j + 1);
                }
            }
        }
        let minus_w0 = minus_w0_perm(family, n);
        CartanData {
            family,
            n,
            matrix,
            inverse,
            neighbors,
            minus_w0,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `<alpha_i^vee, alpha_j>`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    /// `<omega_i^vee, omega_j> = (C^{-1})[i][j]`, 1-based.
    pub fn pairing(&self, i: usize, j: usize) -> Rat {
        self.inverse[i - 1][j - 1]
    }

    /// Diagram neighbors of node `i`, 1-based on both sides.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i - 1]
    }

    /// The Dynkin-diagram automorphism `i -> i*` with `-w_0(alpha_i) =
    /// alpha_{i*}`; also sends a fundamental weight `omega_r` to the class
    /// of its negative: `-w_0(omega_r) = omega_{r*}`.
    pub fn minus_w0(&self, i: usize) -> usize {
        self.minus_w0[i - 1]
    }

    /// Coxeter number of the root system.
    pub fn coxeter_number(&self) -> u32 {
        match self.family {
            Family::A => self.n as u32 + 1,
            Family::B | Family::C => 2 * self.n as u32,
            Family::D => 2 * self.n as u32 - 2,
            Family::E if self.n == 6 => 12,
            Family::E => 18,
        }
    }
}

fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let join = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 0..n - 1 {
                join(&mut m, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                join(&mut m, i, i + 1);
            }
            m[n - 1][n - 2] = -2;
        }
        Family::C => {
            for i in 0..n - 1 {
                join(&mut m, i, i + 1);
            }
            m[n - 2][n - 1] = -2;
        }
        Family::D => {
            for i in 0..n - 2 {
                join(&mut m, i, i + 1);
            }
            join(&mut m, n - 3, n - 1);
        }
        Family::E => {
            // Nodes: 2 hangs off 4; the branch node is 4.
            for &(i, j) in &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
                join(&mut m, i - 1, j - 1);
            }
            if n == 7 {
                join(&mut m, 5, 6);
            }
        }
    }
    m
}

fn minus_w0_perm(family: Family, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    match family {
        Family::A => {
            for (i, q) in p.iter_mut().enumerate() {
                *q = n - i;
            }
        }
        Family::B | Family::C => {}
        Family::D => {
            if n % 2 == 1 {
                p.swap(n - 2, n - 1);
            }
        }
        Family::E if n == 6 => {
            p.swap(0, 5);
            p.swap(2, 4);
        }
        Family::E => {}
    }
    p
}

/// Exact inverse by Gauss-Jordan elimination over the rationals. Cartan
/// matrices are tiny (rank at most 8 here) and unimodular up to the index
/// of the root lattice, so i64 numerators never get large.
fn invert_exact(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (acj, icj) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * acj;
                    inv[r][j] -= f * icj;
                }
            }
        }
    }
    inv
}
