//! Closed-form rowmotion iterates on the fork poset (type D, weight 1).
//!
//! That poset is a chain that splits into two incomparable elements at its
//! middle rank and rejoins.  In chain coordinates every rowmotion iterate
//! is the reciprocal of a sum of at most two monomials, and the monomials
//! are explicit interval products of the coordinate variables.  This module
//! implements those formulas directly from the poset combinatorics, with no
//! reference to the toggle dynamics, so it serves as an independent oracle
//! for the birational engine: both sides compute the same rational
//! functions by unrelated routes.
//!
//! Conventions.  Elements are indexed abstractly by `1..=2n-3` from the top
//! (index `i` has rank `2n-2-i`), except that index `n-1` stands for the
//! two fork elements, written with a sign.  The chain coordinate of the
//! element with abstract index `i` is `z_i`.  The interval product `C(i;l)`
//! is `z_i * z_{i+1} * ... * z_{i+l-1}`; when the interval covers the fork
//! index the product takes one of the two fork coordinates and carries that
//! sign.  Both boundary labels are fixed to one, which loses no generality
//! by the boundary-scaling relation for graded posets.

use crate::catalog::MinusculePoset;
use crate::cartan::Family;
use crate::ratfun::RatFun;
use crate::birational::symbolic_nvars;

/// Identification of the fork poset's elements by abstract chain index.
pub struct DiamondChart {
    n: usize,
    /// `chain[i]` is the element with abstract index `i` (1-based); the
    /// fork slot `n-1` is unused.
    chain: Vec<usize>,
    fork: [usize; 2],
    nvars: usize,
}

/// Sign selecting one fork coordinate, or neither for intervals that do
/// not reach the fork.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForkSign {
    Plus,
    Minus,
}

impl ForkSign {
    fn flip(self) -> ForkSign {
        match self {
            ForkSign::Plus => ForkSign::Minus,
            ForkSign::Minus => ForkSign::Plus,
        }
    }

    /// The sign multiplied by `(-1)^k`.
    fn twist(self, k: usize) -> ForkSign {
        if k % 2 == 0 {
            self
        } else {
            self.flip()
        }
    }
}

impl DiamondChart {
    /// Builds the chart for a type D weight-1 poset.
    pub fn new(mp: &MinusculePoset) -> DiamondChart {
        assert_eq!(mp.lie().family(), Family::D, "fork poset is type D");
        assert_eq!(mp.lie().weight(), 1, "fork poset is the first weight");
        let n = mp.lie().rank();
        let top = 2 * n - 3;
        let mut chain = vec![usize::MAX; top + 1];
        let mut fork = Vec::new();
        for v in 0..mp.len() {
            let r = mp.rank(v) as usize;
            if r == n - 1 {
                fork.push(v);
            } else {
                let i = 2 * n - 2 - r;
                assert_eq!(chain[i], usize::MAX, "one element per rank off the fork");
                chain[i] = v;
            }
        }
        assert_eq!(fork.len(), 2, "exactly two elements at the middle rank");
        fork.sort_unstable();
        DiamondChart {
            n,
            chain,
            fork: [fork[0], fork[1]],
            nvars: symbolic_nvars(mp.len()),
        }
    }

    /// The element carrying abstract index `i` (not the fork index).
    pub fn element(&self, i: usize) -> usize {
        assert_ne!(i, self.n - 1);
        self.chain[i]
    }

    /// The fork element with the given sign.
    pub fn fork_element(&self, sign: ForkSign) -> usize {
        match sign {
            ForkSign::Plus => self.fork[0],
            ForkSign::Minus => self.fork[1],
        }
    }

    /// The abstract position of an element: `Ok(i)` off the fork,
    /// `Err(sign)` for a fork element.
    pub fn position(&self, v: usize) -> Result<usize, ForkSign> {
        if v == self.fork[0] {
            Err(ForkSign::Plus)
        } else if v == self.fork[1] {
            Err(ForkSign::Minus)
        } else {
            Ok(self
                .chain
                .iter()
                .position(|&u| u == v)
                .expect("element belongs to the chart"))
        }
    }

    /// Interval product of chain coordinates `z_i ... z_{i+l-1}`.  The
    /// interval must avoid the fork index when `sign` is `None` and must
    /// contain it when a sign is given.
    pub fn interval_product(&self, i: usize, l: usize, sign: Option<ForkSign>) -> RatFun {
        let n = self.n;
        let last = i + l - 1;
        assert!(i >= 1 && last <= 2 * n - 3, "interval stays inside the chain");
        let covers_fork = i <= n - 1 && n - 1 <= last;
        assert_eq!(
            covers_fork,
            sign.is_some(),
            "sign is given exactly when the interval covers the fork"
        );
        let mut exps = Vec::with_capacity(l);
        for j in i..=last {
            let v = if j == n - 1 {
                self.fork_element(sign.unwrap())
            } else {
                self.chain[j]
            };
            exps.push((v, 1));
        }
        RatFun::laurent(self.nvars, &exps)
    }

    /// The initial label of `v` in chain coordinates: the sum over the one
    /// or two maximal interval products descending from `v` to the bottom.
    pub fn initial_value(&self, v: usize) -> RatFun {
        let n = self.n;
        match self.position(v) {
            Err(sign) => self.interval_product(n - 1, n - 1, Some(sign)),
            Ok(i) => {
                let l = 2 * n - 2 - i;
                if i <= n - 2 {
                    self.interval_product(i, l, Some(ForkSign::Plus))
                        .add(&self.interval_product(i, l, Some(ForkSign::Minus)))
                } else {
                    self.interval_product(i, l, None)
                }
            }
        }
    }

    /// The label of `v` after `k` rowmotion steps, `1 <= k <= rank(v)`,
    /// starting from the initial chain-coordinate labels with both
    /// boundaries equal to one.
    pub fn iterate_value(&self, k: usize, v: usize) -> RatFun {
        let n = self.n;
        match self.position(v) {
            Err(sign) => {
                assert!(1 <= k && k <= n - 1, "window is the rank of the fork");
                self.interval_product(k, n - 1, Some(sign.twist(k - 1)))
                    .inv()
            }
            Ok(i) if i <= n - 2 => {
                assert!(1 <= k && k <= 2 * n - 2 - i, "window is the rank");
                if k <= n - 1 - i || k >= n {
                    self.interval_product(k, i, None).inv()
                } else {
                    self.interval_product(k, i, Some(ForkSign::Plus))
                        .inv()
                        .add(&self.interval_product(k, i, Some(ForkSign::Minus)).inv())
                }
            }
            Ok(i) => {
                assert!(1 <= k && k <= 2 * n - 2 - i, "window is the rank");
                self.interval_product(k, i, Some(ForkSign::Plus))
                    .add(&self.interval_product(k, i, Some(ForkSign::Minus)))
                    .inv()
            }
        }
    }
}
