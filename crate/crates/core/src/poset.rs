//! Finite posets with explicit cover relations.
//!
//! Elements are dense indices `0..len`. The [`Poset`] stores the Hasse
//! diagram in both directions plus precomputed strict down-sets, so order
//! comparisons are O(1). [`Ideal`] is a bit-vector over elements;
//! enumeration returns ideals in lexicographic bit-vector order (index 0
//! is the most significant position, absent < present). [`HatPoset`]
//! adjoins a global minimum and maximum, which is the index set used by
//! every toggle.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation ({0}, {1}) out of bounds for poset on {2} elements")]
    OutOfBounds(usize, usize, usize),
    #[error("relation ({0}, {0}) is reflexive; covers must be strict")]
    Reflexive(usize),
    #[error("relations contain a cycle")]
    Cyclic,
    #[error("relation ({0}, {1}) is transitively implied, not a cover")]
    NotACover(usize, usize),
}

/// A fixed-width bit set used for ideals and down-sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: Box<[u64]>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0u64; len.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty_set(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn union_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

impl Ord for Bits {
    /// Lexicographic on the bit string `b_0 b_1 ... b_{len-1}` with 0 < 1.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(other.words.iter()) {
            if a != b {
                let bit = (a ^ b).trailing_zeros();
                return if a >> bit & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter_ones().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// An order ideal (downward-closed subset), stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    bits: Bits,
}

impl Ideal {
    pub fn empty(len: usize) -> Self {
        Ideal {
            bits: Bits::new(len),
        }
    }

    pub fn from_bits(bits: Bits) -> Self {
        Ideal { bits }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    pub fn size(&self) -> usize {
        self.bits.count()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn with(&self, v: usize) -> Ideal {
        let mut b = self.bits.clone();
        b.set(v);
        Ideal { bits: b }
    }

    pub fn without(&self, v: usize) -> Ideal {
        let mut b = self.bits.clone();
        b.clear(v);
        Ideal { bits: b }
    }

    /// Checks downward closure with respect to `p`.
    pub fn is_ideal_of(&self, p: &Poset) -> bool {
        self.iter().all(|v| p.down(v).iter().all(|&w| self.contains(w)))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.bits)
    }
}

/// Rank function of a graded poset: minimal elements have rank 1, covers
/// increase rank by exactly 1, and all maximal elements share the top rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    ranks: Vec<u32>,
    height: u32,
}

impl RankFunction {
    pub fn rank(&self, v: usize) -> u32 {
        self.ranks[v]
    }

    /// The common rank of the maximal elements (0 for the empty poset).
    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }
}

/// An element of the bounds-adjoined poset: `Bottom` below everything,
/// `Top` above everything, `El(v)` the elements proper.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HatElem {
    Bottom,
    El(usize),
    Top,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    len: usize,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: Vec<Bits>,
}

impl Poset {
    /// Builds a poset from its Hasse diagram. Each pair `(lo, hi)` asserts
    /// that `hi` covers `lo`; transitively implied pairs are rejected.
    pub fn from_covers(len: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &(lo, hi) in covers {
            if lo >= len || hi >= len {
                return Err(PosetError::OutOfBounds(lo, hi, len));
            }
            if lo == hi {
                return Err(PosetError::Reflexive(lo));
            }
            if !up[lo].contains(&hi) {
                up[lo].push(hi);
                down[hi].push(lo);
            }
        }
        for adj in up.iter_mut().chain(down.iter_mut()) {
            adj.sort_unstable();
        }

        let order = topo_order(len, &down).ok_or(PosetError::Cyclic)?;
        let mut below = vec![Bits::new(len); len];
        for &v in &order {
            let mut acc = Bits::new(len);
            for &w in &down[v] {
                acc.set(w);
                acc.union_with(&below[w]);
            }
            below[v] = acc;
        }
        // (lo, hi) is a cover only if lo is not below another lower cover of hi.
        for v in 0..len {
            for &w in &down[v] {
                if down[v].iter().any(|&u| u != w && below[u].get(w)) {
                    return Err(PosetError::NotACover(w, v));
                }
            }
        }
        Ok(Poset {
            len,
            up,
            down,
            below,
        })
    }

    /// Builds a poset from arbitrary strict relations `(lo, hi)` meaning
    /// `lo < hi`; the Hasse diagram is recovered by transitive reduction.
    pub fn from_relations(len: usize, relations: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let mut down_full = vec![Vec::new(); len];
        for &(lo, hi) in relations {
            if lo >= len || hi >= len {
                return Err(PosetError::OutOfBounds(lo, hi, len));
            }
            if lo == hi {
                return Err(PosetError::Reflexive(lo));
            }
            down_full[hi].push(lo);
        }
        let order = topo_order(len, &down_full).ok_or(PosetError::Cyclic)?;
        let mut below = vec![Bits::new(len); len];
        for &v in &order {
            let mut acc = Bits::new(len);
            for &w in &down_full[v] {
                acc.set(w);
                acc.union_with(&below[w]);
            }
            below[v] = acc;
        }
        let mut covers = Vec::new();
        for v in 0..len {
            for w in below[v].iter_ones() {
                let is_cover = below[v]
                    .iter_ones()
                    .all(|u| u == w || !below[u].get(w));
                if is_cover {
                    covers.push((w, v));
                }
            }
        }
        Self::from_covers(len, &covers)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Elements covering `v`, in increasing index order.
    pub fn up(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    /// Elements covered by `v`, in increasing index order.
    pub fn down(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    /// Strict order comparison `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b].get(a)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len).filter(|&v| self.down[v].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len).filter(|&v| self.up[v].is_empty()).collect()
    }

    /// A deterministic linear extension: among available minimal elements,
    /// the smallest index is emitted first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut remaining: Vec<usize> = self.down.iter().map(|d| d.len()).collect();
        let mut ready: Vec<usize> = (0..self.len).filter(|&v| remaining[v] == 0).collect();
        let mut out = Vec::with_capacity(self.len);
        while let Some(pos) = ready.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i) {
            let v = ready.swap_remove(pos);
            out.push(v);
            for &w in &self.up[v] {
                remaining[w] -= 1;
                if remaining[w] == 0 {
                    ready.push(w);
                }
            }
        }
        debug_assert_eq!(out.len(), self.len);
        out
    }

    /// All order ideals in lexicographic bit-vector order (so the empty
    /// ideal comes first). The full lattice is materialized; the posets
    /// this library targets have at most a few thousand ideals.
    pub fn enumerate_ideals(&self) -> Vec<Ideal> {
        let ext = self.linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, Ideal::empty(self.len))];
        while let Some((i, ideal)) = stack.pop() {
            if i == ext.len() {
                out.push(ideal);
                continue;
            }
            let v = ext[i];
            if self.down[v].iter().all(|&w| ideal.contains(w)) {
                stack.push((i + 1, ideal.with(v)));
            }
            stack.push((i + 1, ideal));
        }
        out.sort_unstable();
        out
    }

    /// The rank function if the poset is graded (every maximal chain has
    /// the same length), otherwise `None`.
    pub fn rank_function(&self) -> Option<RankFunction> {
        let mut ranks = vec![0u32; self.len];
        for &v in &self.linear_extension() {
            ranks[v] = 1 + self.down[v].iter().map(|&w| ranks[w]).max().unwrap_or(0);
        }
        for v in 0..self.len {
            for &w in &self.up[v] {
                if ranks[w] != ranks[v] + 1 {
                    return None;
                }
            }
        }
        let height = ranks.iter().copied().max().unwrap_or(0);
        if self
            .maximal_elements()
            .iter()
            .any(|&v| ranks[v] != height)
        {
            return None;
        }
        Some(RankFunction { ranks, height })
    }

    /// The order ideal generated by `gens`: everything weakly below one.
    pub fn downward_closure(&self, gens: &[usize]) -> Ideal {
        let mut bits = Bits::new(self.len);
        for &g in gens {
            bits.set(g);
            bits.union_with(&self.below[g]);
        }
        Ideal { bits }
    }

    pub fn hat(&self) -> HatPoset<'_> {
        HatPoset { p: self }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(len={}, covers=[", self.len)?;
        let mut first = true;
        for v in 0..self.len {
            for &w in &self.up[v] {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "({v},{w})")?;
                first = false;
            }
        }
        write!(f, "])")
    }
}

/// View of a poset with a global minimum and maximum adjoined.
pub struct HatPoset<'a> {
    p: &'a Poset,
}

impl HatPoset<'_> {
    /// Lower covers of `v` in the bounds-adjoined poset.
    pub fn lower_covers(&self, v: usize) -> Vec<HatElem> {
        let d = self.p.down(v);
        if d.is_empty() {
            vec![HatElem::Bottom]
        } else {
            d.iter().map(|&w| HatElem::El(w)).collect()
        }
    }

    /// Upper covers of `v` in the bounds-adjoined poset.
    pub fn upper_covers(&self, v: usize) -> Vec<HatElem> {
        let u = self.p.up(v);
        if u.is_empty() {
            vec![HatElem::Top]
        } else {
            u.iter().map(|&w| HatElem::El(w)).collect()
        }
    }
}

fn topo_order(len: usize, down: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut up = vec![Vec::new(); len];
    for (v, d) in down.iter().enumerate() {
        for &w in d {
            up[w].push(v);
        }
    }
    let mut remaining: Vec<usize> = down.iter().map(|d| d.len()).collect();
    let mut ready: Vec<usize> = (0..len).filter(|&v| remaining[v] == 0).collect();
    let mut out = Vec::with_capacity(len);
    while let Some(v) = ready.pop() {
        out.push(v);
        for &w in &up[v] {
            remaining[w] -= 1;
            if remaining[w] == 0 {
                ready.push(w);
            }
        }
    }
    if out.len() == len {
        Some(out)
    } else {
        None
    }
}
