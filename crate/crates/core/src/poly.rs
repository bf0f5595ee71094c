//! Sparse multivariate polynomials over the integers.
//!
//! Terms are kept sorted in descending graded-lexicographic order with no
//! zero coefficients, so structural equality is polynomial equality. The
//! exponent of every variable lives in a fixed-width vector; all inputs to
//! a binary operation must agree on the variable count.
//!
//! Division is exact multivariate division (returning `None` on any
//! non-divisibility), and the gcd is the classic primitive polynomial
//! remainder sequence: split off integer content, recurse on the content
//! and primitive part with respect to the highest occurring variable, and
//! run pseudo-remainders in that variable. Cheap shortcuts (zero, equal,
//! monomial factors, trial division) cover the cases rational-function
//! normalization hits most often.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Term {
    exps: Box<[u16]>,
    coeff: BigInt,
}

/// Descending graded-lexicographic order on exponent vectors.
fn cmp_grlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<Term>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.push(Term {
                exps: vec![0u16; nvars].into_boxed_slice(),
                coeff: c,
            });
        }
        p
    }

    pub fn one(nvars: usize) -> MultiPoly {
        MultiPoly::constant(nvars, BigInt::one())
    }

    pub fn var(nvars: usize, v: usize) -> MultiPoly {
        assert!(v < nvars);
        let mut exps = vec![0u16; nvars];
        exps[v] = 1;
        MultiPoly {
            nvars,
            terms: vec![Term {
                exps: exps.into_boxed_slice(),
                coeff: BigInt::one(),
            }],
        }
    }

    /// A single term `c * prod x_i^{e_i}`.
    pub fn monomial(nvars: usize, exps: &[u16], c: BigInt) -> MultiPoly {
        assert_eq!(exps.len(), nvars);
        if c.is_zero() {
            return MultiPoly::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![Term {
                exps: exps.to_vec().into_boxed_slice(),
                coeff: c,
            }],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].coeff.is_one()
            && self.terms[0].exps.iter().all(|&e| e == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.exps.iter().all(|&e| e == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exponent vector and coefficient of the k-th term (grlex descending).
    pub fn term(&self, k: usize) -> (&[u16], &BigInt) {
        let t = &self.terms[k];
        (&t.exps, &t.coeff)
    }

    /// Leading coefficient in the graded-lexicographic order.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map_or(BigInt::zero(), |t| t.coeff.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.exps.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    coeff: -&t.coeff,
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_grlex(&self.terms[i].exps, &other.terms[j].exps) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].coeff + &other.terms[j].coeff;
                    if !c.is_zero() {
                        terms.push(Term {
                            exps: self.terms[i].exps.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        // Single-term multiplication shows up constantly in normalization.
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0]);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0]);
        }
        let mut acc: std::collections::BTreeMap<Box<[u16]>, BigInt> =
            std::collections::BTreeMap::new();
        for s in &self.terms {
            for t in &other.terms {
                let exps: Box<[u16]> = s
                    .exps
                    .iter()
                    .zip(t.exps.iter())
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                let c = &s.coeff * &t.coeff;
                match acc.entry(exps) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .map(|(exps, coeff)| Term { exps, coeff })
            .collect();
        terms.sort_unstable_by(|s, t| cmp_grlex(&t.exps, &s.exps));
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    fn mul_term(&self, t: &Term) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|s| Term {
                    exps: s
                        .exps
                        .iter()
                        .zip(t.exps.iter())
                        .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                        .collect(),
                    coeff: &s.coeff * &t.coeff,
                })
                .collect(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for t in &self.terms {
            let mut m = BigRational::from(t.coeff.clone());
            for (v, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    m *= point[v].pow(e as i32);
                }
            }
            acc += m;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigInt::zero();
        for t in &self.terms {
            let mut m = t.coeff.clone();
            for (v, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    m *= point[v].pow(e as u32);
                }
            }
            acc += m;
        }
        acc
    }

    /// Greatest common divisor of all coefficients (zero for the zero
    /// polynomial); always nonnegative.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for t in &self.terms {
            g = g.gcd(&t.coeff);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> MultiPoly {
        assert!(!c.is_zero());
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let (q, r) = t.coeff.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    Term {
                        exps: t.exps.clone(),
                        coeff: q,
                    }
                })
                .collect(),
        }
    }

    /// Componentwise minimum of all exponent vectors: the largest monomial
    /// dividing every term.
    pub fn monomial_content(&self) -> Vec<u16> {
        let mut m = match self.terms.first() {
            None => return vec![0; self.nvars],
            Some(t) => t.exps.to_vec(),
        };
        for t in &self.terms[1..] {
            for (a, &b) in m.iter_mut().zip(t.exps.iter()) {
                *a = (*a).min(b);
            }
            if m.iter().all(|&e| e == 0) {
                break;
            }
        }
        m
    }

    /// Divides out the given monomial; every term must be divisible.
    pub fn div_monomial(&self, m: &[u16]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t
                        .exps
                        .iter()
                        .zip(m.iter())
                        .map(|(&a, &b)| {
                            debug_assert!(a >= b, "inexact monomial division");
                            a - b
                        })
                        .collect(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Exact multivariate division: `Some(q)` with `self = q * d`, or
    /// `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero(self.nvars));
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let dl = &d.terms[0];
        let mut rem = self.clone();
        let mut q_terms: Vec<Term> = Vec::new();
        while !rem.is_zero() {
            let rl = &rem.terms[0];
            if rl.exps.iter().zip(dl.exps.iter()).any(|(&a, &b)| a < b) {
                return None;
            }
            let (qc, rr) = rl.coeff.div_rem(&dl.coeff);
            if !rr.is_zero() {
                return None;
            }
            let qt = Term {
                exps: rl
                    .exps
                    .iter()
                    .zip(dl.exps.iter())
                    .map(|(&a, &b)| a - b)
                    .collect(),
                coeff: qc,
            };
            let prod = d.mul_term(&qt);
            rem = rem.sub(&prod);
            q_terms.push(qt);
        }
        // Quotient terms are produced in strictly decreasing grlex order.
        Some(MultiPoly {
            nvars: self.nvars,
            terms: q_terms,
        })
    }

    /// Highest variable index with a positive exponent anywhere.
    fn max_var(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for t in &self.terms {
            for (v, &e) in t.exps.iter().enumerate().rev() {
                if e > 0 {
                    best = Some(best.map_or(v, |b| b.max(v)));
                    break;
                }
            }
        }
        best
    }

    fn deg_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|t| t.exps[v]).max().unwrap_or(0)
    }

    /// Coefficients of `self` as a univariate polynomial in `x_v`; entry k
    /// is the coefficient of `x_v^k`, with the variable slot zeroed.
    fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let d = self.deg_in(v) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); d + 1];
        for t in &self.terms {
            let k = t.exps[v] as usize;
            let mut exps = t.exps.clone();
            exps[v] = 0;
            out[k].terms.push(Term {
                exps,
                coeff: t.coeff.clone(),
            });
        }
        for c in &mut out {
            c.terms.sort_unstable_by(|s, t| cmp_grlex(&t.exps, &s.exps));
        }
        out
    }

    fn from_coeffs_in(nvars: usize, v: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut acc = MultiPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![0u16; nvars];
            exps[v] = k as u16;
            acc = acc.add(&c.mul_term(&Term {
                exps: exps.into_boxed_slice(),
                coeff: BigInt::one(),
            }));
        }
        acc
    }

    /// Content with respect to `x_v`: the gcd of the `x_v`-coefficients.
    fn content_in(&self, v: usize) -> MultiPoly {
        let coeffs = self.coeffs_in(v);
        let mut g = MultiPoly::zero(self.nvars);
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Flips the sign so the leading coefficient is positive.
    fn normalize_sign(mut self) -> MultiPoly {
        if self
            .terms
            .first()
            .is_some_and(|t| t.coeff.is_negative())
        {
            for t in &mut self.terms {
                t.coeff = -&t.coeff;
            }
        }
        self
    }

    /// Renders with the given variable names.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.abs();
            if k == 0 {
                if t.coeff.is_negative() {
                    out.push('-');
                }
            } else if t.coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let has_vars = t.exps.iter().any(|&e| e > 0);
            if !mag.is_one() || !has_vars {
                out.push_str(&mag.to_string());
                if has_vars {
                    out.push('*');
                }
            }
            let mut first = true;
            for (v, &e) in t.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(names[v]);
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|v| format!("x{v}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.render(&refs))
    }
}

/// Pseudo-remainder of `f` by `g` with respect to `x_v`: repeatedly scales
/// by the leading coefficient of `g` and cancels the top term, so the
/// result is a valid remainder up to a unit for the primitive sequence.
fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, v: usize) -> MultiPoly {
    let dg = g.deg_in(v);
    debug_assert!(dg > 0);
    let g_coeffs = g.coeffs_in(v);
    let lc_g = &g_coeffs[dg as usize];
    let mut r_coeffs = f.coeffs_in(v);
    while r_coeffs.len() > dg as usize {
        let dr = r_coeffs.len() - 1;
        let lead = r_coeffs[dr].clone();
        if lead.is_zero() {
            r_coeffs.pop();
            continue;
        }
        // r <- lc(g) * r  -  lead * x_v^{dr-dg} * g
        for c in r_coeffs.iter_mut() {
            *c = c.mul(lc_g);
        }
        let shift = dr - dg as usize;
        for (k, gc) in g_coeffs.iter().enumerate() {
            let t = lead.mul(gc);
            r_coeffs[shift + k] = r_coeffs[shift + k].sub(&t);
        }
        debug_assert!(r_coeffs[dr].is_zero());
        r_coeffs.pop();
    }
    MultiPoly::from_coeffs_in(f.nvars, v, &r_coeffs)
}

/// Greatest common divisor, normalized to a positive leading coefficient.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    assert_eq!(p.nvars, q.nvars);
    if p.is_zero() {
        return q.clone().normalize_sign();
    }
    if q.is_zero() {
        return p.clone().normalize_sign();
    }
    if p == q {
        return p.clone().normalize_sign();
    }

    // Integer content and common monomial come off first.
    let cp = p.int_content();
    let cq = q.int_content();
    let c = cp.gcd(&cq);
    let p = p.div_scalar_exact(&cp);
    let q = q.div_scalar_exact(&cq);
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let m: Vec<u16> = mp.iter().zip(mq.iter()).map(|(&a, &b)| a.min(b)).collect();
    let p = p.div_monomial(&mp);
    let q = q.div_monomial(&mq);
    let reattach = |g: MultiPoly| -> MultiPoly {
        g.mul_term(&Term {
            exps: m.clone().into_boxed_slice(),
            coeff: c.clone(),
        })
        .normalize_sign()
    };

    if p.is_one() || q.is_one() {
        return reattach(MultiPoly::one(p.nvars));
    }
    // Trial division settles the common "one side divides the other" case.
    if q.div_exact(&p).is_some() {
        return reattach(p.clone().normalize_sign());
    }
    if p.div_exact(&q).is_some() {
        return reattach(q.clone().normalize_sign());
    }

    let v = match p.max_var().into_iter().chain(q.max_var()).max() {
        Some(v) => v,
        None => return reattach(MultiPoly::one(p.nvars)),
    };
    if p.deg_in(v) == 0 {
        return reattach(gcd(&p, &q.content_in(v)));
    }
    if q.deg_in(v) == 0 {
        return reattach(gcd(&p.content_in(v), &q));
    }

    let cont_p = p.content_in(v);
    let cont_q = q.content_in(v);
    let cont_gcd = gcd(&cont_p, &cont_q);
    let mut f = p.div_exact(&cont_p).expect("content divides");
    let mut g = q.div_exact(&cont_q).expect("content divides");
    if f.deg_in(v) < g.deg_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            let pp = g.div_exact(&g.content_in(v)).expect("content divides");
            return reattach(cont_gcd.mul(&pp).normalize_sign());
        }
        if r.deg_in(v) == 0 {
            // Primitive parts are coprime in x_v.
            return reattach(cont_gcd.normalize_sign());
        }
        f = g;
        g = r.div_exact(&r.content_in(v)).expect("content divides");
    }
}
