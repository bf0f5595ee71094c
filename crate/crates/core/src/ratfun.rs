//! Rational functions as reduced fractions of multivariate polynomials.
//!
//! Every value is kept in canonical form: numerator and denominator
//! coprime (no common polynomial factor, coprime integer contents, no
//! common monomial), denominator nonzero with positive leading
//! coefficient, and zero represented as `0/1`. Canonical form makes
//! structural equality coincide with equality in the fraction field; the
//! property tests double-check that against cross-multiplication and
//! random evaluation, so a defect in gcd reduction cannot hide.
//!
//! Addition uses a common-denominator fast path (toggle sums constantly
//! combine fractions over the same denominator), and multiplication
//! cross-reduces before multiplying, which keeps intermediate products
//! near their reduced size.

use std::fmt;

use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::{One, Signed, Zero};

use crate::poly::{gcd, MultiPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn zero(nvars: usize) -> RatFun {
        RatFun {
            num: MultiPoly::zero(nvars),
            den: MultiPoly::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> RatFun {
        RatFun {
            num: MultiPoly::one(nvars),
            den: MultiPoly::one(nvars),
        }
    }

    pub fn var(nvars: usize, v: usize) -> RatFun {
        RatFun {
            num: MultiPoly::var(nvars, v),
            den: MultiPoly::one(nvars),
        }
    }

    pub fn from_int(nvars: usize, k: i64) -> RatFun {
        RatFun {
            num: MultiPoly::constant(nvars, BigInt::from(k)),
            den: MultiPoly::one(nvars),
        }
    }

    pub fn from_ratio(nvars: usize, q: Ratio<i64>) -> RatFun {
        RatFun::new(
            MultiPoly::constant(nvars, BigInt::from(*q.numer())),
            MultiPoly::constant(nvars, BigInt::from(*q.denom())),
        )
    }

    pub fn from_poly(p: MultiPoly) -> RatFun {
        let nvars = p.nvars();
        RatFun {
            num: p,
            den: MultiPoly::one(nvars),
        }
    }

    /// A Laurent monomial `prod x_v^{e_v}` with signed exponents.
    pub fn laurent(nvars: usize, exps: &[(usize, i64)]) -> RatFun {
        let mut pos = vec![0u16; nvars];
        let mut neg = vec![0u16; nvars];
        for &(v, e) in exps {
            let slot = if e >= 0 { &mut pos } else { &mut neg };
            slot[v] = slot[v]
                .checked_add(e.unsigned_abs().try_into().expect("exponent fits"))
                .expect("exponent overflow");
        }
        RatFun {
            num: MultiPoly::monomial(nvars, &pos, BigInt::one()),
            den: MultiPoly::monomial(nvars, &neg, BigInt::one()),
        }
    }

    /// Builds `num/den` and reduces to canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> RatFun {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFun { num, den };
        rf.reduce();
        rf
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.den.nvars());
            return;
        }
        if !self.den.is_one() {
            let g = gcd(&self.num, &self.den);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).expect("gcd divides numerator");
                self.den = self.den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        if self.den.leading_coeff().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFun::new(self.num.add(&other.num), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self
                .num
                .mul(&other.den)
                .add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // Coprime denominators: only integer/monomial content can cancel.
            return RatFun::new(num, den);
        }
        let sd = self.den.div_exact(&g).expect("gcd divides");
        let od = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&od).add(&other.num.mul(&sd));
        let den = self.den.mul(&od);
        RatFun::new(num, den)
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero(self.nvars());
        }
        // Cross-reduce: with both sides canonical, the product of the
        // cross-reduced parts is already canonical up to sign.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut rf = RatFun {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        };
        if rf.den.leading_coeff().is_negative() {
            rf.num = rf.num.neg();
            rf.den = rf.den.neg();
        }
        rf
    }

    pub fn inv(&self) -> RatFun {
        assert!(!self.is_zero(), "inverting the zero rational function");
        let mut rf = RatFun {
            num: self.den.clone(),
            den: self.num.clone(),
        };
        if rf.den.leading_coeff().is_negative() {
            rf.num = rf.num.neg();
            rf.den = rf.den.neg();
        }
        rf
    }

    pub fn div(&self, other: &RatFun) -> RatFun {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> RatFun {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = RatFun::one(self.nvars());
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Equality by cross-multiplication, independent of canonical form.
    pub fn equal_cross(&self, other: &RatFun) -> bool {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den)).is_zero()
    }

    /// Evaluates at a rational point; `None` if the denominator vanishes.
    pub fn eval(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Evaluates at an integer point; `None` if the denominator vanishes.
    pub fn eval_int(&self, point: &[BigInt]) -> Option<BigRational> {
        let d = self.den.eval_int(point);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval_int(point), d))
    }

    /// Total size in terms, a rough measure for growth diagnostics.
    pub fn size(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.den.is_one() {
            self.num.render(names)
        } else {
            format!("({})/({})", self.num.render(names), self.den.render(names))
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|v| format!("x{v}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.render(&refs))
    }
}

/// Substitutes rational functions for the variables of a polynomial.
/// All arguments must share a variable space; the result lives there.
pub fn compose(poly: &MultiPoly, args: &[RatFun]) -> RatFun {
    assert_eq!(args.len(), poly.nvars());
    let nvars = args.first().expect("at least one variable").nvars();
    let mut acc = RatFun::zero(nvars);
    for k in 0..poly.num_terms() {
        let (exps, coeff) = poly.term(k);
        let mut m = RatFun::new(
            MultiPoly::constant(nvars, coeff.clone()),
            MultiPoly::one(nvars),
        );
        for (v, &e) in exps.iter().enumerate() {
            if e > 0 {
                m = m.mul(&args[v].pow(e as i64));
            }
        }
        acc = acc.add(&m);
    }
    acc
}
