//! Laurent polynomials over the integers and the mixed scalar type used by
//! every solver in this crate.
//!
//! Variables are lattice faces `(i, j)`. A value is either an exact rational
//! or an integer-coefficient Laurent polynomial in the face variables; the
//! two kinds never mix inside one field.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Face coordinates `(i, j)` naming one variable `x_{i,j}`.
pub type Var = (i64, i64);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingError {
    /// Arithmetic attempted between a rational and a polynomial value.
    MixedKinds,
    DivisionByZero,
    /// Exact division left a remainder or needed a negative power that the
    /// divisor cannot absorb; the quotient is not an integer Laurent
    /// polynomial.
    NonLaurentQuotient,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::MixedKinds => write!(f, "mixed rational and polynomial operands"),
            RingError::DivisionByZero => write!(f, "division by zero"),
            RingError::NonLaurentQuotient => write!(f, "non-Laurent quotient"),
        }
    }
}

/// A monomial `prod x_{i,j}^e` with sorted variables and nonzero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(Var, i64)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: alloc::vec![(v, 1)] }
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        if e == 0 {
            Monomial::unit()
        } else {
            Monomial { exps: alloc::vec![(v, e)] }
        }
    }

    pub fn from_exps(mut exps: Vec<(Var, i64)>) -> Self {
        exps.retain(|&(_, e)| e != 0);
        exps.sort_unstable_by_key(|&(v, _)| v);
        Monomial { exps }
    }

    pub fn exps(&self) -> &[(Var, i64)] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp_of(&self, v: Var) -> i64 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(idx) => self.exps[idx].1,
            Err(_) => 0,
        }
    }

    /// Merge of two exponent lists; exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        exps.push((va, ea));
                        a.next();
                    } else if vb < va {
                        exps.push((vb, eb));
                        b.next();
                    } else {
                        if ea + eb != 0 {
                            exps.push((va, ea + eb));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&p), None) => {
                    exps.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exps.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// Laurent division of monomials, always defined.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (idx, &((i, j), e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "x[{},{}]", i, j)?;
            if e != 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// Integer-coefficient Laurent polynomial in the face variables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::monomial(Monomial::var(v), Int::one())
    }

    pub fn monomial(m: Monomial, c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(list: impl IntoIterator<Item = (Monomial, Int)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in list {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    /// Every coefficient strictly positive (and at least one term).
    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            for &(v, _) in m.exps() {
                set.insert(v);
            }
        }
        set
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Int) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca * c);
        }
        out
    }

    /// Exact division in the Laurent ring.
    ///
    /// Both operands are shifted so every variable has minimal exponent zero
    /// (shifting by the variable-wise minimum splits multiplicatively, so
    /// the shifted quotient is the shifted dividend over the shifted
    /// divisor), then ordinary polynomial division runs greedily on leading
    /// terms under the lexicographic order on dense exponent vectors. Any
    /// negative exponent in a quotient monomial, a nonzero final remainder,
    /// or a fractional coefficient means the quotient does not lie in the
    /// integer Laurent ring.
    pub fn div_exact(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }

        let mut vars: Vec<Var> = self.vars().union(&other.vars()).copied().collect();
        vars.sort_unstable();
        let dense = |m: &Monomial| -> Vec<i64> { vars.iter().map(|&v| m.exp_of(v)).collect() };
        let mins = |p: &LaurentPoly| -> Vec<i64> {
            let mut lo = alloc::vec![i64::MAX; vars.len()];
            for m in p.terms.keys() {
                for (slot, &v) in lo.iter_mut().zip(vars.iter()) {
                    *slot = (*slot).min(m.exp_of(v));
                }
            }
            lo
        };
        let min_a = mins(self);
        let min_b = mins(other);

        let shift = |p: &LaurentPoly, lo: &[i64]| -> BTreeMap<Vec<i64>, Rat> {
            p.terms
                .iter()
                .map(|(m, c)| {
                    let vec: Vec<i64> = dense(m).iter().zip(lo).map(|(e, l)| e - l).collect();
                    (vec, Rat::from_integer(c.clone()))
                })
                .collect()
        };
        let mut rem = shift(self, &min_a);
        let div = shift(other, &min_b);
        let (lead_b, lead_bc) = div.iter().next_back().map(|(k, v)| (k.clone(), v.clone())).unwrap();

        let mut quot: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        while let Some((lead_r, lead_rc)) = rem.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
            let mut qv = Vec::with_capacity(vars.len());
            for (er, eb) in lead_r.iter().zip(lead_b.iter()) {
                let e = er - eb;
                if e < 0 {
                    return Err(RingError::NonLaurentQuotient);
                }
                qv.push(e);
            }
            let qc = lead_rc / &lead_bc;
            for (bm, bc) in &div {
                let key: Vec<i64> = qv.iter().zip(bm).map(|(a, b)| a + b).collect();
                let entry = rem.entry(key.clone()).or_insert_with(Rat::zero);
                *entry -= &qc * bc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(qv, qc);
        }

        let mut out = LaurentPoly::zero();
        for (qv, qc) in quot {
            if !qc.is_integer() {
                return Err(RingError::NonLaurentQuotient);
            }
            let exps: Vec<(Var, i64)> = vars
                .iter()
                .enumerate()
                .map(|(idx, &v)| (v, qv[idx] + min_a[idx] - min_b[idx]))
                .collect();
            out.add_term(Monomial::from_exps(exps), qc.to_integer());
        }
        Ok(out)
    }

    /// Substitute rationals for every variable; `None` if a variable is
    /// missing from the environment.
    pub fn eval(&self, env: &BTreeMap<Var, Rat>) -> Option<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = Rat::from_integer(c.clone());
            for &(v, e) in m.exps() {
                let base = env.get(&v)?;
                term *= rat_pow(base, e).ok()?;
            }
            total += term;
        }
        Some(total)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_unit() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

/// `base^e` with Laurent (negative) exponents allowed.
pub fn rat_pow(base: &Rat, e: i64) -> Result<Rat, RingError> {
    if e == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() {
        return if e > 0 { Ok(Rat::zero()) } else { Err(RingError::DivisionByZero) };
    }
    let p = base.clone().pow(e.unsigned_abs() as u32);
    Ok(if e > 0 { p } else { p.recip() })
}

/// Scalar for field values: exact rational or symbolic Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingValue {
    Rat(Rat),
    Poly(LaurentPoly),
}

impl RingValue {
    pub fn rat_int(n: i64) -> Self {
        RingValue::Rat(Rat::from_integer(Int::from(n)))
    }

    pub fn var(v: Var) -> Self {
        RingValue::Poly(LaurentPoly::var(v))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Rat(r) => r.is_zero(),
            RingValue::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingValue::Rat(r) => r.is_one(),
            RingValue::Poly(p) => p.is_one(),
        }
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            RingValue::Rat(r) => Some(r),
            RingValue::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        match self {
            RingValue::Poly(p) => Some(p),
            RingValue::Rat(_) => None,
        }
    }

    pub fn add(&self, other: &RingValue) -> Result<RingValue, RingError> {
        match (self, other) {
            (RingValue::Rat(a), RingValue::Rat(b)) => Ok(RingValue::Rat(a + b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a.add(b))),
            _ => Err(RingError::MixedKinds),
        }
    }

    pub fn sub(&self, other: &RingValue) -> Result<RingValue, RingError> {
        match (self, other) {
            (RingValue::Rat(a), RingValue::Rat(b)) => Ok(RingValue::Rat(a - b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a.sub(b))),
            _ => Err(RingError::MixedKinds),
        }
    }

    pub fn mul(&self, other: &RingValue) -> Result<RingValue, RingError> {
        match (self, other) {
            (RingValue::Rat(a), RingValue::Rat(b)) => Ok(RingValue::Rat(a * b)),
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a.mul(b))),
            _ => Err(RingError::MixedKinds),
        }
    }

    pub fn neg(&self) -> RingValue {
        match self {
            RingValue::Rat(a) => RingValue::Rat(-a),
            RingValue::Poly(a) => RingValue::Poly(a.neg()),
        }
    }

    /// Exact division; rationals divide as a field, polynomials must divide
    /// inside the Laurent ring.
    pub fn div_exact(&self, other: &RingValue) -> Result<RingValue, RingError> {
        match (self, other) {
            (RingValue::Rat(a), RingValue::Rat(b)) => {
                if b.is_zero() {
                    Err(RingError::DivisionByZero)
                } else {
                    Ok(RingValue::Rat(a / b))
                }
            }
            (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(a.div_exact(b)?)),
            _ => Err(RingError::MixedKinds),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rat(r) => write!(f, "{}", r),
            RingValue::Poly(p) => write!(f, "{}", p),
        }
    }
}

/// Render a rational as `p/q`, omitting `/q` when the denominator is one.
pub fn rat_string(r: &Rat) -> String {
    use alloc::format;
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn x(i: i64, j: i64) -> LaurentPoly {
        LaurentPoly::var((i, j))
    }

    #[test]
    fn monomial_merge_cancels() {
        let m = Monomial::var_pow((0, 0), 2).mul(&Monomial::var_pow((0, 0), -2));
        assert!(m.is_unit());
        let n = Monomial::var((0, 1)).mul(&Monomial::var_pow((1, 0), -1));
        assert_eq!(n.exp_of((0, 1)), 1);
        assert_eq!(n.exp_of((1, 0)), -1);
        assert_eq!(n.exp_of((5, 5)), 0);
    }

    #[test]
    fn ring_laws() {
        let a = x(0, 0).add(&x(0, 1)).mul(&x(1, 0).sub(&LaurentPoly::one()));
        let b = x(1, 0).mul(&x(0, 0).add(&x(0, 1))).sub(&x(0, 0).add(&x(0, 1)));
        assert_eq!(a, b);
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn division_recovers_factor() {
        // (x00 + x01) * (x10 + x11) / (x10 + x11) = x00 + x01
        let f = x(0, 0).add(&x(0, 1));
        let g = x(1, 0).add(&x(1, 1));
        let prod = f.mul(&g);
        assert_eq!(prod.div_exact(&g).unwrap(), f);
        assert_eq!(prod.div_exact(&f).unwrap(), g);
    }

    #[test]
    fn division_with_laurent_shifts() {
        // p = x00^-2*x01 + x00^-1; dividing by x00^-2 must shift cleanly.
        let p = LaurentPoly::from_terms(vec![
            (Monomial::from_exps(vec![((0, 0), -2), ((0, 1), 1)]), Int::from(1)),
            (Monomial::var_pow((0, 0), -1), Int::from(1)),
        ]);
        let d = LaurentPoly::monomial(Monomial::var_pow((0, 0), -2), Int::from(1));
        let q = p.div_exact(&d).unwrap();
        let expect = LaurentPoly::from_terms(vec![
            (Monomial::var((0, 1)), Int::from(1)),
            (Monomial::var((0, 0)), Int::from(1)),
        ]);
        assert_eq!(q, expect);
    }

    #[test]
    fn division_rejects_non_laurent_quotient() {
        // (x + y) / (x - y) has no Laurent polynomial quotient.
        let f = x(0, 0).add(&x(0, 1));
        let g = x(0, 0).sub(&x(0, 1));
        assert_eq!(f.div_exact(&g), Err(RingError::NonLaurentQuotient));
        // 2x / 3x fails on the coefficient even though the monomials divide.
        let two = LaurentPoly::monomial(Monomial::var((0, 0)), Int::from(2));
        let three = LaurentPoly::monomial(Monomial::var((0, 0)), Int::from(3));
        assert_eq!(two.div_exact(&three), Err(RingError::NonLaurentQuotient));
        assert_eq!(f.div_exact(&LaurentPoly::zero()), Err(RingError::DivisionByZero));
    }

    #[test]
    fn mutation_exchange_divides_exactly() {
        // x' = (x01*x0m + x10*xm0) / x00: multiply back and divide.
        let num = x(0, 1).mul(&x(0, -1)).add(&x(1, 0).mul(&x(-1, 0)));
        let q = num.div_exact(&x(0, 0)).unwrap();
        assert_eq!(q.mul(&x(0, 0)), num);
        assert!(q.terms().all(|(m, _)| m.exp_of((0, 0)) == -1));
        assert!(q.is_positive());
    }

    #[test]
    fn single_monomial_divisor_always_divides() {
        // Dividing by one monomial only shifts exponents.
        let p = x(0, 0).mul(&x(0, 1)).add(&x(1, 0));
        let q = p.div_exact(&x(0, 0)).unwrap();
        assert_eq!(q.mul(&x(0, 0)), p);
        // A two-term divisor that is not a factor fails.
        let err = p.div_exact(&x(0, 0).add(&x(0, 1))).unwrap_err();
        assert_eq!(err, RingError::NonLaurentQuotient);
    }

    #[test]
    fn eval_matches_substitution() {
        let q = x(0, 0).add(&x(0, 1)).mul(&x(0, 0));
        let mut env = BTreeMap::new();
        env.insert((0, 0), Rat::new(Int::from(1), Int::from(2)));
        env.insert((0, 1), Rat::new(Int::from(3), Int::from(1)));
        // (1/2 + 3) * 1/2 = 7/4
        assert_eq!(q.eval(&env).unwrap(), Rat::new(Int::from(7), Int::from(4)));
        env.remove(&(0, 1));
        assert_eq!(q.eval(&env), None);
    }

    #[test]
    fn rat_pow_handles_negative_exponents() {
        let r = Rat::new(Int::from(2), Int::from(3));
        assert_eq!(rat_pow(&r, 2).unwrap(), Rat::new(Int::from(4), Int::from(9)));
        assert_eq!(rat_pow(&r, -2).unwrap(), Rat::new(Int::from(9), Int::from(4)));
        assert_eq!(rat_pow(&Rat::zero(), -1), Err(RingError::DivisionByZero));
    }

    #[test]
    fn display_is_canonical() {
        use alloc::string::ToString;
        let p = x(0, 0).mul(&x(0, 0)).sub(&x(1, 0)).add(&LaurentPoly::constant(Int::from(2)));
        // ascending monomial order: constant, then x[0,0]^2... order is the
        // derived lexicographic order on exponent lists.
        let s = p.to_string();
        assert!(s.contains("x[0,0]^2"));
        assert!(s.contains("- x[1,0]") || s.contains("-x[1,0]"));
        assert_eq!(RingValue::rat_int(-3).to_string(), "-3");
        assert_eq!(rat_string(&Rat::new(Int::from(3), Int::from(4))), "3/4");
        assert_eq!(rat_string(&Rat::from_integer(Int::from(7))), "7");
    }
}
