use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A variable name: an ASCII letter followed by optional ASCII digits.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(String);

impl VarId {
    pub fn new(name: &str) -> Result<Self, PolyError> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_digit());
        if ok {
            Ok(VarId(name.to_string()))
        } else {
            Err(PolyError::InvalidVariable(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Exponent vector, sorted by variable, with no zero exponents.
///
/// Ordered graded-lexicographically: total degree first, then the first
/// variable (in name order) where the exponents differ decides.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Exponents(Vec<(VarId, u32)>);

impl Exponents {
    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    pub fn var(v: VarId, e: u32) -> Self {
        if e == 0 {
            Exponents::one()
        } else {
            Exponents(alloc::vec![(v, e)])
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Exponents(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn get(&self, v: &VarId) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, u32)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Exponents(out)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Walk both sorted lists; the first variable where exponents differ
        // decides, a missing entry counting as exponent 0.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    coeff: Rational,
    exps: Exponents,
}

impl Monomial {
    pub fn new(coeff: Rational, exps: Exponents) -> Result<Self, PolyError> {
        if coeff.is_zero() {
            return Err(PolyError::ZeroCoefficient);
        }
        Ok(Monomial { coeff, exps })
    }

    pub fn constant(coeff: Rational) -> Result<Self, PolyError> {
        Monomial::new(coeff, Exponents::one())
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            coeff: Rational::one(),
            exps: Exponents::var(v, 1),
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exponents(&self) -> &Exponents {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.degree()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            coeff: &self.coeff * &other.coeff,
            exps: self.exps.mul(&other.exps),
        }
    }

    pub fn neg(&self) -> Monomial {
        Monomial {
            coeff: -self.coeff.clone(),
            exps: self.exps.clone(),
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial {
            terms: alloc::vec![self.clone()],
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_monomial(f, &self.coeff, &self.exps, true)
    }
}

fn fmt_monomial(
    f: &mut fmt::Formatter<'_>,
    coeff: &Rational,
    exps: &Exponents,
    signed: bool,
) -> fmt::Result {
    let c = if signed { coeff.clone() } else { coeff.abs() };
    if exps.is_one() {
        return write!(f, "{c}");
    }
    if c == -Rational::one() {
        f.write_str("-")?;
    } else if !c.is_one() {
        write!(f, "{c}*")?;
    }
    for (k, (v, e)) in exps.iter().enumerate() {
        if k > 0 {
            f.write_str("*")?;
        }
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// A multivariate polynomial over the rationals in canonical form: terms
/// strictly decreasing in graded-lex order, like terms merged, no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        match Monomial::constant(c) {
            Ok(m) => m.to_polynomial(),
            Err(_) => Polynomial::zero(),
        }
    }

    pub fn integer(n: i64) -> Self {
        Polynomial::constant(rational(n))
    }

    pub fn var(name: &str) -> Result<Self, PolyError> {
        Ok(Monomial::var(VarId::new(name)?).to_polynomial())
    }

    /// Collects arbitrary monomials into canonical form.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut terms: Vec<Monomial> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.exps.cmp(&a.exps));
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.exps == t.exps => last.coeff += t.coeff,
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if matches!(out.last(), Some(last) if last.coeff.is_zero()) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exps.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(Monomial::degree)
    }

    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [m] => Some(m),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for t in &self.terms {
            for (v, _) in t.exps.iter() {
                out.insert(v.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial {
                    coeff: &t.coeff * c,
                    exps: t.exps.clone(),
                })
                .collect(),
        }
    }

    fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // graded-lex is a monomial order, so term order is preserved
        Polynomial {
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &EvalPoint) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (var, e) in t.exps.iter() {
                let x = point
                    .get(var)
                    .ok_or_else(|| PolyError::MissingAssignment(var.clone()))?;
                v *= num_traits::pow(x.clone(), e as usize);
            }
            total += v;
        }
        Ok(total)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].exps.cmp(&b[j].exps) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].coeff + &b[j].coeff;
                    if !c.is_zero() {
                        out.push(Monomial {
                            coeff: c,
                            exps: a[i].exps.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { terms: out }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if let Some(m) = rhs.as_monomial() {
            return self.mul_monomial(m);
        }
        if let Some(m) = self.as_monomial() {
            return rhs.mul_monomial(m);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                prods.push(a.mul(b));
            }
        }
        Polynomial::from_terms(prods)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(Monomial::neg).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        m.to_polynomial()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k == 0 {
                fmt_monomial(f, &t.coeff, &t.exps, true)?;
            } else {
                f.write_str(if t.coeff.is_negative() { " - " } else { " + " })?;
                fmt_monomial(f, &t.coeff, &t.exps, false)?;
            }
        }
        Ok(())
    }
}

impl core::str::FromStr for Polynomial {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_polynomial(s)
    }
}

/// An assignment of rational values to variables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EvalPoint(BTreeMap<VarId, Rational>);

impl EvalPoint {
    pub fn new() -> Self {
        EvalPoint(BTreeMap::new())
    }

    pub fn set(&mut self, v: VarId, value: Rational) {
        self.0.insert(v, value);
    }

    pub fn with(mut self, v: VarId, value: Rational) -> Self {
        self.set(v, value);
        self
    }

    pub fn get(&self, v: &VarId) -> Option<&Rational> {
        self.0.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, &Rational)> {
        self.0.iter()
    }
}

/// Splits a monomial `c * x1^a1 * ... * xk^ak` into `(h1, h2)` with
/// `h1 * h2` equal to it. The variable factors are listed in variable order
/// with repetition; `h1` takes the first `ceil(d/2)` of them and the
/// coefficient, `h2` the rest. A constant splits as `(c, 1)`.
pub fn split_monomial(m: &Monomial) -> (Monomial, Monomial) {
    let d = m.degree();
    let take = d.div_ceil(2);
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut seen = 0u64;
    for (v, e) in m.exps.iter() {
        let e = u64::from(e);
        let l = e.min(take.saturating_sub(seen));
        if l > 0 {
            left.push((v.clone(), l as u32));
        }
        if e > l {
            right.push((v.clone(), (e - l) as u32));
        }
        seen += e;
    }
    (
        Monomial {
            coeff: m.coeff.clone(),
            exps: Exponents::from_pairs(left),
        },
        Monomial {
            coeff: Rational::one(),
            exps: Exponents::from_pairs(right),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        p(s).as_monomial().unwrap().clone()
    }

    #[test]
    fn grlex_order() {
        assert!(mono("x^2").exponents() > mono("x*y").exponents());
        assert!(mono("x*y").exponents() > mono("y^2").exponents());
        assert!(mono("y^3").exponents() > mono("x^2").exponents());
        assert!(mono("x*z").exponents() > mono("y^2").exponents());
        assert!(mono("x").exponents() > mono("1").exponents());
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p("y - 1/2 z + 3x^2").to_string(), "3*x^2 + y - 1/2*z");
        assert_eq!(p("-x y^2 + 4").to_string(), "-x*y^2 + 4");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn arithmetic() {
        let a = p("x + y");
        let b = p("x - y");
        assert_eq!(&a * &b, p("x^2 - y^2"));
        assert_eq!(&a + &b, p("2x"));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(a.pow(3), p("x^3 + 3x^2y + 3xy^2 + y^3"));
    }

    #[test]
    fn evaluate_point() {
        let pt = EvalPoint::new()
            .with(VarId::new("x").unwrap(), rational(2))
            .with(VarId::new("y").unwrap(), rational(-3));
        assert_eq!(p("x^2 y + 1/2").evaluate(&pt).unwrap(), {
            let half = Rational::new(BigInt::from(1), BigInt::from(2));
            rational(-12) + half
        });
        assert!(matches!(
            p("z").evaluate(&pt),
            Err(PolyError::MissingAssignment(_))
        ));
    }

    #[test]
    fn split_examples() {
        let (a, b) = split_monomial(&mono("x^5 y^2"));
        assert_eq!(
            (a.to_string(), b.to_string()),
            ("x^4".into(), "x*y^2".into())
        );
        let (a, b) = split_monomial(&mono("-3 x y z"));
        assert_eq!(
            (a.to_string(), b.to_string()),
            ("-3*x*y".into(), "z".into())
        );
        let (a, b) = split_monomial(&mono("7"));
        assert_eq!((a.to_string(), b.to_string()), ("7".into(), "1".into()));
        let (a, b) = split_monomial(&mono("z y"));
        assert_eq!((a.to_string(), b.to_string()), ("y".into(), "z".into()));
    }

    #[test]
    fn var_names() {
        assert!(VarId::new("x12").is_ok());
        assert!(VarId::new("1x").is_err());
        assert!(VarId::new("xy").is_err());
        assert!(VarId::new("").is_err());
    }
}
