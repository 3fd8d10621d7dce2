//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, and unreduced quotients of them.
//!
//! Variables are Plücker coordinates `p[τ]`, torus coordinates `a[i,j]`, and
//! the quantum parameter `q`. They sort as `q < a[..] < p[..]`, torus by
//! `(i, j)` and Plücker by the diagram row vector. A monomial is the sorted
//! list of its `(variable, exponent)` pairs and terms are kept in a
//! `BTreeMap`, so every polynomial has exactly one in-memory form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    Quantum,
    Torus { label: u32, col: u32 },
    Plucker(Diagram),
}

impl Variable {
    pub fn torus(label: u32, col: u32) -> Self {
        Variable::Torus { label, col }
    }

    pub fn is_plucker(&self) -> bool {
        matches!(self, Variable::Plucker(_))
    }

    fn kind(&self) -> &'static str {
        match self {
            Variable::Quantum => "quantum",
            Variable::Torus { .. } => "torus",
            Variable::Plucker(_) => "Plücker",
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Variable::Quantum => "q".to_string(),
            Variable::Torus { label, col } => format!("a_{{{label},{col}}}"),
            Variable::Plucker(d) if d.is_empty() => "p_{\\varnothing}".to_string(),
            Variable::Plucker(d) => {
                let rows: Vec<String> = d.trimmed_rows().iter().map(u32::to_string).collect();
                format!("p_{{({})}}", rows.join(","))
            }
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Quantum => f.write_str("q"),
            Variable::Torus { label, col } => write!(f, "a[{label},{col}]"),
            Variable::Plucker(d) => write!(f, "p[{d}]"),
        }
    }
}

/// A power product of variables; the coefficient lives in [`Polynomial`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Build from arbitrary `(variable, exponent)` pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn plucker_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.is_plucker())
            .map(|(_, e)| e)
            .sum()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map_or(0, |k| self.0[k].1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    fn write_factors(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }

    fn to_latex(&self) -> String {
        let mut s = String::new();
        for (v, e) in &self.0 {
            s.push_str(&v.to_latex());
            if *e != 1 {
                s.push_str(&format!("^{{{e}}}"));
            }
        }
        s
    }
}

/// Exact polynomial with integer coefficients. The empty term map is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::from_terms([(c.into(), Monomial::one())])
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::from_terms([(BigInt::one(), Monomial::var(v))])
    }

    pub fn plucker(d: &Diagram) -> Self {
        Polynomial::var(Variable::Plucker(d.clone()))
    }

    pub fn torus(label: u32, col: u32) -> Self {
        Polynomial::var(Variable::torus(label, col))
    }

    pub fn quantum() -> Self {
        Polynomial::var(Variable::Quantum)
    }

    /// Collect terms in any order, combining like monomials.
    pub fn from_terms<I: IntoIterator<Item = (BigInt, Monomial)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::from_terms([(BigInt::one(), m)])
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The single monomial with coefficient one, if that is what this is.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = &Variable> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v))
    }

    /// Fails with [`Error::UnexpectedVariable`] on the first variable for
    /// which `allowed` is false.
    pub fn check_variables(&self, allowed: impl Fn(&Variable) -> bool) -> Result<()> {
        match self.variables().find(|v| !allowed(v)) {
            Some(v) => Err(Error::UnexpectedVariable(v.kind())),
            None => Ok(()),
        }
    }

    pub fn negate(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Common Plücker degree of every term.
    pub fn degree_in_pluckers(&self) -> Result<u32> {
        let mut degrees = self.terms.keys().map(Monomial::plucker_degree);
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(first)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Replace each variable by the polynomial `subst` returns for it and
    /// expand. Variables mapped to `None` are kept as they are.
    pub fn substitute<F>(&self, mut subst: F) -> Result<Polynomial>
    where
        F: FnMut(&Variable) -> Result<Option<Polynomial>>,
    {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (v, e) in &m.0 {
                let image = match subst(v)? {
                    Some(p) => p,
                    None => Polynomial::var(v.clone()),
                };
                term = &term * &image.pow(*e);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let exponents: serde_json::Map<String, Value> =
                        m.0.iter().map(|(v, e)| (v.to_string(), json!(e))).collect();
                    json!({ "coefficient": coefficient_json(c), "exponents": exponents })
                })
                .collect(),
        )
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            push_signed(&mut s, k == 0, c.is_negative());
            let abs = c.abs();
            if m.is_one() || !abs.is_one() {
                s.push_str(&abs.to_string());
            }
            s.push_str(&m.to_latex());
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Sign separator between rendered terms: nothing or "-" before the first
/// term, " + " or " - " afterwards.
pub(crate) fn push_signed(s: &mut String, first: bool, negative: bool) {
    match (first, negative) {
        (true, false) => {}
        (true, true) => s.push('-'),
        (false, false) => s.push_str(" + "),
        (false, true) => s.push_str(" - "),
    }
}

fn coefficient_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            match (k == 0, c.is_negative()) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                (false, false) => f.write_str(" + ")?,
                (false, true) => f.write_str(" - ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_factors(f)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut acc, other) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c.clone());
        }
        acc
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut acc = self.clone();
        for (m, c) in &rhs.terms {
            acc.add_term(m.clone(), -c);
        }
        acc
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(rhs.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.negate()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.negate()
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// A quotient of polynomials, never reduced. Equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalExpression {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalExpression {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalExpression {
            numerator,
            denominator,
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalExpression {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn rational_equals(&self, other: &RationalExpression) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn add(&self, other: &RationalExpression) -> RationalExpression {
        if self.denominator == other.denominator {
            return RationalExpression {
                numerator: &self.numerator + &other.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalExpression {
            numerator: &(&self.numerator * &other.denominator)
                + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
    }

    pub fn mul(&self, other: &RationalExpression) -> RationalExpression {
        RationalExpression {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        }
    }
}

impl fmt::Display for RationalExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}
