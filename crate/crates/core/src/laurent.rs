//! Laurent polynomials in `v` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent to nonzero coefficient. The zero polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c v^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    /// `(-1)^s v^{-s}`, the weight of a ribbon configuration with statistic `s`.
    pub fn signed_power(s: u32) -> Self {
        let c = if s.is_multiple_of(2) { 1 } else { -1 };
        Self::monomial(c, -(s as i32))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> BigInt {
        self.terms.values().map(BigInt::abs).sum()
    }

    /// The substitution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect() }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Terms with exponent strictly greater than zero.
    pub fn positive_part(&self) -> Self {
        LaurentPoly { terms: self.terms.range(1..).map(|(&k, c)| (k, c.clone())).collect() }
    }

    /// Terms with exponent strictly less than zero.
    pub fn negative_part(&self) -> Self {
        LaurentPoly { terms: self.terms.range(..0).map(|(&k, c)| (k, c.clone())).collect() }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&k, x)| (k, x * c)).collect() }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[v, v^{-1}]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dmax, dlead) = d.terms.iter().next_back().map(|(&k, c)| (k, c.clone()))?;
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        let dmin = d.min_exponent()?;
        while let Some((&rmax, rc)) = rem.terms.iter().next_back() {
            // a nonzero multiple of d spans at least as many exponents as d
            if rmax - rem.min_exponent()? < dmax - dmin || !(rc % &dlead).is_zero() {
                return None;
            }
            let t = LaurentPoly::monomial(rc / &dlead, rmax - dmax);
            rem = &rem - &(&t * d);
            q += &t;
        }
        Some(q)
    }

    /// The quantum integer `[m] = v^{m-1} + v^{m-3} + ... + v^{1-m}`.
    pub fn quantum_integer(m: u32) -> Self {
        Self::from_terms((0..m).map(|t| (m as i32 - 1 - 2 * t as i32, 1)))
    }

    /// `[k]! = [1][2]...[k]`.
    pub fn quantum_factorial(k: u32) -> Self {
        (1..=k).fold(Self::one(), |acc, m| &acc * &Self::quantum_integer(m))
    }

    /// JSON object `{"exponent": coefficient}`; coefficients that do not fit
    /// in an `i64` are written as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|(k, c)| (k.to_string(), bigint_to_json(c)))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::ParsePoly(v.to_string()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let k: i32 = k.parse().map_err(|_| Error::ParsePoly(v.to_string()))?;
            p.add_term(k, bigint_from_json(c)?);
        }
        Ok(p)
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(x) => serde_json::Value::from(x),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(c: &serde_json::Value) -> Result<BigInt> {
    if let Some(x) = c.as_i64() {
        return Ok(BigInt::from(x));
    }
    c.as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected an integer, found {c}")))
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

/// Renders like `2v^3 + 1 - v^-1`, highest exponent first; zero is `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = a.is_one();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !unit {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Parses the text form, e.g. `"1 - v^-1 + 2v^3"`, `"-3*v^2"`, `"v"`.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParsePoly(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split into signed terms, treating '-' after '^' as part of the exponent
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        terms.push(cur);
        let mut p = LaurentPoly::zero();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            let (coef, exp) = match body.find('v') {
                None => (body.parse::<BigInt>().map_err(|_| err())?, 0),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let c = if c.is_empty() { BigInt::one() } else { c.parse().map_err(|_| err())? };
                    let rest = &body[pos + 1..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse::<i32>().map_err(|_| err())?
                    };
                    (c, k)
                }
            };
            p.add_term(exp, if neg { -coef } else { coef });
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        LaurentPoly::from_json(&v).map_err(serde::de::Error::custom)
    }
}

pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

pub fn lp_bar(a: &LaurentPoly) -> LaurentPoly {
    a.bar()
}

pub fn lp_eval_one(a: &LaurentPoly) -> BigInt {
    a.eval_one()
}
