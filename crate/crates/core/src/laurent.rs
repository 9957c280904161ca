//! Exact Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! [`LaurentPoly1`] is a polynomial in one variable (the bracket variable `A`
//! or the Jones variable `q = t^{1/4}`), [`LaurentPoly2`] a polynomial in the
//! two Kauffman variables `a` and `z`. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("specialisation is not a Laurent polynomial")]
    NotDivisible,
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}

/// One-variable Laurent polynomial, exponent → coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `coeff · x^exp`, keeping the representation canonical.
    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
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

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn span(&self) -> Result<i64, PolyError> {
        match (self.max_degree(), self.min_degree()) {
            (Some(hi), Some(lo)) => Ok(hi - lo),
            _ => Err(PolyError::ZeroPolynomial),
        }
    }

    /// Leading and trailing coefficients.
    pub fn extreme_coefficients(&self) -> Option<(BigInt, BigInt)> {
        let hi = self.terms.values().next_back()?.clone();
        let lo = self.terms.values().next()?.clone();
        Some((hi, lo))
    }

    /// True iff every exponent with nonzero coefficient has the same residue mod 4.
    pub fn mod4_support_check(&self) -> Result<bool, PolyError> {
        let first = self.min_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.terms.keys().all(|e| (e - first).rem_euclid(4) == 0))
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Substitutes `x ↦ x^factor` (factor ≠ 0).
    pub fn scale_exponents(&self, factor: i64) -> Self {
        assert!(factor != 0, "exponent scale must be nonzero");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * factor, c.clone())).collect(),
        }
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (d_max, d_min) = (divisor.max_degree()?, divisor.min_degree()?);
        let d_lead = &divisor.terms[&d_max];
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let (Some(r_max), Some(r_min)) = (rem.max_degree(), rem.min_degree()) {
            let e = r_max - d_max;
            if e < r_min - d_min {
                return None;
            }
            let c = &rem.terms[&r_max];
            if !(c % d_lead).is_zero() {
                return None;
            }
            let step = Self::monomial(c / d_lead, e);
            rem = &rem - &(&step * divisor);
            quotient += &step;
        }
        Some(quotient)
    }

    /// Canonical text with the given variable name, highest exponent first.
    pub fn to_text(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            push_sign(&mut out, c, i == 0);
            let mag = c.abs();
            let body = match *e {
                0 => mag.to_string(),
                _ => {
                    let v = if *e == 1 { var.to_string() } else { format!("{var}^{e}") };
                    if mag.is_one() { v } else { format!("{mag}*{v}") }
                }
            };
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the output of [`LaurentPoly1::to_text`].
    pub fn parse(text: &str, var: &str) -> Result<Self, PolyError> {
        let mut p = Self::zero();
        for (sign, term) in split_terms(text)? {
            let mut coeff = BigInt::one();
            let mut exp = 0i64;
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix(var) {
                    exp += parse_exp(rest, &term)?;
                } else {
                    coeff *= factor
                        .parse::<BigInt>()
                        .map_err(|_| PolyError::Parse(term.clone()))?;
                }
            }
            p.add_term(exp, coeff * sign);
        }
        Ok(p)
    }
}

fn push_sign(out: &mut String, c: &BigInt, first: bool) {
    match (first, c.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

fn parse_exp(rest: &str, term: &str) -> Result<i64, PolyError> {
    if rest.is_empty() {
        return Ok(1);
    }
    rest.strip_prefix('^')
        .and_then(|e| e.parse::<i64>().ok())
        .ok_or_else(|| PolyError::Parse(term.to_string()))
}

/// Splits `-x + 2*y - 3` into signed terms; signs are binary operators only
/// when surrounded by spaces, so `x^-3` stays intact.
fn split_terms(text: &str) -> Result<Vec<(i32, String)>, PolyError> {
    let text = text.trim();
    if text == "0" || text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sign = 1;
    let mut rest = text;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let cut = match (plus, minus) {
            (Some(p), Some(m)) => Some(p.min(m)),
            (p, m) => p.or(m),
        };
        match cut {
            Some(i) => {
                out.push((sign, rest[..i].trim().to_string()));
                sign = if &rest[i..i + 3] == " - " { -1 } else { 1 };
                rest = &rest[i + 3..];
            }
            None => {
                out.push((sign, rest.trim().to_string()));
                break;
            }
        }
    }
    if out.iter().any(|(_, t)| t.is_empty()) {
        return Err(PolyError::Parse(text.to_string()));
    }
    Ok(out)
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("A"))
    }
}

impl Add<&LaurentPoly1> for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly1> for LaurentPoly1 {
    fn add_assign(&mut self, rhs: &LaurentPoly1) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly1> for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul<&LaurentPoly1> for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = LaurentPoly1::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Two-variable Laurent polynomial in `a` and `z`, `(r, s)` → coefficient of `a^r z^s`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, r: i64, s: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(r, s, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((i64, i64), C)>) -> Self {
        let mut p = Self::zero();
        for ((r, s), c) in terms {
            p.add_term(r, s, c.into());
        }
        p
    }

    pub fn add_term(&mut self, r: i64, s: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((r, s)).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(r, s));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Support points `(r, s)` with their coefficients, lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, r: i64, s: i64) -> BigInt {
        self.terms.get(&(r, s)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_degree_a(&self) -> Result<i64, PolyError> {
        self.support().map(|(r, _)| r).max().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn min_degree_a(&self) -> Result<i64, PolyError> {
        self.support().map(|(r, _)| r).min().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn span_a(&self) -> Result<i64, PolyError> {
        Ok(self.max_degree_a()? - self.min_degree_a()?)
    }

    pub fn min_degree_z(&self) -> Result<i64, PolyError> {
        self.support().map(|(_, s)| s).min().ok_or(PolyError::ZeroPolynomial)
    }

    /// Multiplies by `a^dr z^ds`.
    pub fn shift(&self, dr: i64, ds: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|((r, s), c)| ((r + dr, s + ds), c.clone())).collect(),
        }
    }

    /// `a ↦ a^{-1}`.
    pub fn invert_a(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|((r, s), c)| ((-r, *s), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `a = -A^3`, `z = A + A^{-1}`. Negative powers of `z` are
    /// allowed as long as the result is a Laurent polynomial in `A`.
    pub fn substitute_bracket(&self) -> Result<LaurentPoly1, PolyError> {
        if self.is_zero() {
            return Ok(LaurentPoly1::zero());
        }
        let clear = (-self.min_degree_z()?).max(0);
        let max_s = (self.support().map(|(_, s)| s).max().unwrap_or(0) + clear).max(clear);
        let z = LaurentPoly1::from_terms([(1, 1), (-1, 1)]);
        let mut z_pows = vec![LaurentPoly1::one()];
        for i in 1..=max_s as usize {
            let next = &z_pows[i - 1] * &z;
            z_pows.push(next);
        }
        let mut out = LaurentPoly1::zero();
        for ((r, s), c) in &self.terms {
            let sign = if r.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out += &z_pows[(s + clear) as usize].shift(3 * r).scalar_mul(&sign);
        }
        out.div_exact(&z_pows[clear as usize]).ok_or(PolyError::NotDivisible)
    }

    /// Canonical text, terms in lexicographic `(r, s)` order, e.g. `-2*a^-2 + a^-1*z^3`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, ((r, s), c)) in self.terms.iter().enumerate() {
            push_sign(&mut out, c, i == 0);
            let mut factors = Vec::new();
            let mag = c.abs();
            if !mag.is_one() || (*r == 0 && *s == 0) {
                factors.push(mag.to_string());
            }
            match *r {
                0 => {}
                1 => factors.push("a".into()),
                r => factors.push(format!("a^{r}")),
            }
            match *s {
                0 => {}
                1 => factors.push("z".into()),
                s => factors.push(format!("z^{s}")),
            }
            out.push_str(&factors.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut p = Self::zero();
        for (sign, term) in split_terms(text)? {
            let (mut coeff, mut r, mut s) = (BigInt::one(), 0, 0);
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix('a') {
                    r += parse_exp(rest, &term)?;
                } else if let Some(rest) = factor.strip_prefix('z') {
                    s += parse_exp(rest, &term)?;
                } else {
                    coeff *= factor
                        .parse::<BigInt>()
                        .map_err(|_| PolyError::Parse(term.clone()))?;
                }
            }
            p.add_term(r, s, coeff * sign);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for ((r, s), c) in &rhs.terms {
            self.add_term(*r, *s, c.clone());
        }
    }
}

impl Add<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for ((r, s), c) in &rhs.terms {
            out.add_term(*r, *s, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for ((r1, s1), c1) in &self.terms {
            for ((r2, s2), c2) in &rhs.terms {
                out.add_term(r1 + r2, s1 + s2, c1 * c2);
            }
        }
        out
    }
}

/// Jones polynomial stored in `q = t^{1/4}` so that link half-integer powers
/// of `t` stay integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JonesPoly(pub LaurentPoly1);

impl JonesPoly {
    pub fn q_poly(&self) -> &LaurentPoly1 {
        &self.0
    }

    /// Span in powers of `t`; always an integer because bracket exponents
    /// share a residue mod 4.
    pub fn span_t(&self) -> Result<i64, PolyError> {
        let span_q = self.0.span()?;
        debug_assert_eq!(span_q % 4, 0);
        Ok(span_q / 4)
    }

    /// Coefficients as `(t-exponent numerator over 4, coefficient)`, in increasing order.
    pub fn coefficients(&self) -> Vec<(i64, BigInt)> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    /// Text in `t`, exponents written as reduced fractions when not integral.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.0.terms().rev().enumerate() {
            push_sign(&mut out, c, i == 0);
            let mag = c.abs();
            let exp = quarter_exp(e);
            let body = if e == 0 {
                mag.to_string()
            } else {
                let v = if exp == "1" { "t".to_string() } else { format!("t^{exp}") };
                if mag.is_one() { v } else { format!("{mag}*{v}") }
            };
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn quarter_exp(e: i64) -> String {
    let g = gcd(e.unsigned_abs(), 4) as i64;
    let (num, den) = (e / g, 4 / g);
    if den == 1 {
        num.to_string()
    } else {
        format!("({num}/{den})")
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p1(terms: &[(i64, i64)]) -> LaurentPoly1 {
        LaurentPoly1::from_terms(terms.iter().copied())
    }

    #[test]
    fn small_products() {
        let loop_value = p1(&[(2, -1), (-2, -1)]);
        assert_eq!(&loop_value * &LaurentPoly1::one(), loop_value);
        let prod = &p1(&[(1, 1), (-1, 1)]) * &p1(&[(1, 1), (-1, -1)]);
        assert_eq!(prod, p1(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn delta_times_z() {
        let delta = LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)]);
        let z = LaurentPoly2::monomial(1, 0, 1);
        let expected = LaurentPoly2::from_terms([((1, 0), 1), ((-1, 0), 1), ((0, 1), -1)]);
        assert_eq!(&delta * &z, expected);
    }

    #[test]
    fn bracket_substitution_of_generators() {
        assert_eq!(LaurentPoly2::one().substitute_bracket().unwrap(), LaurentPoly1::one());
        assert_eq!(
            LaurentPoly2::monomial(1, 1, 0).substitute_bracket().unwrap(),
            p1(&[(3, -1)])
        );
        assert_eq!(
            LaurentPoly2::monomial(1, 0, 1).substitute_bracket().unwrap(),
            p1(&[(1, 1), (-1, 1)])
        );
        assert_eq!(
            LaurentPoly2::monomial(1, 0, -1).substitute_bracket(),
            Err(PolyError::NotDivisible)
        );
        let delta = LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)]);
        assert_eq!(delta.substitute_bracket().unwrap(), p1(&[(2, -1), (-2, -1)]));
    }

    #[test]
    fn spans_and_degrees() {
        let p = LaurentPoly2::from_terms([((1, 0), 1), ((-1, 0), 1)]);
        assert_eq!(p.span_a().unwrap(), 2);
        assert_eq!(LaurentPoly2::monomial(1, 0, 5).span_a().unwrap(), 0);
        assert_eq!(LaurentPoly2::zero().span_a(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn mod4_support() {
        assert!(p1(&[(5, -1), (-3, -1), (-7, 1)]).mod4_support_check().unwrap());
        assert!(!p1(&[(1, 1), (2, 1)]).mod4_support_check().unwrap());
        assert!(LaurentPoly1::one().mod4_support_check().unwrap());
        assert!(LaurentPoly1::zero().mod4_support_check().is_err());
    }

    #[test]
    fn canonical_text() {
        let p = p1(&[(5, -1), (-3, -1), (-7, 1)]);
        assert_eq!(p.to_text("A"), "-A^5 - A^-3 + A^-7");
        assert_eq!(LaurentPoly1::parse("-A^5 - A^-3 + A^-7", "A").unwrap(), p);
        let q = LaurentPoly2::from_terms([((-2, 0), -2), ((-1, 3), 1), ((0, 0), 7), ((1, 1), -1)]);
        assert_eq!(q.to_text(), "-2*a^-2 + a^-1*z^3 + 7 - a*z");
        assert_eq!(LaurentPoly2::parse(&q.to_text()).unwrap(), q);
        assert_eq!(LaurentPoly1::zero().to_text("A"), "0");
    }

    #[test]
    fn jones_text_uses_fractional_t_powers() {
        let j = JonesPoly(p1(&[(-6, -1), (-2, 1), (2, 3)]));
        assert_eq!(j.to_text(), "3*t^(1/2) + t^(-1/2) - t^(-3/2)");
        assert_eq!(j.span_t().unwrap(), 2);
        let k = JonesPoly(p1(&[(-4, -1), (4, 1)]));
        assert_eq!(k.to_text(), "t - t^-1");
    }

    fn arb_poly1() -> impl Strategy<Value = LaurentPoly1> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(LaurentPoly1::from_terms)
    }

    fn arb_poly2() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec(((-4i64..4, 0i64..4), -5i64..5), 0..6)
            .prop_map(LaurentPoly2::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly1(), q in arb_poly1(), r in arb_poly1()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p + &q) - &q, p.clone());
        }

        #[test]
        fn two_variable_ring_axioms(p in arb_poly2(), q in arb_poly2(), r in arb_poly2()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn substitution_is_a_ring_homomorphism(p in arb_poly2(), q in arb_poly2()) {
            let lhs = (&p * &q).substitute_bracket().unwrap();
            let rhs = &p.substitute_bracket().unwrap() * &q.substitute_bracket().unwrap();
            prop_assert_eq!(lhs, rhs);
            let sum = (&p + &q).substitute_bracket().unwrap();
            prop_assert_eq!(sum, &p.substitute_bracket().unwrap() + &q.substitute_bracket().unwrap());
        }

        #[test]
        fn text_round_trip(p in arb_poly1(), q in arb_poly2()) {
            prop_assert_eq!(LaurentPoly1::parse(&p.to_text("A"), "A").unwrap(), p);
            prop_assert_eq!(LaurentPoly2::parse(&q.to_text()).unwrap(), q);
        }
    }
}
