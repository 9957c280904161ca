//! Kauffman bracket by direct state sum, and the Jones polynomial.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::laurent::{JonesPoly, LaurentPoly1, PolyError};
use crate::states::{resolve_all, Side};
use crate::union_find::RollbackUnionFind;

/// Largest crossing count the state sum will attempt.
pub const STATE_SUM_LIMIT: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BracketError {
    #[error("{crossings} crossings exceeds the state-sum limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly1 {
    LaurentPoly1::from_terms([(2, -1), (-2, -1)])
}

/// Number of states by (B-smoothings, circles through crossings).
fn state_counts(d: &LinkDiagram) -> Vec<Vec<u64>> {
    let c = d.crossing_count();
    let tuples: Vec<[u32; 4]> = d.crossings().iter().map(|t| t.labels.map(|l| l - 1)).collect();
    let mut uf = RollbackUnionFind::new(2 * c);
    let mut counts = vec![vec![0u64; 2 * c + 1]; c + 1];

    fn descend(
        x: usize,
        b_count: usize,
        tuples: &[[u32; 4]],
        uf: &mut RollbackUnionFind,
        counts: &mut [Vec<u64>],
    ) {
        if x == tuples.len() {
            counts[b_count][uf.classes()] += 1;
            return;
        }
        let [a, b, c, d] = tuples[x];
        uf.union(a, b);
        uf.union(c, d);
        descend(x + 1, b_count, tuples, uf, counts);
        uf.undo();
        uf.undo();
        uf.union(a, d);
        uf.union(b, c);
        descend(x + 1, b_count + 1, tuples, uf, counts);
        uf.undo();
        uf.undo();
    }

    descend(0, 0, &tuples, &mut uf, &mut counts);
    counts
}

pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly1, BracketError> {
    let c = d.crossing_count();
    if c > STATE_SUM_LIMIT {
        return Err(BracketError::TooManyCrossings { crossings: c, limit: STATE_SUM_LIMIT });
    }
    let loops = d.free_loops() as usize;
    if c == 0 {
        return Ok(loop_value().pow(loops.saturating_sub(1) as u32));
    }
    let counts = state_counts(d);
    let delta = loop_value();
    let mut total = LaurentPoly1::zero();
    let mut delta_pow = LaurentPoly1::one();
    // Circles through crossings number at least one.
    for circles in 1..=2 * c {
        let mut by_circles = LaurentPoly1::zero();
        for (b_count, row) in counts.iter().enumerate() {
            if row[circles] != 0 {
                by_circles.add_term(c as i64 - 2 * b_count as i64, BigInt::from(row[circles]));
            }
        }
        if !by_circles.is_zero() {
            total += &(&by_circles * &delta_pow);
        }
        delta_pow = &delta_pow * &delta;
    }
    Ok(&total * &delta.pow(loops as u32))
}

/// `(-A^3)^{-w} <D>` with `A = q^{-1}`, `q = t^{1/4}`.
pub fn jones(d: &LinkDiagram) -> Result<JonesPoly, BracketError> {
    Ok(jones_from_bracket(&kauffman_bracket(d)?, d.writhe()))
}

pub fn jones_from_bracket(bracket: &LaurentPoly1, writhe: i64) -> JonesPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * writhe).scalar_mul(&BigInt::from(sign));
    JonesPoly(normalized.scale_exponents(-1))
}

/// Span of the Jones polynomial in powers of `t`.
pub fn span_jones(d: &LinkDiagram) -> Result<i64, BracketError> {
    Ok(jones(d)?.span_t()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    #[serde(with = "poly_text")]
    pub bracket: LaurentPoly1,
    /// `c + 2|sA| - 2`, the upper bound on the A-degree.
    pub max_bound: i64,
    /// `-c - 2|sB| + 2`, the lower bound on the A-degree.
    pub min_bound: i64,
    #[serde(with = "bigint_text")]
    pub coeff_at_max: BigInt,
    #[serde(with = "bigint_text")]
    pub coeff_at_min: BigInt,
    pub span: i64,
}

impl BracketReport {
    pub fn within_bounds(&self) -> bool {
        self.bracket.max_degree().is_some_and(|m| m <= self.max_bound)
            && self.bracket.min_degree().is_some_and(|m| m >= self.min_bound)
    }
}

pub fn bracket_report(d: &LinkDiagram) -> Result<BracketReport, BracketError> {
    let bracket = kauffman_bracket(d)?;
    let c = d.crossing_count() as i64;
    let sa = resolve_all(d, Side::A).circle_count as i64;
    let sb = resolve_all(d, Side::B).circle_count as i64;
    let (max_bound, min_bound) = (c + 2 * sa - 2, -c - 2 * sb + 2);
    Ok(BracketReport {
        coeff_at_max: bracket.coeff(max_bound),
        coeff_at_min: bracket.coeff(min_bound),
        span: bracket.span()?,
        bracket,
        max_bound,
        min_bound,
    })
}

pub(crate) mod poly_text {
    use crate::laurent::LaurentPoly1;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &LaurentPoly1, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_text("A"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LaurentPoly1, D::Error> {
        let text = String::deserialize(d)?;
        LaurentPoly1::parse(&text, "A").map_err(serde::de::Error::custom)
    }
}

pub(crate) mod bigint_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
