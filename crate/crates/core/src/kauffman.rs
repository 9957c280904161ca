//! The two-variable Kauffman polynomial by unoriented skein recursion.
//!
//! `Λ` is computed on [`PortDiagram`]s: curls are stripped with a factor
//! `a^{±1}`, split pieces factor through `δ = (a + a^-1) z^-1 - 1`, and each
//! connected piece is made descending one crossing at a time along a fixed
//! traversal using `Λ_D + Λ_{D'} = z (Λ_{D_0} + Λ_{D_∞})`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{LinkDiagram, PortDiagram};
use crate::laurent::{LaurentPoly2, PolyError};
use crate::states::{resolve_all, turaev_genus_diagram, Side, StateError};

/// Default crossing limit for the skein engine.
pub const DEFAULT_SKEIN_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KauffmanError {
    #[error("{crossings} crossings exceeds the skein limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("z-powers below 1 - (components) survived the recursion")]
    NegativeZ,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `(a + a^-1) z^-1 - 1`.
pub fn loop_value() -> LaurentPoly2 {
    LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)])
}

/// Skein evaluator with a memo table that persists across diagrams.
pub struct SkeinEngine {
    limit: usize,
    memo: HashMap<Vec<u32>, LaurentPoly2>,
    delta: LaurentPoly2,
    z: LaurentPoly2,
}

impl Default for SkeinEngine {
    fn default() -> Self {
        Self::new(DEFAULT_SKEIN_LIMIT)
    }
}

impl SkeinEngine {
    pub fn new(limit: usize) -> Self {
        Self { limit, memo: HashMap::new(), delta: loop_value(), z: LaurentPoly2::monomial(1, 0, 1) }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    pub fn lambda(&mut self, d: &LinkDiagram) -> Result<LaurentPoly2, KauffmanError> {
        let c = d.crossing_count();
        if c > self.limit {
            return Err(KauffmanError::TooManyCrossings { crossings: c, limit: self.limit });
        }
        let value = self.eval(d.ports());
        // An r-component link has no z-power below 1 - r; knots get polynomials in z.
        if value.min_degree_z()? < 1 - d.component_count() as i64 {
            return Err(KauffmanError::NegativeZ);
        }
        Ok(value)
    }

    fn eval(&mut self, mut d: PortDiagram) -> LaurentPoly2 {
        let mut curl_writhe = 0;
        while let Some((x, p)) = d.find_curl() {
            let (rest, sign) = d.remove_curl(x, p);
            curl_writhe += sign;
            d = rest;
        }
        let (pieces, loops) = d.split();
        let splits = pieces.len() + loops as usize;
        let mut value = if splits == 0 { LaurentPoly2::one() } else { self.delta.pow(splits as u32 - 1) };
        for piece in pieces {
            let v = self.connected(piece);
            value = &value * &v;
        }
        value.shift(curl_writhe, 0)
    }

    fn connected(&mut self, d: PortDiagram) -> LaurentPoly2 {
        let key = d.canonical_code();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let strands = d.strands();
        // Crossings first met on their under-strand, in traversal order.
        let mut met = vec![false; d.crossing_count()];
        let mut pivots = Vec::new();
        for p in strands.iter().flatten() {
            let x = (p.dart / 4) as usize;
            if !met[x] {
                met[x] = true;
                if !p.over {
                    pivots.push(x);
                }
            }
        }
        let mut total = LaurentPoly2::zero();
        let mut positive = true;
        let mut cur = d;
        for x in pivots {
            let (smooth_a, smooth_b) = cur.smoothings(x);
            let sum = &self.eval(smooth_a) + &self.eval(smooth_b);
            let term = &self.z * &sum;
            total = if positive { &total + &term } else { &total - &term };
            positive = !positive;
            cur = cur.switched(x);
        }
        // `cur` is descending: an unlink diagram up to regular isotopy.
        let writhe: i64 = cur.signs(&strands).iter().sum();
        let base = self.delta.pow(strands.len() as u32 - 1).shift(writhe, 0);
        total = if positive { &total + &base } else { &total - &base };
        self.memo.insert(key, total.clone());
        total
    }
}

pub fn lambda_poly(d: &LinkDiagram) -> Result<LaurentPoly2, KauffmanError> {
    SkeinEngine::default().lambda(d)
}

/// Every support point satisfies `|r| + s <= c`.
pub fn support_check(p: &LaurentPoly2, c: usize) -> bool {
    p.support().all(|(r, s)| r.abs() + s <= c as i64)
}

pub type Witness = ((i64, i64), (i64, i64));

/// Support points on both diagonals `-r + s = c` and `r + s = c`, if any.
pub fn adequacy_witness(p: &LaurentPoly2, c: usize) -> Option<Witness> {
    let c = c as i64;
    let left = p.support().find(|&(r, s)| -r + s == c)?;
    let right = p.support().find(|&(r, s)| r + s == c)?;
    Some((left, right))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KauffmanReport {
    #[serde(with = "poly2_text")]
    pub lambda: LaurentPoly2,
    /// `a^{-w} Λ`, the ambient isotopy invariant.
    #[serde(with = "poly2_text")]
    pub f: LaurentPoly2,
    pub span_a: i64,
    pub support_ok: bool,
    pub adequacy_witness: Option<Witness>,
}

impl KauffmanReport {
    pub fn from_lambda(d: &LinkDiagram, lambda: LaurentPoly2) -> Result<Self, KauffmanError> {
        let c = d.crossing_count();
        Ok(Self {
            f: lambda.shift(-d.writhe(), 0),
            span_a: lambda.span_a()?,
            support_ok: support_check(&lambda, c),
            adequacy_witness: adequacy_witness(&lambda, c),
            lambda,
        })
    }

    pub fn adequate(&self) -> bool {
        self.adequacy_witness.is_some()
    }
}

pub fn kauffman_report(engine: &mut SkeinEngine, d: &LinkDiagram) -> Result<KauffmanReport, KauffmanError> {
    let lambda = engine.lambda(d)?;
    KauffmanReport::from_lambda(d, lambda)
}

pub fn adequacy_from_kauffman(d: &LinkDiagram) -> Result<Option<Witness>, KauffmanError> {
    let lambda = lambda_poly(d)?;
    Ok(adequacy_witness(&lambda, d.crossing_count()))
}

/// Degree formulas for an adequate diagram of Turaev genus one.
///
/// With `<D> = Λ_D(-A^3, A + A^-1)` and `A^M` coming from the all-A state, the
/// top a-degree is `|sA| - 1` and the bottom `1 - |sB|`. Under the opposite
/// variable convention (`a ↦ a^-1`) the roles of the two states swap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub max_deg_a: i64,
    pub expected_max: i64,
    pub min_deg_a: i64,
    pub expected_min: i64,
    pub span_a: i64,
    pub expected_span: i64,
}

impl DegreeCheck {
    pub fn holds(&self) -> bool {
        self.max_deg_a == self.expected_max
            && self.min_deg_a == self.expected_min
            && self.span_a == self.expected_span
    }
}

pub fn genus_one_degree_check(d: &LinkDiagram, lambda: &LaurentPoly2) -> Result<DegreeCheck, KauffmanError> {
    let g = turaev_genus_diagram(d)?;
    if g != 1 || !crate::states::is_adequate_diagram(d) {
        return Err(KauffmanError::Precondition(format!(
            "requires an adequate diagram of Turaev genus one (genus {g})"
        )));
    }
    let sa = resolve_all(d, Side::A).circle_count as i64;
    let sb = resolve_all(d, Side::B).circle_count as i64;
    Ok(DegreeCheck {
        max_deg_a: lambda.max_degree_a()?,
        expected_max: sa - 1,
        min_deg_a: lambda.min_degree_a()?,
        expected_min: 1 - sb,
        span_a: lambda.span_a()?,
        expected_span: d.crossing_count() as i64 - 2,
    })
}

pub(crate) mod poly2_text {
    use crate::laurent::LaurentPoly2;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &LaurentPoly2, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_text())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LaurentPoly2, D::Error> {
        LaurentPoly2::parse(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
