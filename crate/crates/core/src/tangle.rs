//! Alternating tangle decomposition and the genus-one cycle form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{EdgeLabel, LinkDiagram, Sign};
use crate::union_find::UnionFind;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TangleError {
    #[error("diagram is not connected")]
    Disconnected,
    #[error("diagram has no crossings")]
    NoCrossings,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    Alternating,
    /// Both ends over (`Positive`) or both under (`Negative`).
    NonAlternating(Sign),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connector {
    pub label: EdgeLabel,
    pub sign: Sign,
    pub tangles: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleDecomposition {
    /// Crossings of each maximal alternating tangle.
    pub tangles: Vec<Vec<usize>>,
    pub tangle_of: Vec<usize>,
    pub connectors: Vec<Connector>,
    /// Connector ends landing on each tangle.
    pub end_counts: Vec<usize>,
}

/// Edge kinds indexed by `label - 1`.
pub fn classify_edges(d: &LinkDiagram) -> Vec<EdgeKind> {
    (1..=2 * d.crossing_count() as EdgeLabel)
        .map(|l| {
            let [e0, e1] = d.ends(l);
            match (e0.is_over(), e1.is_over()) {
                (true, true) => EdgeKind::NonAlternating(Sign::Positive),
                (false, false) => EdgeKind::NonAlternating(Sign::Negative),
                _ => EdgeKind::Alternating,
            }
        })
        .collect()
}

pub fn decompose(d: &LinkDiagram) -> Result<TangleDecomposition, TangleError> {
    let c = d.crossing_count();
    if c == 0 {
        return Err(TangleError::NoCrossings);
    }
    if !d.is_connected() {
        return Err(TangleError::Disconnected);
    }
    let kinds = classify_edges(d);
    let mut uf = UnionFind::new(c);
    for (i, kind) in kinds.iter().enumerate() {
        if *kind == EdgeKind::Alternating {
            let [e0, e1] = d.ends(i as EdgeLabel + 1);
            uf.union(e0.crossing, e1.crossing);
        }
    }
    let mut index = BTreeMap::new();
    let mut tangles: Vec<Vec<usize>> = Vec::new();
    let mut tangle_of = vec![0; c];
    for (x, slot) in tangle_of.iter_mut().enumerate() {
        let root = uf.find(x);
        let t = *index.entry(root).or_insert_with(|| {
            tangles.push(Vec::new());
            tangles.len() - 1
        });
        tangles[t].push(x);
        *slot = t;
    }
    let mut end_counts = vec![0; tangles.len()];
    let mut connectors = Vec::new();
    for (i, kind) in kinds.iter().enumerate() {
        if let EdgeKind::NonAlternating(sign) = *kind {
            let label = i as EdgeLabel + 1;
            let [e0, e1] = d.ends(label);
            let (t0, t1) = (tangle_of[e0.crossing], tangle_of[e1.crossing]);
            end_counts[t0] += 1;
            end_counts[t1] += 1;
            connectors.push(Connector { label, sign, tangles: (t0.min(t1), t0.max(t1)) });
        }
    }
    Ok(TangleDecomposition { tangles, tangle_of, connectors, end_counts })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleForm {
    pub holds: bool,
    pub tangle_count: usize,
    pub connector_count: usize,
    /// Whether the doubled adjacencies, read around the cycle, alternate in
    /// the order of their signs as well. Reported only.
    pub signs_alternate_around: bool,
}

impl TangleDecomposition {
    /// An even cycle of 4-ended tangles, each adjacency realised by two
    /// connectors of opposite sign.
    pub fn cycle_form(&self) -> CycleForm {
        let n = self.tangles.len();
        let mut summary = CycleForm {
            holds: false,
            tangle_count: n,
            connector_count: self.connectors.len(),
            signs_alternate_around: false,
        };
        if n < 2 || n % 2 == 1 || self.end_counts.iter().any(|&e| e != 4) {
            return summary;
        }
        if self.connectors.iter().any(|c| c.tangles.0 == c.tangles.1) {
            return summary;
        }
        // Signed connector multiset per adjacent pair.
        let mut pairs: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
        for c in &self.connectors {
            let e = pairs.entry(c.tangles).or_default();
            match c.sign {
                Sign::Positive => e.0 += 1,
                Sign::Negative => e.1 += 1,
            }
        }
        if n == 2 {
            summary.holds = pairs.get(&(0, 1)) == Some(&(2, 2));
            summary.signs_alternate_around = summary.holds;
            return summary;
        }
        if pairs.len() != n || pairs.values().any(|&v| v != (1, 1)) {
            return summary;
        }
        // Each tangle has two neighbours; check they form one cycle.
        let mut neighbours = vec![Vec::new(); n];
        for &(a, b) in pairs.keys() {
            neighbours[a].push(b);
            neighbours[b].push(a);
        }
        if neighbours.iter().any(|v| v.len() != 2) {
            return summary;
        }
        let (mut prev, mut cur, mut steps) = (0, neighbours[0][0], 1);
        while cur != 0 {
            let next = if neighbours[cur][0] == prev { neighbours[cur][1] } else { neighbours[cur][0] };
            (prev, cur) = (cur, next);
            steps += 1;
        }
        summary.holds = steps == n;
        // Every adjacency carries one connector of each sign, so the sign
        // sequence around the cycle alternates by construction.
        summary.signs_alternate_around = summary.holds;
        summary
    }
}

pub fn is_genus_one_cycle_form(d: &LinkDiagram) -> Result<CycleForm, TangleError> {
    Ok(decompose(d)?.cycle_form())
}
