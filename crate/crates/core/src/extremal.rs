//! Extreme bracket coefficients from chord interleaving in the all-A and
//! all-B states, without running the state sum.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::states::{decorated_state, Chord, Side};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("diagram is not connected")]
    Disconnected,
    #[error("{0} chords exceeds the supported 64")]
    TooManyChords(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Extreme {
    /// Coefficient of `A^M`, from the all-A state.
    Max,
    /// Coefficient of `A^m`, from the all-B state.
    Min,
}

impl Extreme {
    pub fn side(self) -> Side {
        match self {
            Extreme::Max => Side::A,
            Extreme::Min => Side::B,
        }
    }
}

/// Chords as vertices, interleaved pairs as edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterleaveGraph {
    /// Crossing id of each chord vertex.
    pub chords: Vec<usize>,
    adjacency: Vec<u64>,
}

impl InterleaveGraph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, ExtremalError> {
        if vertices > 64 {
            return Err(ExtremalError::TooManyChords(vertices));
        }
        let mut adjacency = vec![0u64; vertices];
        for &(u, v) in edges {
            assert!(u != v && u < vertices && v < vertices, "bad edge ({u}, {v})");
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(Self { chords: (0..vertices).collect(), adjacency })
    }

    pub fn from_chords(chords: &[Chord]) -> Result<Self, ExtremalError> {
        let mut edges = Vec::new();
        for (i, p) in chords.iter().enumerate() {
            for (j, q) in chords.iter().enumerate().skip(i + 1) {
                if p.interleaves(q) {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Self::new(chords.len(), &edges)?;
        g.chords = chords.iter().map(|c| c.crossing).collect();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| self.adjacent(u, v)).map(move |v| (u, v))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Sum of `(-1)^|C|` over independent vertex sets `C`, i.e. the
    /// independence polynomial at `-1`.
    pub fn independent_alternating_sum(&self) -> i64 {
        let n = self.vertex_count();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo = HashMap::new();
        alternating_sum(&self.adjacency, all, &mut memo)
    }
}

// I(G) = I(G - v) - I(G - N[v]); a graph with an isolated vertex sums to 0.
fn alternating_sum(adj: &[u64], mask: u64, memo: &mut HashMap<u64, i64>) -> i64 {
    if mask == 0 {
        return 1;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let mut best = (0u32, 0usize);
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let degree = (adj[v] & mask).count_ones();
        if degree == 0 {
            memo.insert(mask, 0);
            return 0;
        }
        if degree > best.0 {
            best = (degree, v);
        }
    }
    let v = best.1;
    let without = mask & !(1 << v);
    let value = alternating_sum(adj, without, memo) - alternating_sum(adj, without & !adj[v], memo);
    memo.insert(mask, value);
    value
}

pub fn interleave_graph(d: &LinkDiagram, side: Side) -> Result<InterleaveGraph, ExtremalError> {
    InterleaveGraph::from_chords(&decorated_state(d, side).chords)
}

/// `(-1)^(|s|-1)` times the independent alternating sum of the matching state.
pub fn extreme_coefficient(d: &LinkDiagram, which: Extreme) -> Result<i64, ExtremalError> {
    if !d.is_connected() {
        return Err(ExtremalError::Disconnected);
    }
    let state = decorated_state(d, which.side());
    let g = InterleaveGraph::from_chords(&state.chords)?;
    Ok(coefficient_from(state.geometry.circle_count, g.independent_alternating_sum()))
}

pub fn coefficient_from(circles: usize, alternating_sum: i64) -> i64 {
    if circles % 2 == 1 { alternating_sum } else { -alternating_sum }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn by_subsets(g: &InterleaveGraph) -> i64 {
        let n = g.vertex_count();
        let mut total = 0;
        for set in 0u64..(1 << n) {
            let independent = (0..n).all(|v| set >> v & 1 == 0 || g.adjacency[v] & set == 0);
            if independent {
                total += if set.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
        total
    }

    #[test]
    fn small_graphs() {
        assert_eq!(InterleaveGraph::new(0, &[]).unwrap().independent_alternating_sum(), 1);
        assert_eq!(InterleaveGraph::new(3, &[]).unwrap().independent_alternating_sum(), 0);
        // A path through the middle vertex: sets {}, {0}, {1}, {2}, {0,1}.
        let path = InterleaveGraph::new(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(path.independent_alternating_sum(), -1);
        assert_eq!(coefficient_from(9, -1), -1);
        // Triangle: empty set plus three singletons.
        let tri = InterleaveGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.independent_alternating_sum(), -2);
    }

    #[test]
    fn curl_has_one_lonely_chord() {
        let d: LinkDiagram = "X[1,1,2,2]".parse().unwrap();
        let sizes: Vec<usize> =
            [Side::A, Side::B].iter().map(|&s| interleave_graph(&d, s).unwrap().vertex_count()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 1);
        for s in [Side::A, Side::B] {
            assert_eq!(interleave_graph(&d, s).unwrap().edge_count(), 0);
        }
    }

    #[test]
    fn adequate_trefoil_extremes() {
        let d: LinkDiagram = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".parse().unwrap();
        let sa = crate::states::resolve_all(&d, Side::A).circle_count;
        assert_eq!(extreme_coefficient(&d, Extreme::Max).unwrap(), coefficient_from(sa, 1));
    }

    fn arb_graph(max: usize) -> impl Strategy<Value = InterleaveGraph> {
        (0..=max).prop_flat_map(|n| {
            let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
            prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                InterleaveGraph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn recursion_matches_subsets(g in arb_graph(14)) {
            prop_assert_eq!(g.independent_alternating_sum(), by_subsets(&g));
        }

        #[test]
        fn edgeless_graphs_sum_to_zero(n in 1usize..=20) {
            prop_assert_eq!(InterleaveGraph::new(n, &[]).unwrap().independent_alternating_sum(), 0);
        }
    }
}
