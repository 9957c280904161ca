//! All-A and all-B Kauffman states: circles, traces, chords, Turaev genus
//! and adequacy.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Dart, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    /// Port pairs joined by this smoothing, in PD port numbering
    /// (port 0 is the incoming under-edge).
    pub fn arcs(self) -> [[u8; 2]; 2] {
        match self {
            Side::A => [[0, 1], [2, 3]],
            Side::B => [[0, 3], [1, 2]],
        }
    }

    /// Index of the smoothing arc through `port`.
    pub fn arc_of(self, port: u8) -> u8 {
        match self {
            Side::A => port / 2,
            Side::B => u8::from(port == 1 || port == 2),
        }
    }

    /// The other port on the smoothing arc through `port`.
    pub fn pairmate(self, port: u8) -> u8 {
        match self {
            Side::A => port ^ 1,
            Side::B => 3 - port,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error("diagram is not connected")]
    Disconnected,
    #[error("c + 2 - |sA| - |sB| = {0} is not a nonnegative even number")]
    InvalidGenus(i64),
}

/// One end of a trace: the crossing and which of its two smoothing arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceEnd {
    pub crossing: usize,
    pub arc: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateGeometry {
    pub side: Side,
    /// Circles through smoothing arcs plus the free loops.
    pub circle_count: usize,
    /// Circle id of each crossing's two smoothing arcs.
    pub arc_circle: Vec<[usize; 2]>,
    /// For each circle through crossings, the trace ends met walking around it.
    pub circle_orders: Vec<Vec<TraceEnd>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    pub crossing: usize,
    pub circle: usize,
    /// Positions of both ends in `circle_orders[circle]`, ascending.
    pub ends: [usize; 2],
}

impl Chord {
    /// Whether the ends of the two chords alternate around a common circle.
    pub fn interleaves(&self, other: &Chord) -> bool {
        if self.circle != other.circle {
            return false;
        }
        let inside = |p: usize| self.ends[0] < p && p < self.ends[1];
        inside(other.ends[0]) != inside(other.ends[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedState {
    pub geometry: StateGeometry,
    pub chords: Vec<Chord>,
}

/// Resolves every crossing on `side` and walks the resulting circles.
pub fn resolve_all(d: &LinkDiagram, side: Side) -> StateGeometry {
    let c = d.crossing_count();
    let mut arc_circle = vec![[usize::MAX; 2]; c];
    let mut circle_orders = Vec::new();
    for x in 0..c {
        for arc in 0..2u8 {
            if arc_circle[x][arc as usize] != usize::MAX {
                continue;
            }
            let id = circle_orders.len();
            let mut order = Vec::new();
            // Enter the arc at its first port, leave by its pairmate, and
            // follow the edge to the next crossing.
            let mut cur = Dart { crossing: x, port: side.arcs()[arc as usize][0] };
            loop {
                let a = side.arc_of(cur.port);
                arc_circle[cur.crossing][a as usize] = id;
                order.push(TraceEnd { crossing: cur.crossing, arc: a });
                let exit = Dart { crossing: cur.crossing, port: side.pairmate(cur.port) };
                cur = d.partner(exit);
                if arc_circle[cur.crossing][side.arc_of(cur.port) as usize] == id {
                    break;
                }
            }
            circle_orders.push(order);
        }
    }
    StateGeometry {
        side,
        circle_count: circle_orders.len() + d.free_loops() as usize,
        arc_circle,
        circle_orders,
    }
}

impl StateGeometry {
    pub fn chords(&self) -> Vec<Chord> {
        let mut position = vec![[0usize; 2]; self.arc_circle.len()];
        for order in &self.circle_orders {
            for (i, end) in order.iter().enumerate() {
                position[end.crossing][end.arc as usize] = i;
            }
        }
        self.arc_circle
            .iter()
            .enumerate()
            .filter(|(_, [c0, c1])| c0 == c1)
            .map(|(x, &[circle, _])| {
                let [p, q] = position[x];
                Chord { crossing: x, circle, ends: [p.min(q), p.max(q)] }
            })
            .collect()
    }

    pub fn chord_count(&self) -> usize {
        self.arc_circle.iter().filter(|[c0, c1]| c0 == c1).count()
    }
}

pub fn decorated_state(d: &LinkDiagram, side: Side) -> DecoratedState {
    let geometry = resolve_all(d, side);
    let chords = geometry.chords();
    DecoratedState { geometry, chords }
}

/// `(c + 2 - |sA| - |sB|) / 2` for a connected diagram.
pub fn turaev_genus_diagram(d: &LinkDiagram) -> Result<u32, StateError> {
    if !d.is_connected() {
        return Err(StateError::Disconnected);
    }
    let sa = resolve_all(d, Side::A).circle_count as i64;
    let sb = resolve_all(d, Side::B).circle_count as i64;
    turaev_genus_from_counts(d.crossing_count(), sa, sb)
}

pub(crate) fn turaev_genus_from_counts(c: usize, sa: i64, sb: i64) -> Result<u32, StateError> {
    let twice = c as i64 + 2 - sa - sb;
    if twice < 0 || twice % 2 != 0 {
        return Err(StateError::InvalidGenus(twice));
    }
    Ok((twice / 2) as u32)
}

pub fn is_adequate_on(d: &LinkDiagram, side: Side) -> bool {
    resolve_all(d, side).chord_count() == 0
}

pub fn is_a_adequate(d: &LinkDiagram) -> bool {
    is_adequate_on(d, Side::A)
}

pub fn is_b_adequate(d: &LinkDiagram) -> bool {
    is_adequate_on(d, Side::B)
}

pub fn is_adequate_diagram(d: &LinkDiagram) -> bool {
    is_a_adequate(d) && is_b_adequate(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::union_find::UnionFind;

    fn pd(s: &str) -> LinkDiagram {
        s.parse().unwrap()
    }

    /// Circle count straight from the pairings, without walking.
    fn circles_by_union_find(d: &LinkDiagram, side: Side) -> usize {
        let mut uf = UnionFind::new(2 * d.crossing_count());
        for t in d.crossings() {
            for [p, q] in side.arcs() {
                uf.union((t.labels[p as usize] - 1) as usize, (t.labels[q as usize] - 1) as usize);
            }
        }
        uf.classes() + d.free_loops() as usize
    }

    #[test]
    fn trefoil_circles() {
        let d = pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        let a = resolve_all(&d, Side::A).circle_count;
        let b = resolve_all(&d, Side::B).circle_count;
        let mut pair = [a, b];
        pair.sort();
        assert_eq!(pair, [2, 3]);
        assert_eq!(a, circles_by_union_find(&d, Side::A));
        assert_eq!(b, circles_by_union_find(&d, Side::B));
        assert_eq!(turaev_genus_diagram(&d), Ok(0));
        assert!(is_adequate_diagram(&d));
    }

    #[test]
    fn unknot_and_curl() {
        let u = LinkDiagram::unknot();
        for side in [Side::A, Side::B] {
            assert_eq!(resolve_all(&u, side).circle_count, 1);
            assert!(decorated_state(&u, side).chords.is_empty());
        }
        let curl = pd("X[1,1,2,2]");
        let a = resolve_all(&curl, Side::A);
        let b = resolve_all(&curl, Side::B);
        assert_eq!(a.circle_count + b.circle_count, 3);
        assert_eq!(a.chord_count() + b.chord_count(), 1);
        assert!(!is_adequate_diagram(&curl));
        assert_eq!(turaev_genus_diagram(&curl), Ok(0));
    }

    #[test]
    fn every_arc_is_on_a_circle() {
        let d = pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        let g = resolve_all(&d, Side::B);
        let ends: usize = g.circle_orders.iter().map(Vec::len).sum();
        assert_eq!(ends, 2 * d.crossing_count());
    }

    #[test]
    fn interleaving_is_symmetric() {
        let c = |ends| Chord { crossing: 0, circle: 0, ends };
        assert!(c([0, 2]).interleaves(&c([1, 3])));
        assert!(c([1, 3]).interleaves(&c([0, 2])));
        assert!(!c([0, 3]).interleaves(&c([1, 2])));
        assert!(!c([0, 1]).interleaves(&c([2, 3])));
    }

    #[test]
    fn disconnected_genus_rejected() {
        let d = pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O1");
        assert_eq!(turaev_genus_diagram(&d), Err(StateError::Disconnected));
    }
}
