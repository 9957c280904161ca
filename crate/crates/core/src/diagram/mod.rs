//! Oriented planar link diagrams given by PD codes.
//!
//! A crossing is a tuple `(a, b, c, d)` of edge labels listed counterclockwise
//! starting from the incoming under-edge `a`; the under-strand runs `a → c`.
//! The crossing is positive exactly when the over-strand runs `d → b`.

mod parse;
mod ports;

pub use parse::parse_pd;
pub use ports::{Axis, PortDiagram};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::union_find::UnionFind;

pub type EdgeLabel = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("edge label {label} out of range 1..={max}")]
    LabelRange { label: EdgeLabel, max: EdgeLabel },
    #[error("edge label {label} occurs {count} times (expected exactly twice)")]
    LabelMultiplicity { label: EdgeLabel, count: usize },
    #[error("inconsistent orientation: {0}")]
    Orientation(String),
    #[error("diagram is not planar: {faces} faces, Euler count requires {expected}")]
    NonPlanar { faces: usize, expected: usize },
    #[error("empty diagram (no crossings and no free loops)")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossingTuple {
    pub labels: [EdgeLabel; 4],
    pub sign: Sign,
}

/// One end of an edge: crossing index and port `0..4` (`a, b, c, d`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub crossing: usize,
    pub port: u8,
}

impl Dart {
    pub fn is_over(self) -> bool {
        self.port % 2 == 1
    }
}

/// A link component: its edge labels form the cyclic interval `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelInterval {
    pub lo: EdgeLabel,
    pub hi: EdgeLabel,
}

impl LabelInterval {
    pub fn len(&self) -> u32 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, l: EdgeLabel) -> bool {
        (self.lo..=self.hi).contains(&l)
    }
}

/// A validated, immutable oriented link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<CrossingTuple>,
    free_loops: u32,
    components: Vec<LabelInterval>,
    ends: Vec<[Dart; 2]>,
}

impl LinkDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::new(Vec::new(), 1).expect("unknot is valid")
    }

    /// Validates raw PD tuples: label multiplicity, orientation, planarity.
    pub fn new(tuples: Vec<[EdgeLabel; 4]>, free_loops: u32) -> Result<Self, DiagramError> {
        let c = tuples.len();
        if c == 0 && free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        let max = 2 * c as EdgeLabel;
        let mut seen: Vec<Vec<Dart>> = vec![Vec::new(); 2 * c];
        for (x, t) in tuples.iter().enumerate() {
            for (p, &l) in t.iter().enumerate() {
                if l == 0 || l > max {
                    return Err(DiagramError::LabelRange { label: l, max });
                }
                seen[(l - 1) as usize].push(Dart { crossing: x, port: p as u8 });
            }
        }
        for (i, s) in seen.iter().enumerate() {
            if s.len() != 2 {
                return Err(DiagramError::LabelMultiplicity { label: i as EdgeLabel + 1, count: s.len() });
            }
        }
        let ends: Vec<[Dart; 2]> = seen.into_iter().map(|s| [s[0], s[1]]).collect();
        let (components, over_entry) = orient(&tuples, &ends)?;
        let crossings = tuples
            .into_iter()
            .zip(over_entry)
            .map(|(labels, entry)| CrossingTuple {
                labels,
                sign: if entry == 3 { Sign::Positive } else { Sign::Negative },
            })
            .collect();
        let d = Self { crossings, free_loops, components, ends };
        d.check_planar()?;
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[CrossingTuple] {
        &self.crossings
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    /// Label intervals of the link components that pass through crossings.
    pub fn label_components(&self) -> &[LabelInterval] {
        &self.components
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops as usize
    }

    pub fn label(&self, d: Dart) -> EdgeLabel {
        self.crossings[d.crossing].labels[d.port as usize]
    }

    /// Both ends of an edge.
    pub fn ends(&self, label: EdgeLabel) -> [Dart; 2] {
        self.ends[(label - 1) as usize]
    }

    /// The dart at the other end of the edge leaving `d`.
    pub fn partner(&self, d: Dart) -> Dart {
        let [e0, e1] = self.ends(self.label(d));
        if e0 == d { e1 } else { e0 }
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|t| t.sign.value()).sum()
    }

    /// All crossings switched.
    pub fn mirror(&self) -> Self {
        let tuples = self
            .crossings
            .iter()
            .map(|t| {
                let [a, b, c, d] = t.labels;
                match t.sign {
                    Sign::Positive => [d, a, b, c],
                    Sign::Negative => [b, c, d, a],
                }
            })
            .collect();
        Self::new(tuples, self.free_loops).expect("mirror of a valid diagram is valid")
    }

    /// Split union; labels of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = 2 * self.crossing_count() as EdgeLabel;
        let mut tuples: Vec<[EdgeLabel; 4]> = self.crossings.iter().map(|t| t.labels).collect();
        tuples.extend(other.crossings.iter().map(|t| t.labels.map(|l| l + off)));
        Self::new(tuples, self.free_loops + other.free_loops).expect("split union is valid")
    }

    /// Rotates the labels of every component by `shift` steps inside its interval.
    pub fn relabel_cyclic(&self, shift: u32) -> Self {
        let tuples = self
            .crossings
            .iter()
            .map(|t| {
                t.labels.map(|l| {
                    let iv = self.components.iter().find(|iv| iv.contains(l)).expect("label has a component");
                    iv.lo + (l - iv.lo + shift) % iv.len()
                })
            })
            .collect();
        Self::new(tuples, self.free_loops).expect("relabelled diagram is valid")
    }

    /// Connected components of the underlying 4-valent graph (free loops excluded).
    pub fn graph_component_count(&self) -> usize {
        let c = self.crossing_count();
        let mut uf = UnionFind::new(c);
        for [e0, e1] in &self.ends {
            uf.union(e0.crossing, e1.crossing);
        }
        uf.classes()
    }

    pub fn is_connected(&self) -> bool {
        if self.crossing_count() == 0 {
            return self.free_loops == 1;
        }
        self.free_loops == 0 && self.graph_component_count() == 1
    }

    /// True iff no crossing is a cut vertex of the 4-valent graph (edges
    /// subdivided, so a curl's loop counts as a separate block).
    pub fn is_reduced(&self) -> bool {
        (0..self.crossing_count()).all(|x| !self.is_cut_vertex(x))
    }

    fn is_cut_vertex(&self, x: usize) -> bool {
        // Nodes: crossings 0..c, then edge midpoints c..3c.
        let c = self.crossing_count();
        let count = |skip: Option<usize>| {
            let mut uf = UnionFind::new(3 * c);
            for (i, [e0, e1]) in self.ends.iter().enumerate() {
                for e in [e0, e1] {
                    if Some(e.crossing) != skip {
                        uf.union(c + i, e.crossing);
                    }
                }
            }
            uf.classes() - usize::from(skip.is_some())
        };
        count(Some(x)) > count(None)
    }

    /// Number of faces of the rotation system given by the PD tuples.
    pub fn face_count(&self) -> usize {
        let c = self.crossing_count();
        let mut visited = vec![false; 4 * c];
        let mut faces = 0;
        for start in 0..4 * c {
            if visited[start] {
                continue;
            }
            faces += 1;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                let d = self.partner(Dart { crossing: cur / 4, port: (cur % 4) as u8 });
                cur = d.crossing * 4 + (d.port as usize + 1) % 4;
            }
        }
        faces
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let c = self.crossing_count();
        if c == 0 {
            return Ok(());
        }
        let faces = self.face_count();
        let expected = c + 2 * self.graph_component_count();
        if faces != expected {
            return Err(DiagramError::NonPlanar { faces, expected });
        }
        Ok(())
    }

    /// PD text, e.g. `X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]`, with `O<k>` for free loops.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|t| format!("X[{},{},{},{}]", t.labels[0], t.labels[1], t.labels[2], t.labels[3]))
            .collect();
        if self.free_loops > 0 {
            parts.push(format!("O{}", self.free_loops));
        }
        parts.join(" ")
    }

    pub fn ports(&self) -> PortDiagram {
        PortDiagram::from_link(self)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

impl std::str::FromStr for LinkDiagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

/// Walks every component along increasing labels. Returns the label
/// intervals and, per crossing, the port (1 or 3) where the over-strand enters.
fn orient(
    tuples: &[[EdgeLabel; 4]],
    ends: &[[Dart; 2]],
) -> Result<(Vec<LabelInterval>, Vec<u8>), DiagramError> {
    let c = tuples.len();
    let label = |d: Dart| tuples[d.crossing][d.port as usize];
    let other_end = |l: EdgeLabel, d: Dart| {
        let [e0, e1] = ends[(l - 1) as usize];
        if e0 == d { e1 } else { e0 }
    };
    let mut over_entry = vec![0u8; c];
    let mut passage_done = vec![[false; 2]; c];
    let mut label_done = vec![false; 2 * c];
    let mut components = Vec::new();

    for lo in 1..=2 * c as EdgeLabel {
        if label_done[(lo - 1) as usize] {
            continue;
        }
        let mut walked = None;
        for head in ends[(lo - 1) as usize] {
            if let Some(w) = walk(lo, head, &label, &other_end, &passage_done) {
                walked = Some(w);
                break;
            }
        }
        let (entries, hi) = walked.ok_or_else(|| {
            DiagramError::Orientation(format!("labels do not increase along the component through edge {lo}"))
        })?;
        for d in entries {
            passage_done[d.crossing][(d.port % 2) as usize] = true;
            if d.is_over() {
                over_entry[d.crossing] = d.port;
            }
        }
        for l in lo..=hi {
            label_done[(l - 1) as usize] = true;
        }
        components.push(LabelInterval { lo, hi });
    }
    Ok((components, over_entry))
}

fn walk(
    lo: EdgeLabel,
    head: Dart,
    label: &impl Fn(Dart) -> EdgeLabel,
    other_end: &impl Fn(EdgeLabel, Dart) -> Dart,
    passage_done: &[[bool; 2]],
) -> Option<(Vec<Dart>, EdgeLabel)> {
    let mut entries: Vec<Dart> = Vec::new();
    let mut e = lo;
    let mut h = head;
    loop {
        let axis = (h.port % 2) as usize;
        if passage_done[h.crossing][axis] || entries.iter().any(|d| d.crossing == h.crossing && (d.port % 2) as usize == axis) {
            return None;
        }
        if axis == 0 && h.port != 0 {
            return None;
        }
        entries.push(h);
        let exit = Dart { crossing: h.crossing, port: (h.port + 2) % 4 };
        let next = label(exit);
        if next == e + 1 {
            e = next;
            h = other_end(next, exit);
        } else if next == lo {
            return (other_end(lo, exit) == head).then_some((entries, e));
        } else {
            return None;
        }
    }
}
