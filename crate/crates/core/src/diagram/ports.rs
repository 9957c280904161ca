//! Unoriented port representation of a diagram.
//!
//! Crossing `x` owns the four darts `4x..4x+4`, numbered counterclockwise.
//! Each dart is matched with the dart at the other end of its edge, and one
//! of the two opposite-port pairs is marked as the under-strand. This is the
//! form the skein engine rewrites; it also backs the diagram generators.

use super::{DiagramError, EdgeLabel, LinkDiagram};
use crate::union_find::UnionFind;

const UNSET: u32 = u32::MAX;

/// Which opposite-port pair carries the under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Ports 0 and 2.
    Even,
    /// Ports 1 and 3.
    Odd,
}

impl Axis {
    fn parity(self) -> u32 {
        match self {
            Axis::Even => 0,
            Axis::Odd => 1,
        }
    }

    fn flipped(self) -> Self {
        match self {
            Axis::Even => Axis::Odd,
            Axis::Odd => Axis::Even,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PortDiagram {
    partner: Vec<u32>,
    under: Vec<Axis>,
    loops: u32,
}

/// A strand passage through a crossing, entering at `dart`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub dart: u32,
    pub over: bool,
}

impl PortDiagram {
    pub fn empty() -> Self {
        Self { partner: Vec::new(), under: Vec::new(), loops: 0 }
    }

    pub fn from_link(d: &LinkDiagram) -> Self {
        let c = d.crossing_count();
        let mut partner = vec![UNSET; 4 * c];
        for l in 1..=2 * c as EdgeLabel {
            let [e0, e1] = d.ends(l);
            let (a, b) = (dart_index(e0.crossing, e0.port), dart_index(e1.crossing, e1.port));
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        Self { partner, under: vec![Axis::Even; c], loops: d.free_loops() }
    }

    pub fn add_crossing(&mut self, under: Axis) -> usize {
        self.partner.extend([UNSET; 4]);
        self.under.push(under);
        self.under.len() - 1
    }

    /// Joins port `p` of crossing `x` to port `q` of crossing `y`.
    pub fn connect(&mut self, x: usize, p: u8, y: usize, q: u8) {
        let (a, b) = (dart_index(x, p), dart_index(y, q));
        assert!(self.partner[a as usize] == UNSET && self.partner[b as usize] == UNSET, "port already connected");
        self.partner[a as usize] = b;
        self.partner[b as usize] = a;
    }

    pub fn add_loops(&mut self, k: u32) {
        self.loops += k;
    }

    pub fn crossing_count(&self) -> usize {
        self.under.len()
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn partner(&self, dart: u32) -> u32 {
        self.partner[dart as usize]
    }

    pub fn under_axis(&self, x: usize) -> Axis {
        self.under[x]
    }

    pub fn is_under_dart(&self, dart: u32) -> bool {
        dart % 2 == self.under[(dart / 4) as usize].parity()
    }

    pub fn is_complete(&self) -> bool {
        self.partner.iter().all(|&p| p != UNSET)
    }

    pub fn switched(&self, x: usize) -> Self {
        let mut d = self.clone();
        d.under[x] = d.under[x].flipped();
        d
    }

    /// Removes crossing `x`, splicing its ports pairwise as given (each pair
    /// becomes one arc). Loops closed by the splice are counted.
    pub fn splice(&self, x: usize, pairs: [(u8, u8); 2]) -> Self {
        let mut d = self.clone();
        for (p, q) in pairs {
            let (p, q) = (dart_index(x, p), dart_index(x, q));
            let (pp, qq) = (d.partner[p as usize], d.partner[q as usize]);
            if pp == q {
                d.loops += 1;
            } else {
                d.partner[pp as usize] = qq;
                d.partner[qq as usize] = pp;
            }
            d.partner[p as usize] = UNSET;
            d.partner[q as usize] = UNSET;
        }
        d.remove_slot(x);
        d
    }

    /// The two smoothings of crossing `x`: `A` joins ports {0,1},{2,3} of a
    /// PD-oriented crossing (under-strand on ports 0,2), `B` joins {0,3},{1,2}.
    pub fn smoothings(&self, x: usize) -> (Self, Self) {
        let r = self.under[x].parity() as u8;
        let port = |k: u8| (k + r) % 4;
        let a = self.splice(x, [(port(0), port(1)), (port(2), port(3))]);
        let b = self.splice(x, [(port(0), port(3)), (port(1), port(2))]);
        (a, b)
    }

    fn remove_slot(&mut self, x: usize) {
        let last = self.crossing_count() - 1;
        if x != last {
            for k in 0..4u32 {
                let from = 4 * last as u32 + k;
                let to = 4 * x as u32 + k;
                let p = self.partner[from as usize];
                // A partner inside the moving crossing moves with it.
                let p = if p != UNSET && p / 4 == last as u32 { 4 * x as u32 + p % 4 } else { p };
                self.partner[to as usize] = p;
                if p != UNSET && p / 4 != x as u32 {
                    self.partner[p as usize] = to;
                }
            }
            self.under[x] = self.under[last];
        }
        self.partner.truncate(4 * last);
        self.under.pop();
    }

    /// A crossing with two adjacent ports joined directly: `(crossing, port)`
    /// where `port` and `port + 1` bound the curl's loop.
    pub fn find_curl(&self) -> Option<(usize, u8)> {
        (0..self.crossing_count()).find_map(|x| {
            (0..4u8).find_map(|p| {
                (self.partner(dart_index(x, p)) == dart_index(x, (p + 1) % 4)).then_some((x, p))
            })
        })
    }

    /// Removes the curl at `(x, p)`; returns the reduced diagram and the sign
    /// of the removed crossing.
    pub fn remove_curl(&self, x: usize, p: u8) -> (Self, i64) {
        let sign = self.crossing_sign_for_loop(x);
        let d = self.splice(x, [(p, (p + 1) % 4), ((p + 2) % 4, (p + 3) % 4)]);
        // The curl's own loop is not a new component.
        let mut d = d;
        d.loops -= 1;
        (d, sign)
    }

    /// Sign of a self-crossing; independent of the strand's orientation.
    fn crossing_sign_for_loop(&self, x: usize) -> i64 {
        let under_in = dart_index(x, self.under[x].parity() as u8);
        let mut cur = self.partner(dart_index(x, (self.under[x].parity() as u8 + 2) % 4));
        loop {
            if cur / 4 == x as u32 {
                // Re-entered x on the over-strand.
                return if cur % 4 == (under_in % 4 + 3) % 4 { 1 } else { -1 };
            }
            cur = self.partner(cur ^ 2);
        }
    }

    /// Strand components: for each, the passages in traversal order starting
    /// from its lowest dart.
    pub fn strands(&self) -> Vec<Vec<Passage>> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut passages = Vec::new();
            let mut cur = start;
            loop {
                seen[cur as usize] = true;
                seen[(cur ^ 2) as usize] = true;
                passages.push(Passage { dart: cur, over: !self.is_under_dart(cur) });
                cur = self.partner(cur ^ 2);
                if cur == start {
                    break;
                }
            }
            out.push(passages);
        }
        out
    }

    /// Crossing signs for the orientation in which each strand is traversed
    /// as returned by [`PortDiagram::strands`]. Only the traversal is used, so
    /// strands taken before switching crossings stay valid.
    pub fn signs(&self, strands: &[Vec<Passage>]) -> Vec<i64> {
        let mut under_in = vec![UNSET; self.crossing_count()];
        let mut over_in = vec![UNSET; self.crossing_count()];
        for p in strands.iter().flatten() {
            let x = (p.dart / 4) as usize;
            if self.is_under_dart(p.dart) {
                under_in[x] = p.dart % 4;
            } else {
                over_in[x] = p.dart % 4;
            }
        }
        under_in
            .iter()
            .zip(&over_in)
            .map(|(&u, &o)| if o == (u + 3) % 4 { 1 } else { -1 })
            .collect()
    }

    /// Connected pieces (each with at least one crossing, no loops) plus the loop count.
    pub fn split(&self) -> (Vec<PortDiagram>, u32) {
        let c = self.crossing_count();
        let mut uf = UnionFind::new(c);
        for (d, &p) in self.partner.iter().enumerate() {
            uf.union(d / 4, (p / 4) as usize);
        }
        if uf.classes() <= 1 {
            let mut only = self.clone();
            let loops = only.loops;
            only.loops = 0;
            return (if c == 0 { Vec::new() } else { vec![only] }, loops);
        }
        let mut root_slot = std::collections::HashMap::new();
        let mut new_index = vec![0usize; c];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (x, index) in new_index.iter_mut().enumerate() {
            let r = uf.find(x);
            let slot = *root_slot.entry(r).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            *index = members[slot].len();
            members[slot].push(x);
        }
        let pieces = members
            .iter()
            .map(|xs| {
                let mut partner = Vec::with_capacity(4 * xs.len());
                for &x in xs {
                    for k in 0..4 {
                        let p = self.partner[4 * x + k];
                        partner.push(4 * new_index[(p / 4) as usize] as u32 + p % 4);
                    }
                }
                PortDiagram { partner, under: xs.iter().map(|&x| self.under[x]).collect(), loops: 0 }
            })
            .collect();
        (pieces, self.loops)
    }

    /// A relabelling-invariant code: equal codes ⇔ equal diagrams up to
    /// orientation-preserving relabelling of crossings and ports.
    pub fn canonical_code(&self) -> Vec<u32> {
        let (pieces, loops) = self.split();
        let mut codes: Vec<Vec<u32>> = pieces.iter().map(|p| p.connected_code()).collect();
        codes.sort();
        let mut out = Vec::new();
        for code in codes {
            out.push(code.len() as u32);
            out.extend(code);
        }
        out.push(UNSET);
        out.push(loops);
        out
    }

    fn connected_code(&self) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for start in 0..self.partner.len() as u32 {
            if let Some(code) = self.code_from(start, best.as_deref()) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    /// Breadth-first code starting at `start`; `None` as soon as it is
    /// known to exceed `bound`.
    fn code_from(&self, start: u32, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        let c = self.crossing_count();
        let mut label = vec![UNSET; c];
        let mut offset = vec![0u32; c];
        let mut order = Vec::with_capacity(c);
        label[(start / 4) as usize] = 0;
        offset[(start / 4) as usize] = start % 4;
        order.push((start / 4) as usize);
        let mut code = Vec::with_capacity(5 * c);
        let mut strictly_less = false;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            let r = offset[x];
            let mut push = |v: u32, code: &mut Vec<u32>| -> bool {
                if !strictly_less {
                    if let Some(b) = bound {
                        let pos = code.len();
                        match v.cmp(&b[pos]) {
                            std::cmp::Ordering::Greater => return false,
                            std::cmp::Ordering::Less => strictly_less = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                code.push(v);
                true
            };
            let flag = (self.under[x].parity() + r) % 2;
            if !push(flag, &mut code) {
                return None;
            }
            for k in 0..4 {
                let p = self.partner[4 * x + ((r + k) % 4) as usize];
                let y = (p / 4) as usize;
                if label[y] == UNSET {
                    label[y] = order.len() as u32;
                    offset[y] = p % 4;
                    order.push(y);
                }
                let v = 4 * label[y] + (p % 4 + 4 - offset[y]) % 4;
                if !push(v, &mut code) {
                    return None;
                }
            }
            i += 1;
        }
        match bound {
            Some(_) if !strictly_less => None,
            _ => Some(code),
        }
    }

    /// Orients each strand by traversal and assigns consecutive PD labels.
    pub fn to_link(&self) -> Result<LinkDiagram, DiagramError> {
        if !self.is_complete() {
            return Err(DiagramError::Orientation("unconnected port".into()));
        }
        let c = self.crossing_count();
        let mut dart_label = vec![0 as EdgeLabel; 4 * c];
        let mut under_entry = vec![0u32; c];
        let mut next: EdgeLabel = 1;
        for strand in self.strands() {
            let first = next;
            let n = strand.len() as EdgeLabel;
            for (i, p) in strand.iter().enumerate() {
                let x = (p.dart / 4) as usize;
                if !p.over {
                    under_entry[x] = p.dart % 4;
                }
                let exit = p.dart ^ 2;
                let l = first + (i as EdgeLabel + 1) % n;
                dart_label[exit as usize] = l;
                dart_label[self.partner(exit) as usize] = l;
            }
            next += n;
        }
        let tuples = (0..c)
            .map(|x| {
                let u = under_entry[x];
                [0, 1, 2, 3].map(|k| dart_label[4 * x + ((u + k) % 4) as usize])
            })
            .collect();
        LinkDiagram::new(tuples, self.loops)
    }
}

pub(crate) fn dart_index(x: usize, p: u8) -> u32 {
    4 * x as u32 + p as u32
}
