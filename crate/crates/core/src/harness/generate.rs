//! Diagram generators: random braid closures, pretzel diagrams, and a
//! connected-sum fixture.
//!
//! Crossings are placed upright with ports 0 = NE, 1 = NW, 2 = SW, 3 = SE
//! (counterclockwise); strands run NE–SW and NW–SE.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Axis, DiagramError, LinkDiagram, PortDiagram};

const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

/// Uniform braid word on `width` strands: letter `±i` is `σ_i^{±1}`, `1 <= i < width`.
pub fn random_braid_word(rng: &mut impl Rng, width: usize, length: usize) -> Vec<i32> {
    assert!(width >= 2, "braid width must be at least 2");
    (0..length)
        .map(|_| {
            let i = rng.gen_range(1..width as i32);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect()
}

/// Closure of a braid word, read top to bottom. Strands touched by no
/// letter become free loops.
pub fn braid_closure(width: usize, word: &[i32]) -> Result<LinkDiagram, DiagramError> {
    let mut p = PortDiagram::empty();
    let mut top: Vec<Option<(usize, u8)>> = vec![None; width];
    let mut bottom: Vec<Option<(usize, u8)>> = vec![None; width];
    for &letter in word {
        let i = letter.unsigned_abs() as usize - 1;
        assert!(i + 1 < width, "letter {letter} out of range for width {width}");
        let x = p.add_crossing(if letter > 0 { Axis::Odd } else { Axis::Even });
        for (pos, port) in [(i, NW), (i + 1, NE)] {
            match bottom[pos] {
                Some((y, q)) => p.connect(y, q, x, port),
                None => top[pos] = Some((x, port)),
            }
        }
        bottom[i] = Some((x, SW));
        bottom[i + 1] = Some((x, SE));
    }
    for (t, b) in top.iter().zip(&bottom) {
        match (t, b) {
            (Some((x, p1)), Some((y, p2))) => p.connect(*y, *p2, *x, *p1),
            _ => p.add_loops(1),
        }
    }
    p.to_link()
}

/// Closure of a seeded uniform random braid word.
pub fn random_diagram(seed: u64, width: usize, length: usize) -> LinkDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word = random_braid_word(&mut rng, width, length);
    braid_closure(width, &word).expect("braid closures are valid diagrams")
}

/// A vertical twist of `len` crossings; returns crossing ids top to bottom.
fn twist_column(p: &mut PortDiagram, len: usize, axis: Axis) -> Vec<usize> {
    let xs: Vec<usize> = (0..len).map(|_| p.add_crossing(axis)).collect();
    for w in xs.windows(2) {
        p.connect(w[0], SW, w[1], NW);
        p.connect(w[0], SE, w[1], NE);
    }
    xs
}

fn twist_axis(t: i32) -> Axis {
    if t > 0 { Axis::Odd } else { Axis::Even }
}

/// Standard diagram of the pretzel link `P(t_1, ..., t_n)`, every `t_i != 0`.
pub fn pretzel(twists: &[i32]) -> Result<LinkDiagram, DiagramError> {
    assert!(!twists.is_empty() && twists.iter().all(|&t| t != 0), "pretzel twists must be nonzero");
    let mut p = PortDiagram::empty();
    let columns: Vec<Vec<usize>> =
        twists.iter().map(|&t| twist_column(&mut p, t.unsigned_abs() as usize, twist_axis(t))).collect();
    for w in columns.windows(2) {
        let (left, right) = (&w[0], &w[1]);
        p.connect(left[0], NE, right[0], NW);
        p.connect(*left.last().unwrap(), SE, *right.last().unwrap(), SW);
    }
    let (first, last) = (&columns[0], columns.last().unwrap());
    p.connect(first[0], NW, last[0], NE);
    p.connect(*first.last().unwrap(), SW, *last.last().unwrap(), SE);
    p.to_link()
}

/// Two 3-crossing twists of opposite handedness, each closed into a
/// trefoil, joined side by side so that the joining edges are not
/// alternating.
pub fn trefoil_sum_fixture() -> LinkDiagram {
    let mut p = PortDiagram::empty();
    let a = twist_column(&mut p, 3, Axis::Odd);
    let b = twist_column(&mut p, 3, Axis::Even);
    p.connect(a[0], NE, b[0], NW);
    p.connect(a[2], SE, b[2], SW);
    p.connect(a[0], NW, a[2], SW);
    p.connect(b[0], NE, b[2], SE);
    p.to_link().expect("fixture is a valid diagram")
}
