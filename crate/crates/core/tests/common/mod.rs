#![allow(dead_code)]

use std::path::PathBuf;

use knotspan::harness::corpus::{ingest, CorpusEntry};
use knotspan::harness::generate::random_diagram;
use knotspan::LinkDiagram;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn knots_dir() -> PathBuf {
    data_dir().join("knots")
}

pub fn knots(c: usize) -> Vec<CorpusEntry> {
    let corpus = ingest(knots_dir().join(format!("c{c:02}.pd"))).expect("corpus file");
    assert!(corpus.rejected.is_empty(), "rejected lines in c{c:02}.pd: {:?}", corpus.rejected);
    corpus.entries
}

pub fn knots_up_to(max_c: usize) -> Vec<CorpusEntry> {
    (3..=max_c).flat_map(knots).collect()
}

/// Seeded braid closures with at most `max_c` crossings; width and length
/// are drawn from the seed as well.
pub fn random_diagrams(count: usize, max_c: usize, salt: u64) -> Vec<(u64, LinkDiagram)> {
    (0..count as u64)
        .map(|i| {
            let seed = salt.wrapping_mul(1_000_003).wrapping_add(i);
            let width = 2 + (seed % 4) as usize;
            let length = 1 + (seed / 4 % max_c as u64) as usize;
            (seed, random_diagram(seed, width, length))
        })
        .collect()
}

/// The transcribed 15-crossing diagram with two alternating tangles, nine
/// all-A circles and six all-B circles.
pub const TWO_TANGLE_15: &str = "X[17,1,18,30] X[1,17,2,16] X[15,3,16,2] X[3,19,4,18] X[19,5,20,4] \
X[5,23,6,22] X[21,7,22,6] X[7,21,8,20] X[8,27,9,28] X[28,9,29,10] X[10,29,11,30] X[26,11,27,12] \
X[12,23,13,24] X[24,13,25,14] X[14,25,15,26]";

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const HOPF: &str = "X[4,1,3,2] X[2,3,1,4]";
