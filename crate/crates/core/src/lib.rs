//! Exact invariants of planar link diagrams given in PD notation: the
//! Kauffman bracket and Jones polynomial, all-A/all-B states, Turaev genus
//! and adequacy of a diagram, extreme bracket coefficients from chord
//! interleaving, the two-variable Kauffman polynomial, and alternating
//! tangle decompositions. The [`harness`] module runs these over knot-table
//! corpora and random braid closures.

pub mod bracket;
pub mod diagram;
pub mod extremal;
pub mod harness;
pub mod kauffman;
pub mod laurent;
pub mod states;
pub mod tangle;
pub mod union_find;

pub use bracket::{bracket_report, jones, kauffman_bracket, span_jones, BracketError, BracketReport};
pub use diagram::{parse_pd, Axis, DiagramError, EdgeLabel, LinkDiagram, PortDiagram, Sign};
pub use extremal::{extreme_coefficient, interleave_graph, Extreme, InterleaveGraph};
pub use kauffman::{lambda_poly, KauffmanError, KauffmanReport, SkeinEngine};
pub use laurent::{JonesPoly, LaurentPoly1, LaurentPoly2, PolyError};
pub use states::{
    decorated_state, is_a_adequate, is_adequate_diagram, is_b_adequate, resolve_all, turaev_genus_diagram, Side,
    StateGeometry,
};
pub use tangle::{classify_edges, decompose, is_genus_one_cycle_form, TangleDecomposition};
