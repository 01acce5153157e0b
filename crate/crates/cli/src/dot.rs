//! Graphviz export. Edges point upward in the order (`a -> b` for `a < b`).

use std::fmt::Write;

use stonekit::bits;
use stonekit::dlat::DistLattice;
use stonekit::topspace::FinSpace;

use crate::doc::{Document, Structure};

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

pub fn export(doc: &Document) -> String {
    match &doc.structure {
        Structure::Lattice(l) => lattice(&doc.name, l),
        Structure::Space(x) => space(&doc.name, x),
    }
}

/// Hasse diagram: one edge per cover pair.
pub fn lattice(name: &str, l: &DistLattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for label in l.labels() {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    for (a, b) in l.order().covers() {
        writeln!(out, "  {} -> {};", quote(l.label(a)), quote(l.label(b))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the specialization preorder plus a legend listing the
/// opens. Indistinguishable points are joined by an undirected edge.
pub fn space(name: &str, x: &FinSpace) -> String {
    let up = x.specialization_preorder();
    let leq = |a: usize, b: usize| bits::contains(up[a], b);
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for label in x.labels() {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    let n = x.len();
    for a in 0..n {
        for b in 0..n {
            let strict = |p: usize, q: usize| leq(p, q) && !leq(q, p);
            if strict(a, b) && !(0..n).any(|c| strict(a, c) && strict(c, b)) {
                writeln!(out, "  {} -> {};", quote(x.label(a)), quote(x.label(b))).unwrap();
            } else if a < b && leq(a, b) && leq(b, a) {
                writeln!(out, "  {} -> {} [dir=none];", quote(x.label(a)), quote(x.label(b))).unwrap();
            }
        }
    }
    let mut legend = String::from("opens:");
    for &u in x.opens() {
        legend.push_str("\\l");
        legend.push_str(&x.render(u));
    }
    legend.push_str("\\l");
    writeln!(
        out,
        "  legend [shape=note, label={}];",
        quote(&legend).replace("\\\\l", "\\l")
    )
    .unwrap();
    out.push_str("}\n");
    out
}
