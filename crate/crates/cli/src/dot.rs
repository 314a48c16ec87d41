//! Graphviz output for posets, relations, norphisms, and weighted graphs.

use std::fmt::Write;

use norphism_core::matrix::BoolMatrix;
use norphism_core::metric::{format_rational, WeightedDigraph};
use norphism_core::poset::Preorder;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram: one edge per cover, bottom to top.
pub fn poset(name: &str, p: &Preorder) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for e in p.elements() {
        writeln!(out, "  {};", quote(e)).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(out, "  {} -> {};", quote(p.name(a)), quote(p.name(b))).unwrap();
    }
    out.push_str("}\n");
    out
}

fn bipartite_header(out: &mut String, name: &str, dom: &Preorder, cod: &Preorder) {
    writeln!(out, "digraph {} {{\n  rankdir=LR;", quote(name)).unwrap();
    for (side, prefix, space) in [("dom", "d", dom), ("cod", "c", cod)] {
        writeln!(out, "  subgraph {} {{\n    label={};", quote(&format!("cluster_{side}")), quote(side)).unwrap();
        for e in space.elements() {
            writeln!(out, "    {} [label={}];", quote(&format!("{prefix}:{e}")), quote(e)).unwrap();
        }
        out.push_str("  }\n");
    }
}

/// Bipartite graph with one edge per true cell.
pub fn relation(name: &str, dom: &Preorder, cod: &Preorder, rel: &BoolMatrix) -> String {
    let mut out = String::new();
    bipartite_header(&mut out, name, dom, cod);
    for (p, q) in rel.true_cells() {
        writeln!(out, "  {} -> {};", quote(&format!("d:{}", dom.name(p))), quote(&format!("c:{}", cod.name(q)))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Every cell as an edge; banned cells drawn red and bold.
pub fn norphism(name: &str, dom: &Preorder, cod: &Preorder, rel: &BoolMatrix) -> String {
    let mut out = String::new();
    bipartite_header(&mut out, name, dom, cod);
    for p in 0..dom.len() {
        for q in 0..cod.len() {
            let style = if rel.get(p, q) {
                "color=red, penwidth=2"
            } else {
                "color=gray, style=dotted"
            };
            writeln!(
                out,
                "  {} -> {} [{style}];",
                quote(&format!("d:{}", dom.name(p))),
                quote(&format!("c:{}", cod.name(q)))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn graph(name: &str, g: &WeightedDigraph) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for n in g.nodes() {
        writeln!(out, "  {};", quote(n)).unwrap();
    }
    for e in g.edges() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&g.nodes()[e.src]),
            quote(&g.nodes()[e.dst]),
            quote(&format_rational(&e.weight))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
