use std::fmt::Write;

use super::PointedPoset;

/// Graphviz rendering of the Hasse diagram, bottom to top, with the basepoint
/// double-circled. Nodes and edges are emitted in lexicographic order.
pub fn hasse_dot(p: &PointedPoset, title: &str) -> String {
    let q = p.poset();
    let mut nodes: Vec<usize> = (0..q.len()).collect();
    nodes.sort_by(|&a, &b| q.name(a).cmp(q.name(b)));
    let mut edges: Vec<(&str, &str)> = q.hasse().into_iter().map(|(a, b)| (q.name(a), q.name(b))).collect();
    edges.sort();

    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(title));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=ellipse];");
    for a in nodes {
        if a == p.basepoint() {
            let _ = writeln!(out, "  {} [shape=doublecircle];", quote(q.name(a)));
        } else {
            let _ = writeln!(out, "  {};", quote(q.name(a)));
        }
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  {} -> {};", quote(a), quote(b));
    }
    out.push_str("}\n");
    out
}

pub(crate) fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
