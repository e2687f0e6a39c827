//! DOT and GraphML text output. Vertices appear in index order, edges in
//! lexicographic order, so equal graphs give byte-identical files.

use std::fmt::Write;

use super::NcGraph;

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT graph labelled with canonical projective coordinates.
pub fn to_dot(g: &NcGraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", escape_dot(name)).unwrap();
    for v in 0..g.order() {
        writeln!(out, "  {v} [label=\"{}\"];", escape_dot(&g.label(v))).unwrap();
    }
    for (u, v) in g.graph().edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn to_graphml(g: &NcGraph, name: &str) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    out.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
    writeln!(
        out,
        "  <graph id=\"{}\" edgedefault=\"undirected\">",
        escape_xml(name)
    )
    .unwrap();
    for v in 0..g.order() {
        writeln!(
            out,
            "    <node id=\"n{v}\"><data key=\"label\">{}</data></node>",
            escape_xml(&g.label(v))
        )
        .unwrap();
    }
    for (i, (u, v)) in g.graph().edges().into_iter().enumerate() {
        writeln!(
            out,
            "    <edge id=\"e{i}\" source=\"n{u}\" target=\"n{v}\"/>"
        )
        .unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}
