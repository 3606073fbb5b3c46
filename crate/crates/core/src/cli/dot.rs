use std::fmt::Write;

use crate::config::PointConfiguration;
use crate::scalar::format_rational;
use crate::triangulate::DualGraph;

/// Dual graph in DOT: nodes labeled by cell vertices, edges by lengths.
pub fn dual_graph_dot(config: &PointConfiguration, g: &DualGraph) -> String {
    let mut s = String::from("graph dual {\n");
    for (i, c) in g.cells().iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{}\"];", c.display(config)).unwrap();
    }
    for e in g.edges() {
        writeln!(s, "  n{} -- n{} [label=\"{}\"];", e.ends.0, e.ends.1, format_rational(&e.length)).unwrap();
    }
    s.push_str("}\n");
    s
}
