use std::fmt::Write;

use super::PackedMatrix;

/// Graphviz rendering of a labelled diagram: white spots (rows) as unfilled
/// nodes, black spots (columns) as filled nodes, and `aᵢⱼ` parallel edges
/// between white spot `i` and black spot `j`.
pub fn to_dot(m: &PackedMatrix) -> String {
    let mut out = String::from("graph diagram {\n");
    for i in 0..m.rows() {
        writeln!(out, "  w{} [shape=circle, style=solid, label=\"\"];", i + 1).unwrap();
    }
    for j in 0..m.cols() {
        writeln!(
            out,
            "  b{} [shape=circle, style=filled, fillcolor=black, label=\"\"];",
            j + 1
        )
        .unwrap();
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            for _ in 0..m.get(i, j) {
                writeln!(out, "  w{} -- b{};", i + 1, j + 1).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edges() {
        let dot = to_dot(&PackedMatrix::parse("2 0 1;0 2 1").unwrap());
        assert_eq!(dot.matches("w1 -- b1;").count(), 2);
        assert_eq!(dot.matches("w2 -- b2;").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert_eq!(dot.matches("style=filled").count(), 3);
        assert_eq!(dot.matches("style=solid").count(), 2);
    }

    #[test]
    fn empty_diagram() {
        assert_eq!(to_dot(&PackedMatrix::empty()), "graph diagram {\n}\n");
    }
}
