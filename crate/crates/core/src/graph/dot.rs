use std::fmt::Write;

use super::Graph;

pub(super) fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let dot = to_dot(&Graph::complete(3), "K3");
        assert_eq!(
            dot,
            "graph \"K3\" {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
        );
    }
}
