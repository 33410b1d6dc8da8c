use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::graph::CozeroGraph;

/// JSON shape of an exported graph. Edges are `[u, v]` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub spec: String,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl CozeroGraph {
    pub fn dump(&self) -> GraphDump {
        GraphDump {
            spec: self.spec().to_string(),
            labels: self.labels().iter().map(ToString::to_string).collect(),
            edges: self
                .graph()
                .edges()
                .into_iter()
                .map(|(u, v)| [u, v])
                .collect(),
        }
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(&self.dump()).expect("graph dump serializes");
        out.push('\n');
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", self.spec()).unwrap();
        for (v, label) in self.labels().iter().enumerate() {
            writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
        }
        for (u, v) in self.graph().edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_spec;

    fn build(s: &str) -> CozeroGraph {
        CozeroGraph::build(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn dot_for_klein_ring() {
        assert_eq!(
            build("Z2xZ2").to_dot(),
            "graph \"Z2xZ2\" {\n  0 [label=\"(0,1)\"];\n  1 [label=\"(1,0)\"];\n  0 -- 1;\n}\n"
        );
    }

    #[test]
    fn json_for_z4() {
        assert_eq!(
            build("Z4").to_json(),
            "{\"spec\":\"Z4\",\"labels\":[\"(2)\"],\"edges\":[]}\n"
        );
    }

    #[test]
    fn json_parses_back() {
        let g = build("Z2xZ2xZ2");
        let dump: GraphDump = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(dump.labels.len(), 6);
        assert_eq!(dump.edges.len(), 9);
        assert!(dump.edges.windows(2).all(|w| w[0] < w[1]));
    }
}
