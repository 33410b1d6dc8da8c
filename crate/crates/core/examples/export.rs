// DOT and JSON export of a graph, its quotient and its complement.
//
// Run with `cargo run --example export`; pipe the DOT through
// `dot -Tsvg` to draw it.

use cozero::graph::GraphDump;
use cozero::{parse_spec, CozeroGraph};

pub fn run_example() -> cozero::Result<()> {
    let g = CozeroGraph::build(&parse_spec("Z3xZ3")?)?;
    print!("{}", g.to_dot());

    let q = g.quotient_by_associates()?.graph;
    print!("{}", q.to_dot());
    print!("{}", q.complement().to_json());

    let dump: GraphDump = serde_json::from_str(&g.to_json())?;
    assert_eq!(dump.edges.len(), g.edge_count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
