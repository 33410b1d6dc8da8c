// Local rings with principal maximal ideal give edgeless graphs.
//
// Run with `cargo run --example null_graphs`.

use cozero::verify::{is_local, principal_maximal_ideal};
use cozero::{parse_spec, CozeroGraph};

pub fn run_example() -> cozero::Result<()> {
    for text in ["Z4", "Z8", "Z9", "Z27", "Z2xZ2", "Z2xZ4", "Z6"] {
        let spec = parse_spec(text)?;
        let g = CozeroGraph::build(&spec)?;
        let generator = principal_maximal_ideal(&spec);
        println!(
            "{spec}: edges={} local={} maximal ideal generated by {}",
            g.edge_count(),
            is_local(&spec),
            generator.map_or("-".to_string(), |x| x.to_string())
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
