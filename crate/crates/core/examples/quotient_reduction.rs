// Collapse associate classes and match the result against Z2^n.
//
// Run with `cargo run --release --example quotient_reduction`.

use cozero::solvers::{are_isomorphic, is_isomorphism, max_clique};
use cozero::{parse_spec, CozeroGraph, Limits, RingSpec};

pub fn run_example() -> cozero::Result<()> {
    let limits = Limits::default();
    for text in ["Z3xZ3", "Z2xZ3xZ5", "Z2xZ3xZ5xZ7"] {
        let spec = parse_spec(text)?;
        let g = CozeroGraph::build(&spec)?;
        let q = g.quotient_by_associates()?;
        let n = spec.min_prime_count()?;
        let boolean = CozeroGraph::build(&RingSpec::boolean(n)?)?;
        let map = are_isomorphic(q.graph.graph(), boolean.graph())?.expect("isomorphic");
        assert!(is_isomorphism(q.graph.graph(), boolean.graph(), &map));
        println!(
            "{spec}: {} vertices -> {} classes (sizes {:?}), omega {} -> {}",
            g.order(),
            q.graph.order(),
            q.class_sizes,
            max_clique(g.graph(), &limits)?.size,
            max_clique(q.graph.graph(), &limits)?.size,
        );
        for (i, &v) in map.iter().enumerate() {
            println!("  {} ~ {}", q.graph.label(i), boolean.label(v));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
