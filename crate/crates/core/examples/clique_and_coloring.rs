// Exact clique and chromatic numbers, compared with C(n, n/2).
//
// Run with `cargo run --release --example clique_and_coloring`.

use cozero::solvers::{chromatic_number, max_clique};
use cozero::verify::binomial;
use cozero::{parse_spec, CozeroGraph, Limits};

pub fn run_example() -> cozero::Result<()> {
    let limits = Limits::default();
    for text in [
        "Z2xZ2",
        "Z2xZ2xZ2xZ2",
        "Z2xZ2xZ2xZ2xZ2",
        "Z2xZ3xZ5",
        "Z3xZ5xZ7",
    ] {
        let spec = parse_spec(text)?;
        let n = spec.min_prime_count()?;
        let g = CozeroGraph::build_with_limits(&spec, &limits)?;
        let clique = max_clique(g.graph(), &limits)?;
        let coloring = chromatic_number(g.graph(), &limits)?;
        assert!(g.graph().is_clique(&clique.witness));
        assert!(g.graph().is_proper_coloring(&coloring.assignment));
        println!(
            "{spec}: {} vertices, omega={} chi={} C({n},{})={}",
            g.order(),
            clique.size,
            coloring.count,
            n / 2,
            binomial(n, n / 2)
        );
        let labels: Vec<String> = clique
            .witness
            .iter()
            .map(|&v| g.label(v).to_string())
            .collect();
        println!("  clique: {}", labels.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
