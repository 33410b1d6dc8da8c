// Build the cozero-divisor graph of a small ring and look around.
//
// Run with `cargo run --example build_graph`.

use cozero::{parse_spec, CozeroGraph};

pub fn run_example() -> cozero::Result<()> {
    let spec = parse_spec("Z2xZ3")?;
    println!(
        "{spec}: {} elements, {} units",
        spec.cardinality(),
        spec.unit_count()
    );

    let g = CozeroGraph::build(&spec)?;
    println!("{} vertices, {} edges", g.order(), g.edge_count());
    for (u, v) in g.graph().edges() {
        println!("  {} -- {}", g.label(u), g.label(v));
    }

    // Ra is the set of multiples of gcd(a_i, n_i) in each component
    let a = spec.element([0, 1])?;
    let b = spec.element([0, 2])?;
    println!(
        "{a} in R{b}: {}, same ideal signature: {}",
        spec.in_principal_ideal(&a, &b),
        spec.ideal_signature(&a) == spec.ideal_signature(&b)
    );

    for class in spec.associate_classes().classes() {
        let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
        println!("  class of {}: {}", class.representative, members.join(" "));
    }

    // Z6 is the same ring, split by the Chinese remainder theorem
    let z6 = parse_spec("Z6")?;
    let crt = z6.crt_split();
    let four = z6.element([4])?;
    println!(
        "{} splits as {}; {four} -> {}",
        z6,
        crt.split(),
        crt.forward(&four)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
