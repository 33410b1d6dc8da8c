// Perfection by exhaustive odd hole and odd antihole search.
//
// Run with `cargo run --release --example perfection`.

use cozero::solvers::{find_odd_hole, is_perfect_desk_scale, CycleLocation};
use cozero::{parse_spec, CozeroGraph, Graph, Limits};

pub fn run_example() -> cozero::Result<()> {
    let limits = Limits::default();
    for text in ["Z2xZ2xZ2xZ2xZ2", "Z2xZ3xZ5xZ7"] {
        let g = CozeroGraph::build(&parse_spec(text)?)?;
        let p = is_perfect_desk_scale(g.graph(), &limits)?;
        println!("{text}: perfect={}", p.perfect);
    }

    // a five-cycle is the smallest imperfect graph
    let c5 = Graph::cycle(5);
    let p = is_perfect_desk_scale(&c5, &limits)?;
    let cert = p.certificate.expect("C5 is not perfect");
    println!("C5: perfect={} hole={:?}", p.perfect, cert.cycle);
    assert!(cert.validate(&c5, 5));

    // the complement of C7 has no hole, only an antihole
    let anti = Graph::cycle(7).complement();
    assert!(find_odd_hole(&anti, 5, &limits)?.is_none());
    let cert = is_perfect_desk_scale(&anti, &limits)?
        .certificate
        .expect("odd antihole");
    assert_eq!(cert.location, CycleLocation::Complement);
    println!("complement of C7: antihole={:?}", cert.cycle);
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
