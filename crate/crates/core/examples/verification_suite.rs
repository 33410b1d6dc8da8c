// Run named checks over a handful of rings and print the reports.
//
// Run with `cargo run --release --example verification_suite`.

use cozero::verify::{parse_claims, reports_to_json, run_suite, Claim};
use cozero::{parse_spec, Limits};

pub fn run_example() -> cozero::Result<()> {
    let rings = ["Z2xZ2xZ2", "Z6", "Z3xZ3", "Z9", "Z2xZ4"]
        .iter()
        .map(|s| parse_spec(s))
        .collect::<cozero::Result<Vec<_>>>()?;

    let reports = run_suite(&Claim::ALL, &rings, &Limits::default());
    for r in &reports {
        println!("{r}");
    }
    assert!(reports.iter().all(|r| !r.is_failure()));

    let claims = parse_claims(&["clique-formula"])?;
    let json = reports_to_json(&run_suite(&claims, &rings[..1], &Limits::default()));
    print!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> cozero::Result<()> {
    run_example()
}
