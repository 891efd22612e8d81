//! Check every block-matrix identity symbolically over
//! `ℤ[a,b,c,d,f,l1..l18]/(ad - bc - 1)` and on seeded random points.
//!
//! cargo run --example verify_proof -- [instances] [seed]

use quasilin::verify::{run_all, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let instances = args.next().map(|s| s.parse()).transpose()?.unwrap_or(50);
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);
    let config = VerifyConfig {
        instances,
        seed,
        ..VerifyConfig::default()
    };
    let run = run_all(&config)?;
    print!("{}", run.summary_table());
    for c in run.failures() {
        println!("failed {}: {}", c.statement_id, c.failure.as_deref().unwrap_or("?"));
    }
    println!("overall: {}", if run.passed { "PASS" } else { "FAIL" });
    Ok(())
}
