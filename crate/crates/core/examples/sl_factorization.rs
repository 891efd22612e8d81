//! Factor seeded random SL_n matrices into elementary matrices and check the
//! product exactly.
//!
//! cargo run --example sl_factorization -- [ring] [n] [seed]

use quasilin::factor::{cl_upper_bound, factor_sln};
use quasilin::ring::RingSpec;
use quasilin::rng::{random_sl, seeded_rng, SampleBounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let ring: RingSpec = args.next().unwrap_or_else(|| "Zi".into()).parse()?;
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let mut rng = seeded_rng(seed);
    let (m, word) = random_sl(&ring, n, 12, &mut rng, SampleBounds::default())?;
    println!("input over {ring} (built from {} elementaries):", word.len());
    for row in m.render_rows() {
        println!("  {}", row.join("  "));
    }
    let f = factor_sln(&m)?;
    println!("{} factors, product matches: {}", f.len(), f.verify());
    for e in &f.factors {
        println!("  E[{},{}]({})", e.row + 1, e.col + 1, e.value);
    }
    if n >= 3 {
        println!("cl upper bound: {}", cl_upper_bound(&m)?);
    }
    Ok(())
}
