//! diag(p, q, r) with pqr = 1 as lower * upper * lower * upper.
//!
//! cargo run --example dv_decomposition -- [seed]

use quasilin::factor::dv_decompose;
use quasilin::matrix::Matrix;
use quasilin::ring::RingSpec;
use quasilin::rng::{random_sl, seeded_rng, SampleBounds};

fn show(name: &str, m: &Matrix<RingSpec>) {
    println!("{name}:");
    for row in m.render_rows() {
        println!("  {}", row.iter().map(|s| format!("{s:>5}")).collect::<String>());
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let ring = RingSpec::Integers;
    let mut rng = seeded_rng(seed);
    let p = random_sl(&ring, 2, 4, &mut rng, SampleBounds::default())?.0;
    let q = random_sl(&ring, 2, 4, &mut rng, SampleBounds::default())?.0;
    let r = p.mul(&q)?.inverse()?;
    let d = dv_decompose(&p, &q, &r)?;
    show("p", &p);
    show("q", &q);
    show("L1", &d.l1);
    show("U1", &d.u1);
    show("L2", &d.l2);
    show("U2", &d.u2);
    println!(
        "shapes L/U/L/U: {}  product = diag(p,q,r): {}",
        d.shapes_hold(),
        d.verify()
    );
    Ok(())
}
