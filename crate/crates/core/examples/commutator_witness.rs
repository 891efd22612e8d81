//! Every elementary matrix of degree >= 3 is a single commutator.
//!
//! cargo run --example commutator_witness

use quasilin::factor::elementary_as_commutator;
use quasilin::matrix::ElementaryMatrix;
use quasilin::ring::{RingElement, RingSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::Integers;
    for (n, i, j, v) in [(3, 0, 2, 5), (3, 2, 1, -4), (4, 1, 3, 9)] {
        let e = ElementaryMatrix::new(n, i, j, RingElement::int(v))?;
        let w = elementary_as_commutator(&ring, &e)?;
        println!("E[{},{}]({v}) in SL{n}(Z) = [x, y] with", i + 1, j + 1);
        for (name, m) in [("x", &w.left), ("y", &w.right)] {
            for (k, row) in m.render_rows().into_iter().enumerate() {
                let label = if k == 0 { name } else { " " };
                println!("  {label}  {}", row.join(" "));
            }
        }
        println!("  verified: {}", w.verify());
    }
    Ok(())
}
