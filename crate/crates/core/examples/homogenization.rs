//! Homogenizing a quasi-homomorphism by repeated doubling, with exact
//! rational values and the geometric error bound.
//!
//! cargo run --example homogenization

use num_bigint::BigInt;
use num_rational::BigRational;
use quasilin::qh::{homogenization_error_bound, homogenize, FreeAbelian, RealValuedMap};

fn decimal(x: &BigRational) -> String {
    // 12 digits is plenty for display
    let scaled = (x * BigRational::from_integer(BigInt::from(10u64.pow(12))))
        .floor()
        .to_integer();
    let s = format!("{:0>13}", scaled.to_string());
    format!("{}.{}", &s[..s.len() - 12], &s[s.len() - 12..])
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = FreeAbelian::new(1);
    let one = z.elem(&[1]);
    let psi = RealValuedMap::floor_sqrt2();
    let delta = BigRational::from_integer(1.into());
    println!("{}  (defect <= 1)", psi.description());
    println!("{:>3}  {:>16}  {:>16}", "k", "value", "error bound");
    for k in [1, 2, 4, 8, 16, 24, 30, 40] {
        let v = homogenize(&z, &psi, &one, k)?;
        println!(
            "{k:>3}  {:>16}  {:>16}",
            decimal(&v),
            decimal(&homogenization_error_bound(&delta, k))
        );
    }
    println!("sqrt(2) = 1.414213562373...");
    let hom = RealValuedMap::linear(&[2, -3]);
    let z2 = FreeAbelian::new(2);
    let g = z2.elem(&[5, 1]);
    println!(
        "{} at (5,1), k = 1: {}",
        hom.description(),
        homogenize(&z2, &hom, &g, 1)?
    );
    Ok(())
}
