//! Division with remainder and Bézout coefficients in each supported ring.
//!
//! cargo run --example euclidean_rings

use quasilin::ring::RingSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("Z", "-17", "5"),
        ("Zi", "7+3i", "2-1i"),
        ("Fp[x]:5", "[1,0,3,1]", "[2,1]"),
        ("Q[x]", "[1,0,0,1]", "[1/2,3]"),
    ];
    for (ring, a, b) in cases {
        let ring: RingSpec = ring.parse()?;
        let a = ring.parse_element(a)?;
        let b = ring.parse_element(b)?;
        let (q, r) = a.euclidean_divide(&b)?;
        let norm = |x: &quasilin::ring::RingElement| x.norm().map_or("-".to_string(), |n| n.to_string());
        println!("{}", ring.describe());
        println!(
            "  {a} = ({b}) * ({q}) + ({r})   norm(r) = {} < norm(b) = {}",
            norm(&r),
            norm(&b)
        );
        let (g, s, t) = a.gcd_bezout(&b)?;
        println!("  gcd = {g} = ({s}) * a + ({t}) * b");
    }
    Ok(())
}
