//! Exact commutator length and scl estimates in small finite groups.
//!
//! cargo run --example commutator_length

use quasilin::qh::{
    is_conjugate_to_inverse, scl_estimate, CommutatorLengths, FiniteGroup, Sl2Fp, Symmetric, DEFAULT_CAP,
};

fn report<G: FiniteGroup + Clone>(group: &G, picks: &[&str]) -> Result<(), Box<dyn std::error::Error>> {
    let lengths = CommutatorLengths::new(group, DEFAULT_CAP)?;
    println!(
        "{}: order {}, [G,G] order {}, cl histogram {:?}",
        group.describe(),
        group.order(),
        lengths.subgroup_order(),
        lengths.histogram()
    );
    for text in picks {
        let g = group.parse_elem(text)?;
        let cl = if lengths.contains(&g) {
            lengths.cl(&g)?.cl.to_string()
        } else {
            "-".into()
        };
        let scl = scl_estimate(&lengths, &g, 12)?;
        let t = is_conjugate_to_inverse(group, &g, DEFAULT_CAP)?;
        println!(
            "  {text}: cl {cl}, scl <= {} (n = {}), inverted by {}",
            scl.value,
            scl.best_n,
            t.map_or("nothing".into(), |t| group.render(&t))
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report(&Sl2Fp::new(3)?, &["-I", "[[1,1],[0,1]]"])?;
    report(&Symmetric::new(5)?, &["(1 2 3)", "(1 2 3 4 5)", "(1 2)(3 4)"])?;
    Ok(())
}
