//! Normal forms in Z[a,b,c,d,f,l1..l18]/(ad - bc - 1) under lex order.
//!
//! cargo run --example quotient_normal_form

use quasilin::multipoly::QuotientContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = QuotientContext::standard();
    println!("term order: {}", ctx.term_order());
    println!("relation:   {}", ctx.relation());
    for text in ["a*d", "a^2*d^2 - b^2*c^2", "a*d*f - b*c*f + l1", "(a*d)^3"] {
        let p = ctx.parse(text)?;
        println!("{text:>20}  ->  {}", ctx.normal_form(&p)?);
    }
    // ad - bc is 1 in the quotient, so these agree
    let lhs = ctx.parse("a*d*l2 - b*c*l2")?;
    let rhs = ctx.parse("l2")?;
    println!("a*d*l2 - b*c*l2 == l2 mod ideal: {}", ctx.equals_mod_ideal(&lhs, &rhs)?);
    Ok(())
}
