//! Solving `φ ∗ r^α = (r^(-1) - r)/2` and comparing with the partial-fraction
//! candidate built from the Gamma ratio.
//!
//! `cargo run --example convolution_equation`

use qh_toeplitz::commutant::{candidate_from_f, check_eq22, solve_convolution_equation};
use qh_toeplitz::RadialSymbol;

fn main() -> qh_toeplitz::Result<()> {
    for a in -1..=6 {
        let phi = solve_convolution_equation(1, &RadialSymbol::power(a)?)?;
        println!("alpha = {a:>2}: phi = {phi}");
    }
    println!();
    for m in 0..=4 {
        let cand = candidate_from_f(1, 1, m);
        println!("candidate (1,1,{m}) = {}", cand.symbol()?);
    }
    match solve_convolution_equation(2, &RadialSymbol::power(1)?) {
        Ok(phi) => println!("p = 2: {phi}"),
        Err(e) => println!("p = 2: {e}"),
    }
    println!(
        "consistency identity (2,1,3) fails at k = {:?}",
        check_eq22(2, 1, 3)
    );
    Ok(())
}
