//! Mellin transforms of radial symbols, partial fractions and the inverse.
//!
//! `cargo run --example mellin_transform -- "2*r^(-1) - r^(1)*L^1"`

use qh_toeplitz::mellin::{build_f_thm2, build_f_thm3, inverse_mellin, mellin_transform};
use qh_toeplitz::{parse_symbol, rf_partial_fractions};

fn main() -> qh_toeplitz::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2*r^(-1) - r^(1)*L^1".into());
    let phi = parse_symbol(&text)?.radial;
    let f = mellin_transform(&phi);
    println!("phi        = {phi}");
    println!("M(phi)(z)  = {f}");
    println!("partial    = {}", rf_partial_fractions(&f)?);
    println!("inverse    = {}", inverse_mellin(&f)?);

    for m in 0..=3 {
        let f = build_f_thm2(1, 1, m);
        println!("F(1,1,{m})  = {f}  ->  {}", rf_partial_fractions(&f)?);
    }
    println!(
        "1/(z(z+2)) = {}, inverse of 2x: {}",
        build_f_thm3(1),
        inverse_mellin(&build_f_thm3(1).scale(&qh_toeplitz::algebra::rat_int(2)))?
    );
    Ok(())
}
