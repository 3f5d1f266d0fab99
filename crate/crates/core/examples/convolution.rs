//! Mellin convolution of radial symbols and the product rule it satisfies.
//!
//! `cargo run --example convolution -- "r^(1)" "r^(3) + r^(1/2)"`

use qh_toeplitz::mellin::mellin_transform;
use qh_toeplitz::parse_symbol;
use qh_toeplitz::symbols::mellin_convolve;

fn main() -> qh_toeplitz::Result<()> {
    let mut args = std::env::args().skip(1);
    let f = parse_symbol(&args.next().unwrap_or_else(|| "r^(1)".into()))?.radial;
    let g = parse_symbol(&args.next().unwrap_or_else(|| "r^(3) + r^(1)".into()))?.radial;
    let h = mellin_convolve(&f, &g)?;
    println!("f * g        = {h}");
    println!("M(f * g)     = {}", mellin_transform(&h));
    println!(
        "M(f) M(g)    = {}",
        &mellin_transform(&f) * &mellin_transform(&g)
    );
    Ok(())
}
