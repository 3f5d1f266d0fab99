//! Exact commutation tests on the first basis vectors.
//!
//! `cargo run --example commutation -- "E(-1)*r^(3)" "E(1)*(2*r^(-1) - r^(1))" 500`

use qh_toeplitz::operators::check_commute_range;
use qh_toeplitz::parse_symbol;

fn main() -> qh_toeplitz::Result<()> {
    let mut args = std::env::args().skip(1);
    let f = parse_symbol(&args.next().unwrap_or_else(|| "E(-1)*r^(3)".into()))?;
    let g = parse_symbol(
        &args
            .next()
            .unwrap_or_else(|| "E(1)*(2*r^(-1) - r^(1))".into()),
    )?;
    let kmax: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(500);

    let rep = check_commute_range(&f, &g, kmax)?;
    println!(
        "[T_{{{f}}}, T_{{{g}}}] = 0 on |index| <= {kmax}: {}",
        rep.commutes
    );
    for fl in rep.failures.iter().take(5) {
        println!("  {}: {} vs {}", fl.vec, fl.lhs, fl.rhs);
    }

    // r^(-1) alone is not enough against r^3
    let h = parse_symbol("E(1)*r^(-1)")?;
    let rep = check_commute_range(&f, &h, 10)?;
    println!(
        "with {h}: commutes {}, first failure at {}",
        rep.commutes, rep.failures[0].vec
    );
    Ok(())
}
