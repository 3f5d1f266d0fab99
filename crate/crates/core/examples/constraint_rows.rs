//! The linear constraints commutation imposes on an unknown radial symbol,
//! checked against the six written-out identity families.
//!
//! `cargo run --example constraint_rows -- 2 3`

use qh_toeplitz::commutant::{cross_check_families, generate_constraints, Ansatz};
use qh_toeplitz::{kernel_basis, RadialSymbol};

fn main() -> qh_toeplitz::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().ok());
    let p = args.next().flatten().unwrap_or(2);
    let s = args.next().flatten().unwrap_or(3);
    let psi = RadialSymbol::power(3 * s as i64)?;
    let ansatz = Ansatz::from_ints(&[-1, 0, 1, 3, 5])?;

    let sys = generate_constraints(p, s, &psi, &ansatz)?;
    println!(
        "p = {p}, s = {s}, psi = {psi}, ansatz {:?}",
        ansatz
            .exponents()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
    );
    for (i, tag) in sys.tags.iter().enumerate() {
        let row: Vec<String> = sys.matrix.row(i).iter().map(|x| x.to_string()).collect();
        println!("  {tag:<28} [{}]", row.join(", "));
    }
    let kernel = kernel_basis(&sys.matrix);
    println!("kernel dimension {}", kernel.len());
    for v in &kernel {
        println!("  {}", ansatz.symbol(v));
    }

    let check = cross_check_families(&sys, &psi, 20)?;
    println!(
        "written families: {} rows compared, {} mismatches",
        check.checked,
        check.mismatches.len()
    );
    Ok(())
}
