//! Action of a quasihomogeneous Toeplitz operator on the harmonic basis, and
//! its truncated matrix.
//!
//! `cargo run --example basis_action -- "E(2)*r^(2)" 3`

use qh_toeplitz::operators::{apply_qh, matrix_basis, operator_matrix, BasisVector};
use qh_toeplitz::parse_symbol;

fn main() -> qh_toeplitz::Result<()> {
    let mut args = std::env::args().skip(1);
    let f = parse_symbol(&args.next().unwrap_or_else(|| "E(2)*r^(2)".into()))?;
    let kmax: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);

    for v in [
        BasisVector::z(0),
        BasisVector::z(1),
        BasisVector::zbar(1),
        BasisVector::zbar(3),
    ] {
        println!("T({v}) = {}", apply_qh(&f, v)?);
    }

    let m = operator_matrix(&f, kmax)?;
    let basis = matrix_basis(kmax);
    println!(
        "\nmatrix of T_f on {}:",
        basis
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    for row in m.to_dense_f64() {
        println!(
            "  {}",
            row.iter()
                .map(|x| format!("{x:7.4}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    if !m.out_of_range.is_empty() {
        println!(
            "columns leaving the truncation: {:?}",
            m.out_of_range
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
