//! Commutant of `T_{e^{-isθ} r^n}`, `n = (2m+1)s`, among degree-1 symbols,
//! over a small grid of `(s, m)`, with the diagnostics of each solve.
//!
//! Run with `cargo run --example commutant_grid [kmax]`.

use qh_toeplitz::commutant::{solve_commutant_with, system_s_matrix};

fn main() -> qh_toeplitz::Result<()> {
    let kmax = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(64);
    for s in 1..=3 {
        for m in 0..=3 {
            let res = solve_commutant_with(1, s, m, kmax)?;
            println!(
                "s={s} m={m} n={}: dim {} rank(S) {} kernel {:?} verified {}",
                res.n,
                res.kernel.len(),
                system_s_matrix(s, m).rank(),
                res.kernel.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
                res.kernel_verified
            );
            for d in &res.diagnostics {
                println!("    {d}");
            }
        }
    }
    Ok(())
}
