//! Recomputes the basis action by numerical projection and compares it with
//! the exact coefficients.
//!
//! `cargo run --example quadrature_oracle -- "E(-2)*r^(-1/2)" 12`

use qh_toeplitz::algebra::rat_int;
use qh_toeplitz::parse_symbol;
use qh_toeplitz::quadrature::{mellin_numeric, validate_lemma2, QuadratureConfig};

fn main() -> qh_toeplitz::Result<()> {
    let mut args = std::env::args().skip(1);
    let f = parse_symbol(&args.next().unwrap_or_else(|| "E(-2)*r^(-1/2)".into()))?;
    let kmax: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(12);
    let cfg = QuadratureConfig::default();

    for z in [2, 3, 10] {
        println!(
            "M(phi)({z}) ~ {:.15}",
            mellin_numeric(&f.radial, &rat_int(z), &cfg)?
        );
    }
    let rep = validate_lemma2(&f, kmax, &cfg)?;
    for (v, exact, numeric) in rep.samples.iter().take(7) {
        println!("  {v:<8} exact {exact:.15}  quadrature {numeric:.15}");
    }
    println!(
        "{}",
        serde_json::to_string(&rep.to_json()).expect("serializable")
    );
    Ok(())
}
