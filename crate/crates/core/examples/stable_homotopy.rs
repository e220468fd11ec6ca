//! 2-local stable homotopy `pi_{2n} K(H, n-1)` by residue of `n`, the
//! splitting check, and `pi_n(SO(n))`.
//!
//! ```not_rust
//! cargo run --example stable_homotopy -- "Z + Z4 + Z2"
//! ```

use brown_kervaire::homotopy::{pi_n_so_n, splitting_check, stable_homotopy_em};
use brown_kervaire::{AbelianGroup, Result};

fn main() -> Result<()> {
    let h: AbelianGroup = std::env::args().nth(1).unwrap_or_else(|| "Z + Z2".into()).parse()?;
    println!("H = {h}");
    for n in 8..12 {
        println!("  n = {n} (mod 4 = {}): {}", n % 4, stable_homotopy_em(n, &h)?);
    }

    let (h1, h2): (AbelianGroup, AbelianGroup) = ("Z^2".parse()?, "Z8 + Z2".parse()?);
    println!("\nsplitting for {h1} and {h2}: {}", splitting_check(&h1, &h2, 9)?);

    print!("\npi_n(SO(n)), n = 3..=17:");
    for n in 3..=17 {
        print!(" {}", pi_n_so_n(n)?);
    }
    println!();
    Ok(())
}
