//! The two orientability relation families. Each `phi` family vanishes
//! identically, each `psi` family vanishes modulo right multiples of Sq1.
//!
//! ```not_rust
//! cargo run --example relation_families -- 24
//! ```

use brown_kervaire::steenrod::{phi_relation, psi_relation};
use brown_kervaire::{Error, Result};

fn main() -> Result<()> {
    let max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    println!("{:>3}  {:<6} {:<28} {}", "n", "phi", "psi (raw)", "psi mod Sq1");
    for n in 1..=max {
        match phi_relation(n) {
            Err(Error::NoRelation(_)) => continue,
            r => {
                let psi = psi_relation(n)?;
                println!("{n:>3}  {:<6} {:<28} {}", r?.to_string(), psi.raw.to_string(), psi.reduced);
            }
        }
    }
    Ok(())
}
