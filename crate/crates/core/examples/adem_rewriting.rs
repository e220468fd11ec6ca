//! Adem normal forms and products in the mod-2 Steenrod algebra, checked
//! against the action on a product of degree-one classes.
//!
//! ```not_rust
//! cargo run --example adem_rewriting
//! ```

use brown_kervaire::steenrod::oracle::word_action;
use brown_kervaire::steenrod::polynomial_action;
use brown_kervaire::{Result, SteenrodElement};

fn main() -> Result<()> {
    for raw in ["Sq2 Sq2", "Sq2 Sq3", "Sq3 Sq5", "Sq1 Sq2 Sq1 + Sq2 Sq2", "Sq4 Sq4 Sq4"] {
        let e: SteenrodElement = raw.parse()?;
        println!("{raw:>24}  =  {e}");
    }

    let a: SteenrodElement = "Sq3".parse()?;
    let b: SteenrodElement = "Sq2 Sq1".parse()?;
    println!("\n(Sq3)(Sq2 Sq1) = {}", a.multiply(&b));

    // Sq2 Sq2 and its normal form act identically on x1 x2 x3 x4
    let e: SteenrodElement = "Sq2 Sq2".parse()?;
    let lhs = word_action(&[2, 2], 4);
    let rhs = polynomial_action(&e, 4)?;
    println!("\nSq2 Sq2 (x1 x2 x3 x4) = {lhs}");
    assert_eq!(lhs, rhs);
    Ok(())
}
