//! The antipode of the Steenrod algebra.
//!
//! ```not_rust
//! cargo run --example antipode
//! ```

use brown_kervaire::steenrod::{chi, chi_sq};
use brown_kervaire::{Result, SteenrodElement};

fn main() -> Result<()> {
    for n in 1..=8 {
        println!("chi(Sq{n}) = {}", chi_sq(n));
    }

    let e: SteenrodElement = "Sq4 Sq2 + Sq5 Sq1".parse()?;
    println!("\nchi({e}) = {}", chi(&e));
    assert_eq!(chi(&chi(&e)), e);

    // sum_i Sq^i chi(Sq^(n-i)) = 0
    let n = 9;
    let mut sum = SteenrodElement::zero();
    for i in 0..=n {
        sum = sum.add(&SteenrodElement::sq(i).multiply(&chi_sq(n - i)))?;
    }
    println!("sum_i Sq^i chi(Sq^({n}-i)) = {sum}");
    Ok(())
}
