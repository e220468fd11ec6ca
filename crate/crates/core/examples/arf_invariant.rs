//! Arf invariants of nondegenerate quadratic forms over F2.
//!
//! ```not_rust
//! cargo run --example arf_invariant
//! ```

use brown_kervaire::forms::{arf, Z2QuadraticForm};
use brown_kervaire::Result;

fn hyperbolic(a: u8, b: u8) -> Result<Z2QuadraticForm> {
    Z2QuadraticForm::new(vec![a, b], vec![vec![0, 1], vec![1, 0]])
}

fn main() -> Result<()> {
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        println!("q(e) = {a}, q(f) = {b}: Arf = {}", arf(&hyperbolic(a, b)?)?);
    }
    let sum = hyperbolic(1, 1)?.orthogonal_sum(&hyperbolic(1, 1)?);
    println!("\n{} has Arf invariant {}", sum.to_json(), arf(&sum)?);

    let q = Z2QuadraticForm::from_json(r#"{"values":[1,0,1,1],"cross":[[0,1,1,0],[1,0,0,1],[1,0,0,1],[0,1,1,0]]}"#);
    match q.and_then(|q| arf(&q)) {
        Ok(a) => println!("Arf = {a}"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
