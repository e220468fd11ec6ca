//! A quadratic refinement on `Hom(Z + Z4 + Z2, Z/4)`: its table, the
//! quadratic law, the value group and the Gauss sum.
//!
//! ```not_rust
//! cargo run --example quadratic_refinements
//! ```

use brown_kervaire::forms::{gauss_sum, values_subgroup, verify_quadratic_law, Triple};
use brown_kervaire::groups::{Z4Dual, DEFAULT_CAP};
use brown_kervaire::Result;

const DOC: &str = r#"{"group":"Z + Z4 + Z2","mu":[[1,1,0],[1,0,1],[0,1,1]],"phi":["1/4","3/4","1/2"]}"#;

fn main() -> Result<()> {
    let t = Triple::from_json(DOC)?;
    let phi = t.phi();
    let dual = Z4Dual::new(t.group())?;

    for x in dual.elements().take(16) {
        println!("phi{:?} = {}", dual.decode(x), phi.evaluate_packed(&dual, x));
    }
    println!("... {} elements in all", dual.size());

    println!("\nquadratic law holds: {}", verify_quadratic_law(phi, DEFAULT_CAP)?);
    println!("values generate Z/{}", values_subgroup(phi, DEFAULT_CAP)?.order());

    let g = gauss_sum(phi, DEFAULT_CAP)?;
    for (v, k) in &g.counts {
        println!("  {v}: {k}");
    }
    match g.exact() {
        Some((re, im)) => println!("Gauss sum = {re} + {im}i"),
        None => println!("Gauss sum ~ {:.4} + {:.4}i", g.re, g.im),
    }
    Ok(())
}
