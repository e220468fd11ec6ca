//! Isometry classes of classification data for a group and dimension.
//!
//! ```not_rust
//! cargo run --example classification -- "Z + Z2" 9 1
//! ```

use brown_kervaire::classify::{check_membership, classification_report, ManifoldClass};
use brown_kervaire::forms::{BilinearForm, QZValue};
use brown_kervaire::groups::DEFAULT_CAP;
use brown_kervaire::{AbelianGroup, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let group: AbelianGroup = args.next().unwrap_or_else(|| "Z".into()).parse()?;
    let n: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let delta: u8 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);

    print!("{}", classification_report(&group, n, delta, DEFAULT_CAP)?);

    // a datum violating diag mu = 0
    let z: AbelianGroup = "Z".parse()?;
    let bad = ManifoldClass::new(2, BilinearForm::new(&z, vec![vec![1]])?, Some(vec![QZValue::quarter(1)]), None, 0)?;
    for v in check_membership(&bad, 10)?.violations {
        println!("\nrejected: {v}");
    }
    Ok(())
}
