//! Isometry and Witt equivalence of triples `(H, mu, phi)`.
//!
//! ```not_rust
//! cargo run --example isometry
//! ```

use brown_kervaire::forms::{isometric, isometry_witness, witt_equivalent, Triple};
use brown_kervaire::groups::DEFAULT_CAP;
use brown_kervaire::Result;

fn main() -> Result<()> {
    let docs = [
        r#"{"group":"Z + Z2","mu":[[0,1],[1,1]],"phi":["1/4","1/2"],"omega":[1]}"#,
        r#"{"group":"Z + Z2","mu":[[0,1],[1,1]],"phi":["3/4","1/2"],"omega":[1]}"#,
        r#"{"group":"Z + Z2","mu":[[0,1],[1,1]],"phi":["1/4","0/1"],"omega":[1]}"#,
        r#"{"group":"Z + Z2","mu":[[0,0],[0,0]],"phi":["1/4","1/2"],"omega":[1]}"#,
    ];
    let triples = docs.iter().map(|d| Triple::from_json(d)).collect::<Result<Vec<_>>>()?;

    println!("isometric / Witt equivalent:");
    for (i, a) in triples.iter().enumerate() {
        let row: Vec<String> = triples
            .iter()
            .map(|b| {
                let iso = isometric(a, b, DEFAULT_CAP).unwrap_or(false);
                let witt = witt_equivalent(a.phi(), b.phi(), DEFAULT_CAP).unwrap_or(false);
                format!("{}/{}", iso as u8, witt as u8)
            })
            .collect();
        println!("  t{i}: {}", row.join("  "));
    }

    if let Some(l) = isometry_witness(&triples[0], &triples[1], DEFAULT_CAP)? {
        println!("\nt0 -> t1 via dual matrix {:?}", l.matrix());
    }
    Ok(())
}
