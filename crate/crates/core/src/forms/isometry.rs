//! Brute-force isometry and Witt-equivalence tests.
//!
//! Both search automorphisms depth-first, fixing the image of one dual
//! generator at a time and discarding partial maps that already break the
//! structure. For isometries, agreement on generators suffices for `phi`:
//! once `mu` is carried along, `phi_1` and `phi_2 . L` are quadratic for the
//! same `B`, so they differ by a homomorphism. Witt equivalence ignores `mu`
//! and has to compare `phi` on the whole span chosen so far.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::{QZValue, QuadraticFunction, Triple};
use crate::error::Result;
use crate::groups::{search_automorphisms, AbelianGroup, DualAction, Z4Dual};

fn value_counts(table: &[QZValue]) -> BTreeMap<QZValue, usize> {
    let mut m = BTreeMap::new();
    for v in table {
        *m.entry(*v).or_insert(0) += 1;
    }
    m
}

/// A dual action `L` with `mu_1(x, y) = mu_2(Lx, Ly)`, `phi_1(x) = phi_2(Lx)`
/// and `omega_1(x) = omega_2(Lx)`, if one exists.
pub fn isometry_witness(t1: &Triple, t2: &Triple, cap: u64) -> Result<Option<DualAction>> {
    if !t1.group().is_isomorphic(t2.group()) || t1.omega().is_some() != t2.omega().is_some() {
        return Ok(None);
    }
    let group = t1.group().two_local();
    group.check_cap(cap)?;
    let dual = Z4Dual::new(&group)?;
    let table2 = t2.phi().table(&dual);
    if value_counts(&t1.phi().table(&dual)) != value_counts(&table2) {
        return Ok(None);
    }
    let mu1 = t1.mu();
    let mu2 = t2.mu();
    let phi1 = t1.phi().values();
    let omega1: Vec<u8> = match t1.omega() {
        Some(w) => (0..dual.rank()).map(|i| w.eval_packed(1 << i)).collect(),
        None => vec![0; dual.rank()],
    };
    let omega2 = t2.omega().cloned();

    let mut found = None;
    let _ = search_automorphisms(
        &group,
        &dual,
        &mut |i, rows| {
            let row = &rows[i];
            if table2[row.z4 as usize] != phi1[i] {
                return false;
            }
            if (0..=i).any(|l| mu2.eval_packed(row.z2, rows[l].z2) != mu1.entry(i, l)) {
                return false;
            }
            match &omega2 {
                Some(w) => w.eval_packed(row.z2) == omega1[i],
                None => true,
            }
        },
        &mut |action| {
            found = Some(action.clone());
            ControlFlow::Break(())
        },
    );
    Ok(found)
}

pub fn isometric(t1: &Triple, t2: &Triple, cap: u64) -> Result<bool> {
    Ok(isometry_witness(t1, t2, cap)?.is_some())
}

/// An automorphism `L` of the abstract group `Hom(H, Z/4)` with
/// `phi_1(x) = phi_2(Lx)` for all `x`, if one exists. The pairing plays no
/// role.
pub fn witt_witness(
    phi1: &QuadraticFunction,
    phi2: &QuadraticFunction,
    cap: u64,
) -> Result<Option<DualAction>> {
    let (a, b) = phi1.group().hom_z4_structure();
    if (a, b) != phi2.group().hom_z4_structure() {
        return Ok(None);
    }
    // Hom(H, Z/4) = (Z/4)^a + (Z/2)^b, which is also Hom(H', Z/4) for
    // H' = (Z/4)^a + (Z/2)^b. Every automorphism of H' is realized, and by
    // duality these give all automorphisms of Hom(H', Z/4). The packed
    // encodings of H, H' and the second group coincide: Z/4 coordinates
    // come first in each.
    let model = AbelianGroup::elementary(a, b);
    model.check_cap(cap)?;
    phi1.group().check_cap(cap)?;
    phi2.group().check_cap(cap)?;
    let dual = Z4Dual::new(&model)?;
    let table1 = phi1.table(&Z4Dual::new(phi1.group())?);
    let table2 = phi2.table(&Z4Dual::new(phi2.group())?);
    if value_counts(&table1) != value_counts(&table2) {
        return Ok(None);
    }
    let orders: Vec<u8> = dual.kinds().iter().map(|k| k.order()).collect();

    let mut found = None;
    let _ = search_automorphisms(
        &model,
        &dual,
        &mut |i, rows| {
            // every x in span(e_0..e_i) with a nonzero e_i coefficient
            let mut coeffs = vec![0u8; i + 1];
            coeffs[i] = 1;
            loop {
                let mut x = 0u32;
                let mut image = 0u32;
                for (l, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        x = dual.add(x, dual.scale(dual.basis(l), c));
                        image = dual.add(image, dual.scale(rows[l].z4, c));
                    }
                }
                if table1[x as usize] != table2[image as usize] {
                    return false;
                }
                // odometer over coefficients, keeping coeffs[i] != 0
                let mut pos = 0;
                loop {
                    if pos > i {
                        return true;
                    }
                    coeffs[pos] += 1;
                    if coeffs[pos] < orders[pos] {
                        break;
                    }
                    coeffs[pos] = if pos == i { 1 } else { 0 };
                    if pos == i {
                        return true;
                    }
                    pos += 1;
                }
            }
        },
        &mut |action| {
            found = Some(action.clone());
            ControlFlow::Break(())
        },
    );
    Ok(found)
}

pub fn witt_equivalent(phi1: &QuadraticFunction, phi2: &QuadraticFunction, cap: u64) -> Result<bool> {
    Ok(witt_witness(phi1, phi2, cap)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{BilinearForm, OmegaFunctional};

    fn triple(group: &str, mu: Vec<Vec<u8>>, values: &[&str], omega: Option<Vec<u8>>) -> Triple {
        let h: AbelianGroup = group.parse().unwrap();
        let form = BilinearForm::new(&h, mu).unwrap();
        let phi = QuadraticFunction::new(form, values.iter().map(|v| v.parse().unwrap()).collect()).unwrap();
        let omega = omega.map(|b| OmegaFunctional::new(&h, b).unwrap());
        Triple::new(phi, omega).unwrap()
    }

    const CAP: u64 = 1 << 14;

    #[test]
    fn isometry_examples() {
        let a = triple("Z", vec![vec![0]], &["1/4"], None);
        let b = triple("Z", vec![vec![0]], &["3/4"], None);
        let c = triple("Z", vec![vec![0]], &["1/2"], None);
        assert!(isometric(&a, &a, CAP).unwrap());
        assert!(isometric(&a, &b, CAP).unwrap());
        assert!(!isometric(&a, &c, CAP).unwrap());
        let d = triple("Z2", vec![vec![0]], &["0"], None);
        assert!(!isometric(&a, &d, CAP).unwrap());
    }

    #[test]
    fn isometry_respects_mu_and_omega() {
        let a = triple("Z", vec![vec![1]], &["1/4"], None);
        let b = triple("Z", vec![vec![0]], &["1/4"], None);
        assert!(!isometric(&a, &b, CAP).unwrap());

        let x = triple("Z2 + Z2", vec![vec![0, 0], vec![0, 0]], &["0", "0"], Some(vec![1, 0]));
        let y = triple("Z2 + Z2", vec![vec![0, 0], vec![0, 0]], &["0", "0"], Some(vec![0, 1]));
        let z = triple("Z2 + Z2", vec![vec![0, 0], vec![0, 0]], &["0", "0"], Some(vec![0, 0]));
        assert!(isometric(&x, &y, CAP).unwrap());
        assert!(!isometric(&x, &z, CAP).unwrap());
        let no_omega = triple("Z2 + Z2", vec![vec![0, 0], vec![0, 0]], &["0", "0"], None);
        assert!(!isometric(&x, &no_omega, CAP).unwrap());
    }

    #[test]
    fn witt_examples() {
        let a = triple("Z2", vec![vec![0]], &["0"], None);
        let b = triple("Z2", vec![vec![0]], &["1/2"], None);
        assert!(!witt_equivalent(a.phi(), b.phi(), CAP).unwrap());
        assert!(witt_equivalent(a.phi(), a.phi(), CAP).unwrap());

        // mu(g, g) = 1, phi(g) = 1/4 takes values 0, 1/4, 0, 1/4;
        // mu = 0, phi(g) = 1/4 takes values 0, 1/4, 1/2, 3/4.
        let c = triple("Z", vec![vec![1]], &["1/4"], None);
        let d = triple("Z", vec![vec![0]], &["1/4"], None);
        assert!(!witt_equivalent(c.phi(), d.phi(), CAP).unwrap());
        // mu plays no role: same values, different mu
        let e = triple("Z + Z2", vec![vec![0, 1], vec![1, 0]], &["1/2", "0"], None);
        let f = triple("Z + Z2", vec![vec![0, 0], vec![0, 1]], &["1/2", "0"], None);
        assert!(witt_equivalent(e.phi(), f.phi(), CAP).unwrap());
        // Z + Z2 and Z8 + Z2 have isomorphic Z/4-duals
        let g8 = triple("Z8 + Z2", vec![vec![0, 0], vec![0, 0]], &["1/2", "0"], None);
        assert!(witt_equivalent(f.phi(), g8.phi(), CAP).unwrap());
    }

    #[test]
    fn witnesses_carry_the_data() {
        let a = triple("Z^2", vec![vec![0, 1], vec![1, 0]], &["1/4", "1/2"], None);
        let b = triple("Z^2", vec![vec![0, 1], vec![1, 0]], &["1/2", "3/4"], None);
        let dual = Z4Dual::new(a.group()).unwrap();
        let w = isometry_witness(&a, &b, CAP).unwrap().expect("swap then negate");
        for x in dual.elements() {
            assert_eq!(a.phi().evaluate_packed(&dual, x), b.phi().evaluate_packed(&dual, w.apply_z4_packed(&dual, x)));
        }
        for x in 0..4u32 {
            for y in 0..4u32 {
                assert_eq!(a.mu().eval_packed(x, y), b.mu().eval_packed(w.apply_z2_packed(x), w.apply_z2_packed(y)));
            }
        }
    }
}
