mod common;

use std::collections::BTreeSet;

use brown_kervaire::classify::{check_membership, classification_report, enumerate_classes, ManifoldClass};
use brown_kervaire::forms::{BilinearForm, OmegaFunctional, QZValue};
use brown_kervaire::groups::{automorphism_actions, DualAction, DualKind, Z4Dual};
use brown_kervaire::{AbelianGroup, Error};
use common::{g, CAP};

/// (mu, phi in quarters, omega) with mu as its full matrix.
type Datum = (Vec<Vec<u8>>, Option<Vec<u8>>, Option<Vec<u8>>);

fn all_data(group: &AbelianGroup, n_mod_4: u8) -> Vec<Datum> {
    let r = group.hom_rank_z2() as usize;
    let kinds = group.dual_kinds();
    let mut mus = vec![vec![vec![0u8; r]; r]];
    for i in 0..r {
        for j in i..r {
            mus = mus
                .into_iter()
                .flat_map(|m| {
                    let mut m1 = m.clone();
                    m1[i][j] = 1;
                    m1[j][i] = 1;
                    [m, m1]
                })
                .collect();
        }
    }
    let mut phis: Vec<Option<Vec<u8>>> = vec![None];
    if n_mod_4 != 3 {
        phis = vec![Some(vec![])];
        for k in &kinds {
            let choices: &[u8] = if *k == DualKind::Z4 { &[0, 1, 2, 3] } else { &[0, 2] };
            phis = phis
                .into_iter()
                .flat_map(|p| choices.iter().map(move |&c| Some([p.clone().unwrap(), vec![c]].concat())))
                .collect();
        }
    }
    let mut omegas: Vec<Option<Vec<u8>>> = vec![None];
    if n_mod_4 % 2 == 1 {
        omegas = (0..1u32 << group.torsion_rank())
            .map(|m| Some((0..group.torsion_rank()).map(|i| (m >> i & 1) as u8).collect()))
            .collect();
    }
    let mut out = Vec::new();
    for mu in &mus {
        for p in &phis {
            for w in &omegas {
                out.push((mu.clone(), p.clone(), w.clone()));
            }
        }
    }
    out
}

fn to_class(group: &AbelianGroup, n_mod_4: u8, delta: u8, d: &Datum) -> ManifoldClass {
    let mu = BilinearForm::new(group, d.0.clone()).unwrap();
    let phi = d.1.as_ref().map(|p| p.iter().map(|&q| QZValue::quarter(q as i64)).collect());
    let omega = d.2.as_ref().map(|w| OmegaFunctional::new(group, w.clone()).unwrap());
    ManifoldClass::new(n_mod_4, mu, phi, omega, delta).unwrap()
}

fn datum_of(c: &ManifoldClass) -> Datum {
    let phi = c.phi().map(|p| p.values().iter().map(|v| (v.numerator() * 4 / v.denominator()) as u8).collect());
    (c.mu().matrix().to_vec(), phi, c.omega().map(|w| w.bits().to_vec()))
}

fn act(c: &ManifoldClass, a: &DualAction) -> Datum {
    let group = c.group();
    let dual = Z4Dual::new(group).unwrap();
    let z2 = a.z2_images();
    let r = z2.len();
    let mu = (0..r).map(|i| (0..r).map(|j| c.mu().eval_packed(z2[i], z2[j])).collect()).collect();
    let phi = c.phi().map(|p| {
        a.z4_images()
            .iter()
            .map(|&x| {
                let v = p.evaluate_packed(&dual, x);
                (v.numerator() * 4 / v.denominator()) as u8
            })
            .collect()
    });
    let t = group.free_rank() as usize;
    let omega = c.omega().map(|w| (t..r).map(|i| w.eval_packed(z2[i])).collect());
    (mu, phi, omega)
}

#[test]
fn representatives_cover_every_admissible_datum_once() {
    for name in ["0", "Z", "Z2", "Z4", "Z8", "Z + Z2", "Z2^2", "Z4 + Z2", "Z^2"] {
        let group = g(name);
        let actions = automorphism_actions(&group, CAP).unwrap();
        for n in 4..8i64 {
            let r = n as u8 % 4;
            for delta in 0..2 {
                let reps = enumerate_classes(&group, n, delta, CAP).unwrap().representatives;
                let orbits: Vec<BTreeSet<Datum>> =
                    reps.iter().map(|c| actions.iter().map(|a| act(c, a)).collect()).collect();
                for rep in &reps {
                    assert!(check_membership(rep, n).unwrap().admissible);
                }
                for i in 0..orbits.len() {
                    for j in 0..i {
                        assert!(orbits[i].is_disjoint(&orbits[j]), "{name}, n = {n}: reps {i} and {j} isometric");
                    }
                }
                for d in all_data(&group, r) {
                    let c = to_class(&group, r, delta, &d);
                    let admissible = check_membership(&c, n).unwrap().admissible;
                    let hits = orbits.iter().filter(|o| o.contains(&d)).count();
                    assert_eq!(hits, admissible as usize, "{name}, n = {n}, delta = {delta}: {d:?}");
                }
                // each representative is the least datum of its orbit
                for (rep, orbit) in reps.iter().zip(&orbits) {
                    let key = |d: &Datum| {
                        let mut k = Vec::new();
                        for i in 0..d.0.len() {
                            k.extend_from_slice(&d.0[i][i..]);
                        }
                        k.extend(d.1.clone().unwrap_or_default());
                        k.extend(d.2.clone().unwrap_or_default());
                        k
                    };
                    let least = orbit.iter().filter(|d| check_membership(&to_class(&group, r, delta, d), n).unwrap().admissible).map(key).min();
                    assert_eq!(Some(key(&datum_of(rep))), least);
                }
            }
        }
    }
}

#[test]
fn counts_do_not_depend_on_delta_without_order_two_torsion() {
    for name in ["Z", "Z4", "Z + Z4"] {
        for n in [5, 7, 9, 11] {
            let a = enumerate_classes(&g(name), n, 0, CAP).unwrap().count();
            let b = enumerate_classes(&g(name), n, 1, CAP).unwrap().count();
            assert_eq!(a, b, "{name}, n = {n}");
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    for (name, n) in [("Z + Z2", 9), ("Z4 + Z2", 8), ("Z^2", 10)] {
        let a = enumerate_classes(&g(name), n, 1, CAP).unwrap();
        let b = enumerate_classes(&g(name), n, 1, CAP).unwrap();
        assert_eq!(a, b);
        let r1 = classification_report(&g(name), n, 1, CAP).unwrap();
        let r2 = classification_report(&g(name), n, 1, CAP).unwrap();
        assert_eq!(r1.to_string(), r2.to_string());
        assert_eq!(r1.to_json(), r2.to_json());
    }
}

#[test]
fn odd_torsion_is_ignored() {
    let a = enumerate_classes(&g("Z + Z3"), 10, 0, CAP).unwrap();
    assert_eq!(a.count(), 3);
    let report = classification_report(&g("Z + Z3"), 10, 0, CAP).unwrap();
    assert_eq!(report.group, "Z");
    assert!(report.warnings.iter().any(|w| w.contains("odd torsion")));
}

#[test]
fn report_examples() {
    let r = classification_report(&g("Z2"), 8, 0, CAP).unwrap();
    assert_eq!((r.count, r.n_mod_4, r.delta), (4, 0, 0));
    assert_eq!(classification_report(&g("0"), 13, 1, CAP).unwrap().count, 1);
    let r = classification_report(&g("Z"), 6, 0, CAP).unwrap();
    assert_eq!(r.count, 3);
    assert!(r.warnings.iter().any(|w| w.contains("alpha")));
}

#[test]
fn errors() {
    assert!(matches!(enumerate_classes(&g("Z"), 3, 0, CAP), Err(Error::OutOfRange { .. })));
    assert!(matches!(enumerate_classes(&g("Z^8"), 8, 0, CAP), Err(Error::SizeLimit { .. })));
    assert!(matches!(enumerate_classes(&g("Z^6"), 8, 0, CAP), Err(Error::SizeLimit { what: "candidate data", .. })));
    assert!(enumerate_classes(&g("Z"), 8, 2, CAP).is_err());
}
