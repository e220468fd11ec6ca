#![allow(dead_code)]

use brown_kervaire::forms::{BilinearForm, OmegaFunctional, QZValue, QuadraticFunction, Triple};
use brown_kervaire::groups::{automorphism_actions, AbelianGroup, DualAction, DualKind, Z4Dual};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CAP: u64 = 1 << 14;

pub fn g(s: &str) -> AbelianGroup {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mu<R: Rng>(group: &AbelianGroup, rng: &mut R) -> BilinearForm {
    let r = group.hom_rank_z2() as usize;
    let mut m = vec![vec![0u8; r]; r];
    for i in 0..r {
        for j in i..r {
            let b = rng.gen_range(0..2u8);
            m[i][j] = b;
            m[j][i] = b;
        }
    }
    BilinearForm::new(group, m).unwrap()
}

pub fn random_phi<R: Rng>(group: &AbelianGroup, rng: &mut R) -> QuadraticFunction {
    let mu = random_mu(group, rng);
    let values = group
        .dual_kinds()
        .iter()
        .map(|k| match k {
            DualKind::Z4 => QZValue::quarter(rng.gen_range(0..4)),
            DualKind::Z2 => QZValue::from_z2(rng.gen_range(0..2)),
        })
        .collect();
    QuadraticFunction::new(mu, values).unwrap()
}

pub fn random_triple<R: Rng>(group: &AbelianGroup, with_omega: bool, rng: &mut R) -> Triple {
    let phi = random_phi(group, rng);
    let omega = with_omega.then(|| {
        let bits = (0..group.torsion_rank()).map(|_| rng.gen_range(0..2u8)).collect();
        OmegaFunctional::new(group, bits).unwrap()
    });
    Triple::new(phi, omega).unwrap()
}

/// The triple `(mu(L-, L-), phi(L-), omega(L-))`.
pub fn transport(t: &Triple, action: &DualAction) -> Triple {
    let group = t.group().clone();
    let dual = Z4Dual::new(&group).unwrap();
    let z2 = action.z2_images();
    let r = z2.len();
    let mu: Vec<Vec<u8>> = (0..r).map(|i| (0..r).map(|j| t.mu().eval_packed(z2[i], z2[j])).collect()).collect();
    let mu = BilinearForm::new(&group, mu).unwrap();
    let values = action.z4_images().iter().map(|&x| t.phi().evaluate_packed(&dual, x)).collect();
    let phi = QuadraticFunction::new(mu, values).unwrap();
    let free = group.free_rank() as usize;
    let omega = t
        .omega()
        .map(|w| OmegaFunctional::new(&group, (free..r).map(|i| w.eval_packed(z2[i])).collect()).unwrap());
    Triple::new(phi, omega).unwrap()
}

/// Groups with `|Hom(H, Z/4)| <= 256` used for the triple corpus.
pub const CORPUS_GROUPS: &[&str] = &[
    "0", "Z", "Z2", "Z4", "Z8", "Z + Z2", "Z2^2", "Z4 + Z2", "Z^2", "Z + Z4", "Z8 + Z2", "Z2^3", "Z4 + Z2^2",
    "Z^2 + Z2", "Z4^2", "Z + Z4 + Z2", "Z8 + Z4 + Z2", "Z4^2 + Z2^2", "Z2^5", "Z^2 + Z2^2",
];

/// Up to 200 triples: for each group some random triples and images of
/// them under random automorphisms, so that isometric pairs occur.
pub fn corpus(seed: u64) -> Vec<Triple> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for name in CORPUS_GROUPS {
        let group = g(name);
        let actions = automorphism_actions(&group, CAP).ok();
        for k in 0..10 {
            let base = random_triple(&group, k % 3 == 0, &mut rng);
            match (&actions, k % 2) {
                (Some(a), 1) => {
                    let prev = out.last().cloned().unwrap_or(base);
                    if prev.group() == &group {
                        out.push(transport(&prev, &a[rng.gen_range(0..a.len())]));
                    } else {
                        out.push(prev);
                    }
                }
                _ => out.push(base),
            }
        }
    }
    out.truncate(200);
    out
}
