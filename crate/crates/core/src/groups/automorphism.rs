//! Dual actions of `Aut(H)` on `Hom(H, Z/2)` and `Hom(H, Z/4)`.
//!
//! An endomorphism `tau` of `H` is a matrix `a_ij` with
//! `tau(g_j) = sum_i a_ij g_i`, where `a_ij` lives in `Z/o_i` and must
//! satisfy `o_j a_ij = 0`. Pulling back along `tau` sends the dual basis
//! element `e_i` to the row `(a_ij)_j`, so only `a_ij` modulo `min(4, o_i)`
//! matters. `tau` is an automorphism iff its reduction mod 2 is invertible
//! (Burnside basis theorem on the torsion block; every unit of `Z/4` is
//! `+-1`, so the free block lifts to `GL_t(Z)`).

use std::ops::ControlFlow;

use super::dual::{Coefficient, DualElement, DualKind, Z4Dual};
use super::{AbelianGroup, SummandOrder};
use crate::error::{Error, Result};

/// Upper bound on the number of dual actions [`automorphism_actions`] will
/// materialize.
pub const AUTOMORPHISM_LIMIT: u64 = 1 << 20;

/// The pair of actions induced by one automorphism: images of the
/// `Hom(H, Z/2)` basis (bitmasks) and of the `Hom(H, Z/4)` basis (packed,
/// see [`Z4Dual`]).
#[derive(Clone, Debug)]
pub struct DualAction {
    matrix: Vec<Vec<u8>>,
    z2_images: Vec<u32>,
    z4_images: Vec<u32>,
}

impl PartialEq for DualAction {
    fn eq(&self, other: &Self) -> bool {
        self.z2_images == other.z2_images && self.z4_images == other.z4_images
    }
}

impl Eq for DualAction {}

impl std::hash::Hash for DualAction {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.z2_images.hash(state);
        self.z4_images.hash(state);
    }
}

impl DualAction {
    pub fn identity(dual: &Z4Dual) -> Self {
        let n = dual.rank();
        let matrix = (0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect();
        DualAction {
            matrix,
            z2_images: (0..n).map(|i| 1u32 << i).collect(),
            z4_images: (0..n).map(|i| dual.basis(i)).collect(),
        }
    }

    /// Entries `a_ij`, row `i` reduced modulo `min(4, o_i)`.
    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    pub fn z2_images(&self) -> &[u32] {
        &self.z2_images
    }

    pub fn z4_images(&self) -> &[u32] {
        &self.z4_images
    }

    #[inline]
    pub fn apply_z2_packed(&self, y: u32) -> u32 {
        let mut out = 0;
        let mut rest = y;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out ^= self.z2_images[i];
            rest &= rest - 1;
        }
        out
    }

    pub fn apply_z4_packed(&self, dual: &Z4Dual, x: u32) -> u32 {
        let mut out = 0;
        for (i, &img) in self.z4_images.iter().enumerate() {
            let c = dual.coord(x, i);
            if c != 0 {
                out = dual.add(out, dual.scale(img, c));
            }
        }
        out
    }

    pub fn apply(&self, dual: &Z4Dual, x: &DualElement) -> Result<DualElement> {
        if x.coords().len() != dual.rank() {
            return Err(Error::GroupMismatch("dual element has the wrong rank".into()));
        }
        Ok(match x.ring() {
            Coefficient::Z2 => {
                let mask = x.coords().iter().enumerate().fold(0u32, |m, (i, &c)| m | ((c as u32) << i));
                let image = self.apply_z2_packed(mask);
                DualElement::from_parts(
                    Coefficient::Z2,
                    (0..dual.rank()).map(|i| ((image >> i) & 1) as u8).collect(),
                )
            }
            Coefficient::Z4 => {
                let image = self.apply_z4_packed(dual, dual.encode(x.coords()));
                DualElement::from_parts(Coefficient::Z4, dual.decode(image))
            }
        })
    }

    /// `self` after `other`.
    pub fn compose(&self, dual: &Z4Dual, other: &DualAction) -> DualAction {
        let n = dual.rank();
        let moduli: Vec<u8> = self.row_moduli(dual);
        let mut matrix = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s: u32 = (0..n).map(|l| other.matrix[i][l] as u32 * self.matrix[l][j] as u32).sum();
                matrix[i][j] = (s % moduli[i] as u32) as u8;
            }
        }
        DualAction {
            matrix,
            z2_images: other.z2_images.iter().map(|&y| self.apply_z2_packed(y)).collect(),
            z4_images: other.z4_images.iter().map(|&x| self.apply_z4_packed(dual, x)).collect(),
        }
    }

    fn row_moduli(&self, dual: &Z4Dual) -> Vec<u8> {
        dual.kinds().iter().map(|k| k.order()).collect()
    }
}

/// One chosen row of the automorphism matrix: the image of dual basis
/// element `e_i`.
#[derive(Clone, Debug)]
pub(crate) struct Row {
    pub entries: Vec<u8>,
    /// image of `e_i` in `Hom(H, Z/2)`
    pub z2: u32,
    /// image of `e_i` in `Hom(H, Z/4)`, packed
    pub z4: u32,
}

/// Values `a_ij mod min(4, o_i)` allowed for target `o_i` and source `o_j`.
fn allowed_entries(target: SummandOrder, source: SummandOrder) -> &'static [u8] {
    use SummandOrder::*;
    match (target, source) {
        (Free, Free) => &[0, 1, 2, 3],
        (Free, TwoPower(_)) => &[0],
        (TwoPower(1), _) => &[0, 1],
        (TwoPower(_), Free) => &[0, 1, 2, 3],
        (TwoPower(ei), TwoPower(ej)) => match ei.saturating_sub(ej) {
            0 => &[0, 1, 2, 3],
            1 => &[0, 2],
            _ => &[0],
        },
    }
}

fn candidate_rows(group: &AbelianGroup, dual: &Z4Dual) -> Vec<Vec<Row>> {
    let orders = group.summand_orders();
    let kinds = dual.kinds();
    let n = orders.len();
    let mut all = Vec::with_capacity(n);
    for i in 0..n {
        let sets: Vec<&[u8]> = (0..n).map(|j| allowed_entries(orders[i], orders[j])).collect();
        let mut rows = Vec::new();
        let mut entries = vec![0u8; n];
        product(&sets, 0, &mut entries, &mut |e| {
            let z2 = e.iter().enumerate().fold(0u32, |m, (j, &a)| m | (((a & 1) as u32) << j));
            if z2 == 0 {
                return;
            }
            // value of the pulled-back e_i on g_j is a_ij * u_i in Z/4
            let unit = match kinds[i] {
                DualKind::Z4 => 1u8,
                DualKind::Z2 => 2u8,
            };
            let coords: Vec<u8> = e
                .iter()
                .zip(kinds)
                .map(|(&a, kind)| {
                    let w = (a * unit) % 4;
                    match kind {
                        DualKind::Z4 => w,
                        DualKind::Z2 => {
                            debug_assert!(w % 2 == 0);
                            w / 2
                        }
                    }
                })
                .collect();
            rows.push(Row { entries: e.to_vec(), z2, z4: dual.encode(&coords) });
        });
        all.push(rows);
    }
    all
}

fn product(sets: &[&[u8]], j: usize, cur: &mut Vec<u8>, visit: &mut dyn FnMut(&[u8])) {
    if j == sets.len() {
        visit(cur);
        return;
    }
    for &v in sets[j] {
        cur[j] = v;
        product(sets, j + 1, cur, visit);
    }
    cur[j] = 0;
}

/// Incremental `F_2` row echelon basis supporting LIFO removal.
struct Echelon {
    pivots: Vec<u32>,
    log: Vec<usize>,
}

impl Echelon {
    fn new(n: usize) -> Self {
        Echelon { pivots: vec![0; n.max(1)], log: Vec::new() }
    }

    fn try_push(&mut self, mut v: u32) -> bool {
        while v != 0 {
            let b = 31 - v.leading_zeros() as usize;
            if self.pivots[b] == 0 {
                self.pivots[b] = v;
                self.log.push(b);
                return true;
            }
            v ^= self.pivots[b];
        }
        false
    }

    fn pop(&mut self) {
        let b = self.log.pop().expect("pop on empty echelon");
        self.pivots[b] = 0;
    }
}

/// Depth-first search over automorphisms, choosing the image of `e_0`,
/// `e_1`, ... in turn. `accept(i, rows)` sees rows `0..=i` and may prune;
/// `visit` receives every complete action and may stop the search.
/// Candidates are tried in lexicographic order of matrix entries, so the
/// search order is deterministic.
pub(crate) fn search_automorphisms(
    group: &AbelianGroup,
    dual: &Z4Dual,
    accept: &mut dyn FnMut(usize, &[Row]) -> bool,
    visit: &mut dyn FnMut(&DualAction) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let candidates = candidate_rows(group, dual);
    let n = candidates.len();
    let mut chosen: Vec<Row> = Vec::with_capacity(n);
    let mut echelon = Echelon::new(n);

    fn go(
        i: usize,
        candidates: &[Vec<Row>],
        chosen: &mut Vec<Row>,
        echelon: &mut Echelon,
        accept: &mut dyn FnMut(usize, &[Row]) -> bool,
        visit: &mut dyn FnMut(&DualAction) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == candidates.len() {
            let action = DualAction {
                matrix: chosen.iter().map(|r| r.entries.clone()).collect(),
                z2_images: chosen.iter().map(|r| r.z2).collect(),
                z4_images: chosen.iter().map(|r| r.z4).collect(),
            };
            return visit(&action);
        }
        for row in &candidates[i] {
            if !echelon.try_push(row.z2) {
                continue;
            }
            chosen.push(row.clone());
            let flow = if accept(i, chosen) {
                go(i + 1, candidates, chosen, echelon, accept, visit)
            } else {
                ControlFlow::Continue(())
            };
            chosen.pop();
            echelon.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    if n == 0 {
        return visit(&DualAction { matrix: vec![], z2_images: vec![], z4_images: vec![] });
    }
    go(0, &candidates, &mut chosen, &mut echelon, accept, visit)
}

/// Every dual action induced by an automorphism of `H`, in deterministic
/// order. Fails when `|Hom(H, Z/4)| > cap` or when there are more than
/// [`AUTOMORPHISM_LIMIT`] actions.
pub fn automorphism_actions(group: &AbelianGroup, cap: u64) -> Result<Vec<DualAction>> {
    group.check_cap(cap)?;
    let dual = Z4Dual::new(group)?;
    let mut out = Vec::new();
    let flow = search_automorphisms(group, &dual, &mut |_, _| true, &mut |a| {
        if out.len() as u64 >= AUTOMORPHISM_LIMIT {
            return ControlFlow::Break(());
        }
        out.push(a.clone());
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::SizeLimit {
            what: "automorphism count",
            required: AUTOMORPHISM_LIMIT + 1,
            cap: AUTOMORPHISM_LIMIT,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn g(s: &str) -> AbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn small_automorphism_counts() {
        assert_eq!(automorphism_actions(&g("Z2"), 1 << 14).unwrap().len(), 1);
        assert_eq!(automorphism_actions(&g("Z2 + Z2"), 1 << 14).unwrap().len(), 6);
        assert_eq!(automorphism_actions(&AbelianGroup::trivial(), 1 << 14).unwrap().len(), 1);

        let z = g("Z");
        let dual = Z4Dual::new(&z).unwrap();
        let acts = automorphism_actions(&z, 1 << 14).unwrap();
        assert_eq!(acts.len(), 2);
        let images: HashSet<u8> = acts.iter().map(|a| dual.coord(a.apply_z4_packed(&dual, 1), 0)).collect();
        assert_eq!(images, HashSet::from([1, 3]));
    }

    #[test]
    fn counts_match_known_orders() {
        // |Aut(Z/4)| = 2, GL_2(Z/4) has 96 elements, Aut(Z/4 + Z/2) = 8 (dihedral),
        // the image of Aut(Z^2) in GL_2(Z/4) is all of GL_2(Z/4).
        assert_eq!(automorphism_actions(&g("Z4"), 1 << 14).unwrap().len(), 2);
        assert_eq!(automorphism_actions(&g("Z4 + Z4"), 1 << 14).unwrap().len(), 96);
        assert_eq!(automorphism_actions(&g("Z4 + Z2"), 1 << 14).unwrap().len(), 8);
        assert_eq!(automorphism_actions(&g("Z^2"), 1 << 14).unwrap().len(), 96);
        // Z/8 acts on its Z/4-dual through (Z/8)^* -> (Z/4)^*.
        assert_eq!(automorphism_actions(&g("Z8"), 1 << 14).unwrap().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let err = automorphism_actions(&g("Z^8"), 1 << 14).unwrap_err();
        assert_eq!(err, Error::SizeLimit { what: "|Hom(H, Z/4)|", required: 1 << 16, cap: 1 << 14 });
    }

    #[test]
    fn actions_are_distinct_and_identity_present() {
        let h = g("Z + Z4 + Z2");
        let dual = Z4Dual::new(&h).unwrap();
        let acts = automorphism_actions(&h, 1 << 14).unwrap();
        let set: HashSet<&DualAction> = acts.iter().collect();
        assert_eq!(set.len(), acts.len());
        assert!(set.contains(&DualAction::identity(&dual)));
    }
}
