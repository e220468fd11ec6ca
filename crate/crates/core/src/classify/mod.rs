//! Classification data for `(n-2)`-connected `2n`-dimensional
//! pi-manifolds with vanishing middle rational homology.
//!
//! By residue of `n` mod 4 the data are
//!
//! * `n = 2`: `[H, mu, phi]` with `diag mu = 0` and `phi` valued in `Z/4`;
//! * `n = 0`: `[H, mu, phi]` with `phi` valued in `Z/2`;
//! * `n = 1`: `[H, mu, phi, omega]` with `phi` valued in `Z/2`;
//! * `n = 3`: `[H, mu, omega]`;
//!
//! and for odd `n` additionally `mu(x, x) = 0` when `x` lifts to an order-4
//! element of `Hom(H, Z/4)`, `mu(x, x) = delta * omega(x)` when `x != 0`
//! does not. The sign `delta` is an input of every run.

mod report;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::forms::{BilinearForm, OmegaFunctional, QZValue, QuadraticFunction, ValueGroup};
use crate::groups::{automorphism_actions, AbelianGroup, DualAction, DualKind, Z4Dual};

pub use report::{classification_report, ClassificationReport};

/// Upper bound on the number of candidate data generated by
/// [`enumerate_classes`].
pub const CANDIDATE_LIMIT: u64 = 1 << 24;

/// Number of ones in the binary expansion of `n`.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// One element of the classification data for a fixed residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManifoldClass {
    n_mod_4: u8,
    group: AbelianGroup,
    mu: BilinearForm,
    phi: Option<QuadraticFunction>,
    omega: Option<OmegaFunctional>,
    delta: u8,
}

impl ManifoldClass {
    /// `phi` must be present unless `n = 3 mod 4`, `omega` exactly when `n`
    /// is odd.
    pub fn new(
        n_mod_4: u8,
        mu: BilinearForm,
        phi_values: Option<Vec<QZValue>>,
        omega: Option<OmegaFunctional>,
        delta: u8,
    ) -> Result<Self> {
        if n_mod_4 > 3 {
            return Err(Error::invalid(format!("residue {n_mod_4} is not in 0..4")));
        }
        if delta > 1 {
            return Err(Error::invalid("delta must be 0 or 1"));
        }
        let odd = n_mod_4 % 2 == 1;
        match (&phi_values, n_mod_4 == 3) {
            (Some(_), true) => return Err(Error::ResidueMismatch("phi is not part of the data for n = 3 mod 4".into())),
            (None, false) => return Err(Error::ResidueMismatch(format!("phi is required for n = {n_mod_4} mod 4"))),
            _ => {}
        }
        match (&omega, odd) {
            (Some(_), false) => return Err(Error::ResidueMismatch("omega is only part of the data for odd n".into())),
            (None, true) => return Err(Error::ResidueMismatch("omega is required for odd n".into())),
            _ => {}
        }
        let group = mu.group().clone();
        if let Some(w) = &omega {
            if *w != OmegaFunctional::new(&group, w.bits().to_vec())? {
                return Err(Error::GroupMismatch("omega refers to another group".into()));
            }
        }
        let phi = phi_values.map(|v| QuadraticFunction::new(mu.clone(), v)).transpose()?;
        Ok(ManifoldClass { n_mod_4, group, mu, phi, omega, delta })
    }

    pub fn n_mod_4(&self) -> u8 {
        self.n_mod_4
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn mu(&self) -> &BilinearForm {
        &self.mu
    }

    pub fn phi(&self) -> Option<&QuadraticFunction> {
        self.phi.as_ref()
    }

    pub fn omega(&self) -> Option<&OmegaFunctional> {
        self.omega.as_ref()
    }

    pub fn delta(&self) -> u8 {
        self.delta
    }
}

/// A violated clause of the membership conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `n = 2 mod 4` requires `mu(x, x) = 0` for all `x`.
    DiagonalNonzero { generator: usize },
    /// `phi` must take values in the cyclic subgroup of order `allowed`.
    ValueGroup { allowed: u64, found: ValueGroup },
    /// `mu(x, x) != 0` for some `x` lifting to an order-4 class.
    LiftedSquare { x: Vec<u8> },
    /// `mu(x, x) != delta * omega(x)` for some `x` of order 2.
    OrderTwoSquare { x: Vec<u8>, delta: u8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DiagonalNonzero { generator } => {
                write!(f, "diag mu != 0 (mu(g{generator}, g{generator}) = 1)")
            }
            Violation::ValueGroup { allowed, found } => {
                write!(f, "phi does not factor through Z/{allowed} (image generates Z/{})", found.order())
            }
            Violation::LiftedSquare { x } => {
                write!(f, "mu(x, x) = 1 for x = {x:?}, which lifts to an order-4 Z/4 class")
            }
            Violation::OrderTwoSquare { x, delta } => {
                write!(f, "mu(x, x) != {delta} * omega(x) for x = {x:?} of order 2")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// The correspondence is stated for `alpha(n + 2) >= 2`.
    AlphaBelowTwo { n: i64, alpha: u32 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::AlphaBelowTwo { n, alpha } => write!(
                f,
                "alpha(n + 2) = {alpha} < 2 for n = {n}: n + 2 is a power of two, outside the range of the correspondence"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub admissible: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

pub(crate) fn dimension_warnings(n: i64) -> Result<Vec<Warning>> {
    if n < 4 {
        return Err(Error::OutOfRange { what: "n", value: n, min: 4 });
    }
    let a = alpha(n as u64 + 2);
    Ok(if a < 2 { vec![Warning::AlphaBelowTwo { n, alpha: a }] } else { Vec::new() })
}

/// Mask of the `Hom(H, Z/2)` coordinates dual to `Z/2` summands. An element
/// lies in the image of an order-4 class under reduction iff it is nonzero
/// and vanishes on these coordinates.
fn order_two_coordinates(group: &AbelianGroup) -> u32 {
    group
        .dual_kinds()
        .iter()
        .enumerate()
        .fold(0u32, |m, (i, k)| if *k == DualKind::Z2 { m | (1 << i) } else { m })
}

pub fn check_membership(c: &ManifoldClass, n: i64) -> Result<Membership> {
    let warnings = dimension_warnings(n)?;
    if n.rem_euclid(4) as u8 != c.n_mod_4 {
        return Err(Error::ResidueMismatch(format!(
            "data for n = {} mod 4 checked against n = {n}",
            c.n_mod_4
        )));
    }
    let mut violations = Vec::new();
    let allowed = match c.n_mod_4 {
        2 => Some(4),
        0 | 1 => Some(2),
        _ => None,
    };
    if c.n_mod_4 == 2 {
        if let Some(i) = (0..c.mu.matrix().len()).find(|&i| c.mu.entry(i, i) == 1) {
            violations.push(Violation::DiagonalNonzero { generator: i });
        }
    }
    if let (Some(allowed), Some(phi)) = (allowed, &c.phi) {
        let found = phi.value_group();
        if !found.is_within(allowed) {
            violations.push(Violation::ValueGroup { allowed, found });
        }
    }
    if c.n_mod_4 % 2 == 1 {
        let omega = c.omega.as_ref().expect("odd residues carry omega");
        let two = order_two_coordinates(&c.group);
        let rank = c.group.hom_rank_z2();
        let diag = c.mu.diagonal_mask();
        let bits = |x: u32| (0..rank).map(|i| ((x >> i) & 1) as u8).collect::<Vec<u8>>();
        let mut lifted = None;
        let mut order_two = None;
        for x in 1u32..(1 << rank) {
            let square = ((diag & x).count_ones() & 1) as u8;
            if x & two == 0 {
                if square != 0 && lifted.is_none() {
                    lifted = Some(x);
                }
            } else if square != c.delta * omega.eval_packed(x) && order_two.is_none() {
                order_two = Some(x);
            }
        }
        if let Some(x) = lifted {
            violations.push(Violation::LiftedSquare { x: bits(x) });
        }
        if let Some(x) = order_two {
            violations.push(Violation::OrderTwoSquare { x: bits(x), delta: c.delta });
        }
    }
    Ok(Membership { admissible: violations.is_empty(), violations, warnings })
}

/// Result of [`enumerate_classes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub representatives: Vec<ManifoldClass>,
    pub admissible_candidates: u64,
    pub warnings: Vec<Warning>,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Raw candidate datum, encoded as a key whose lexicographic order is the
/// enumeration order: upper triangle of `mu` (row-major), then `phi` in
/// quarters, then `omega`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key(Vec<u8>);

struct Layout {
    n_mod_4: u8,
    group: AbelianGroup,
    rank: usize,
    kinds: Vec<DualKind>,
    has_phi: bool,
    has_omega: bool,
    radices: Vec<u8>,
}

impl Layout {
    fn new(group: &AbelianGroup, n_mod_4: u8) -> Self {
        let rank = group.hom_rank_z2() as usize;
        let kinds = group.dual_kinds();
        let has_phi = n_mod_4 != 3;
        let has_omega = n_mod_4 % 2 == 1;
        let mut radices = vec![2u8; rank * (rank + 1) / 2];
        if has_phi {
            radices.extend(kinds.iter().map(|k| k.order()));
        }
        if has_omega {
            radices.extend(std::iter::repeat(2).take(group.torsion_rank() as usize));
        }
        Layout { n_mod_4, group: group.clone(), rank, kinds, has_phi, has_omega, radices }
    }

    fn candidate_count(&self) -> u64 {
        self.radices.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r as u64)).unwrap_or(u64::MAX)
    }

    fn mu_matrix(&self, key: &Key) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.rank]; self.rank];
        let mut p = 0;
        for i in 0..self.rank {
            for j in i..self.rank {
                m[i][j] = key.0[p];
                m[j][i] = key.0[p];
                p += 1;
            }
        }
        m
    }

    fn phi_values(&self, key: &Key) -> Option<Vec<QZValue>> {
        let start = self.rank * (self.rank + 1) / 2;
        self.has_phi.then(|| {
            key.0[start..start + self.rank]
                .iter()
                .zip(&self.kinds)
                .map(|(&q, kind)| match kind {
                    DualKind::Z4 => QZValue::quarter(q as i64),
                    DualKind::Z2 => QZValue::from_z2(q),
                })
                .collect()
        })
    }

    fn omega_bits(&self, key: &Key) -> Option<Vec<u8>> {
        let start = self.rank * (self.rank + 1) / 2 + if self.has_phi { self.rank } else { 0 };
        self.has_omega.then(|| key.0[start..].to_vec())
    }

    fn class(&self, key: &Key, delta: u8) -> ManifoldClass {
        let mu = BilinearForm::new(&self.group, self.mu_matrix(key)).expect("symmetric 0/1 matrix");
        let omega = self
            .omega_bits(key)
            .map(|b| OmegaFunctional::new(&self.group, b).expect("torsion-rank omega"));
        ManifoldClass::new(self.n_mod_4, mu, self.phi_values(key), omega, delta)
            .expect("generated data match the residue")
    }

    fn key_of(&self, mu: &[Vec<u8>], phi_quarters: Option<&[u8]>, omega: Option<&[u8]>) -> Key {
        let mut k = Vec::with_capacity(self.radices.len());
        for i in 0..self.rank {
            for j in i..self.rank {
                k.push(mu[i][j]);
            }
        }
        if let Some(p) = phi_quarters {
            k.extend_from_slice(p);
        }
        if let Some(w) = omega {
            k.extend_from_slice(w);
        }
        Key(k)
    }

    /// The datum transported by a dual action: `mu(L-, L-)`, `phi(L-)`,
    /// `omega(L-)`.
    fn transform(&self, class: &ManifoldClass, dual: &Z4Dual, action: &DualAction) -> Key {
        let z2 = action.z2_images();
        let mu: Vec<Vec<u8>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| class.mu.eval_packed(z2[i], z2[j])).collect())
            .collect();
        let phi: Option<Vec<u8>> = class.phi.as_ref().map(|phi| {
            action
                .z4_images()
                .iter()
                .zip(&self.kinds)
                .map(|(&img, kind)| {
                    let v = phi.evaluate_packed(dual, img);
                    match kind {
                        DualKind::Z4 => (v.numerator() * (4 / v.denominator())) as u8,
                        DualKind::Z2 => (v.numerator() * (2 / v.denominator())) as u8,
                    }
                })
                .collect()
        });
        let t = self.group.free_rank() as usize;
        let omega: Option<Vec<u8>> = class
            .omega
            .as_ref()
            .map(|w| (t..self.rank).map(|i| w.eval_packed(z2[i])).collect());
        self.key_of(&mu, phi.as_deref(), omega.as_deref())
    }
}

/// Representatives of the classification data for `H` and `n`, one per
/// isometry class. Candidates are generated in a fixed order and each
/// orbit is represented by its first (lexicographically least) member.
pub fn enumerate_classes(group: &AbelianGroup, n: i64, delta: u8, cap: u64) -> Result<Enumeration> {
    let warnings = dimension_warnings(n)?;
    if delta > 1 {
        return Err(Error::invalid("delta must be 0 or 1"));
    }
    let group = group.two_local();
    group.check_cap(cap)?;
    let n_mod_4 = n.rem_euclid(4) as u8;
    let layout = Layout::new(&group, n_mod_4);
    let total = layout.candidate_count();
    if total > CANDIDATE_LIMIT {
        return Err(Error::SizeLimit { what: "candidate data", required: total, cap: CANDIDATE_LIMIT });
    }
    let actions = automorphism_actions(&group, cap)?;
    let dual = Z4Dual::new(&group)?;

    let mut seen: HashSet<Key> = HashSet::new();
    let mut representatives = Vec::new();
    let mut admissible = 0u64;
    let mut digits = vec![0u8; layout.radices.len()];
    loop {
        let key = Key(digits.clone());
        let class = layout.class(&key, delta);
        if check_membership(&class, n)?.admissible {
            admissible += 1;
            if !seen.contains(&key) {
                for action in &actions {
                    seen.insert(layout.transform(&class, &dual, action));
                }
                debug_assert!(seen.contains(&key));
                representatives.push(class);
            }
        }
        // odometer, last digit fastest
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(Enumeration { representatives, admissible_candidates: admissible, warnings });
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < layout.radices[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
}
