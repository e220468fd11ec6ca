//! Quadratic refinements over `Q/Z` of symmetric `Z/2`-valued pairings on
//! `Hom(H, Z/2)`.
//!
//! A [`QuadraticFunction`] `phi` on `Hom(H, Z/4)` satisfies
//! `phi(x + y) = phi(x) + phi(y) + B(x, y)` with
//! `B(x, y) = j(mu(red x, red y))`, where `red` is [`reduce_dual`] and
//! `j: Z/2 -> Q/Z` the inclusion. It is stored by its values on the dual
//! generators; [`QuadraticFunction::evaluate`] extends them by
//! `phi(sum n_i g_i) = sum n_i phi(g_i) + sum_{i<j} n_i n_j B(g_i, g_j)
//! + sum_i binom(n_i, 2) B(g_i, g_i)`.
//!
//! [`reduce_dual`]: crate::groups::reduce_dual

mod arf;
mod isometry;
mod qz;
mod serial;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Coefficient, DualElement, DualKind, Z4Dual};

pub use arf::{arf, Z2QuadraticForm};
pub use isometry::{isometric, isometry_witness, witt_equivalent, witt_witness};
pub use qz::QZValue;
pub use serial::{Z2FormDoc, TripleDoc};
pub(crate) use serial::json_error;

/// Symmetric `F_2`-valued pairing on `Hom(H, Z/2)`, as a matrix on the dual
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    group: AbelianGroup,
    matrix: Vec<Vec<u8>>,
    rows: Vec<u32>,
}

impl BilinearForm {
    pub fn new(group: &AbelianGroup, matrix: Vec<Vec<u8>>) -> Result<Self> {
        let n = group.hom_rank_z2() as usize;
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::invalid(format!("mu must be a {n}x{n} matrix for {group}")));
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] > 1 {
                    return Err(Error::invalid(format!("mu[{i}][{j}] = {} is not 0 or 1", matrix[i][j])));
                }
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::invalid(format!("mu is not symmetric at ({i}, {j})")));
                }
            }
        }
        let rows = matrix
            .iter()
            .map(|r| r.iter().enumerate().fold(0u32, |m, (j, &b)| m | ((b as u32) << j)))
            .collect();
        Ok(BilinearForm { group: group.clone(), matrix, rows })
    }

    pub fn zero(group: &AbelianGroup) -> Self {
        let n = group.hom_rank_z2() as usize;
        BilinearForm::new(group, vec![vec![0; n]; n]).expect("zero matrix is valid")
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.matrix[i][j]
    }

    /// `mu(x, y)` for bitmask-packed elements of `Hom(H, Z/2)`.
    #[inline]
    pub fn eval_packed(&self, x: u32, y: u32) -> u8 {
        let mut acc = 0u32;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc ^= self.rows[i] & y;
            rest &= rest - 1;
        }
        (acc.count_ones() & 1) as u8
    }

    pub fn eval(&self, x: &DualElement, y: &DualElement) -> Result<u8> {
        Ok(self.eval_packed(z2_mask(&self.group, x)?, z2_mask(&self.group, y)?))
    }

    /// `mu(x, x) = 0` for every `x`, i.e. the diagonal vanishes.
    pub fn is_diagonal_zero(&self) -> bool {
        (0..self.matrix.len()).all(|i| self.matrix[i][i] == 0)
    }

    /// Bitmask of `x` with `mu(x, x) = sum_i x_i mu_ii`.
    pub fn diagonal_mask(&self) -> u32 {
        (0..self.matrix.len()).fold(0, |m, i| m | ((self.matrix[i][i] as u32) << i))
    }
}

fn z2_mask(group: &AbelianGroup, y: &DualElement) -> Result<u32> {
    if y.ring() != Coefficient::Z2 {
        return Err(Error::invalid("expected a Z/2-valued dual element"));
    }
    if y.coords().len() != group.summand_count() {
        return Err(Error::GroupMismatch(format!("dual element does not belong to {group}")));
    }
    Ok(y.coords().iter().enumerate().fold(0u32, |m, (i, &c)| m | (((c & 1) as u32) << i)))
}

/// A `Q/Z`-valued function on `Hom(H, Z/4)`, quadratic with respect to `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticFunction {
    form: BilinearForm,
    values: Vec<QZValue>,
}

impl QuadraticFunction {
    /// Generator values must satisfy `4 phi(g) = 0` on `Z/4`-type generators
    /// and `2 phi(g) = 0` on `Z/2`-type generators.
    pub fn new(form: BilinearForm, values: Vec<QZValue>) -> Result<Self> {
        let kinds = form.group.dual_kinds();
        if values.len() != kinds.len() {
            return Err(Error::invalid(format!(
                "phi needs {} generator values, got {}",
                kinds.len(),
                values.len()
            )));
        }
        for (i, (v, kind)) in values.iter().zip(&kinds).enumerate() {
            let bound = kind.order() as u64;
            if bound % v.order() != 0 {
                return Err(Error::invalid(format!(
                    "phi(g_{i}) = {v} violates {bound} * phi(g_{i}) = 0"
                )));
            }
        }
        Ok(QuadraticFunction { form, values })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.form.group
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn values(&self) -> &[QZValue] {
        &self.values
    }

    /// `B(g_i, g_j)` as 0 or 1 (times 1/2).
    fn cross_bit(&self, kinds: &[DualKind], i: usize, j: usize) -> u8 {
        if kinds[i] == DualKind::Z4 && kinds[j] == DualKind::Z4 {
            self.form.matrix[i][j]
        } else {
            0
        }
    }

    fn evaluate_coords(&self, kinds: &[DualKind], n: &[u8]) -> QZValue {
        let mut acc = QZValue::ZERO;
        let mut halves = 0u64;
        for i in 0..n.len() {
            if n[i] == 0 {
                continue;
            }
            acc = acc.add(self.values[i].times(n[i] as i64));
            let ni = n[i] as u64;
            halves += ni * ni.saturating_sub(1) / 2 * self.cross_bit(kinds, i, i) as u64;
            for j in i + 1..n.len() {
                halves += ni * n[j] as u64 * self.cross_bit(kinds, i, j) as u64;
            }
        }
        acc.add(QZValue::from_z2((halves & 1) as u8))
    }

    pub fn evaluate(&self, x: &DualElement) -> Result<QZValue> {
        if x.ring() != Coefficient::Z4 {
            return Err(Error::invalid("phi is evaluated on Z/4-valued dual elements"));
        }
        let kinds = self.form.group.dual_kinds();
        if x.coords().len() != kinds.len() {
            return Err(Error::GroupMismatch(format!(
                "dual element does not belong to {}",
                self.form.group
            )));
        }
        Ok(self.evaluate_coords(&kinds, x.coords()))
    }

    pub fn evaluate_packed(&self, dual: &Z4Dual, x: u32) -> QZValue {
        self.evaluate_coords(dual.kinds(), &dual.decode(x))
    }

    /// Order of the smallest cyclic subgroup of `Q/Z` containing the image,
    /// read off the generators: the image is generated by the `phi(g_i)`
    /// together with the cross terms `B(g_i, g_j)`, each of which is hit
    /// (`phi(2 g_i) = 2 phi(g_i) + B(g_i, g_i)`,
    /// `phi(g_i + g_j) = phi(g_i) + phi(g_j) + B(g_i, g_j)`).
    pub fn value_group(&self) -> ValueGroup {
        let kinds = self.form.group.dual_kinds();
        let mut order = self.values.iter().fold(1u64, |l, v| l / qz_gcd(l, v.order()) * v.order());
        let n = kinds.len();
        let cross = (0..n).any(|i| (i..n).any(|j| self.cross_bit(&kinds, i, j) == 1));
        if cross && order % 2 == 1 {
            order *= 2;
        }
        ValueGroup::from_order(order)
    }

    /// Values on every element of `Hom(H, Z/4)`, indexed by packed encoding.
    pub fn table(&self, dual: &Z4Dual) -> Vec<QZValue> {
        dual.elements().map(|x| self.evaluate_packed(dual, x)).collect()
    }

    /// `B(x, y)` on packed `Z/4`-dual elements.
    pub fn cross_packed(&self, dual: &Z4Dual, x: u32, y: u32) -> QZValue {
        QZValue::from_z2(self.form.eval_packed(dual.reduce(x), dual.reduce(y)))
    }
}

pub fn evaluate_phi(phi: &QuadraticFunction, x: &DualElement) -> Result<QZValue> {
    phi.evaluate(x)
}

/// Exhaustive check of `phi(x + y) = phi(x) + phi(y) + B(x, y)` over all
/// pairs in `Hom(H, Z/4)`.
pub fn verify_quadratic_law(phi: &QuadraticFunction, cap: u64) -> Result<bool> {
    phi.group().check_cap(cap)?;
    let dual = Z4Dual::new(phi.group())?;
    let size = dual.size();
    // Work in quarters; every value has order dividing 4.
    let table: Vec<u8> = phi.table(&dual).iter().map(|v| quarters(*v)).collect::<Option<_>>().ok_or_else(
        || Error::invalid("phi takes a value outside Z/4"),
    )?;
    let reduced: Vec<u32> = dual.elements().map(|x| dual.reduce(x)).collect();
    let mu_red: Vec<u32> = reduced
        .iter()
        .map(|&r| (0..dual.rank()).fold(0u32, |m, j| m | ((phi.form.eval_packed(r, 1 << j) as u32) << j)))
        .collect();
    for x in 0..size {
        let fx = table[x as usize];
        let mx = mu_red[x as usize];
        for y in 0..size {
            let b = ((mx & reduced[y as usize]).count_ones() & 1) as u8;
            let lhs = table[dual.add(x, y) as usize];
            let rhs = (fx + table[y as usize] + 2 * b) & 3;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn quarters(v: QZValue) -> Option<u8> {
    match v.denominator() {
        1 | 2 | 4 => Some((v.numerator() * (4 / v.denominator())) as u8),
        _ => None,
    }
}

/// Smallest cyclic subgroup of `Q/Z` containing the image of `phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueGroup {
    Trivial,
    Z2,
    Z4,
    /// cyclic of the given order, larger than 4
    Larger(u64),
}

impl ValueGroup {
    pub fn order(self) -> u64 {
        match self {
            ValueGroup::Trivial => 1,
            ValueGroup::Z2 => 2,
            ValueGroup::Z4 => 4,
            ValueGroup::Larger(m) => m,
        }
    }

    fn from_order(m: u64) -> Self {
        match m {
            1 => ValueGroup::Trivial,
            2 => ValueGroup::Z2,
            4 => ValueGroup::Z4,
            m => ValueGroup::Larger(m),
        }
    }

    /// Whether this subgroup lies inside the cyclic subgroup of order `m`.
    pub fn is_within(self, m: u64) -> bool {
        m % self.order() == 0
    }
}

pub fn values_subgroup(phi: &QuadraticFunction, cap: u64) -> Result<ValueGroup> {
    phi.group().check_cap(cap)?;
    let dual = Z4Dual::new(phi.group())?;
    let order = dual
        .elements()
        .map(|x| phi.evaluate_packed(&dual, x).order())
        .fold(1u64, |l, d| l / qz_gcd(l, d) * d);
    Ok(ValueGroup::from_order(order))
}

fn qz_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Value distribution of `phi` and `sum_x exp(2 pi i phi(x))`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussSum {
    pub counts: BTreeMap<QZValue, u64>,
    pub re: f64,
    pub im: f64,
}

impl GaussSum {
    /// The sum as an exact Gaussian integer when every value lies in `Z/4`.
    pub fn exact(&self) -> Option<(i64, i64)> {
        let mut re = 0i64;
        let mut im = 0i64;
        for (v, &c) in &self.counts {
            let c = c as i64;
            match quarters(*v)? {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        Some((re, im))
    }
}

pub fn gauss_sum(phi: &QuadraticFunction, cap: u64) -> Result<GaussSum> {
    phi.group().check_cap(cap)?;
    let dual = Z4Dual::new(phi.group())?;
    let mut counts = BTreeMap::new();
    for x in dual.elements() {
        *counts.entry(phi.evaluate_packed(&dual, x)).or_insert(0u64) += 1;
    }
    let (mut re, mut im) = (0.0, 0.0);
    for (v, &c) in &counts {
        let (a, b) = v.unit_circle();
        re += c as f64 * a;
        im += c as f64 * b;
    }
    Ok(GaussSum { counts, re, im })
}

/// A homomorphism `tor(H) -> Z/2`, one bit per 2-torsion summand. It is
/// evaluated on `Hom(H, Z/2)` through the torsion coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaFunctional {
    group: AbelianGroup,
    bits: Vec<u8>,
}

impl OmegaFunctional {
    pub fn new(group: &AbelianGroup, bits: Vec<u8>) -> Result<Self> {
        let r = group.torsion_rank() as usize;
        if bits.len() != r {
            return Err(Error::invalid(format!("omega needs {r} entries for {group}, got {}", bits.len())));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::invalid("omega entries must be 0 or 1"));
        }
        Ok(OmegaFunctional { group: group.clone(), bits })
    }

    pub fn zero(group: &AbelianGroup) -> Self {
        OmegaFunctional { group: group.clone(), bits: vec![0; group.torsion_rank() as usize] }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Bitmask over all `t + r` coordinates of `Hom(H, Z/2)`.
    pub fn mask(&self) -> u32 {
        let t = self.group.free_rank();
        self.bits.iter().enumerate().fold(0u32, |m, (l, &b)| m | ((b as u32) << (t as usize + l)))
    }

    #[inline]
    pub fn eval_packed(&self, y: u32) -> u8 {
        ((self.mask() & y).count_ones() & 1) as u8
    }
}

/// The data `(H, mu, phi)`, optionally with `omega`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    phi: QuadraticFunction,
    omega: Option<OmegaFunctional>,
}

impl Triple {
    pub fn new(phi: QuadraticFunction, omega: Option<OmegaFunctional>) -> Result<Self> {
        if let Some(w) = &omega {
            if &w.group != phi.group() {
                return Err(Error::GroupMismatch("omega and phi refer to different groups".into()));
            }
        }
        Ok(Triple { phi, omega })
    }

    pub fn group(&self) -> &AbelianGroup {
        self.phi.group()
    }

    pub fn mu(&self) -> &BilinearForm {
        self.phi.form()
    }

    pub fn phi(&self) -> &QuadraticFunction {
        &self.phi
    }

    pub fn omega(&self) -> Option<&OmegaFunctional> {
        self.omega.as_ref()
    }
}
