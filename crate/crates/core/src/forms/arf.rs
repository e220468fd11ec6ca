use crate::error::{Error, Result};

/// A `Z/2`-valued quadratic form on `F_2^n`, given by its values on a basis
/// and its (alternating) cross form: `q(x + y) = q(x) + q(y) + b(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2QuadraticForm {
    values: Vec<u8>,
    cross: Vec<Vec<u8>>,
}

impl Z2QuadraticForm {
    pub fn new(values: Vec<u8>, cross: Vec<Vec<u8>>) -> Result<Self> {
        let n = values.len();
        if n > 30 {
            return Err(Error::SizeLimit { what: "quadratic form rank", required: n as u64, cap: 30 });
        }
        if cross.len() != n || cross.iter().any(|r| r.len() != n) {
            return Err(Error::invalid(format!("cross form must be {n}x{n}")));
        }
        if values.iter().chain(cross.iter().flatten()).any(|&v| v > 1) {
            return Err(Error::invalid("entries must be 0 or 1"));
        }
        for i in 0..n {
            if cross[i][i] != 0 {
                return Err(Error::invalid(format!(
                    "cross form of a Z/2 quadratic form is alternating, but b(e_{i}, e_{i}) = 1"
                )));
            }
            for j in 0..n {
                if cross[i][j] != cross[j][i] {
                    return Err(Error::invalid(format!("cross form is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Z2QuadraticForm { values, cross })
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn cross(&self) -> &[Vec<u8>] {
        &self.cross
    }

    /// `q(x)` for `x` packed as a bitmask.
    pub fn evaluate(&self, x: u32) -> u8 {
        let n = self.rank();
        let mut acc = 0u8;
        for i in (0..n).filter(|i| x >> i & 1 == 1) {
            acc ^= self.values[i];
            for j in (i + 1..n).filter(|j| x >> j & 1 == 1) {
                acc ^= self.cross[i][j];
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self) -> bool {
        let n = self.rank();
        let mut rows: Vec<u32> = self
            .cross
            .iter()
            .map(|r| r.iter().enumerate().fold(0u32, |m, (j, &b)| m | ((b as u32) << j)))
            .collect();
        let mut rank = 0;
        for bit in 0..n {
            if let Some(p) = (rank..n).find(|&r| rows[r] >> bit & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..n {
                    if r != rank && rows[r] >> bit & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank == n
    }

    /// Orthogonal sum.
    pub fn orthogonal_sum(&self, other: &Z2QuadraticForm) -> Z2QuadraticForm {
        let (a, b) = (self.rank(), other.rank());
        let mut cross = vec![vec![0u8; a + b]; a + b];
        for i in 0..a {
            cross[i][..a].copy_from_slice(&self.cross[i]);
        }
        for i in 0..b {
            cross[a + i][a..].copy_from_slice(&other.cross[i]);
        }
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Z2QuadraticForm { values, cross }
    }
}

/// Arf invariant by majority vote: 0 iff `q` vanishes on more than half of
/// the vectors.
pub fn arf(q: &Z2QuadraticForm) -> Result<u8> {
    if !q.is_nondegenerate() {
        return Err(Error::invalid("the cross form is degenerate"));
    }
    let n = q.rank();
    let zeros = (0u32..1 << n).filter(|&x| q.evaluate(x) == 0).count() as u64;
    Ok(if 2 * zeros > 1u64 << n { 0 } else { 1 })
}
