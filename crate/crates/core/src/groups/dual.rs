use std::fmt;

use super::AbelianGroup;
use crate::error::{Error, Result};

/// Coefficient ring of a dual element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Z2,
    Z4,
}

/// Type of one coordinate of `Hom(H, Z/4)`.
///
/// Free summands and `Z/2^e` with `e >= 2` contribute a `Z/4`; a `Z/2`
/// summand contributes `Hom(Z/2, Z/4) = Z/2`, generated by `1 -> 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualKind {
    Z4,
    Z2,
}

impl DualKind {
    pub fn order(self) -> u8 {
        match self {
            DualKind::Z4 => 4,
            DualKind::Z2 => 2,
        }
    }
}

/// An element of `Hom(H, Z/2)` or `Hom(H, Z/4)` in coordinates dual to the
/// cyclic summands of `H`.
///
/// Under the `Z/4` tag a coordinate dual to a `Z/2` summand is `Z/2`-valued:
/// coordinate `c` is the homomorphism sending the generator to `2c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualElement {
    ring: Coefficient,
    coords: Vec<u8>,
}

impl DualElement {
    pub fn new(group: &AbelianGroup, ring: Coefficient, coords: Vec<u8>) -> Result<Self> {
        let n = group.summand_count();
        if coords.len() != n {
            return Err(Error::invalid(format!(
                "expected {n} dual coordinates for {group}, got {}",
                coords.len()
            )));
        }
        let kinds = group.dual_kinds();
        for (i, (&c, kind)) in coords.iter().zip(&kinds).enumerate() {
            let order = match ring {
                Coefficient::Z2 => 2,
                Coefficient::Z4 => kind.order(),
            };
            if c >= order {
                return Err(Error::invalid(format!(
                    "coordinate {i} = {c} out of range for a summand of order {order}"
                )));
            }
        }
        Ok(DualElement { ring, coords })
    }

    pub fn zero(group: &AbelianGroup, ring: Coefficient) -> Self {
        DualElement { ring, coords: vec![0; group.summand_count()] }
    }

    pub fn ring(&self) -> Coefficient {
        self.ring
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub(crate) fn from_parts(ring: Coefficient, coords: Vec<u8>) -> Self {
        DualElement { ring, coords }
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coords.iter().map(u8::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// The coefficient map `Z/4 -> Z/2` applied to homomorphisms.
///
/// `Z/4`-type coordinates are reduced mod 2; coordinates dual to `Z/2`
/// summands go to 0, since `Z/2 -> Z/4 -> Z/2` (`1 -> 2 -> 0`) is zero.
pub fn reduce_dual(group: &AbelianGroup, x: &DualElement) -> Result<DualElement> {
    if x.ring != Coefficient::Z4 {
        return Err(Error::invalid("reduce_dual expects a Z/4-valued dual element"));
    }
    if x.coords.len() != group.summand_count() {
        return Err(Error::GroupMismatch(format!("dual element does not belong to {group}")));
    }
    let coords = x
        .coords
        .iter()
        .zip(group.dual_kinds())
        .map(|(&c, kind)| match kind {
            DualKind::Z4 => c & 1,
            DualKind::Z2 => 0,
        })
        .collect();
    Ok(DualElement { ring: Coefficient::Z2, coords })
}

/// Packed encoding of `Hom(H, Z/4)` into a `u32`: two bits per `Z/4`
/// coordinate, one bit per `Z/2` coordinate, coordinate 0 in the lowest bits.
/// Elements of `Hom(H, Z/2)` are packed separately as plain bitmasks with
/// bit `i` for coordinate `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Dual {
    kinds: Vec<DualKind>,
    offsets: Vec<u32>,
    low_mask: u32,
    bits: u32,
}

impl Z4Dual {
    pub fn new(group: &AbelianGroup) -> Result<Self> {
        let kinds = group.dual_kinds();
        let mut offsets = Vec::with_capacity(kinds.len());
        let mut low_mask = 0u32;
        let mut bits = 0u32;
        for kind in &kinds {
            offsets.push(bits);
            match kind {
                DualKind::Z4 => {
                    if bits + 2 > 31 {
                        return Err(Error::SizeLimit {
                            what: "log2 |Hom(H, Z/4)|",
                            required: group.log2_hom_z4_order() as u64,
                            cap: 31,
                        });
                    }
                    low_mask |= 1 << bits;
                    bits += 2;
                }
                DualKind::Z2 => {
                    if bits + 1 > 31 {
                        return Err(Error::SizeLimit {
                            what: "log2 |Hom(H, Z/4)|",
                            required: group.log2_hom_z4_order() as u64,
                            cap: 31,
                        });
                    }
                    bits += 1;
                }
            }
        }
        Ok(Z4Dual { kinds, offsets, low_mask, bits })
    }

    pub fn kinds(&self) -> &[DualKind] {
        &self.kinds
    }

    pub fn rank(&self) -> usize {
        self.kinds.len()
    }

    /// `|Hom(H, Z/4)|`.
    pub fn size(&self) -> u32 {
        1u32 << self.bits
    }

    /// All elements, in packed order `0..size`.
    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.size()
    }

    pub fn coord(&self, x: u32, i: usize) -> u8 {
        let width = match self.kinds[i] {
            DualKind::Z4 => 3,
            DualKind::Z2 => 1,
        };
        ((x >> self.offsets[i]) & width) as u8
    }

    pub fn encode(&self, coords: &[u8]) -> u32 {
        coords
            .iter()
            .zip(&self.offsets)
            .fold(0u32, |acc, (&c, &off)| acc | ((c as u32) << off))
    }

    pub fn decode(&self, x: u32) -> Vec<u8> {
        (0..self.kinds.len()).map(|i| self.coord(x, i)).collect()
    }

    /// Packed basis element `e_i`.
    pub fn basis(&self, i: usize) -> u32 {
        1 << self.offsets[i]
    }

    /// Coordinatewise addition (carry stays inside each two-bit field).
    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        x ^ y ^ ((x & y & self.low_mask) << 1)
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        x ^ ((x & self.low_mask) << 1)
    }

    pub fn scale(&self, x: u32, n: u8) -> u32 {
        (0..n % 4).fold(0, |acc, _| self.add(acc, x))
    }

    /// Packed mod-2 reduction, as a `Hom(H, Z/2)` bitmask.
    #[inline]
    pub fn reduce(&self, x: u32) -> u32 {
        let mut out = 0u32;
        for (i, kind) in self.kinds.iter().enumerate() {
            if *kind == DualKind::Z4 {
                out |= ((x >> self.offsets[i]) & 1) << i;
            }
        }
        out
    }

    /// Whether `x` has order 4 (some `Z/4` coordinate is odd).
    pub fn has_order_four(&self, x: u32) -> bool {
        x & self.low_mask != 0
    }
}
