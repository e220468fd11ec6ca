//! Finite-type abelian groups, localized at 2.
//!
//! A group is recorded as `Z^t + Z_{2^{e_1}} + ... + Z_{2^{e_r}}` with
//! `e_1 >= ... >= e_r >= 1`. Odd torsion is dropped at parse time and
//! remembered only through a flag.

mod automorphism;
mod dual;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use automorphism::{automorphism_actions, DualAction, AUTOMORPHISM_LIMIT};
pub(crate) use automorphism::search_automorphisms;
pub use dual::{reduce_dual, Coefficient, DualElement, DualKind, Z4Dual};

/// Default cap on `|Hom(H, Z/4)|` for exhaustive operations.
pub const DEFAULT_CAP: u64 = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    free_rank: u32,
    two_exponents: Vec<u32>,
    odd_part_dropped: bool,
}

/// Order of one cyclic summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandOrder {
    Free,
    /// `Z/2^e`
    TwoPower(u32),
}

impl AbelianGroup {
    pub fn new(free_rank: u32, mut two_exponents: Vec<u32>) -> Result<Self> {
        if two_exponents.iter().any(|&e| e == 0) {
            return Err(Error::invalid("torsion exponents must be >= 1"));
        }
        two_exponents.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AbelianGroup { free_rank, two_exponents, odd_part_dropped: false })
    }

    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, two_exponents: Vec::new(), odd_part_dropped: false }
    }

    pub fn free(rank: u32) -> Self {
        AbelianGroup { free_rank: rank, two_exponents: Vec::new(), odd_part_dropped: false }
    }

    /// `Z/2^e`.
    pub fn cyclic(e: u32) -> Self {
        AbelianGroup::new(0, vec![e]).expect("exponent must be >= 1")
    }

    /// `(Z/2)^a + (Z/4)^b` in normalized form.
    pub fn elementary(z4: u32, z2: u32) -> Self {
        let mut ex = vec![2; z4 as usize];
        ex.extend(std::iter::repeat(1).take(z2 as usize));
        AbelianGroup { free_rank: 0, two_exponents: ex, odd_part_dropped: false }
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn two_exponents(&self) -> &[u32] {
        &self.two_exponents
    }

    pub fn odd_part_dropped(&self) -> bool {
        self.odd_part_dropped
    }

    /// Number of torsion summands of order at least 4.
    pub fn k(&self) -> u32 {
        self.two_exponents.iter().filter(|&&e| e >= 2).count() as u32
    }

    /// Number of `Z/2` summands.
    pub fn s(&self) -> u32 {
        self.two_exponents.iter().filter(|&&e| e == 1).count() as u32
    }

    /// Largest torsion exponent, 0 for torsion-free groups.
    pub fn i_max(&self) -> u32 {
        self.two_exponents.first().copied().unwrap_or(0)
    }

    /// Number of 2-torsion summands.
    pub fn torsion_rank(&self) -> u32 {
        self.two_exponents.len() as u32
    }

    /// Number of cyclic summands, i.e. generators of either dual.
    pub fn summand_count(&self) -> usize {
        self.free_rank as usize + self.two_exponents.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.two_exponents.is_empty()
    }

    /// Summand orders in dual coordinate order: free summands first, then
    /// torsion by descending exponent.
    pub fn summand_orders(&self) -> Vec<SummandOrder> {
        std::iter::repeat(SummandOrder::Free)
            .take(self.free_rank as usize)
            .chain(self.two_exponents.iter().map(|&e| SummandOrder::TwoPower(e)))
            .collect()
    }

    /// Same group with the odd-part flag cleared; used for comparisons of
    /// 2-local isomorphism type.
    pub fn two_local(&self) -> AbelianGroup {
        AbelianGroup { odd_part_dropped: false, ..self.clone() }
    }

    pub fn is_isomorphic(&self, other: &AbelianGroup) -> bool {
        self.free_rank == other.free_rank && self.two_exponents == other.two_exponents
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut ex = self.two_exponents.clone();
        ex.extend_from_slice(&other.two_exponents);
        ex.sort_unstable_by(|a, b| b.cmp(a));
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            two_exponents: ex,
            odd_part_dropped: self.odd_part_dropped || other.odd_part_dropped,
        }
    }

    /// `log_2 |G|` for a finite group; `None` if the group has a free part.
    pub fn log2_order(&self) -> Option<u32> {
        (self.free_rank == 0).then(|| self.two_exponents.iter().sum())
    }

    /// `log_2 |Hom(H, Z/4)|`.
    pub fn log2_hom_z4_order(&self) -> u32 {
        let (z4, z2) = self.hom_z4_structure();
        2 * z4 + z2
    }

    /// `|Hom(H, Z/4)|`, saturating.
    pub fn hom_z4_order(&self) -> u64 {
        let bits = self.log2_hom_z4_order();
        if bits >= 64 {
            u64::MAX
        } else {
            1u64 << bits
        }
    }

    /// `F_2`-rank of `Hom(H, Z/2)`: `t + k + s`.
    pub fn hom_rank_z2(&self) -> u32 {
        self.free_rank + self.torsion_rank()
    }

    /// `(number of Z/4, number of Z/2)` summands of `Hom(H, Z/4)`: free and
    /// order-at-least-4 summands give `Z/4`, order-2 summands give `Z/2`.
    pub fn hom_z4_structure(&self) -> (u32, u32) {
        (self.free_rank + self.k(), self.s())
    }

    /// Kinds of the `Hom(H, Z/4)` coordinates.
    pub fn dual_kinds(&self) -> Vec<DualKind> {
        self.summand_orders()
            .into_iter()
            .map(|o| match o {
                SummandOrder::TwoPower(1) => DualKind::Z2,
                _ => DualKind::Z4,
            })
            .collect()
    }

    /// Errors with a size-limit error when `|Hom(H, Z/4)|` exceeds `cap`.
    pub fn check_cap(&self, cap: u64) -> Result<()> {
        let size = self.hom_z4_order();
        if size > cap {
            return Err(Error::SizeLimit { what: "|Hom(H, Z/4)|", required: size, cap });
        }
        Ok(())
    }
}

pub fn hom_rank_z2(h: &AbelianGroup) -> u32 {
    h.hom_rank_z2()
}

pub fn hom_z4_structure(h: &AbelianGroup) -> (u32, u32) {
    h.hom_z4_structure()
}

pub fn parse_group(text: &str) -> Result<AbelianGroup> {
    text.parse()
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            t => parts.push(format!("Z^{t}")),
        }
        let mut i = 0;
        while i < self.two_exponents.len() {
            let e = self.two_exponents[i];
            let run = self.two_exponents[i..].iter().take_while(|&&x| x == e).count();
            let order = 1u128 << e;
            if run == 1 {
                parts.push(format!("Z{order}"));
            } else {
                parts.push(format!("Z{order}^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    /// Grammar: `Z^t + Z2^a + Z4^b + ...`, terms in any order, `Z` alone is
    /// `Z^1`, `Zm` with odd part in `m` keeps only the 2-part, `0` is the
    /// trivial group.
    fn from_str(text: &str) -> Result<Self> {
        let mut free = 0u32;
        let mut exps = Vec::new();
        let mut odd = false;
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(0, "empty group expression"));
        }
        if trimmed == "0" {
            return Ok(AbelianGroup::trivial());
        }
        let mut offset = 0usize;
        for raw in text.split('+') {
            let lead = raw.len() - raw.trim_start().len();
            let term = raw.trim();
            let pos = offset + lead;
            offset += raw.len() + 1;
            if term.is_empty() {
                return Err(Error::parse(pos, "missing term"));
            }
            let rest = term
                .strip_prefix('Z')
                .ok_or_else(|| Error::parse(pos, format!("expected 'Z' in '{term}'")))?;
            let (order_txt, power_txt) = match rest.split_once('^') {
                Some((o, p)) => (o, Some(p)),
                None => (rest, None),
            };
            let power: u32 = match power_txt {
                None => 1,
                Some(p) => {
                    let ppos = pos + 1 + order_txt.len() + 1;
                    if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::parse(ppos, format!("expected decimal multiplicity in '{term}'")));
                    }
                    p.parse().map_err(|_| Error::parse(ppos, "multiplicity too large"))?
                }
            };
            if order_txt.is_empty() {
                free = free
                    .checked_add(power)
                    .ok_or_else(|| Error::parse(pos, "free rank too large"))?;
                continue;
            }
            if !order_txt.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(pos + 1, format!("expected decimal order in '{term}'")));
            }
            let order: u128 = order_txt
                .parse()
                .map_err(|_| Error::parse(pos + 1, "order too large"))?;
            if order == 0 {
                return Err(Error::parse(pos + 1, "cyclic order must be positive"));
            }
            let e = order.trailing_zeros();
            if order >> e != 1 {
                odd = true;
            }
            if e > 0 {
                exps.extend(std::iter::repeat(e).take(power as usize));
            }
        }
        let mut g = AbelianGroup::new(free, exps)?;
        g.odd_part_dropped = odd;
        Ok(g)
    }
}
