//! 2-local stable homotopy `pi^s_{2n}(K(pi, n-1))` in closed form, the
//! Kunneth cross term, and `pi_n(SO(n))`.
//!
//! With `pi = Z^t + Z/2^{i_1} + ... + Z/2^{i_k} + (Z/2)^s` (`i_j >= 2`) and
//! `p = binom(t+k+s, 2)`, the groups for `n >= 4` are
//!
//! | `n mod 4` | group |
//! |---|---|
//! | 0 | `(Z/2)^{2(t+k)+s+p}` |
//! | 1 | `(Z/2)^{t+2k+s+p}` |
//! | 2 | `(Z/4)^{t+k} + (Z/2)^{s+p}` |
//! | 3 | `(Z/2)^{k+s+p}` |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groups::AbelianGroup;

/// `binom(t + k + s, 2)`.
pub fn p_value(h: &AbelianGroup) -> u64 {
    let m = h.hom_rank_z2() as u64;
    m * m.saturating_sub(1) / 2
}

fn require_n(n: i64, min: i64) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange { what: "n", value: n, min });
    }
    Ok(())
}

fn elementary(z4: u64, z2: u64) -> Result<AbelianGroup> {
    let z4 = u32::try_from(z4).map_err(|_| Error::invalid("group too large"))?;
    let z2 = u32::try_from(z2).map_err(|_| Error::invalid("group too large"))?;
    Ok(AbelianGroup::elementary(z4, z2))
}

/// `pi^s_{2n}(K(H, n-1))` localized at 2, for `n >= 4`.
pub fn stable_homotopy_em(n: i64, h: &AbelianGroup) -> Result<AbelianGroup> {
    require_n(n, 4)?;
    let (t, k, s) = (h.free_rank() as u64, h.k() as u64, h.s() as u64);
    let p = p_value(h);
    match n.rem_euclid(4) {
        0 => elementary(0, 2 * (t + k) + s + p),
        1 => elementary(0, t + 2 * k + s + p),
        2 => elementary(t + k, s + p),
        _ => elementary(0, k + s + p),
    }
}

/// A cyclic group: infinite, or of finite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicGroup {
    Infinite,
    Finite(u64),
}

impl CyclicGroup {
    pub fn has_two_part(self) -> bool {
        match self {
            CyclicGroup::Infinite => true,
            CyclicGroup::Finite(m) => m % 2 == 0,
        }
    }
}

impl FromStr for CyclicGroup {
    type Err = Error;

    /// `Z` or `Zm` with `m >= 1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        let rest = t
            .strip_prefix('Z')
            .ok_or_else(|| Error::parse(lead, format!("expected a cyclic group, got '{t}'")))?;
        if rest.is_empty() {
            return Ok(CyclicGroup::Infinite);
        }
        if !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(lead + 1, format!("expected decimal order in '{t}'")));
        }
        match rest.parse::<u64>() {
            Ok(0) | Err(_) => Err(Error::parse(lead + 1, format!("bad order in '{t}'"))),
            Ok(m) => Ok(CyclicGroup::Finite(m)),
        }
    }
}

impl fmt::Display for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicGroup::Infinite => f.write_str("Z"),
            CyclicGroup::Finite(m) => write!(f, "Z{m}"),
        }
    }
}

/// `H_{n+1}(K(G_1, n-1); G_2)` for cyclic `G_1, G_2`, 2-locally: `Z/2` when
/// both have a nontrivial 2-part, else 0.
pub fn kunneth_cross(g1: CyclicGroup, g2: CyclicGroup) -> AbelianGroup {
    if g1.has_two_part() && g2.has_two_part() {
        AbelianGroup::cyclic(1)
    } else {
        AbelianGroup::trivial()
    }
}

/// Checks `G(H_1 + H_2) = G(H_1) + G(H_2) + (Z/2)^{m_1 m_2}` for
/// `G = stable_homotopy_em(n, -)` and `m_i = t_i + k_i + s_i`.
pub fn splitting_check(h1: &AbelianGroup, h2: &AbelianGroup, n: i64) -> Result<bool> {
    require_n(n, 4)?;
    let whole = stable_homotopy_em(n, &h1.direct_sum(h2))?;
    let cross = h1.hom_rank_z2() as u64 * h2.hom_rank_z2() as u64;
    let parts = stable_homotopy_em(n, h1)?
        .direct_sum(&stable_homotopy_em(n, h2)?)
        .direct_sum(&elementary(0, cross)?);
    Ok(whole.is_isomorphic(&parts))
}

/// `pi_n(SO(n))` for `n >= 3`, by `n mod 8`, with `pi_6(SO(6)) = 0`.
pub fn pi_n_so_n(n: i64) -> Result<AbelianGroup> {
    require_n(n, 3)?;
    if n == 6 {
        return Ok(AbelianGroup::trivial());
    }
    Ok(match n % 8 {
        0 => AbelianGroup::elementary(0, 3),
        1 => AbelianGroup::elementary(0, 2),
        2 | 6 => AbelianGroup::cyclic(2),
        3 | 7 => AbelianGroup::free(1),
        4 => AbelianGroup::elementary(0, 2),
        _ => AbelianGroup::cyclic(1),
    })
}
