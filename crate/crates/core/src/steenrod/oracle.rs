//! Action of the Steenrod algebra on `F_2[x_1, ..., x_m]`, evaluated on the
//! product `x_1 x_2 ... x_m` of degree-one classes.
//!
//! Uses only the Cartan formula and `Sq(x) = x + x^2`, never an Adem relation,
//! so it is an independent check on [`super::adem`]. Starting from
//! `x_1 ... x_m`, every variable carries an exponent `2^j` (since
//! `Sq^k x^{2^j}` is `x^{2^{j+1}}` for `k = 2^j`, `x^{2^j}` for `k = 0`, and
//! zero otherwise), and the result is symmetric in the variables. A
//! polynomial is therefore stored as the set of orbits (level count vectors)
//! whose monomial symmetric functions appear with coefficient 1.

use std::collections::BTreeSet;
use std::fmt;

use super::SteenrodElement;
use crate::error::{Error, Result};

/// A symmetric polynomial over `F_2` in `vars` variables whose monomials have
/// power-of-two exponents. `orbits` holds count vectors: entry `j` is the
/// number of variables raised to the power `2^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricPolynomial {
    vars: u32,
    orbits: BTreeSet<Vec<u32>>,
}

impl SymmetricPolynomial {
    /// `x_1 x_2 ... x_m`.
    pub fn product_of_generators(vars: u32) -> Self {
        let mut orbits = BTreeSet::new();
        orbits.insert(vec![vars]);
        SymmetricPolynomial { vars, orbits }
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.orbits.iter()
    }

    /// Number of monomials in the expanded polynomial.
    pub fn monomial_count(&self) -> u128 {
        self.orbits.iter().map(|o| multinomial(o)).sum()
    }

    /// Expanded monomials as exponent vectors, in descending lexicographic
    /// order. `None` if there are more than `limit`.
    pub fn monomials(&self, limit: usize) -> Option<Vec<Vec<u32>>> {
        if self.monomial_count() > limit as u128 {
            return None;
        }
        let mut out = Vec::new();
        for orbit in &self.orbits {
            let mut levels = orbit.clone();
            let mut current = Vec::with_capacity(self.vars as usize);
            arrangements(&mut levels, &mut current, &mut out);
        }
        out.sort_by(|a, b| b.cmp(a));
        Some(out)
    }

    fn toggle(&mut self, orbit: Vec<u32>) {
        if !self.orbits.remove(&orbit) {
            self.orbits.insert(orbit);
        }
    }

    /// Applies `Sq^k` through the Cartan formula.
    pub fn apply_sq(&self, k: u32) -> SymmetricPolynomial {
        let mut out = SymmetricPolynomial { vars: self.vars, orbits: BTreeSet::new() };
        if k == 0 {
            return self.clone();
        }
        for source in &self.orbits {
            let mut promote = vec![0u32; source.len()];
            distribute(source, k, 0, &mut promote, &mut |d| {
                if let Some(target) = promoted_orbit(source, d) {
                    out.toggle(target);
                }
            });
        }
        out
    }
}

/// Enumerates `d` with `d_j <= source_j` and `sum_j d_j 2^j = remaining`.
fn distribute(
    source: &[u32],
    remaining: u32,
    level: usize,
    d: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if level == source.len() {
        if remaining == 0 {
            visit(d);
        }
        return;
    }
    let weight = 1u64 << level;
    // Higher levels contribute multiples of 2 * weight, so the residue of
    // `remaining` modulo 2 * weight must come from this level.
    let max_here = source[level].min((remaining as u64 / weight) as u32);
    for count in 0..=max_here {
        let used = count as u64 * weight;
        let rest = remaining as u64 - used;
        if rest % (2 * weight) != 0 && level + 1 < source.len() {
            continue;
        }
        d[level] = count;
        distribute(source, rest as u32, level + 1, d, visit);
    }
    d[level] = 0;
}

/// Moves `d_j` variables from level `j` to `j + 1`. Returns the target orbit
/// when the coefficient of a fixed monomial of that orbit is odd: that
/// coefficient is `prod_j binom(T_{j+1}, d_j)`, counting which of the
/// target's level-`j+1` variables were promoted.
fn promoted_orbit(source: &[u32], d: &[u32]) -> Option<Vec<u32>> {
    let mut target = source.to_vec();
    target.push(0);
    for (j, &dj) in d.iter().enumerate() {
        target[j] -= dj;
        target[j + 1] += dj;
    }
    for (j, &dj) in d.iter().enumerate() {
        let n = target[j + 1];
        if (n & dj) != dj {
            return None;
        }
    }
    while target.len() > 1 && *target.last().unwrap() == 0 {
        target.pop();
    }
    Some(target)
}

fn multinomial(counts: &[u32]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &c in counts {
        for i in 1..=c as u128 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

fn arrangements(levels: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if levels.iter().all(|&c| c == 0) {
        out.push(current.clone());
        return;
    }
    for j in 0..levels.len() {
        if levels[j] > 0 {
            levels[j] -= 1;
            current.push(1u32 << j);
            arrangements(levels, current, out);
            current.pop();
            levels[j] += 1;
        }
    }
}

/// Applies `e` to `x_1 ... x_m`. Squares act right to left.
pub fn polynomial_action(e: &SteenrodElement, vars: i64) -> Result<SymmetricPolynomial> {
    if vars <= 0 {
        return Err(Error::OutOfRange { what: "number of variables", value: vars, min: 1 });
    }
    let vars = u32::try_from(vars).map_err(|_| Error::invalid("too many variables"))?;
    let start = SymmetricPolynomial::product_of_generators(vars);
    let mut out = SymmetricPolynomial { vars, orbits: BTreeSet::new() };
    for m in e.terms() {
        let image = m.exponents().iter().rev().fold(start.clone(), |p, &k| p.apply_sq(k));
        for o in image.orbits {
            out.toggle(o);
        }
    }
    Ok(out)
}

/// Action of a raw word (no normalization) on `x_1 ... x_m`.
pub fn word_action(word: &[u32], vars: u32) -> SymmetricPolynomial {
    word.iter()
        .rev()
        .fold(SymmetricPolynomial::product_of_generators(vars), |p, &k| p.apply_sq(k))
}

const EXPAND_LIMIT: usize = 64;

impl fmt::Display for SymmetricPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbits.is_empty() {
            return f.write_str("0");
        }
        if let Some(monos) = self.monomials(EXPAND_LIMIT) {
            for (i, mono) in monos.iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                let mut first = true;
                for (v, &e) in mono.iter().enumerate() {
                    if !first {
                        f.write_str(" ")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "x{}", v + 1)?;
                    } else {
                        write!(f, "x{}^{}", v + 1, e)?;
                    }
                }
            }
            return Ok(());
        }
        // Too large to expand: monomial symmetric functions m[exponent^count ...].
        for (i, orbit) in self.orbits.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str("m[")?;
            let mut first = true;
            for (j, &c) in orbit.iter().enumerate().rev() {
                if c == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}^{}", 1u64 << j, c)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn el(s: &str) -> SteenrodElement {
        s.parse().unwrap()
    }

    /// Fully expanded polynomial action: map from exponent vector to
    /// coefficient, computed monomial by monomial from the Cartan formula
    /// with general binomial coefficients.
    fn brute_action(word: &[u32], vars: usize) -> BTreeMap<Vec<u32>, u8> {
        fn binom_odd(n: u32, k: u32) -> bool {
            k <= n && (n & k) == k
        }
        fn sq_mono(k: u32, mono: &[u32], out: &mut BTreeMap<Vec<u32>, u8>) {
            fn go(i: usize, k: u32, mono: &[u32], cur: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, u8>) {
                if i == mono.len() {
                    if k == 0 {
                        *out.entry(cur.clone()).or_insert(0) ^= 1;
                    }
                    return;
                }
                for ki in 0..=k.min(mono[i]) {
                    if binom_odd(mono[i], ki) {
                        cur.push(mono[i] + ki);
                        go(i + 1, k - ki, mono, cur, out);
                        cur.pop();
                    }
                }
            }
            go(0, k, mono, &mut Vec::new(), out);
        }
        let mut poly: BTreeMap<Vec<u32>, u8> = BTreeMap::new();
        poly.insert(vec![1; vars], 1);
        for &k in word.iter().rev() {
            let mut next = BTreeMap::new();
            for (mono, c) in &poly {
                if *c == 1 {
                    sq_mono(k, mono, &mut next);
                }
            }
            poly = next.into_iter().filter(|(_, c)| *c == 1).collect();
        }
        poly
    }

    #[test]
    fn degree_one_rules() {
        let p = polynomial_action(&el("Sq1"), 1).unwrap();
        assert_eq!(p.to_string(), "x1^2");
        let p = polynomial_action(&el("Sq1"), 2).unwrap();
        assert_eq!(p.to_string(), "x1^2 x2 + x1 x2^2");
        let p = polynomial_action(&el("Sq2"), 2).unwrap();
        assert_eq!(p.to_string(), "x1^2 x2^2");
        let p = polynomial_action(&el("Sq3"), 2).unwrap();
        assert!(p.is_zero());
        assert_eq!(polynomial_action(&SteenrodElement::unit(), 3).unwrap().to_string(), "x1 x2 x3");
    }

    #[test]
    fn rejects_nonpositive_vars() {
        assert!(polynomial_action(&el("Sq1"), 0).is_err());
        assert!(polynomial_action(&el("Sq1"), -3).is_err());
    }

    #[test]
    fn matches_expanded_cartan_formula() {
        let words: &[&[u32]] = &[&[1], &[2], &[1, 1], &[2, 2], &[1, 2], &[2, 3], &[3, 2], &[2, 1, 2], &[4, 1], &[1, 4]];
        for word in words {
            for vars in 1..=6u32 {
                let expected = brute_action(word, vars as usize);
                let fast = word_action(word, vars);
                let got: BTreeMap<Vec<u32>, u8> = fast
                    .monomials(100_000)
                    .unwrap()
                    .into_iter()
                    .map(|m| (m, 1))
                    .collect();
                assert_eq!(got, expected, "word {word:?} vars {vars}");
            }
        }
    }

    #[test]
    fn large_outputs_use_orbit_notation() {
        let p = word_action(&[4], 8);
        assert_eq!(p.monomial_count(), 70);
        assert_eq!(p.to_string(), "m[2^4 1^4]");
    }
}
