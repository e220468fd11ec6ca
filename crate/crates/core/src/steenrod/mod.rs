//! The mod-2 Steenrod algebra in the admissible basis.
//!
//! Elements are homogeneous formal sums of admissible monomials
//! `Sq^{i_1} ... Sq^{i_r}` with `i_j >= 2 i_{j+1}`. Arbitrary words are brought
//! to normal form by Adem rewriting (see [`adem`]).

pub mod adem;
mod antipode;
pub mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use antipode::{chi, chi_sq, phi_relation, psi_relation, PsiRelation};
pub use oracle::{polynomial_action, SymmetricPolynomial};

/// A word in the squares `Sq^i`, `i >= 1`. The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqMonomial(Vec<u32>);

impl SqMonomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if let Some(pos) = exponents.iter().position(|&e| e == 0) {
            return Err(Error::invalid(format!(
                "Steenrod square exponents must be >= 1 (found 0 at index {pos})"
            )));
        }
        Ok(SqMonomial(exponents))
    }

    pub(crate) fn from_vec_unchecked(exponents: Vec<u32>) -> Self {
        debug_assert!(exponents.iter().all(|&e| e >= 1));
        SqMonomial(exponents)
    }

    pub fn unit() -> Self {
        SqMonomial(Vec::new())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(&self.0)
    }

    /// Word concatenation; the result is generally not admissible.
    pub fn concat(&self, other: &SqMonomial) -> SqMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SqMonomial(v)
    }
}

pub(crate) fn is_admissible(word: &[u32]) -> bool {
    word.windows(2).all(|w| w[0] >= 2 * w[1])
}

impl fmt::Display for SqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Sq{e}")?;
        }
        Ok(())
    }
}

/// A homogeneous element of the Steenrod algebra, stored as the set of
/// admissible monomials with coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SteenrodElement {
    terms: BTreeSet<SqMonomial>,
}

impl SteenrodElement {
    pub fn zero() -> Self {
        SteenrodElement::default()
    }

    pub fn unit() -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(SqMonomial::unit());
        SteenrodElement { terms }
    }

    /// `Sq^n`; `Sq^0` is the unit.
    pub fn sq(n: u32) -> Self {
        if n == 0 {
            return Self::unit();
        }
        let mut terms = BTreeSet::new();
        terms.insert(SqMonomial(vec![n]));
        SteenrodElement { terms }
    }

    /// Normal form of a single (possibly inadmissible) word.
    pub fn from_monomial(word: &SqMonomial) -> Result<Self> {
        Ok(SteenrodElement { terms: adem::normalize_word(word.exponents())? })
    }

    /// Normal form of a formal sum of words. All words must share one degree.
    pub fn from_words<'a, I>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a SqMonomial>,
    {
        let mut degree = None;
        let mut acc = SteenrodElement::zero();
        for w in words {
            let d = w.degree();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(Error::Inhomogeneous(prev, d)),
                _ => {}
            }
            acc.xor_terms(adem::normalize_word(w.exponents())?);
        }
        Ok(acc)
    }

    /// Builds an element from monomials that are already admissible.
    pub fn from_admissible<I>(monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = SqMonomial>,
    {
        let mut acc = SteenrodElement::zero();
        let mut degree = None;
        for m in monomials {
            if !m.is_admissible() {
                return Err(Error::invalid(format!("{m} is not admissible")));
            }
            let d = m.degree();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(Error::Inhomogeneous(prev, d)),
                _ => {}
            }
            acc.toggle(m);
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().next().map(SqMonomial::degree)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials in descending lexicographic order (the display order).
    pub fn terms(&self) -> impl Iterator<Item = &SqMonomial> {
        self.terms.iter().rev()
    }

    pub fn contains(&self, m: &SqMonomial) -> bool {
        self.terms.contains(m)
    }

    pub fn add(&self, other: &SteenrodElement) -> Result<SteenrodElement> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::Inhomogeneous(a, b));
            }
        }
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        Ok(out)
    }

    /// Product in the Steenrod algebra, in normal form.
    pub fn multiply(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut acc = SteenrodElement::zero();
        for a in &self.terms {
            for b in &other.terms {
                let word = a.concat(b);
                let nf = adem::normalize_word(word.exponents())
                    .expect("products of admissible words are well-formed");
                acc.xor_terms(nf);
            }
        }
        acc
    }

    /// Quotient by the right ideal generated by `Sq^1`: drops every admissible
    /// monomial whose last square is `Sq^1`.
    pub fn reduce_mod_right_sq1(&self) -> SteenrodElement {
        SteenrodElement {
            terms: self
                .terms
                .iter()
                .filter(|m| m.exponents().last() != Some(&1))
                .cloned()
                .collect(),
        }
    }

    pub(crate) fn toggle(&mut self, m: SqMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub(crate) fn xor_terms(&mut self, other: BTreeSet<SqMonomial>) {
        for m in other {
            self.toggle(m);
        }
    }
}

/// Normal form of a formal sum of words (free function form of
/// [`SteenrodElement::from_words`]).
pub fn adem_normalize(words: &[SqMonomial]) -> Result<SteenrodElement> {
    SteenrodElement::from_words(words)
}

pub fn multiply(a: &SteenrodElement, b: &SteenrodElement) -> SteenrodElement {
    a.multiply(b)
}

pub fn reduce_mod_right_sq1(e: &SteenrodElement) -> SteenrodElement {
    e.reduce_mod_right_sq1()
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Parses a raw formal sum of words: `Sq4 Sq2 Sq1`, `Sq5 + Sq4 Sq1`, `0`, `1`.
/// Words are returned as written; nothing is normalized.
pub fn parse_words(text: &str) -> Result<Vec<SqMonomial>> {
    let mut words = Vec::new();
    let mut current: Option<Vec<u32>> = None;
    let mut expect_term = true;
    let mut saw_zero = false;

    for (pos, tok) in tokens(text) {
        if tok == "+" {
            if expect_term {
                return Err(Error::parse(pos, "expected a term before '+'"));
            }
            if let Some(w) = current.take() {
                words.push(SqMonomial(w));
            }
            expect_term = true;
            continue;
        }
        if saw_zero {
            return Err(Error::parse(pos, "'0' must stand alone"));
        }
        if tok == "0" {
            if !words.is_empty() || current.is_some() || !expect_term {
                return Err(Error::parse(pos, "'0' must stand alone"));
            }
            saw_zero = true;
            expect_term = false;
            continue;
        }
        if tok == "1" {
            if current.is_some() {
                return Err(Error::parse(pos, "'1' cannot appear inside a word"));
            }
            current = Some(Vec::new());
            expect_term = false;
            continue;
        }
        let digits = tok
            .strip_prefix("Sq")
            .ok_or_else(|| Error::parse(pos, format!("unexpected token '{tok}'")))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(pos + 2, format!("expected decimal exponent in '{tok}'")));
        }
        let e: u32 = digits
            .parse()
            .map_err(|_| Error::parse(pos + 2, format!("exponent too large in '{tok}'")))?;
        if e == 0 {
            return Err(Error::invalid(format!("exponent 0 at position {pos}")));
        }
        match current.as_mut() {
            Some(w) if w.is_empty() && !expect_term => {
                return Err(Error::parse(pos, "'1' cannot be followed by a square"));
            }
            Some(w) => w.push(e),
            None => current = Some(vec![e]),
        }
        expect_term = false;
    }
    if expect_term {
        if words.is_empty() && current.is_none() {
            return Err(Error::parse(text.len(), "empty expression"));
        }
        return Err(Error::parse(text.len(), "expression ends with '+'"));
    }
    if let Some(w) = current {
        words.push(SqMonomial(w));
    }
    Ok(words)
}

fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b'+' {
            out.push((i, "+"));
            i += 1;
        } else {
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'+' {
                i += 1;
            }
            out.push((start, &text[start..i]));
        }
    }
    out
}

impl FromStr for SteenrodElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SteenrodElement::from_words(&parse_words(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> SteenrodElement {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_renders() {
        assert_eq!(el("Sq4 Sq2 Sq1").to_string(), "Sq4 Sq2 Sq1");
        assert_eq!(el("Sq5 + Sq4 Sq1").to_string(), "Sq5 + Sq4 Sq1");
        assert_eq!(el("Sq4 Sq1 + Sq5").to_string(), "Sq5 + Sq4 Sq1");
        assert_eq!(el("0").to_string(), "0");
        assert_eq!(el("1").to_string(), "1");
        assert!(el("0").is_zero());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("Sq".parse::<SteenrodElement>(), Err(Error::Parse { .. })));
        assert!(matches!("sq2".parse::<SteenrodElement>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("Sq2 +".parse::<SteenrodElement>(), Err(Error::Parse { .. })));
        assert!(matches!("+ Sq2".parse::<SteenrodElement>(), Err(Error::Parse { .. })));
        assert!(matches!("Sq2 Sqx".parse::<SteenrodElement>(), Err(Error::Parse { position: 6, .. })));
        assert!(matches!("".parse::<SteenrodElement>(), Err(Error::Parse { .. })));
        assert!(matches!("Sq0".parse::<SteenrodElement>(), Err(Error::InvalidInput(_))));
        assert!(matches!("Sq2 + Sq3".parse::<SteenrodElement>(), Err(Error::Inhomogeneous(2, 3))));
    }

    #[test]
    fn monomial_rejects_zero_exponent() {
        assert!(SqMonomial::new(vec![2, 0]).is_err());
        assert!(SqMonomial::new(vec![]).unwrap().is_unit());
    }

    #[test]
    fn adding_twice_cancels() {
        let a = el("Sq5 + Sq4 Sq1");
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(a.add(&el("Sq5")).unwrap(), el("Sq4 Sq1"));
        assert!(a.add(&el("Sq3")).is_err());
        assert_eq!(a.add(&SteenrodElement::zero()).unwrap(), a);
    }

    #[test]
    fn normal_forms_of_short_words() {
        assert!(el("Sq1 Sq1").is_zero());
        assert_eq!(el("Sq1 Sq2"), el("Sq3"));
        assert_eq!(el("Sq2 Sq2"), el("Sq3 Sq1"));
        assert_eq!(el("Sq2 Sq3").to_string(), "Sq5 + Sq4 Sq1");
    }

    #[test]
    fn products() {
        assert_eq!(SteenrodElement::unit().multiply(&el("Sq2")), el("Sq2"));
        assert_eq!(el("Sq2").multiply(&el("Sq2")), el("Sq3 Sq1"));
        assert_eq!(el("Sq4").multiply(&el("Sq3")).to_string(), "Sq5 Sq2");
        assert!(el("Sq2").multiply(&SteenrodElement::zero()).is_zero());
    }

    #[test]
    fn right_sq1_quotient() {
        assert!(el("Sq4 Sq1").reduce_mod_right_sq1().is_zero());
        assert_eq!(el("Sq5 + Sq4 Sq1").reduce_mod_right_sq1(), el("Sq5"));
        assert!(SteenrodElement::zero().reduce_mod_right_sq1().is_zero());
        assert_eq!(SteenrodElement::unit().reduce_mod_right_sq1(), SteenrodElement::unit());
    }
}
