use std::cell::RefCell;
use std::collections::HashMap;

use super::{SqMonomial, SteenrodElement};
use crate::error::{Error, Result};

thread_local! {
    static CHI_SQ: RefCell<HashMap<u32, SteenrodElement>> = RefCell::new(HashMap::new());
}

/// `chi(Sq^n)` from the antipode recursion
/// `sum_{i+j=n} Sq^i chi(Sq^j) = 0` for `n > 0`, `chi(1) = 1`.
pub fn chi_sq(n: u32) -> SteenrodElement {
    if n == 0 {
        return SteenrodElement::unit();
    }
    if let Some(hit) = CHI_SQ.with(|c| c.borrow().get(&n).cloned()) {
        return hit;
    }
    // chi(Sq^n) = sum_{i=1}^{n} Sq^i chi(Sq^{n-i})
    let mut acc = SteenrodElement::zero();
    for i in 1..=n {
        let term = SteenrodElement::sq(i).multiply(&chi_sq(n - i));
        for m in term.terms.into_iter() {
            acc.toggle(m);
        }
    }
    CHI_SQ.with(|c| c.borrow_mut().insert(n, acc.clone()));
    acc
}

fn chi_monomial(m: &SqMonomial) -> SteenrodElement {
    m.exponents()
        .iter()
        .rev()
        .fold(SteenrodElement::unit(), |acc, &e| acc.multiply(&chi_sq(e)))
}

/// The antipode, extended as an anti-homomorphism.
pub fn chi(e: &SteenrodElement) -> SteenrodElement {
    let mut acc = SteenrodElement::zero();
    for m in &e.terms {
        for t in chi_monomial(m).terms {
            acc.toggle(t);
        }
    }
    acc
}

fn check_relation_index(n: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::OutOfRange { what: "n", value: n, min: 1 });
    }
    if n % 4 == 3 {
        return Err(Error::NoRelation(n));
    }
    u32::try_from(n).map_err(|_| Error::invalid(format!("n = {n} is too large")))
}

fn sum(parts: &[SteenrodElement]) -> SteenrodElement {
    let mut acc = SteenrodElement::zero();
    for p in parts {
        for t in p.terms.iter() {
            acc.toggle(t.clone());
        }
    }
    acc
}

/// Left-hand side of the orientability relation for `n` in normal form:
///
/// * `n = 2 mod 4`: `chi(Sq^n) Sq^3 + chi(Sq^{n+2}) Sq^1 + Sq^1 chi(Sq^{n+2})`
/// * `n = 0 mod 4`: `chi(Sq^n) Sq^3 + Sq^1 chi(Sq^{n+2})`
/// * `n = 1 mod 4`: `chi(Sq^{n+1}) Sq^2 + Sq^1 chi(Sq^{n+2})`
///
/// The result is returned as computed, zero or not.
pub fn phi_relation(n: i64) -> Result<SteenrodElement> {
    let n = check_relation_index(n)?;
    let sq = SteenrodElement::sq;
    let parts = match n % 4 {
        2 => vec![
            chi_sq(n).multiply(&sq(3)),
            chi_sq(n + 2).multiply(&sq(1)),
            sq(1).multiply(&chi_sq(n + 2)),
        ],
        0 => vec![chi_sq(n).multiply(&sq(3)), sq(1).multiply(&chi_sq(n + 2))],
        1 => vec![chi_sq(n + 1).multiply(&sq(2)), sq(1).multiply(&chi_sq(n + 2))],
        _ => unreachable!(),
    };
    Ok(sum(&parts))
}

/// A relation evaluated in the algebra and in the quotient by the right
/// ideal generated by `Sq^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiRelation {
    pub raw: SteenrodElement,
    pub reduced: SteenrodElement,
}

/// The companion relation family for `n`:
///
/// * `n = 2 mod 4`: `Sq^2 Sq^1 Sq^n + Sq^1 Sq^{n+2}`
/// * `n = 0 mod 4`: `Sq^2 Sq^1 Sq^n`
/// * `n = 1 mod 4`: `Sq^2 Sq^{n+1}`
pub fn psi_relation(n: i64) -> Result<PsiRelation> {
    let n = check_relation_index(n)?;
    let word = |v: Vec<u32>| SqMonomial::from_vec_unchecked(v);
    let words = match n % 4 {
        2 => vec![word(vec![2, 1, n]), word(vec![1, n + 2])],
        0 => vec![word(vec![2, 1, n])],
        1 => vec![word(vec![2, n + 1])],
        _ => unreachable!(),
    };
    let raw = SteenrodElement::from_words(&words)?;
    let reduced = raw.reduce_mod_right_sq1();
    Ok(PsiRelation { raw, reduced })
}
