//! Adem rewriting to the admissible basis.
//!
//! For `a < 2b`,
//! `Sq^a Sq^b = sum_{c=0}^{floor(a/2)} binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c`.
//! Words are rewritten at their leftmost inadmissible pair until admissible.
//! Every rewrite strictly lowers the moment `sum_j j * i_j`, so the process
//! terminates; a step budget guards the loop anyway.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use super::{is_admissible, SqMonomial};
use crate::error::{Error, Result};

/// `binom(n, k) mod 2` by Lucas' theorem. Negative or out-of-range
/// arguments give 0.
pub fn binom_mod2(n: i64, k: i64) -> bool {
    if n < 0 || k < 0 || k > n {
        return false;
    }
    (n & k) == k
}

/// Right-hand side of the Adem relation for `Sq^a Sq^b` with `0 < a < 2b`,
/// as pairs `(a + b - c, c)`; `c = 0` stands for the single square
/// `Sq^{a+b}`.
pub fn adem_terms(a: u32, b: u32) -> Vec<(u32, u32)> {
    debug_assert!(a >= 1 && a < 2 * b);
    (0..=a / 2)
        .filter(|&c| binom_mod2(b as i64 - c as i64 - 1, a as i64 - 2 * c as i64))
        .map(|c| (a + b - c, c))
        .collect()
}

type NormalForm = Rc<BTreeSet<SqMonomial>>;

#[derive(Default)]
struct Memo {
    pairs: HashMap<(u32, u32), Rc<Vec<(u32, u32)>>>,
    words: HashMap<Vec<u32>, NormalForm>,
}

thread_local! {
    static MEMO: RefCell<Memo> = RefCell::new(Memo::default());
}

fn pair_terms(a: u32, b: u32) -> Rc<Vec<(u32, u32)>> {
    MEMO.with(|m| {
        m.borrow_mut()
            .pairs
            .entry((a, b))
            .or_insert_with(|| Rc::new(adem_terms(a, b)))
            .clone()
    })
}

fn budget_for(degree: u32) -> u64 {
    // 4^degree, saturating, never below a small floor.
    let exp = 2 * degree.min(31);
    (1u64 << exp).max(64)
}

/// Admissible normal form of one word.
pub(crate) fn normalize_word(word: &[u32]) -> Result<BTreeSet<SqMonomial>> {
    if word.iter().any(|&e| e == 0) {
        return Err(Error::invalid("Steenrod square exponents must be >= 1"));
    }
    let degree: u32 = word.iter().sum();
    let mut budget = budget_for(degree);
    let total = budget;
    let nf = normalize_rec(word, &mut budget).map_err(|_| Error::RewriteBudget(total))?;
    Ok((*nf).clone())
}

fn normalize_rec(word: &[u32], budget: &mut u64) -> std::result::Result<NormalForm, ()> {
    if let Some(hit) = MEMO.with(|m| m.borrow().words.get(word).cloned()) {
        return Ok(hit);
    }
    let nf = match word.windows(2).position(|w| w[0] < 2 * w[1]) {
        None => {
            debug_assert!(is_admissible(word));
            let mut s = BTreeSet::new();
            s.insert(SqMonomial::from_vec_unchecked(word.to_vec()));
            s
        }
        Some(i) => {
            if *budget == 0 {
                return Err(());
            }
            *budget -= 1;
            let (a, b) = (word[i], word[i + 1]);
            let mut acc = BTreeSet::new();
            for &(hi, lo) in pair_terms(a, b).iter() {
                let mut next = Vec::with_capacity(word.len());
                next.extend_from_slice(&word[..i]);
                next.push(hi);
                if lo > 0 {
                    next.push(lo);
                }
                next.extend_from_slice(&word[i + 2..]);
                for m in normalize_rec(&next, budget)?.iter() {
                    if !acc.remove(m) {
                        acc.insert(m.clone());
                    }
                }
            }
            acc
        }
    };
    let nf = Rc::new(nf);
    MEMO.with(|m| m.borrow_mut().words.insert(word.to_vec(), nf.clone()));
    Ok(nf)
}

/// All admissible monomials of the given degree, in ascending
/// lexicographic order. Degree 0 gives the unit.
pub fn admissible_basis(degree: u32) -> Vec<SqMonomial> {
    fn go(remaining: u32, max_first: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        // The next square i needs i <= max_first, and the rest (degree
        // remaining - i) must fit below i/2, which is possible iff
        // remaining - i <= i - 1, i.e. i >= (remaining + 1) / 2.
        let lo = (remaining + 1) / 2;
        let hi = remaining.min(max_first);
        for i in lo..=hi {
            prefix.push(i);
            go(remaining - i, i / 2, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(degree, degree, &mut Vec::new(), &mut raw);
    let mut out: Vec<SqMonomial> = raw.into_iter().map(SqMonomial::from_vec_unchecked).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas() {
        assert!(!binom_mod2(0, 1));
        assert!(binom_mod2(1, 1));
        assert!(binom_mod2(0, 0));
        assert!(!binom_mod2(2, 1));
        assert!(binom_mod2(3, 1));
        assert!(!binom_mod2(-1, 0));
        for n in 0..40i64 {
            let mut row = vec![1u64];
            for k in 1..=n as usize {
                let prev = row[k - 1];
                row.push(prev * (n as u64 + 1 - k as u64) / k as u64);
            }
            for k in 0..=n {
                assert_eq!(binom_mod2(n, k), row[k as usize] % 2 == 1, "C({n},{k})");
            }
        }
    }

    #[test]
    fn adem_pairs() {
        // Sq1 Sq1 = 0, Sq1 Sq2 = Sq3, Sq2 Sq2 = Sq3 Sq1, Sq2 Sq3 = Sq5 + Sq4 Sq1.
        assert!(adem_terms(1, 1).is_empty());
        assert_eq!(adem_terms(1, 2), vec![(3, 0)]);
        assert_eq!(adem_terms(2, 2), vec![(3, 1)]);
        assert_eq!(adem_terms(2, 3), vec![(5, 0), (4, 1)]);
        assert_eq!(adem_terms(4, 3), vec![(5, 2)]);
    }

    #[test]
    fn basis_is_admissible_and_complete() {
        // Small admissible counts: degrees 0..=8.
        let counts: Vec<usize> = (0..=8).map(|d| admissible_basis(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 2, 3, 4, 4]);
        for d in 0..=20 {
            for m in admissible_basis(d) {
                assert!(m.is_admissible());
                assert_eq!(m.degree(), d);
            }
        }
    }

    #[test]
    fn budget_floor() {
        assert_eq!(budget_for(1), 64);
        assert_eq!(budget_for(10), 1 << 20);
        assert_eq!(budget_for(40), 1 << 62);
    }
}
