//! Exhaustive enumeration of freely reduced words, sharded by prefix.
//!
//! Order is length first, then lexicographic with letters ranked
//! `a < A < b < B` (generic generator names in alphabet order). Shards
//! are prefixes of length up to 3; results are concatenated in prefix
//! order, so output does not depend on scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::words::{Letter, Word};

use super::identity_oracle;

/// Default cap on the number of words an enumeration may visit.
pub const DEFAULT_WORD_BUDGET: u64 = 50_000_000;

const SHARD_PREFIX: usize = 3;

/// The four letters over a two-generator alphabet, in enumeration order.
pub fn letter_order(alphabet: [char; 2]) -> [Letter; 4] {
    let l = |g, positive| Letter::new(g, positive).expect("lowercase generator");
    [l(alphabet[0], true), l(alphabet[0], false), l(alphabet[1], true), l(alphabet[1], false)]
}

/// Number of freely reduced words of length `<= max_len` over `rank`
/// generators and their inverses, saturating.
pub fn reduced_word_count(rank: u64, max_len: usize) -> u64 {
    if rank == 0 {
        return 1;
    }
    let (mut total, mut level) = (1u64, 2 * rank);
    for _ in 0..max_len {
        total = total.saturating_add(level);
        level = level.saturating_mul(2 * rank - 1);
    }
    total
}

fn extend<T>(buf: &mut Vec<Letter>, len: usize, letters: &[Letter; 4], visit: &impl Fn(&Word) -> Option<T>, out: &mut Vec<T>) {
    if buf.len() == len {
        if let Some(t) = visit(&Word::from_letters(buf.clone())) {
            out.push(t);
        }
        return;
    }
    for &l in letters {
        if buf.last().is_some_and(|&p| p.is_inverse_of(l)) {
            continue;
        }
        buf.push(l);
        extend(buf, len, letters, visit, out);
        buf.pop();
    }
}

fn prefixes(len: usize, letters: &[Letter; 4]) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * 3);
        for p in &out {
            for &l in letters {
                if !p.last().is_some_and(|&q: &Letter| q.is_inverse_of(l)) {
                    let mut q = p.clone();
                    q.push(l);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn check_budget(max_len: usize, budget: u64) -> Result<u64> {
    let count = reduced_word_count(2, max_len);
    if count > budget {
        return Err(Error::Budget(format!(
            "{count} reduced words of length <= {max_len} exceed the budget of {budget}; lower the length cap or raise the budget"
        )));
    }
    Ok(count)
}

/// Calls `visit` on every freely reduced word of length `<= max_len`
/// over `alphabet`, in parallel, and returns the `Some` results in
/// enumeration order. Refuses when the word count exceeds `budget`.
pub fn scan_reduced_words<T, F>(alphabet: [char; 2], max_len: usize, budget: u64, visit: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Word) -> Option<T> + Sync,
{
    check_budget(max_len, budget)?;
    let letters = letter_order(alphabet);
    let mut out = Vec::new();
    for len in 0..=max_len {
        let shards = prefixes(len.min(SHARD_PREFIX), &letters);
        let found: Vec<Vec<T>> = shards
            .into_par_iter()
            .map(|mut prefix| {
                let mut found = Vec::new();
                extend(&mut prefix, len, &letters, &visit, &mut found);
                found
            })
            .collect();
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

/// Every freely reduced word of length `<= max_len` that is the identity
/// according to the family's primary solver.
pub fn enumerate_identity_words(family: FamilyId, max_len: usize) -> Result<Vec<Word>> {
    enumerate_identity_words_with_budget(family, max_len, DEFAULT_WORD_BUDGET)
}

pub fn enumerate_identity_words_with_budget(family: FamilyId, max_len: usize, budget: u64) -> Result<Vec<Word>> {
    check_budget(max_len, budget)?;
    let oracle = identity_oracle(family)?;
    scan_reduced_words(family.alphabet(), max_len, budget, |w| oracle(w).then(|| w.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn counts_match_the_closed_form() {
        for len in 0..=7 {
            let all = scan_reduced_words(['a', 'b'], len, DEFAULT_WORD_BUDGET, |w| Some(w.clone())).unwrap();
            assert_eq!(all.len() as u64, reduced_word_count(2, len));
            assert_eq!(reduced_word_count(2, len), 2 * 3u64.pow(len as u32) - 1);
            assert!(all.iter().all(Word::is_freely_reduced));
        }
    }

    #[test]
    fn order_is_length_lexicographic() {
        let all = scan_reduced_words(['a', 'b'], 2, DEFAULT_WORD_BUDGET, |w| Some(w.to_string())).unwrap();
        assert_eq!(&all[..6], &["", "a", "A", "b", "B", "aa"]);
        assert_eq!(all[5..9], ["aa", "ab", "aB", "AA"]);
    }

    #[test]
    fn identity_words_in_tor23() {
        let f = FamilyId::tor(2, 3).unwrap();
        assert_eq!(enumerate_identity_words(f, 4).unwrap(), vec![Word::empty()]);
        let five = enumerate_identity_words(f, 5).unwrap();
        for s in ["aaBBB", "BBBaa", "bbbAA", "AAbbb", "aBBBa", "BaaBB"] {
            assert!(five.contains(&parse_word(s).unwrap()), "{s}");
        }
        assert_eq!(enumerate_identity_words(f, 0).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let err = enumerate_identity_words_with_budget(FamilyId::tor(2, 3).unwrap(), 20, 1000).unwrap_err();
        let Error::Budget(msg) = err else { panic!() };
        assert!(msg.contains(&reduced_word_count(2, 20).to_string()));
    }
}
