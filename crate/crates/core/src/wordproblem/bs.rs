//! `BS(k, k) = ⟨a, t | a^k t = t a^k⟩`.
//!
//! Two deciders. Britton reduction treats the group as an HNN extension
//! of `⟨a⟩` whose stable letter `t` centralizes `a^k`. The amalgam normal
//! form views the same group as `⟨a⟩ ∗_{a^k = c} ⟨c, t⟩`, with `c`
//! central, and is used as the cross-check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::words::{free_reduce, Letter, Syllable, Word};

use super::{Method, Verdict, Witness};

fn checked(w: &Word, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("BS(k,k) needs k >= 1".into()));
    }
    FamilyId::bs(k, k)?.check_word(w)
}

/// One pinch removal: the pinch `t^±1 a^(qk) t^∓1` found at `position`
/// and the freely reduced word after deleting its `t` letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BrittonStep {
    pub position: usize,
    pub pinch: Word,
    pub result: Word,
}

/// Leftmost pinch: `(start, end)` of `t^ε a^j t^-ε` with `k | j`.
fn leftmost_pinch(letters: &[Letter], k: i64) -> Option<(usize, usize)> {
    let mut last_t: Option<usize> = None;
    for (i, l) in letters.iter().enumerate() {
        if l.generator() != 't' {
            continue;
        }
        if let Some(s) = last_t {
            if letters[s].is_inverse_of(*l) {
                let between: i64 = letters[s + 1..i].iter().map(|x| x.sign() as i64).sum();
                if between % k == 0 {
                    return Some((s, i));
                }
            }
        }
        last_t = Some(i);
    }
    None
}

/// Britton reduction. Identity iff all `t` letters pinch away and the
/// remaining power of `a` is zero.
pub fn bs_is_identity(w: &Word, k: u32) -> Result<Verdict> {
    checked(w, k)?;
    let mut current = free_reduce(w);
    let mut steps = Vec::new();
    while let Some((s, e)) = leftmost_pinch(current.letters(), k as i64) {
        let letters = current.letters();
        let pinch = Word::from_letters(letters[s..=e].to_vec());
        let mut next = letters[..s].to_vec();
        next.extend_from_slice(&letters[s + 1..e]);
        next.extend_from_slice(&letters[e + 1..]);
        current = free_reduce(&Word::from_letters(next));
        steps.push(BrittonStep { position: s, pinch, result: current.clone() });
    }
    // A reduced word with a t letter and no pinch is nontrivial (Britton);
    // a t-free reduced word is a^j with j != 0 unless empty.
    let is_identity = current.is_empty();
    Ok(Verdict { is_identity, method: Method::Britton, witness: Witness::Britton { steps, residue: current } })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BsNormalForm {
    /// Exponent of the central element `c = a^k`.
    pub central_power: i64,
    /// Alternating `a^r` (`0 < r < k`) and `t^j` (`j != 0`).
    pub coset_sequence: Vec<Syllable>,
}

impl BsNormalForm {
    pub fn is_identity(&self) -> bool {
        self.central_power == 0 && self.coset_sequence.is_empty()
    }
}

pub fn bs_normal_form(w: &Word, k: u32) -> Result<BsNormalForm> {
    checked(w, k)?;
    let k = k as i64;
    let mut central = 0i64;
    let mut stack: Vec<Syllable> = Vec::new();
    for l in w.letters() {
        let sign = l.sign() as i64;
        match (l.generator(), stack.last_mut()) {
            ('t', Some(top)) if top.generator == 't' => {
                top.exponent += sign;
                if top.exponent == 0 {
                    stack.pop();
                }
            }
            ('t', _) => stack.push(Syllable { generator: 't', exponent: sign }),
            (_, Some(top)) if top.generator == 'a' => {
                top.exponent += sign;
                if top.exponent == k {
                    stack.pop();
                    central += 1;
                } else if top.exponent == 0 {
                    stack.pop();
                }
            }
            _ => {
                // Fresh a-syllable: represent a^-1 as c^-1 a^(k-1).
                let r = if sign > 0 { 1 } else { k - 1 };
                if sign < 0 {
                    central -= 1;
                }
                if r == k {
                    central += 1;
                } else if r > 0 {
                    stack.push(Syllable { generator: 'a', exponent: r });
                }
            }
        }
    }
    Ok(BsNormalForm { central_power: central, coset_sequence: stack })
}

pub fn bs_normal_form_is_identity(w: &Word, k: u32) -> Result<Verdict> {
    let nf = bs_normal_form(w, k)?;
    Ok(Verdict { is_identity: nf.is_identity(), method: Method::NormalForm, witness: Witness::BsNormalForm(nf) })
}
