//! Normal forms in `Tor(m, n) = ⟨a⟩ *_{a^m = b^n} ⟨b⟩`.
//!
//! `z = a^m = b^n` is central, so every element is `z^p` times an
//! alternating product of coset representatives `a^r` (`0 < r < m`) and
//! `b^s` (`0 < s < n`). The representation is unique.

use serde::Serialize;

use crate::error::Result;
use crate::families::FamilyId;
use crate::words::{Letter, Syllable, Word};

use super::{Method, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorNormalForm {
    /// Exponent of `z = a^m = b^n`.
    pub central_power: i64,
    pub coset_sequence: Vec<Syllable>,
}

impl TorNormalForm {
    pub fn is_identity(&self) -> bool {
        self.central_power == 0 && self.coset_sequence.is_empty()
    }

    /// A word representing this element: `(a^m)^p` followed by the coset
    /// sequence.
    pub fn to_word(&self, m: u32) -> Word {
        let mut letters = Word::power_of('a', self.central_power * m as i64).expect("a").into_letters();
        for s in &self.coset_sequence {
            letters.extend(Word::power_of(s.generator, s.exponent).expect("a or b").into_letters());
        }
        Word::from_letters(letters)
    }
}

/// Left-to-right folding into normal form; letters must be `a`/`b`.
pub(crate) struct TorAccumulator {
    m: i64,
    n: i64,
    central: i64,
    // (generator index, exponent in 1..order)
    stack: Vec<(u8, i64)>,
}

impl TorAccumulator {
    pub(crate) fn new(m: u32, n: u32) -> Self {
        Self { m: m as i64, n: n as i64, central: 0, stack: Vec::new() }
    }

    pub(crate) fn push(&mut self, l: Letter) {
        let g = u8::from(l.generator() == 'b');
        let order = if g == 0 { self.m } else { self.n };
        let sign = l.sign() as i64;
        if let Some(top) = self.stack.last_mut().filter(|(tg, _)| *tg == g) {
            top.1 += sign;
            if top.1 == order {
                self.stack.pop();
                self.central += 1;
            } else if top.1 == 0 {
                self.stack.pop();
            }
            return;
        }
        if sign > 0 {
            if order == 1 {
                self.central += 1;
            } else {
                self.stack.push((g, 1));
            }
        } else {
            self.central -= 1;
            if order > 1 {
                self.stack.push((g, order - 1));
            }
        }
    }

    pub(crate) fn is_identity(&self) -> bool {
        self.central == 0 && self.stack.is_empty()
    }

    pub(crate) fn finish(self) -> TorNormalForm {
        TorNormalForm {
            central_power: self.central,
            coset_sequence: self
                .stack
                .into_iter()
                .map(|(g, e)| Syllable { generator: if g == 0 { 'a' } else { 'b' }, exponent: e })
                .collect(),
        }
    }
}

pub fn tor_normal_form(w: &Word, m: u32, n: u32) -> Result<TorNormalForm> {
    FamilyId::tor(m, n)?.check_word(w)?;
    let mut acc = TorAccumulator::new(m, n);
    for &l in w.letters() {
        acc.push(l);
    }
    Ok(acc.finish())
}

pub fn tor_is_identity(w: &Word, m: u32, n: u32) -> Result<Verdict> {
    let nf = tor_normal_form(w, m, n)?;
    Ok(Verdict { is_identity: nf.is_identity(), method: Method::NormalForm, witness: Witness::TorNormalForm(nf) })
}
