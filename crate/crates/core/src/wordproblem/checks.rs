//! Exhaustive checks of the theorems about identity words, at a bounded
//! word length.
//!
//! Each check scans every freely reduced word up to the length cap and
//! returns a serializable report. A nonempty counterexample list means a
//! claim failed. Every check refuses rather than truncates when the
//! enumeration would exceed [`DEFAULT_WORD_BUDGET`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{artin_model_map, FamilyId};
use crate::words::{artin_word, cyclic_syllable_count, syllables, Letter, Word};

use super::{
    bs_normal_form_is_identity, check_trace, commutator, finite_image, identity_oracle, letter_order,
    reduced_word_count, rewrite_is_identity, scan_reduced_words, verify_homomorphism, HomomorphismReport, Witness,
    DEFAULT_WORD_BUDGET,
};

fn torus_params(family: FamilyId) -> Result<(u32, u32)> {
    match family {
        FamilyId::Tor { m, n } if m >= 2 && n >= 2 => Ok((m, n)),
        _ => Err(Error::InvalidParameter(format!("{family}: this check needs Tor(m,n) with m, n >= 2"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubwordReport {
    pub family: FamilyId,
    pub max_len: usize,
    pub words_scanned: u64,
    /// Nontrivial reduced identity words found.
    pub identity_words: usize,
    /// Identity words with no subword `a^±m` or `b^±n`.
    pub counterexamples: Vec<Word>,
    /// Identity words with no syllable `a^k`, `m | k`, or `b^l`, `n | l`.
    pub strong_counterexamples: Vec<Word>,
}

/// Every nontrivial reduced identity word in `Tor(m, n)` contains `a^±m`
/// or `b^±n`, and in fact a syllable whose exponent is a multiple of the
/// generator's order.
pub fn check_subword_property(family: FamilyId, max_len: usize) -> Result<SubwordReport> {
    let (m, n) = torus_params(family)?;
    let oracle = identity_oracle(family)?;
    let order = |g: char| if g == 'a' { m as i64 } else { n as i64 };
    let found = scan_reduced_words(family.alphabet(), max_len, DEFAULT_WORD_BUDGET, |w| {
        if w.is_empty() || !oracle(w) {
            return None;
        }
        let runs = syllables(w).expect("enumerated words are reduced");
        let weak = runs.iter().any(|s| s.exponent.abs() >= order(s.generator));
        let strong = runs.iter().any(|s| s.exponent % order(s.generator) == 0);
        Some((w.clone(), weak, strong))
    })?;
    Ok(SubwordReport {
        family,
        max_len,
        words_scanned: reduced_word_count(2, max_len),
        identity_words: found.len(),
        counterexamples: found.iter().filter(|f| !f.1).map(|f| f.0.clone()).collect(),
        strong_counterexamples: found.iter().filter(|f| !f.2).map(|f| f.0.clone()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SyllableReport {
    pub family: FamilyId,
    pub max_len: usize,
    pub words_scanned: u64,
    /// Rotation classes of nontrivial cyclically reduced identity words.
    pub identity_classes: usize,
    pub bound: usize,
    pub minimum_cyclic_syllables: Option<usize>,
    /// Class representatives attaining the minimum, first few only.
    pub minimum_witnesses: Vec<Word>,
    /// Linear syllable count minimum over the same representatives.
    pub minimum_linear_syllables: Option<usize>,
    pub counterexamples: Vec<Word>,
}

const WITNESS_LIMIT: usize = 16;

fn rank(order: &[Letter; 4], l: Letter) -> usize {
    order.iter().position(|&x| x == l).expect("letter in alphabet")
}

/// Whether `w` is the least of its rotations in enumeration order.
pub(crate) fn is_least_rotation(w: &Word, order: &[Letter; 4]) -> bool {
    let key: Vec<usize> = w.letters().iter().map(|&l| rank(order, l)).collect();
    (1..key.len()).all(|s| key[s..].iter().chain(&key[..s]).cmp(key.iter()) != std::cmp::Ordering::Less)
}

/// Every nontrivial cyclically reduced identity word in `Art_m` has at
/// least `2m` syllables when read cyclically.
pub fn check_syllable_bound(m: u32, max_len: usize) -> Result<SyllableReport> {
    let family = FamilyId::art(m)?;
    let oracle = identity_oracle(family)?;
    let order = letter_order(family.alphabet());
    let found = scan_reduced_words(family.alphabet(), max_len, DEFAULT_WORD_BUDGET, |w| {
        if w.is_empty() || !w.is_cyclically_reduced() || !is_least_rotation(w, &order) || !oracle(w) {
            return None;
        }
        let cyclic = cyclic_syllable_count(w).expect("cyclically reduced");
        let linear = syllables(w).expect("reduced").len();
        Some((w.clone(), cyclic, linear))
    })?;
    let bound = 2 * m as usize;
    let minimum = found.iter().map(|f| f.1).min();
    Ok(SyllableReport {
        family,
        max_len,
        words_scanned: reduced_word_count(2, max_len),
        identity_classes: found.len(),
        bound,
        minimum_cyclic_syllables: minimum,
        minimum_witnesses: found.iter().filter(|f| Some(f.1) == minimum).take(WITNESS_LIMIT).map(|f| f.0.clone()).collect(),
        minimum_linear_syllables: found.iter().map(|f| f.2).min(),
        counterexamples: found.iter().filter(|f| f.1 < bound).map(|f| f.0.clone()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GeneratorCommutator {
    pub generator: char,
    pub commutator: Word,
    pub is_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CentralWord {
    pub word: Word,
    /// `word = designated^power`; absent when the group is abelian.
    pub power: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CenterReport {
    pub family: FamilyId,
    pub max_len: usize,
    /// `a^m` for torus knots, `z = (a,b)_m` for even `m`, `z²` for odd.
    pub designated: Word,
    pub designated_commutators: Vec<GeneratorCommutator>,
    /// For odd Artin groups: commutators of `z` itself, expected nontrivial.
    pub plain_z_commutators: Vec<GeneratorCommutator>,
    /// `Art_2 = ℤ²`: the check reduces to abelianness.
    pub abelian: bool,
    pub words_scanned: u64,
    pub central_words: Vec<CentralWord>,
    /// Central words that are not a power of the designated element, or,
    /// for an abelian group, words that fail to commute.
    pub violations: Vec<Word>,
}

fn generator_commutators(x: &Word, family: FamilyId, oracle: &dyn Fn(&Word) -> bool) -> Vec<GeneratorCommutator> {
    family
        .alphabet()
        .into_iter()
        .map(|g| {
            let c = commutator(x, &Word::power_of(g, 1).expect("generator"));
            GeneratorCommutator { generator: g, is_identity: oracle(&c), commutator: c }
        })
        .collect()
}

/// The centre is generated by the designated element: it commutes with
/// both generators, and every short word that does is one of its powers.
pub fn check_center(family: FamilyId, max_len: usize) -> Result<CenterReport> {
    let (designated, plain) = match family {
        FamilyId::Tor { m, .. } => {
            torus_params(family)?;
            (Word::power_of('a', m as i64)?, None)
        }
        FamilyId::Art { m } => {
            let z = artin_word('a', 'b', m as usize)?;
            if m % 2 == 0 {
                (z, None)
            } else {
                (z.pow(2), Some(z))
            }
        }
        FamilyId::Bs { .. } => return Err(Error::InvalidParameter(format!("{family}: centre check covers Tor and Art"))),
    };
    let abelian = family == FamilyId::Art { m: 2 };
    let oracle = identity_oracle(family)?;
    let designated_commutators = generator_commutators(&designated, family, &oracle);
    let plain_z_commutators = plain.map(|z| generator_commutators(&z, family, &oracle)).unwrap_or_default();
    let gens: Vec<Word> = family.alphabet().iter().map(|&g| Word::power_of(g, 1).expect("generator")).collect();
    let limit = max_len as i64;
    let scanned = scan_reduced_words(family.alphabet(), max_len, DEFAULT_WORD_BUDGET, |w| {
        let central = gens.iter().all(|g| oracle(&commutator(w, g)));
        if abelian {
            return Some((w.clone(), central, None));
        }
        if !central {
            return None;
        }
        let power = (-limit..=limit).find(|&p| oracle(&w.concat(&designated.pow(-p))));
        Some((w.clone(), true, power))
    })?;
    let violations = scanned
        .iter()
        .filter(|(_, central, power)| if abelian { !central } else { power.is_none() })
        .map(|s| s.0.clone())
        .collect();
    Ok(CenterReport {
        family,
        max_len,
        designated,
        designated_commutators,
        plain_z_commutators,
        abelian,
        words_scanned: reduced_word_count(2, max_len),
        central_words: scanned.into_iter().filter(|s| s.1).map(|(word, _, power)| CentralWord { word, power }).collect(),
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Disagreement {
    pub word: Word,
    pub primary: bool,
    pub secondary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AgreementReport {
    pub family: FamilyId,
    pub max_len: usize,
    /// Normal form, Britton, or the Artin isomorphism.
    pub primary: &'static str,
    /// Rewriting, or the amalgam normal form for `BS(k, k)`.
    pub secondary: &'static str,
    pub words_scanned: u64,
    pub identity_words: usize,
    pub disagreements: Vec<Disagreement>,
    /// Identity words whose permutation image is not trivial.
    pub soundness_violations: Vec<Word>,
    /// Identity words whose rewriting trace did not replay.
    pub trace_failures: Vec<Word>,
    /// Largest number of states one rewriting search visited.
    pub max_rewrite_states: usize,
}

#[derive(Default)]
struct Row {
    word: Word,
    primary: bool,
    secondary: bool,
    sound: bool,
    trace_ok: bool,
    states: usize,
}

/// Runs the primary and secondary deciders on every reduced word up to
/// `max_len` and reports any disagreement.
pub fn agreement(family: FamilyId, max_len: usize) -> Result<AgreementReport> {
    let primary = identity_oracle(family)?;
    let (primary_name, secondary_name) = match family {
        FamilyId::Tor { .. } => ("normal-form", "rewrite"),
        FamilyId::Art { .. } => ("homomorphism", "rewrite"),
        FamilyId::Bs { .. } => ("britton", "normal-form"),
    };
    let rows = scan_reduced_words(family.alphabet(), max_len, DEFAULT_WORD_BUDGET, |w| {
        let p = primary(w);
        let mut row = Row { word: w.clone(), primary: p, trace_ok: true, ..Row::default() };
        match family {
            FamilyId::Bs { m, .. } => row.secondary = bs_normal_form_is_identity(w, m).map(|v| v.is_identity).ok()?,
            _ => {
                let v = match rewrite_is_identity(w, family) {
                    Ok(v) => v,
                    Err(e) => return Some(Err(e)),
                };
                row.secondary = v.is_identity;
                match &v.witness {
                    Witness::Trace { steps } => {
                        row.trace_ok = check_trace(w, steps, family).is_ok();
                        row.states = steps.len();
                    }
                    Witness::Exhausted { states } => row.states = *states,
                    _ => {}
                }
            }
        }
        row.sound = !(p || row.secondary) || finite_image(w, family).map(|x| x.is_identity()).unwrap_or(false);
        let notable = p || row.secondary || !row.trace_ok || row.states > 1;
        notable.then_some(Ok(row))
    })?
    .into_iter()
    .collect::<Result<Vec<Row>>>()?;
    Ok(AgreementReport {
        family,
        max_len,
        primary: primary_name,
        secondary: secondary_name,
        words_scanned: reduced_word_count(2, max_len),
        identity_words: rows.iter().filter(|r| r.primary).count(),
        disagreements: rows
            .iter()
            .filter(|r| r.primary != r.secondary)
            .map(|r| Disagreement { word: r.word.clone(), primary: r.primary, secondary: r.secondary })
            .collect(),
        soundness_violations: rows.iter().filter(|r| !r.sound).map(|r| r.word.clone()).collect(),
        trace_failures: rows.iter().filter(|r| !r.trace_ok).map(|r| r.word.clone()).collect(),
        max_rewrite_states: rows.iter().filter(|r| !r.secondary).map(|r| r.states).max().unwrap_or(0),
    })
}

/// Verification of the shipped map from `Art_m` to its model group.
pub fn check_iso(m: u32) -> Result<HomomorphismReport> {
    verify_homomorphism(&artin_model_map(m)?)
}
