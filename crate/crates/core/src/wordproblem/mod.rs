//! Identity testing in `Tor(m, n)`, `BS(k, k)` and `Art_m`.
//!
//! Every family has at least two independent deciders:
//!
//! * torus knot groups: the amalgam normal form ([`tor_normal_form`]) and
//!   length-nonincreasing rewriting ([`rewrite_is_identity`]);
//! * `BS(k, k)`: Britton reduction ([`bs_is_identity`]) and the amalgam
//!   normal form of `ℤ ∗_{a^k = c} ℤ²` ([`bs_normal_form`]);
//! * Artin groups: translation through a verified isomorphism
//!   ([`artin_is_identity`]) and rewriting.
//!
//! Finite permutation images ([`finite_image`]) serve as a one-sided
//! soundness oracle: an identity word must map to the identity permutation.
//! The theorem checks in [`checks`] enumerate words exhaustively and
//! compare the deciders against each other and against the claims.

mod artin;
mod bs;
pub mod checks;
mod enumerate;
mod finite;
mod rewrite;
mod tor;
mod verify;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::words::Word;

pub use artin::{artin_is_identity, ArtinSolver};
pub use bs::{bs_is_identity, bs_normal_form, bs_normal_form_is_identity, BrittonStep, BsNormalForm};
pub use enumerate::{
    enumerate_identity_words, letter_order, reduced_word_count, scan_reduced_words, DEFAULT_WORD_BUDGET,
};
pub use finite::{finite_image, Permutation};
pub use rewrite::{
    check_trace, rewrite_is_identity, rewrite_is_identity_with_budget, weighted_length, Move, TraceStep,
    DEFAULT_STATE_BUDGET,
};
pub use tor::{tor_is_identity, tor_normal_form, TorNormalForm};
pub use verify::{verify_homomorphism, HomomorphismCheck, HomomorphismReport};

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Amalgam normal form.
    NormalForm,
    /// Britton pinch reduction in `BS(k, k)`.
    Britton,
    /// Translation through a verified isomorphism.
    Homomorphism,
    /// Breadth-first relator-half rewriting.
    Rewrite,
}

/// Evidence attached to a verdict, re-checkable without trusting the
/// solver that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Witness {
    TorNormalForm(TorNormalForm),
    BsNormalForm(BsNormalForm),
    /// Each step removes one pinch, then freely reduces.
    Britton { steps: Vec<BrittonStep>, residue: Word },
    /// The word's image and the verdict in the target group.
    Image { target: FamilyId, image: Word, verdict: Box<Verdict> },
    /// Moves leading to the empty word.
    Trace { steps: Vec<TraceStep> },
    /// The search exhausted every reachable word without meeting the
    /// empty word.
    Exhausted { states: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub is_identity: bool,
    pub method: Method,
    pub witness: Witness,
}

/// The primary decider for a family: normal form for torus knots,
/// Britton for `BS(k, k)`, the verified isomorphism for Artin groups.
pub fn is_identity(w: &Word, family: FamilyId) -> Result<Verdict> {
    match family {
        FamilyId::Tor { m, n } => tor_is_identity(w, m, n),
        FamilyId::Bs { m, n } if m == n => bs_is_identity(w, m),
        FamilyId::Bs { .. } => Err(unsupported(family, "no word problem solver for BS(m,n) with m != n")),
        FamilyId::Art { m } => artin_is_identity(w, m),
    }
}

/// Every applicable decider for the family, primary first.
pub fn all_verdicts(w: &Word, family: FamilyId) -> Result<Vec<Verdict>> {
    let mut out = vec![is_identity(w, family)?];
    match family {
        FamilyId::Bs { m, .. } => out.push(bs_normal_form_is_identity(w, m)?),
        FamilyId::Tor { .. } | FamilyId::Art { .. } => out.push(rewrite_is_identity(w, family)?),
    }
    Ok(out)
}

pub(crate) type Oracle = Box<dyn Fn(&Word) -> bool + Send + Sync>;

/// A fast yes/no decider for words already known to be over the family
/// alphabet, resolved once so it can be shared across threads.
pub(crate) fn identity_oracle(family: FamilyId) -> Result<Oracle> {
    Ok(match family {
        FamilyId::Tor { m, n } => Box::new(move |w: &Word| {
            let mut acc = tor::TorAccumulator::new(m, n);
            w.letters().iter().for_each(|&l| acc.push(l));
            acc.is_identity()
        }),
        FamilyId::Bs { m, n } if m == n => {
            Box::new(move |w: &Word| bs_is_identity(w, m).expect("word over the BS alphabet").is_identity)
        }
        FamilyId::Bs { .. } => return Err(unsupported(family, "no word problem solver for BS(m,n) with m != n")),
        FamilyId::Art { m } => {
            let solver = ArtinSolver::cached(m)?;
            Box::new(move |w: &Word| solver.is_identity(w).expect("word over the Artin alphabet").is_identity)
        }
    })
}

pub(crate) fn unsupported(family: FamilyId, why: &str) -> Error {
    Error::InvalidParameter(format!("{family}: {why}"))
}

/// `[x, y] = x y x⁻¹ y⁻¹`.
pub fn commutator(x: &Word, y: &Word) -> Word {
    x.concat(y).concat(&x.inverse()).concat(&y.inverse())
}
