//! Machine verification of a proposed isomorphism between two families.
//!
//! A map given on generators is a well-defined homomorphism when every
//! source relator maps to the identity. Together with the same check for
//! the proposed inverse, and round trips on generators in both groups,
//! this certifies an isomorphism.
//!
//! Artin-side checks use rewriting, never the Artin solver, because that
//! solver is itself built on the map under test.

use serde::Serialize;

use crate::error::{precondition, Result};
use crate::families::{apply_homomorphism, FamilyId, GroupHomomorphismSpec};
use crate::words::Word;

use super::{finite_image, is_identity, rewrite_is_identity, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CheckKind {
    /// Image of a source relator, tested in the target.
    RelatorImage,
    /// Image of a target relator under the inverse, tested in the source.
    InverseRelatorImage,
    /// `inverse(map(g)) g⁻¹` for a source generator `g`.
    SourceRoundTrip,
    /// `map(inverse(g)) g⁻¹` for a target generator `g`.
    TargetRoundTrip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomomorphismCheck {
    pub kind: CheckKind,
    /// The relator or generator the check is about.
    pub subject: Word,
    /// The word tested, in the alphabet of `group`.
    pub word: Word,
    pub group: FamilyId,
    pub method: Method,
    pub is_identity: bool,
    /// Image under the group's permutation representation is trivial.
    pub finite_image_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomomorphismReport {
    /// The map, with `verified` set when every check passed.
    pub spec: GroupHomomorphismSpec,
    pub checks: Vec<HomomorphismCheck>,
}

impl HomomorphismReport {
    pub fn verified(&self) -> bool {
        self.spec.verified
    }
}

fn decide(kind: CheckKind, subject: Word, word: Word, group: FamilyId) -> Result<HomomorphismCheck> {
    let verdict = match group {
        FamilyId::Art { .. } => rewrite_is_identity(&word, group)?,
        _ => is_identity(&word, group)?,
    };
    let finite_image_identity = finite_image(&word, group)?.is_identity();
    Ok(HomomorphismCheck { kind, subject, word, group, method: verdict.method, is_identity: verdict.is_identity, finite_image_identity })
}

pub fn verify_homomorphism(h: &GroupHomomorphismSpec) -> Result<HomomorphismReport> {
    let inv = h.inverse();
    for g in &h.source_generators {
        if !h.images.iter().any(|(s, _)| s == g) {
            return Err(precondition(format!("generator `{g}` has no image")));
        }
    }
    let mut checks = Vec::new();
    for r in h.source_family.presentation().relators() {
        let image = apply_homomorphism(&h.from_source_alphabet(r)?, h)?;
        checks.push(decide(CheckKind::RelatorImage, r.clone(), h.to_target_alphabet(&image)?, h.target_family)?);
    }
    for r in h.target_family.presentation().relators() {
        let image = apply_homomorphism(&inv.from_source_alphabet(r)?, &inv)?;
        checks.push(decide(CheckKind::InverseRelatorImage, r.clone(), inv.to_target_alphabet(&image)?, h.source_family)?);
    }
    for &g in &h.source_generators {
        let g = Word::power_of(g, 1)?;
        let back = apply_homomorphism(&apply_homomorphism(&g, h)?, &inv)?.concat(&g.inverse());
        checks.push(decide(CheckKind::SourceRoundTrip, inv.to_target_alphabet(&g)?, inv.to_target_alphabet(&back)?, h.source_family)?);
    }
    for &g in &h.target_generators {
        let g = Word::power_of(g, 1)?;
        let back = apply_homomorphism(&apply_homomorphism(&g, &inv)?, h)?.concat(&g.inverse());
        checks.push(decide(CheckKind::TargetRoundTrip, h.to_target_alphabet(&g)?, h.to_target_alphabet(&back)?, h.target_family)?);
    }
    let mut spec = h.clone();
    spec.verified = checks.iter().all(|c| c.is_identity && c.finite_image_identity);
    Ok(HomomorphismReport { spec, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{artin_to_bs_map, artin_to_tor_map};
    use crate::words::parse_word;

    #[test]
    fn shipped_maps_verify() {
        for m in [3, 5] {
            let r = verify_homomorphism(&artin_to_tor_map(m).unwrap()).unwrap();
            assert!(r.verified(), "{:#?}", r.checks);
            assert_eq!(r.checks.len(), 6);
        }
        for m in [2, 4, 6] {
            let r = verify_homomorphism(&artin_to_bs_map(m).unwrap()).unwrap();
            assert!(r.verified(), "{:#?}", r.checks);
        }
    }

    #[test]
    fn broken_map_fails() {
        let mut h = artin_to_tor_map(3).unwrap();
        h.images[0].1 = parse_word("a").unwrap();
        let r = verify_homomorphism(&h).unwrap();
        assert!(!r.verified());
        assert!(r.checks.iter().any(|c| c.kind == CheckKind::RelatorImage && !c.is_identity));
    }

    #[test]
    fn relator_image_for_m3_is_the_expected_word() {
        let h = artin_to_tor_map(3).unwrap();
        let image = apply_homomorphism(&parse_word("abaBAB").unwrap(), &h).unwrap();
        assert!(crate::wordproblem::tor_normal_form(&image, 2, 3).unwrap().is_identity());
    }
}
