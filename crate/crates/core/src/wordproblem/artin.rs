//! `Art_m` through its verified model: `Tor(2, m)` for odd `m`,
//! `BS(m/2, m/2)` for even `m`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::families::{apply_homomorphism, artin_model_map, FamilyId, GroupHomomorphismSpec};
use crate::words::Word;

use super::{is_identity, verify_homomorphism, Method, Verdict, Witness};

/// Decides identity in `Art_m` by translating into the model group.
/// Construction fails unless the map passes [`verify_homomorphism`].
#[derive(Clone, Debug)]
pub struct ArtinSolver {
    family: FamilyId,
    map: GroupHomomorphismSpec,
}

impl ArtinSolver {
    pub fn new(m: u32) -> Result<Self> {
        let family = FamilyId::art(m)?;
        let report = verify_homomorphism(&artin_model_map(m)?)?;
        if !report.verified() {
            let failed: Vec<String> =
                report.checks.iter().filter(|c| !c.is_identity).map(|c| format!("{:?} {}", c.kind, c.subject)).collect();
            return Err(Error::Unverified(format!("{family}: {}", failed.join(", "))));
        }
        Ok(ArtinSolver { family, map: report.spec })
    }

    /// A shared solver per `m`, verified once per process.
    pub fn cached(m: u32) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ArtinSolver>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.lock().expect("cache lock").get(&m) {
            return Ok(Arc::clone(s));
        }
        let solver = Arc::new(ArtinSolver::new(m)?);
        cache.lock().expect("cache lock").insert(m, Arc::clone(&solver));
        Ok(solver)
    }

    pub fn map(&self) -> &GroupHomomorphismSpec {
        &self.map
    }

    /// The image of an `Art_m` word, in the model family's alphabet.
    pub fn image(&self, w: &Word) -> Result<Word> {
        self.family.check_word(w)?;
        let image = apply_homomorphism(&self.map.from_source_alphabet(w)?, &self.map)?;
        self.map.to_target_alphabet(&image)
    }

    pub fn is_identity(&self, w: &Word) -> Result<Verdict> {
        let image = self.image(w)?;
        let target = self.map.target_family;
        let verdict = is_identity(&image, target)?;
        Ok(Verdict {
            is_identity: verdict.is_identity,
            method: Method::Homomorphism,
            witness: Witness::Image { target, image, verdict: Box::new(verdict) },
        })
    }
}

pub fn artin_is_identity(w: &Word, m: u32) -> Result<Verdict> {
    ArtinSolver::cached(m)?.is_identity(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{artin_word, parse_word};
    use crate::wordproblem::commutator;

    #[test]
    fn relation_is_identity() {
        for m in 2..=8u32 {
            let r = artin_word('a', 'b', m as usize).unwrap().concat(&artin_word('b', 'a', m as usize).unwrap().inverse());
            assert!(artin_is_identity(&r, m).unwrap().is_identity, "m = {m}");
        }
    }

    #[test]
    fn commutators() {
        assert!(!artin_is_identity(&parse_word("abAB").unwrap(), 3).unwrap().is_identity);
        assert!(artin_is_identity(&parse_word("abAB").unwrap(), 2).unwrap().is_identity);
        let z = artin_word('a', 'b', 3).unwrap();
        let a = parse_word("a").unwrap();
        assert!(!artin_is_identity(&commutator(&z, &a), 3).unwrap().is_identity);
        assert!(artin_is_identity(&commutator(&z.pow(2), &a), 3).unwrap().is_identity);
    }

    #[test]
    fn witness_names_the_model() {
        let v = artin_is_identity(&parse_word("ab").unwrap(), 4).unwrap();
        match v.witness {
            Witness::Image { target, .. } => assert_eq!(target, FamilyId::bs(2, 2).unwrap()),
            other => panic!("{other:?}"),
        }
        assert!(artin_is_identity(&parse_word("t").unwrap(), 4).is_err());
    }
}
