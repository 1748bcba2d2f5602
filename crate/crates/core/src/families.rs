//! Torus knot groups, Baumslag–Solitar groups and one-relator Artin groups,
//! with the isomorphisms between them.
//!
//! Each family has a one-vertex presentation complex and (for torus knots
//! and Artin groups) a two-vertex description whose extra edge `t`
//! contracts back to the presentation complex.
//!
//! The isomorphisms `Art_m ≅ Tor(2, m)` (odd `m`) and
//! `Art_m ≅ BS(m/2, m/2)` (even `m`) are shipped as explicit generator
//! images together with their inverses. They are data to be checked, not
//! trusted: [`GroupHomomorphismSpec::verified`] is `false` until
//! [`crate::wordproblem::verify_homomorphism`] has confirmed every
//! relator and round trip.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::complex::{CombinatorialDescription, Presentation};
use crate::error::{Error, Result};
use crate::words::{artin_word, free_reduce, Letter, Word};

/// A member of one of the three families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `Tor(m, n) = ⟨a, b | a^m = b^n⟩`.
    Tor { m: u32, n: u32 },
    /// `BS(m, n) = ⟨a, t | a^m t = t a^n⟩`.
    Bs { m: u32, n: u32 },
    /// `Art_m = ⟨a, b | (a,b)_m = (b,a)_m⟩`.
    Art { m: u32 },
}

impl FamilyId {
    pub fn tor(m: u32, n: u32) -> Result<Self> {
        Self::Tor { m, n }.validated()
    }

    pub fn bs(m: u32, n: u32) -> Result<Self> {
        Self::Bs { m, n }.validated()
    }

    pub fn art(m: u32) -> Result<Self> {
        Self::Art { m }.validated()
    }

    fn validated(self) -> Result<Self> {
        match self {
            FamilyId::Tor { m, n } | FamilyId::Bs { m, n } if m == 0 || n == 0 => {
                Err(Error::InvalidParameter(format!("{self}: parameters must be positive")))
            }
            FamilyId::Art { m } if m < 2 => {
                Err(Error::InvalidParameter(format!("art:{m}: Artin relations need m >= 2")))
            }
            _ => Ok(self),
        }
    }

    /// The two generators, in presentation order.
    pub fn alphabet(&self) -> [char; 2] {
        match self {
            FamilyId::Tor { .. } | FamilyId::Art { .. } => ['a', 'b'],
            FamilyId::Bs { .. } => ['a', 't'],
        }
    }

    pub fn presentation(&self) -> Presentation {
        match *self {
            FamilyId::Tor { m, n } => torus_knot_presentation(m, n),
            FamilyId::Bs { m, n } => bs_presentation(m, n),
            FamilyId::Art { m } => artin_presentation(m),
        }
        .expect("validated parameters")
    }

    /// The two-vertex description, where one exists.
    pub fn description(&self) -> Option<CombinatorialDescription> {
        match *self {
            FamilyId::Tor { m, n } => torus_knot_description(m, n).ok(),
            FamilyId::Art { m } => artin_description(m).ok(),
            FamilyId::Bs { .. } => None,
        }
    }

    pub fn relator(&self) -> Word {
        self.presentation().relators()[0].clone()
    }

    /// Rejects words with letters outside the family alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        let alphabet = self.alphabet();
        match w.letters().iter().find(|l| !alphabet.contains(&l.generator())) {
            Some(l) => Err(Error::UnknownLetter { letter: l.as_char(), context: self.to_string() }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Tor { m, n } => write!(f, "tor:{m},{n}"),
            FamilyId::Bs { m, n } if m == n => write!(f, "bs:{m}"),
            FamilyId::Bs { m, n } => write!(f, "bsgen:{m},{n}"),
            FamilyId::Art { m } => write!(f, "art:{m}"),
        }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// `tor:M,N`, `bs:K` (meaning `BS(K,K)`), `bsgen:M,N` or `art:M`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown family `{s}`; expected tor:M,N, bs:K, bsgen:M,N or art:M"));
        let (kind, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let numbers = params
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (kind.trim(), numbers.as_slice()) {
            ("tor", &[m, n]) => FamilyId::tor(m, n),
            ("bs", &[k]) => FamilyId::bs(k, k),
            ("bsgen", &[m, n]) => FamilyId::bs(m, n),
            ("art", &[m]) => FamilyId::art(m),
            _ => Err(bad()),
        }
    }
}

fn power(g: char, e: i64) -> Word {
    Word::power_of(g, e).expect("family generators are lowercase")
}

fn positive(m: u32, n: u32, what: &str) -> Result<()> {
    if m == 0 || n == 0 {
        Err(Error::InvalidParameter(format!("{what}({m},{n}): parameters must be positive")))
    } else {
        Ok(())
    }
}

/// `⟨a, b | a^m b^-n⟩`.
pub fn torus_knot_presentation(m: u32, n: u32) -> Result<Presentation> {
    positive(m, n, "Tor")?;
    Presentation::new(vec!['a', 'b'], vec![power('a', m as i64).concat(&power('b', -(n as i64)))])
}

/// `[a^m t = t b^n]`, i.e. the relator `a^m t b^-n t^-1`.
pub fn torus_knot_description(m: u32, n: u32) -> Result<CombinatorialDescription> {
    positive(m, n, "Tor")?;
    let r = power('a', m as i64).concat(&power('t', 1)).concat(&power('b', -(n as i64))).concat(&power('t', -1));
    CombinatorialDescription::new(vec![r])
}

/// `⟨a, t | a^m t a^-n t^-1⟩`.
pub fn bs_presentation(m: u32, n: u32) -> Result<Presentation> {
    positive(m, n, "BS")?;
    let r = power('a', m as i64).concat(&power('t', 1)).concat(&power('a', -(n as i64))).concat(&power('t', -1));
    Presentation::new(vec!['a', 't'], vec![r])
}

fn artin_pair(m: u32) -> Result<(Word, Word)> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("Art_{m}: Artin relations need m >= 2")));
    }
    Ok((artin_word('a', 'b', m as usize)?, artin_word('b', 'a', m as usize)?))
}

/// `⟨a, b | (a,b)_m = (b,a)_m⟩`.
pub fn artin_presentation(m: u32) -> Result<Presentation> {
    let (ab, ba) = artin_pair(m)?;
    Presentation::new(vec!['a', 'b'], vec![ab.concat(&ba.inverse())])
}

/// `[(a,b)_m t = t (b,a)_m]` for even `m`, `[(a,b)_m = t (b,a)_m t]` for
/// odd `m`.
pub fn artin_description(m: u32) -> Result<CombinatorialDescription> {
    let (ab, ba) = artin_pair(m)?;
    let t = power('t', 1);
    let (lhs, rhs) = if m.is_multiple_of(2) { (ab.concat(&t), t.concat(&ba)) } else { (ab, t.concat(&ba).concat(&t)) };
    CombinatorialDescription::new(vec![lhs.concat(&rhs.inverse())])
}

/// A homomorphism between two-generator groups given on generators, with
/// a proposed inverse for round-trip checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupHomomorphismSpec {
    pub source_family: FamilyId,
    pub source_generators: Vec<char>,
    pub target_family: FamilyId,
    /// Generator names used in the images. These alias the target
    /// family's alphabet position by position (`x` stands for `a` in
    /// `BS`).
    pub target_generators: Vec<char>,
    pub images: Vec<(char, Word)>,
    pub inverse_images: Vec<(char, Word)>,
    pub verified: bool,
}

impl GroupHomomorphismSpec {
    pub fn inverse(&self) -> GroupHomomorphismSpec {
        GroupHomomorphismSpec {
            source_family: self.target_family,
            source_generators: self.target_generators.clone(),
            target_family: self.source_family,
            target_generators: self.source_generators.clone(),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
            verified: self.verified,
        }
    }

    /// Renames a word in the target generators into the target family's
    /// own alphabet.
    pub fn to_target_alphabet(&self, w: &Word) -> Result<Word> {
        let rename: Vec<(char, char)> =
            self.target_generators.iter().copied().zip(self.target_family.alphabet()).collect();
        w.rename(&rename)
    }

    /// Renames a word in the source family's alphabet into the source
    /// generators.
    pub fn from_source_alphabet(&self, w: &Word) -> Result<Word> {
        let rename: Vec<(char, char)> =
            self.source_family.alphabet().into_iter().zip(self.source_generators.iter().copied()).collect();
        w.rename(&rename)
    }
}

/// Letterwise substitution, freely reduced.
pub fn apply_homomorphism(w: &Word, h: &GroupHomomorphismSpec) -> Result<Word> {
    let mut out: Vec<Letter> = Vec::new();
    for l in w.letters() {
        let (_, image) = h.images.iter().find(|(g, _)| *g == l.generator()).ok_or_else(|| Error::UnknownLetter {
            letter: l.as_char(),
            context: format!("the source of the map {} -> {}", h.source_family, h.target_family),
        })?;
        if l.is_positive() {
            out.extend_from_slice(image.letters());
        } else {
            out.extend(image.inverse().letters());
        }
    }
    Ok(free_reduce(&Word::from_letters(out)))
}

/// `Art_m → Tor(2, m)` for odd `m`, on target generators `(u, v)` written
/// `(a, b)`: `a ↦ v^-(m-1)/2 u`, `b ↦ u^-1 v^(m+1)/2`, with inverse
/// `u ↦ (a,b)_m`, `v ↦ ab`. Unverified.
pub fn artin_to_tor_map(m: u32) -> Result<GroupHomomorphismSpec> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("Art_{m} -> Tor(2,{m}) needs odd m >= 3")));
    }
    let k = ((m - 1) / 2) as i64;
    Ok(GroupHomomorphismSpec {
        source_family: FamilyId::art(m)?,
        source_generators: vec!['a', 'b'],
        target_family: FamilyId::tor(2, m)?,
        target_generators: vec!['a', 'b'],
        images: vec![('a', power('b', -k).concat(&power('a', 1))), ('b', power('a', -1).concat(&power('b', k + 1)))],
        inverse_images: vec![('a', artin_word('a', 'b', m as usize)?), ('b', artin_word('a', 'b', 2)?)],
        verified: false,
    })
}

/// `Art_m → BS(m/2, m/2)` for even `m`, on target generators `(x, t)`:
/// `a ↦ t`, `b ↦ t^-1 x`, with inverse `x ↦ ab`, `t ↦ a`. Unverified.
pub fn artin_to_bs_map(m: u32) -> Result<GroupHomomorphismSpec> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::InvalidParameter(format!("Art_{m} -> BS(m/2,m/2) needs even m >= 2")));
    }
    Ok(GroupHomomorphismSpec {
        source_family: FamilyId::art(m)?,
        source_generators: vec!['a', 'b'],
        target_family: FamilyId::bs(m / 2, m / 2)?,
        target_generators: vec!['x', 't'],
        images: vec![('a', power('t', 1)), ('b', power('t', -1).concat(&power('x', 1)))],
        inverse_images: vec![('x', artin_word('a', 'b', 2)?), ('t', power('a', 1))],
        verified: false,
    })
}

/// The map relating `Art_m` to its torus knot or Baumslag–Solitar model,
/// chosen by parity.
pub fn artin_model_map(m: u32) -> Result<GroupHomomorphismSpec> {
    if m % 2 == 1 {
        artin_to_tor_map(m)
    } else {
        artin_to_bs_map(m)
    }
}
