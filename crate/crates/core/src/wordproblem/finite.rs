//! Finite permutation images of each family.
//!
//! * `Tor(m, n)`: `a` ↦ an `m`-cycle and `b` ↦ an `n`-cycle on
//!   `max(m, n)` points, both of which kill `a^m` and `b^n`.
//! * `Art_m`: `a`, `b` ↦ the reflections `i ↦ -i` and `i ↦ 1 - i` of
//!   `ℤ/m`, whose product has order `m`.
//! * `BS(k, k)`: `a` ↦ a `2k`-cycle, `t` ↦ the transposition `(0 k)`,
//!   which commutes with the half turn `a^k`.
//! * `BS(m, n)`, `m != n`: the abelianization map onto the cyclic group of
//!   order `|m - n|`, `t` ↦ identity.
//!
//! Only the direction "identity word ⇒ identity permutation" is
//! meaningful.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::families::FamilyId;
use crate::words::Word;

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// `i ↦ f(i)`; `f` must be a bijection of `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        let images: Vec<usize> = (0..n).map(f).collect();
        debug_assert!({
            let mut seen = vec![false; n];
            images.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
        });
        Permutation(images)
    }

    /// The cycle `0 → 1 → … → len-1 → 0` on `n ≥ len` points.
    pub fn cycle(n: usize, len: usize) -> Self {
        Self::from_fn(n, |i| if i < len { (i + 1) % len } else { i })
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j] = i;
        }
        Permutation(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

fn generator_images(family: FamilyId) -> [Permutation; 2] {
    match family {
        FamilyId::Tor { m, n } => {
            let (m, n) = (m as usize, n as usize);
            let size = m.max(n);
            [Permutation::cycle(size, m), Permutation::cycle(size, n)]
        }
        FamilyId::Art { m } => {
            let m = m as usize;
            [Permutation::from_fn(m, |i| (m - i) % m), Permutation::from_fn(m, |i| (m + 1 - i) % m)]
        }
        FamilyId::Bs { m, n } if m == n => {
            let k = m as usize;
            let swap = Permutation::from_fn(2 * k, |i| match i {
                0 => k,
                i if i == k => 0,
                i => i,
            });
            [Permutation::cycle(2 * k, 2 * k), swap]
        }
        FamilyId::Bs { m, n } => {
            let order = m.abs_diff(n) as usize;
            [Permutation::cycle(order, order), Permutation::identity(order)]
        }
    }
}

/// The image of `w` under the family's permutation representation.
pub fn finite_image(w: &Word, family: FamilyId) -> Result<Permutation> {
    family.check_word(w)?;
    let [x, y] = generator_images(family);
    let (xi, yi) = (x.inverse(), y.inverse());
    let first = family.alphabet()[0];
    let mut acc = Permutation::identity(x.degree());
    for l in w.letters() {
        let p = match (l.generator() == first, l.is_positive()) {
            (true, true) => &x,
            (true, false) => &xi,
            (false, true) => &y,
            (false, false) => &yi,
        };
        acc = acc.then(p);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn relators_map_to_identity() {
        for m in 1..=6 {
            for n in 1..=6 {
                for family in [FamilyId::tor(m, n).unwrap(), FamilyId::bs(m, n).unwrap()] {
                    assert!(finite_image(&family.relator(), family).unwrap().is_identity(), "{family}");
                }
            }
        }
        for m in 2..=8 {
            let family = FamilyId::art(m).unwrap();
            assert!(finite_image(&family.relator(), family).unwrap().is_identity(), "{family}");
        }
    }

    #[test]
    fn detects_noncommuting_pairs() {
        let c = parse_word("abAB").unwrap();
        assert!(!finite_image(&c, FamilyId::tor(2, 3).unwrap()).unwrap().is_identity());
        assert!(!finite_image(&c, FamilyId::art(3).unwrap()).unwrap().is_identity());
        assert!(finite_image(&c, FamilyId::art(2).unwrap()).unwrap().is_identity());
        let z = parse_word("aba").unwrap();
        let za = z.concat(&parse_word("a").unwrap()).concat(&z.inverse()).concat(&parse_word("A").unwrap());
        assert!(!finite_image(&za, FamilyId::art(3).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn composition_order() {
        let p = Permutation::cycle(3, 3);
        let q = Permutation::from_fn(3, |i| [1, 0, 2][i]);
        assert_eq!(p.then(&q).apply(0), q.apply(p.apply(0)));
        assert!(p.then(&p.inverse()).is_identity());
    }
}
