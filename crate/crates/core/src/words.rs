//! Words over a one-letter-per-generator alphabet.
//!
//! Generators are the lowercase ASCII letters `a`..`z`; the inverse of a
//! generator is written as the corresponding uppercase letter, so the
//! commutator of `a` and `b` is `abAB`. A [`Letter`] stores exactly that
//! printed byte, which makes printing free and inversion a case flip.
//!
//! Input may use the exponent shorthand `a^3`; canonical output is always
//! fully expanded, so `parse_word(w.to_string()) == w` for every word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};

/// Largest exponent accepted by the `^` shorthand.
pub const MAX_EXPONENT: u32 = 1_000_000;

/// A generator or its inverse, stored as its printed ASCII letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    /// Builds a letter from a lowercase generator symbol and a sign.
    pub fn new(generator: char, positive: bool) -> Result<Self> {
        if !generator.is_ascii_lowercase() {
            return Err(Error::InvalidParameter(format!(
                "generator `{generator}` is not a lowercase ASCII letter"
            )));
        }
        let byte = generator as u8;
        Ok(Letter(if positive { byte } else { byte.to_ascii_uppercase() }))
    }

    /// Interprets a printed letter: lowercase is positive, uppercase inverse.
    pub fn from_char(c: char) -> Option<Self> {
        c.is_ascii_alphabetic().then_some(Letter(c as u8))
    }

    pub fn generator(self) -> char {
        self.0.to_ascii_lowercase() as char
    }

    pub fn is_positive(self) -> bool {
        self.0.is_ascii_lowercase()
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 0x20)
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.0 ^ 0x20 == other.0
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite sequence of letters. No reducedness is implied.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// A maximal run of a single generator, e.g. `a^5` or `c^-4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub generator: char,
    pub exponent: i64,
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `g^exponent` for a single generator.
    pub fn power_of(generator: char, exponent: i64) -> Result<Word> {
        let letter = Letter::new(generator, exponent >= 0)?;
        Ok(Word(vec![letter; exponent.unsigned_abs() as usize]))
    }

    /// `self^exponent`, with negative exponents meaning powers of the inverse.
    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters)
    }

    /// The formal inverse: reversed, every sign flipped.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The rotation starting at `start`.
    pub fn rotate(&self, start: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let start = start % self.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.0[start..]);
        letters.extend_from_slice(&self.0[..start]);
        Word(letters)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].is_inverse_of(w[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(first), Some(last)) if self.len() > 1 => !first.is_inverse_of(*last),
                _ => true,
            }
    }

    /// Sum of the signs of all occurrences of `generator`.
    pub fn exponent_sum(&self, generator: char) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == generator)
            .map(|l| l.sign() as i64)
            .sum()
    }

    /// Distinct generators in order of first occurrence.
    pub fn generators(&self) -> Vec<char> {
        let mut seen = Vec::new();
        for l in &self.0 {
            let g = l.generator();
            if !seen.contains(&g) {
                seen.push(g);
            }
        }
        seen
    }

    /// Replaces generator symbols according to `rename`; letters not
    /// mentioned are kept.
    pub fn rename(&self, rename: &[(char, char)]) -> Result<Word> {
        self.0
            .iter()
            .map(|l| {
                let g = l.generator();
                let target = rename.iter().find(|(from, _)| *from == g).map_or(g, |(_, to)| *to);
                Letter::new(target, l.is_positive())
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "Word(ε)")
        } else {
            write!(f, "Word({self})")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_word(&text).map_err(serde::de::Error::custom)
    }
}

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Parses a word such as `abAB`, `a^3 t` or `a^4tB^5T`.
///
/// Whitespace is ignored anywhere. Offsets in errors are character offsets
/// into `text`.
pub fn parse_word(text: &str) -> Result<Word> {
    parse_word_at(text, 0)
}

fn parse_word_at(text: &str, base: usize) -> Result<Word> {
    let mut letters = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let letter = Letter::from_char(c)
            .ok_or_else(|| parse_error(base + i, format!("unexpected symbol `{c}`")))?;
        while chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            chars.next();
        }
        let mut exponent = 1u32;
        if let Some(&(caret, '^')) = chars.peek() {
            chars.next();
            while chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            if digits.is_empty() {
                return Err(parse_error(base + caret, "`^` must be followed by a positive integer"));
            }
            exponent = match digits.parse::<u32>() {
                Ok(0) => return Err(parse_error(base + caret, "exponent must be positive")),
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(parse_error(
                        base + caret,
                        format!("exponent exceeds {MAX_EXPONENT}"),
                    ))
                }
            };
        }
        letters.extend(std::iter::repeat_n(letter, exponent as usize));
    }
    Ok(Word(letters))
}

/// Parses a bare word or a relation `lhs = rhs`, returning `lhs · rhs⁻¹`.
///
/// No free reduction is applied, so `a=a` yields `aA`.
pub fn parse_relation(text: &str) -> Result<Word> {
    let mut parts = text.splitn(3, '=');
    let lhs = parts.next().unwrap_or_default();
    match (parts.next(), parts.next()) {
        (None, _) => parse_word(lhs),
        (Some(rhs), None) => {
            let lhs_word = parse_word_at(lhs, 0)?;
            let rhs_word = parse_word_at(rhs, lhs.chars().count() + 1)?;
            Ok(lhs_word.concat(&rhs_word.inverse()))
        }
        (Some(_), Some(_)) => {
            let second = text.char_indices().filter(|(_, c)| *c == '=').nth(1).map(|(i, _)| i);
            let offset = second.map_or(0, |i| text[..i].chars().count());
            Err(parse_error(offset, "a relation has exactly one `=`"))
        }
    }
}

pub fn invert(w: &Word) -> Word {
    w.inverse()
}

/// Deletes adjacent inverse pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        match out.last() {
            Some(&top) if top.is_inverse_of(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

/// Free reduction followed by stripping inverse first/last pairs.
pub fn cyclic_reduce(w: &Word) -> Word {
    let reduced = free_reduce(w);
    let letters = reduced.letters();
    let (mut lo, mut hi) = (0, letters.len());
    while hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    Word(letters[lo..hi].to_vec())
}

fn run_lengths(letters: &[Letter]) -> Vec<Syllable> {
    let mut out: Vec<Syllable> = Vec::new();
    for &l in letters {
        match out.last_mut() {
            Some(s) if s.generator == l.generator() => s.exponent += l.sign() as i64,
            _ => out.push(Syllable { generator: l.generator(), exponent: l.sign() as i64 }),
        }
    }
    out
}

/// Maximal runs of a single generator in a freely reduced word.
pub fn syllables(w: &Word) -> Result<Vec<Syllable>> {
    if !w.is_freely_reduced() {
        return Err(precondition(format!("syllables of `{w}`: word is not freely reduced")));
    }
    Ok(run_lengths(&w.0))
}

/// Syllable count of a cyclically reduced word read as a cyclic word: the
/// first and last syllables merge when they share a generator.
pub fn cyclic_syllable_count(w: &Word) -> Result<usize> {
    if !w.is_cyclically_reduced() {
        return Err(precondition(format!(
            "cyclic syllable count of `{w}`: word is not cyclically reduced"
        )));
    }
    let runs = run_lengths(&w.0);
    let merge = runs.len() >= 2 && runs[0].generator == runs[runs.len() - 1].generator;
    Ok(runs.len() - usize::from(merge))
}

/// Expands syllables back into a word.
pub fn expand_syllables(syllables: &[Syllable]) -> Result<Word> {
    let mut letters = Vec::new();
    for s in syllables {
        if s.exponent == 0 {
            return Err(Error::InvalidParameter("syllable with exponent 0".into()));
        }
        letters.extend(Word::power_of(s.generator, s.exponent)?.0);
    }
    Ok(Word(letters))
}

/// The alternating word `(x,y)_m = xyxy…` with `m` letters.
pub fn artin_word(x: char, y: char, m: usize) -> Result<Word> {
    if m == 0 {
        return Err(Error::InvalidParameter("artin word length must be positive".into()));
    }
    if x == y {
        return Err(Error::InvalidParameter(format!("artin word needs distinct letters, got `{x}` twice")));
    }
    let pair = [Letter::new(x, true)?, Letter::new(y, true)?];
    Ok((0..m).map(|i| pair[i % 2]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn parses_commutator_and_shorthand() {
        let commutator = w("abAB");
        let signs: Vec<_> = commutator.letters().iter().map(|l| (l.generator(), l.sign())).collect();
        assert_eq!(signs, vec![('a', 1), ('b', 1), ('a', -1), ('b', -1)]);
        assert!(w("").is_empty());
        assert_eq!(w("a^3t"), w("aaat"));
        assert_eq!(w(" a ^ 2 B^3 "), w("aaBBB"));
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert_eq!(parse_word("ab1"), Err(parse_error(2, "unexpected symbol `1`")));
        assert!(matches!(parse_word("a^0"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_word("ab^"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_word("a^-2"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_word("aé"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn relations_become_relators() {
        assert_eq!(parse_relation("ab=ba").unwrap(), w("abAB"));
        assert_eq!(parse_relation("aba").unwrap(), w("aba"));
        assert_eq!(parse_relation("a=a").unwrap(), w("aA"));
        assert_eq!(parse_relation("a^4 t = t b^5").unwrap(), w("aaaatBBBBBT"));
        assert!(matches!(parse_relation("a=b=c"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_relation("a=b1"), Err(Error::Parse { offset: 3, .. })));
    }

    #[test]
    fn inversion() {
        assert_eq!(invert(&w("abAB")), w("baBA"));
        assert_eq!(invert(&Word::empty()), Word::empty());
        assert_eq!(invert(&w("a^3")), w("A^3"));
    }

    #[test]
    fn free_and_cyclic_reduction() {
        assert_eq!(free_reduce(&w("aA")), Word::empty());
        assert_eq!(free_reduce(&w("abBA")), Word::empty());
        assert_eq!(free_reduce(&w("abAB")), w("abAB"));
        assert_eq!(cyclic_reduce(&w("Aba")), w("b"));
        assert_eq!(cyclic_reduce(&w("abAB")), w("abAB"));
        assert_eq!(cyclic_reduce(&w("abBcA")), w("c"));
        assert_eq!(cyclic_reduce(&w("aA")), Word::empty());
    }

    #[test]
    fn syllable_examples() {
        let s = syllables(&w("a^5b^2C^4")).unwrap();
        assert_eq!(
            s,
            vec![
                Syllable { generator: 'a', exponent: 5 },
                Syllable { generator: 'b', exponent: 2 },
                Syllable { generator: 'c', exponent: -4 },
            ]
        );
        assert!(syllables(&Word::empty()).unwrap().is_empty());
        assert_eq!(syllables(&w("abab")).unwrap().len(), 4);
        assert!(matches!(syllables(&w("aAb")), Err(Error::Precondition(_))));
        assert_eq!(expand_syllables(&s).unwrap(), w("a^5b^2C^4"));
    }

    #[test]
    fn cyclic_syllables() {
        assert_eq!(cyclic_syllable_count(&w("abab")).unwrap(), 4);
        assert_eq!(cyclic_syllable_count(&w("baab")).unwrap(), 2);
        assert_eq!(cyclic_syllable_count(&w("a^5")).unwrap(), 1);
        assert_eq!(cyclic_syllable_count(&Word::empty()).unwrap(), 0);
        assert!(cyclic_syllable_count(&w("abA")).is_err());
    }

    #[test]
    fn artin_words() {
        assert_eq!(artin_word('a', 'b', 2).unwrap(), w("ab"));
        assert_eq!(artin_word('a', 'b', 3).unwrap(), w("aba"));
        assert_eq!(artin_word('a', 'b', 1).unwrap(), w("a"));
        assert!(artin_word('a', 'b', 0).is_err());
        assert!(artin_word('a', 'a', 3).is_err());
    }

    #[test]
    fn artin_relator_has_2m_cyclic_syllables() {
        for m in 2..=8 {
            let relator = artin_word('a', 'b', m).unwrap().concat(&artin_word('b', 'a', m).unwrap().inverse());
            let reduced = cyclic_reduce(&relator);
            assert_eq!(cyclic_syllable_count(&reduced).unwrap(), 2 * m, "m = {m}");
        }
    }
}
