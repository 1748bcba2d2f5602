//! Input files and inline family specs.
//!
//! Format: UTF-8 text, `#` starts a comment. Presentation files begin with
//! a `gens: a b c` header and then hold one relator or relation per line.
//! Description files hold one or more relators per line, comma separated,
//! optionally wrapped in `[ ... ]`.

use std::fmt;
use std::path::Path;

use linkcx::complex::{CombinatorialDescription, Presentation};
use linkcx::families::FamilyId;
use linkcx::words::{parse_relation, Word};
use linkcx::Error;
use serde::Serialize;

#[derive(Clone, Debug)]
pub enum Input {
    Description(CombinatorialDescription),
    Presentation(Presentation),
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Source {
    /// `description` or `presentation`.
    pub kind: &'static str,
    /// File path or family spec.
    pub origin: String,
    /// The parsed input in bracket or angle notation.
    pub text: String,
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub source: Source,
    pub input: Input,
}

/// A load failure; `line` and `column` are 1-based and 0 when not
/// tied to a position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub origin: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}: {}", self.origin, self.message)
        } else {
            write!(f, "{}:{}:{}: {}", self.origin, self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for InputError {}

fn at(origin: &str, line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError { origin: origin.to_string(), line, column, message: message.into() }
}

/// Lines with comments removed: `(line number, text, char offset of text
/// within the original line)`, blank lines skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str, usize)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or_default();
        let trimmed = body.trim_start();
        let lead = body.chars().count() - trimmed.chars().count();
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some((i + 1, trimmed, lead))
    })
}

fn relator_at(origin: &str, line: usize, column: usize, text: &str) -> Result<Word, InputError> {
    if text.trim().is_empty() {
        return Err(at(origin, line, column, "empty relator"));
    }
    parse_relation(text).map_err(|e| match e {
        Error::Parse { offset, message } => at(origin, line, column + offset, message),
        other => at(origin, line, column, other.to_string()),
    })
}

pub fn parse_description(text: &str, origin: &str) -> Result<CombinatorialDescription, InputError> {
    let mut relators = Vec::new();
    for (line, body, lead) in content_lines(text) {
        let (inner, shift) = match body.strip_prefix('[') {
            Some(rest) => match rest.strip_suffix(']') {
                Some(inner) => (inner, 1),
                None => return Err(at(origin, line, lead + body.chars().count(), "missing closing `]`")),
            },
            None if body.ends_with(']') => {
                return Err(at(origin, line, lead + body.chars().count(), "`]` without opening `[`"));
            }
            None => (body, 0),
        };
        let mut column = lead + shift + 1;
        for part in inner.split(',') {
            relators.push(relator_at(origin, line, column, part)?);
            column += part.chars().count() + 1;
        }
    }
    if relators.is_empty() {
        return Err(at(origin, 0, 0, "no relators; a description needs at least one"));
    }
    CombinatorialDescription::new(relators).map_err(|e| at(origin, 0, 0, e.to_string()))
}

pub fn parse_presentation(text: &str, origin: &str) -> Result<Presentation, InputError> {
    let mut lines = content_lines(text);
    let missing = || at(origin, 1, 1, "presentation files start with `gens: <letters>`");
    let (hline, header, lead) = lines.next().ok_or_else(missing)?;
    let list = header.strip_prefix("gens:").ok_or_else(missing)?;
    let mut gens = Vec::new();
    for (i, c) in list.chars().enumerate() {
        if c.is_whitespace() || c == ',' {
            continue;
        }
        let column = lead + "gens:".len() + i + 1;
        if !c.is_ascii_lowercase() {
            return Err(at(origin, hline, column, format!("generator `{c}` is not a lowercase letter")));
        }
        if gens.contains(&c) {
            return Err(at(origin, hline, column, format!("generator `{c}` listed twice")));
        }
        gens.push(c);
    }
    let mut relators = Vec::new();
    for (line, body, lead) in lines {
        if let Some((i, c)) =
            body.chars().enumerate().find(|(_, c)| c.is_ascii_alphabetic() && !gens.contains(&c.to_ascii_lowercase()))
        {
            return Err(at(origin, line, lead + i + 1, format!("`{c}` is not a declared generator")));
        }
        relators.push(relator_at(origin, line, lead + 1, body)?);
    }
    Presentation::new(gens, relators).map_err(|e| at(origin, 0, 0, e.to_string()))
}

pub fn load_description(path: &Path) -> Result<Loaded, InputError> {
    let origin = path.display().to_string();
    let text = read(path)?;
    let d = parse_description(&text, &origin)?;
    Ok(Loaded { source: Source { kind: "description", origin, text: d.to_string() }, input: Input::Description(d) })
}

pub fn load_presentation(path: &Path) -> Result<Loaded, InputError> {
    let origin = path.display().to_string();
    let text = read(path)?;
    let p = parse_presentation(&text, &origin)?;
    Ok(Loaded { source: Source { kind: "presentation", origin, text: p.to_string() }, input: Input::Presentation(p) })
}

/// Torus knot and Artin families load as their two-vertex descriptions
/// unless `presentation` is set; `BS` families only have presentations.
pub fn load_family(spec: &str, presentation: bool) -> Result<Loaded, InputError> {
    let family: FamilyId = parse_family(spec)?;
    let origin = family.to_string();
    match family.description() {
        Some(d) if !presentation => {
            Ok(Loaded { source: Source { kind: "description", origin, text: d.to_string() }, input: Input::Description(d) })
        }
        _ => {
            let p = family.presentation();
            Ok(Loaded { source: Source { kind: "presentation", origin, text: p.to_string() }, input: Input::Presentation(p) })
        }
    }
}

pub fn parse_family(spec: &str) -> Result<FamilyId, InputError> {
    spec.parse().map_err(|e: Error| at("--family", 0, 0, e.to_string()))
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| at(&path.display().to_string(), 0, 0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracketed_description() {
        let d = parse_description("# torus with two vertices\n[ a b c A B C ]\n", "t").unwrap();
        assert_eq!(d.to_string(), "[abcABC]");
    }

    #[test]
    fn comma_separated_relators_and_relations() {
        let d = parse_description("aB, cdE\n[a^2 = b]\n", "t").unwrap();
        assert_eq!(d.to_string(), "[aB, cdE, aaB]");
    }

    #[test]
    fn presentation_with_relation() {
        let p = parse_presentation("gens: a b c\nabc = cba\n", "t").unwrap();
        assert_eq!(p.to_string(), "<a, b, c | abcABC>");
        let free = parse_presentation("gens: a b\n", "t").unwrap();
        assert!(free.relators().is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_description("abc\n  ab%c\n", "f").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_description("[abc\n", "f").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_presentation("abc\n", "f").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_presentation("gens: a b\n\nabx\n", "f").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_description("ab, , c", "f").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        let e = parse_description("ab = c = d", "f").unwrap_err();
        assert_eq!((e.line, e.column), (1, 8));
        assert_eq!(e.to_string(), "f:1:8: a relation has exactly one `=`");
        assert!(parse_description("# nothing\n", "f").is_err());
    }

    #[test]
    fn families() {
        let l = load_family("art:5", false).unwrap();
        assert_eq!(l.source.kind, "description");
        assert_eq!(l.source.text, "[ababaTBABABT]");
        assert_eq!(load_family("art:5", true).unwrap().source.kind, "presentation");
        assert_eq!(load_family("bs:2", false).unwrap().source.kind, "presentation");
        assert!(load_family("nope:1", false).is_err());
    }
}
