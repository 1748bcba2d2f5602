//! Breadth-first relator-half rewriting.
//!
//! Moves replace one half of the defining relation by the other (in
//! either direction, for the relation and its inverse) at any position,
//! and delete adjacent inverse pairs. States are kept freely reduced, so a
//! state-to-state step is one swap followed by complete free reduction.
//! Every swap preserves weighted length and every cancellation lowers it,
//! so the reachable set is finite and the search is exhaustive.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::families::FamilyId;
use crate::words::{artin_word, free_reduce, Letter, Word};

use super::{unsupported, Method, Verdict, Witness};

/// Default cap on distinct states visited by one search.
pub const DEFAULT_STATE_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "camelCase")]
pub enum Move {
    /// `from` replaced by `to` at `position`.
    Swap { position: usize, from: Word, to: Word },
    /// The inverse pair at `position`, `position + 1` deleted.
    Cancel { position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceStep {
    #[serde(flatten)]
    pub mv: Move,
    pub result: Word,
}

struct System {
    /// `(from, to)`, in search order.
    swaps: Vec<(Word, Word)>,
    /// Weight per generator in alphabet order.
    weights: [u64; 2],
    alphabet: [char; 2],
}

fn system(family: FamilyId) -> Result<System> {
    let (lhs, rhs, weights) = match family {
        FamilyId::Tor { m, n } => (
            Word::power_of('a', m as i64)?,
            Word::power_of('b', n as i64)?,
            // a edges have length n and b edges length m.
            [n as u64, m as u64],
        ),
        FamilyId::Art { m } => (artin_word('a', 'b', m as usize)?, artin_word('b', 'a', m as usize)?, [1, 1]),
        FamilyId::Bs { .. } => return Err(unsupported(family, "rewriting is defined for Tor and Art only")),
    };
    let (li, ri) = (lhs.inverse(), rhs.inverse());
    Ok(System { swaps: vec![(lhs.clone(), rhs.clone()), (rhs, lhs), (li.clone(), ri.clone()), (ri, li)], weights, alphabet: family.alphabet() })
}

impl System {
    fn weight(&self, w: &Word) -> u64 {
        w.letters().iter().map(|l| if l.generator() == self.alphabet[0] { self.weights[0] } else { self.weights[1] }).sum()
    }
}

/// Weighted length used as the termination measure: for `Tor(m, n)`,
/// `|a| = n` and `|b| = m`; for `Art_m` every letter has weight 1.
pub fn weighted_length(w: &Word, family: FamilyId) -> Result<u64> {
    family.check_word(w)?;
    Ok(system(family)?.weight(w))
}

fn occurrences<'a>(hay: &'a [Letter], needle: &'a [Letter]) -> impl Iterator<Item = usize> + 'a {
    hay.windows(needle.len()).enumerate().filter(move |(_, win)| *win == needle).map(|(i, _)| i)
}

fn splice(w: &[Letter], at: usize, len: usize, with: &[Letter]) -> Word {
    let mut out = Vec::with_capacity(w.len() - len + with.len());
    out.extend_from_slice(&w[..at]);
    out.extend_from_slice(with);
    out.extend_from_slice(&w[at + len..]);
    Word::from_letters(out)
}

/// Leftmost cancellations one at a time, appended to `trace`.
fn cancel_steps(mut w: Word, trace: &mut Vec<TraceStep>) -> Word {
    while let Some(p) = w.letters().windows(2).position(|p| p[0].is_inverse_of(p[1])) {
        w = splice(w.letters(), p, 2, &[]);
        trace.push(TraceStep { mv: Move::Cancel { position: p }, result: w.clone() });
    }
    w
}

pub fn rewrite_is_identity(w: &Word, family: FamilyId) -> Result<Verdict> {
    rewrite_is_identity_with_budget(w, family, DEFAULT_STATE_BUDGET)
}

/// Exhaustive search; refuses with [`Error::Budget`] after `max_states`
/// distinct states.
pub fn rewrite_is_identity_with_budget(w: &Word, family: FamilyId, max_states: usize) -> Result<Verdict> {
    family.check_word(w)?;
    let sys = system(family)?;
    let start = free_reduce(w);
    // parent[state] = (previous state, swap index, position)
    let mut parent: HashMap<Word, Option<(Word, usize, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    let mut found = start.is_empty();
    while !found {
        let Some(s) = queue.pop_front() else { break };
        'moves: for (si, (from, to)) in sys.swaps.iter().enumerate() {
            for pos in occurrences(s.letters(), from.letters()) {
                let next = free_reduce(&splice(s.letters(), pos, from.len(), to.letters()));
                if parent.contains_key(&next) {
                    continue;
                }
                if parent.len() >= max_states {
                    return Err(Error::Budget(format!(
                        "rewriting `{w}` in {family} visited more than {max_states} states"
                    )));
                }
                found = next.is_empty();
                parent.insert(next.clone(), Some((s.clone(), si, pos)));
                if found {
                    break 'moves;
                }
                queue.push_back(next);
            }
        }
    }
    if !found {
        return Ok(Verdict { is_identity: false, method: Method::Rewrite, witness: Witness::Exhausted { states: parent.len() } });
    }

    let mut path = Vec::new();
    let mut cursor = Word::empty();
    while let Some(Some((prev, si, pos))) = parent.get(&cursor) {
        path.push((*si, *pos));
        cursor = prev.clone();
    }
    path.reverse();
    let mut steps = Vec::new();
    let mut current = cancel_steps(w.clone(), &mut steps);
    for (si, pos) in path {
        let (from, to) = &sys.swaps[si];
        current = splice(current.letters(), pos, from.len(), to.letters());
        steps.push(TraceStep { mv: Move::Swap { position: pos, from: from.clone(), to: to.clone() }, result: current.clone() });
        current = cancel_steps(current, &mut steps);
    }
    debug_assert!(current.is_empty());
    Ok(Verdict { is_identity: true, method: Method::Rewrite, witness: Witness::Trace { steps } })
}

/// Replays a rewriting trace from `start`, checking that every step is a
/// legal move, that swaps keep the weighted length and cancellations lower
/// it, and that the trace ends at the empty word.
pub fn check_trace(start: &Word, steps: &[TraceStep], family: FamilyId) -> Result<()> {
    family.check_word(start)?;
    let sys = system(family)?;
    let mut current = start.clone();
    for (i, step) in steps.iter().enumerate() {
        let bad = |why: &str| precondition(format!("trace step {i} from `{current}`: {why}"));
        let next = match &step.mv {
            Move::Swap { position, from, to } => {
                if !sys.swaps.iter().any(|(f, t)| f == from && t == to) {
                    return Err(bad("not a relator-half swap"));
                }
                let l = current.letters();
                if *position + from.len() > l.len() || l[*position..*position + from.len()] != *from.letters() {
                    return Err(bad("pattern not present"));
                }
                let next = splice(l, *position, from.len(), to.letters());
                if sys.weight(&next) != sys.weight(&current) {
                    return Err(bad("swap changed the weighted length"));
                }
                next
            }
            Move::Cancel { position } => {
                let l = current.letters();
                if *position + 1 >= l.len() || !l[*position].is_inverse_of(l[*position + 1]) {
                    return Err(bad("no inverse pair"));
                }
                let next = splice(l, *position, 2, &[]);
                if sys.weight(&next) >= sys.weight(&current) {
                    return Err(bad("cancellation did not shorten"));
                }
                next
            }
        };
        if next != step.result {
            return Err(bad("recorded result differs"));
        }
        current = next;
    }
    if !current.is_empty() {
        return Err(precondition(format!("trace ends at `{current}`, not the empty word")));
    }
    Ok(())
}
