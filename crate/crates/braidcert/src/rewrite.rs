//! Positive-word rewriting and its compilation into Hurwitz moves.
//!
//! Two equal positive words are connected by a chain of single
//! applications of the defining relations (Garside), each of which lifts
//! to one or two Hurwitz moves on factorization tuples. The path search is
//! a bidirectional breadth-first search over literal letter sequences;
//! length is preserved by every step, so the search space is finite.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::garside;
use crate::hurwitz::{Certificate, Factorization, HurwitzMove};
use crate::Error;

/// Default cap on the number of stored search states.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// Which defining relation a step applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Swaps the letters at `position, position+1`; requires their indices
    /// to differ by more than one.
    Commutation,
    /// Rewrites `a·b·a -> b·a·b` at `position..position+3`; requires the
    /// outer letters to agree and to be adjacent to the middle one.
    Triple,
}

/// Orientation of a step. The letter-level effect is the same either way
/// (both relations are symmetric as rewrites); the direction controls
/// which Hurwitz moves the step compiles to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepDirection {
    Forward,
    Backward,
}

/// A single application of a defining relation at a 0-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelationStep {
    pub position: usize,
    pub kind: StepKind,
    pub direction: StepDirection,
}

impl RelationStep {
    pub fn flipped(self) -> Self {
        RelationStep {
            position: self.position,
            kind: self.kind,
            direction: match self.direction {
                StepDirection::Forward => StepDirection::Backward,
                StepDirection::Backward => StepDirection::Forward,
            },
        }
    }
}

fn window_letters(pw: &BraidWord, position: usize, width: usize) -> Result<Vec<i32>, Error> {
    let letters = pw.letters();
    if position + width > letters.len() {
        return Err(Error::InapplicableStep {
            position,
            reason: format!("window of width {width} exceeds word length {}", letters.len()),
        });
    }
    let window = &letters[position..position + width];
    if window.iter().any(|&l| l <= 0) {
        return Err(Error::NotPositive);
    }
    Ok(window.to_vec())
}

/// Applies one relation step to a positive word. Length-preserving; the
/// result is the same group element.
pub fn apply_relation(pw: &BraidWord, step: &RelationStep) -> Result<BraidWord, Error> {
    let p = step.position;
    let mut letters = pw.letters().to_vec();
    match step.kind {
        StepKind::Commutation => {
            let wdw = window_letters(pw, p, 2)?;
            if (wdw[0] - wdw[1]).abs() <= 1 {
                return Err(Error::InapplicableStep {
                    position: p,
                    reason: format!("letters {} and {} do not commute", wdw[0], wdw[1]),
                });
            }
            letters.swap(p, p + 1);
        }
        StepKind::Triple => {
            let wdw = window_letters(pw, p, 3)?;
            if wdw[0] != wdw[2] || (wdw[0] - wdw[1]).abs() != 1 {
                return Err(Error::InapplicableStep {
                    position: p,
                    reason: format!("letters {wdw:?} do not match the a·b·a pattern"),
                });
            }
            letters[p] = wdw[1];
            letters[p + 1] = wdw[0];
            letters[p + 2] = wdw[1];
        }
    }
    BraidWord::new(pw.n(), letters)
}

/// All steps applicable to `word`, in deterministic order: positions
/// ascending, commutation before triple. Directions are `Forward`.
fn neighbor_steps(word: &[u8]) -> Vec<(RelationStep, Vec<u8>)> {
    let mut out = Vec::new();
    for p in 0..word.len() {
        if p + 1 < word.len() {
            let (a, b) = (word[p] as i32, word[p + 1] as i32);
            if (a - b).abs() > 1 {
                let mut next = word.to_vec();
                next.swap(p, p + 1);
                out.push((
                    RelationStep {
                        position: p,
                        kind: StepKind::Commutation,
                        direction: StepDirection::Forward,
                    },
                    next,
                ));
            }
        }
        if p + 2 < word.len() {
            let (a, b, c) = (word[p] as i32, word[p + 1] as i32, word[p + 2] as i32);
            if a == c && (a - b).abs() == 1 {
                let mut next = word.to_vec();
                next[p] = word[p + 1];
                next[p + 1] = word[p];
                next[p + 2] = word[p + 1];
                out.push((
                    RelationStep {
                        position: p,
                        kind: StepKind::Triple,
                        direction: StepDirection::Forward,
                    },
                    next,
                ));
            }
        }
    }
    out
}

fn to_index_vec(pw: &BraidWord) -> Result<Vec<u8>, Error> {
    if !pw.is_positive() {
        return Err(Error::NotPositive);
    }
    Ok(pw.letters().iter().map(|&l| l as u8).collect())
}

struct PathSide {
    nodes: Vec<(Vec<u8>, Option<(usize, RelationStep)>)>,
    index: HashMap<Vec<u8>, usize>,
    frontier: Vec<usize>,
}

impl PathSide {
    fn new(start: Vec<u8>) -> Self {
        let mut index = HashMap::new();
        index.insert(start.clone(), 0);
        PathSide {
            nodes: vec![(start, None)],
            index,
            frontier: vec![0],
        }
    }

    fn path_steps(&self, mut idx: usize) -> Vec<RelationStep> {
        let mut steps = Vec::new();
        while let Some((parent, step)) = self.nodes[idx].1 {
            steps.push(step);
            idx = parent;
        }
        steps.reverse();
        steps
    }
}

/// Finds a relation-step path rewriting `pw1` letter-for-letter into
/// `pw2`, using the default state budget.
pub fn rewrite_path(pw1: &BraidWord, pw2: &BraidWord) -> Result<Vec<RelationStep>, Error> {
    rewrite_path_with_budget(pw1, pw2, DEFAULT_STATE_BUDGET)
}

/// As [`rewrite_path`] with an explicit cap on stored states. Equality of
/// the two words is checked up front, so exhausting the budget is a
/// resource failure, never a claim of inequivalence.
pub fn rewrite_path_with_budget(
    pw1: &BraidWord,
    pw2: &BraidWord,
    max_states: usize,
) -> Result<Vec<RelationStep>, Error> {
    if pw1.n() != pw2.n() {
        return Err(Error::StrandMismatch {
            left: pw1.n(),
            right: pw2.n(),
        });
    }
    let start = to_index_vec(pw1)?;
    let target = to_index_vec(pw2)?;
    if start.len() != target.len() {
        return Err(Error::NotEquivalent(
            "positive words of different lengths are never equal".to_string(),
        ));
    }
    if start == target {
        return Ok(Vec::new());
    }
    if !garside::equal(pw1, pw2)? {
        return Err(Error::NotEquivalent(
            "words differ in the braid group".to_string(),
        ));
    }

    let mut fwd = PathSide::new(start);
    let mut bwd = PathSide::new(target);

    // Steps recorded on the target side walk away from pw2; flipping and
    // reversing them continues the path from the meeting word to pw2.
    let assemble = |fwd: &PathSide, bwd: &PathSide, f_idx: usize, b_idx: usize| {
        let mut steps = fwd.path_steps(f_idx);
        let back = bwd.path_steps(b_idx);
        steps.extend(back.into_iter().rev().map(|s| s.flipped()));
        steps
    };

    loop {
        let expand_fwd = fwd.frontier.len() <= bwd.frontier.len();
        let (side, other) = if expand_fwd {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let mut next_frontier = Vec::new();
        let mut meet: Option<(usize, usize)> = None;
        'level: for &idx in &side.frontier {
            let word = side.nodes[idx].0.clone();
            for (step, next) in neighbor_steps(&word) {
                if side.index.contains_key(&next) {
                    continue;
                }
                let new_idx = side.nodes.len();
                side.index.insert(next.clone(), new_idx);
                side.nodes.push((next.clone(), Some((idx, step))));
                if side.nodes.len() + other.nodes.len() > max_states {
                    return Err(Error::BudgetExhausted { budget: max_states });
                }
                if let Some(&other_idx) = other.index.get(&next) {
                    meet = Some((new_idx, other_idx));
                    break 'level;
                }
                next_frontier.push(new_idx);
            }
        }
        if let Some((new_idx, other_idx)) = meet {
            let steps = if expand_fwd {
                assemble(&fwd, &bwd, new_idx, other_idx)
            } else {
                assemble(&fwd, &bwd, other_idx, new_idx)
            };
            return Ok(steps);
        }
        side.frontier = next_frontier;
        if side.frontier.is_empty() {
            return Err(Error::Internal(
                "rewrite class exhausted without connecting equal words".to_string(),
            ));
        }
    }
}

/// Compiles one relation step into Hurwitz moves (1-based move indices).
///
/// A commutation at position `p` is one move `R_{p+1}`; a forward triple
/// is the pair `R_{p+2}, R_{p+1}`. Backward steps use the inverse moves in
/// reverse order. Applied to a tuple whose entries satisfy the relation,
/// the moves reproduce the step's effect entry-wise up to braid equality.
pub fn step_to_moves(step: &RelationStep) -> Vec<HurwitzMove> {
    let p = step.position;
    match (step.kind, step.direction) {
        (StepKind::Commutation, StepDirection::Forward) => vec![HurwitzMove::forward(p + 1)],
        (StepKind::Commutation, StepDirection::Backward) => vec![HurwitzMove::inverse(p + 1)],
        (StepKind::Triple, StepDirection::Forward) => {
            vec![HurwitzMove::forward(p + 2), HurwitzMove::forward(p + 1)]
        }
        (StepKind::Triple, StepDirection::Backward) => {
            vec![HurwitzMove::inverse(p + 1), HurwitzMove::inverse(p + 2)]
        }
    }
}

fn single_generator_word(f: &Factorization) -> Result<BraidWord, Error> {
    let mut letters = Vec::with_capacity(f.len());
    for e in f.entries() {
        if e.len() != 1 || e.letters()[0] <= 0 {
            return Err(Error::NotSingleGenerators);
        }
        letters.push(e.letters()[0]);
    }
    BraidWord::new(f.n(), letters)
}

/// A certificate connecting two factorizations into single generators.
///
/// Both tuples are read as positive words; a rewrite path between them is
/// compiled move by move. Every intermediate tuple consists of elements of
/// whatever frame the indices are interpreted in, so the certificate
/// replays over any frame, not just the standard one.
pub fn positive_equivalence_certificate(
    f1: &Factorization,
    f2: &Factorization,
) -> Result<Certificate, Error> {
    positive_equivalence_certificate_with_budget(f1, f2, DEFAULT_STATE_BUDGET)
}

/// As [`positive_equivalence_certificate`] with an explicit search budget.
pub fn positive_equivalence_certificate_with_budget(
    f1: &Factorization,
    f2: &Factorization,
    max_states: usize,
) -> Result<Certificate, Error> {
    if f1.len() != f2.len() {
        return Err(Error::LengthMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    let w1 = single_generator_word(f1)?;
    let w2 = single_generator_word(f2)?;
    let steps = rewrite_path_with_budget(&w1, &w2, max_states)?;
    let moves = steps.iter().flat_map(|s| step_to_moves(s)).collect();
    Certificate::new(f1.len(), moves)
}
