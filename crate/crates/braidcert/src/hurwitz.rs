//! Hurwitz moves on factorization tuples, certificate replay and
//! verification, and a bounded bidirectional orbit search.
//!
//! The move `R_k` replaces the adjacent entries `(t_k, t_{k+1})` by
//! `(t_k t_{k+1} t_k⁻¹, t_k)`; its inverse replaces them by
//! `(t_{k+1}, t_{k+1}⁻¹ t_k t_{k+1})`. Both preserve the product of the
//! tuple, so a sequence of moves connecting two factorizations is a
//! replayable proof that they factor the same element.

use std::collections::HashMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::BraidWord;
use crate::garside::{self, NormalForm};
use crate::Error;

/// Entries longer than this are re-spelled from their normal form during
/// replay (only when that is shorter). Replay otherwise tracks literal
/// words, and nested conjugations can grow geometrically with the number
/// of moves touching an entry even though the group elements stay small.
const REPLAY_SHORTEN_THRESHOLD: usize = 256;

/// An ordered tuple of braid words with a common strand count.
///
/// Entries are stored freely reduced; the product is computed on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    entries: Vec<BraidWord>,
}

impl Factorization {
    pub fn new(n: usize, entries: Vec<BraidWord>) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        for e in &entries {
            if e.n() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: e.n(),
                });
            }
        }
        Ok(Factorization {
            n,
            entries: entries.into_iter().map(|e| e.free_reduce()).collect(),
        })
    }

    /// The full-twist factorization `(σ₁, …, σ_{n−1})` repeated `n` times:
    /// `n(n−1)` single-generator entries whose product is the central
    /// element `Δ²`.
    pub fn full_twist(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        let mut entries = Vec::with_capacity(n * (n - 1));
        for _ in 0..n {
            for i in 1..n {
                entries.push(BraidWord::generator(n, i)?);
            }
        }
        Factorization::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BraidWord] {
        &self.entries
    }

    pub fn product(&self) -> BraidWord {
        let mut letters = Vec::new();
        for e in &self.entries {
            letters.extend_from_slice(e.letters());
        }
        BraidWord::new(self.n, letters)
            .expect("entry letters are in range")
            .free_reduce()
    }

    /// Entry-wise semantic comparison.
    pub fn equals(&self, other: &Factorization) -> Result<bool, Error> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.entries.len() != other.entries.len() {
            return Ok(false);
        }
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !garside::equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Serialize, Deserialize)]
struct FactorizationRepr {
    n: usize,
    entries: Vec<Vec<i32>>,
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FactorizationRepr {
            n: self.n,
            entries: self.entries.iter().map(|e| e.letters().to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FactorizationRepr::deserialize(deserializer)?;
        let entries = repr
            .entries
            .into_iter()
            .map(|letters| BraidWord::new(repr.n, letters))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Factorization::new(repr.n, entries).map_err(D::Error::custom)
    }
}

/// Direction of a Hurwitz move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveDirection {
    #[serde(rename = "fwd")]
    Forward,
    #[serde(rename = "inv")]
    Inverse,
}

impl MoveDirection {
    pub fn flipped(self) -> Self {
        match self {
            MoveDirection::Forward => MoveDirection::Inverse,
            MoveDirection::Inverse => MoveDirection::Forward,
        }
    }
}

/// A single Hurwitz move acting on entries `k` and `k+1` (1-based `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HurwitzMove {
    pub k: usize,
    #[serde(rename = "dir")]
    pub direction: MoveDirection,
}

impl HurwitzMove {
    pub fn forward(k: usize) -> Self {
        HurwitzMove {
            k,
            direction: MoveDirection::Forward,
        }
    }

    pub fn inverse(k: usize) -> Self {
        HurwitzMove {
            k,
            direction: MoveDirection::Inverse,
        }
    }

    pub fn flipped(self) -> Self {
        HurwitzMove {
            k: self.k,
            direction: self.direction.flipped(),
        }
    }
}

/// A replayable proof object: a finite sequence of Hurwitz moves on tuples
/// of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub source_length: usize,
    pub moves: Vec<HurwitzMove>,
}

impl Certificate {
    pub fn empty(source_length: usize) -> Self {
        Certificate {
            source_length,
            moves: Vec::new(),
        }
    }

    pub fn new(source_length: usize, moves: Vec<HurwitzMove>) -> Result<Self, Error> {
        for m in &moves {
            if m.k == 0 || m.k >= source_length {
                return Err(Error::MoveRange {
                    k: m.k,
                    len: source_length,
                });
            }
        }
        Ok(Certificate {
            source_length,
            moves,
        })
    }

    /// The certificate replaying the transformation backwards: reversed
    /// move list with every direction flipped.
    pub fn reverse(&self) -> Self {
        Certificate {
            source_length: self.source_length,
            moves: self.moves.iter().rev().map(|m| m.flipped()).collect(),
        }
    }

    /// Re-targets a certificate for a window inside a longer tuple:
    /// every move index is shifted by `offset`.
    pub fn embed(&self, offset: usize, source_length: usize) -> Result<Self, Error> {
        let moves: Vec<HurwitzMove> = self
            .moves
            .iter()
            .map(|m| HurwitzMove {
                k: m.k + offset,
                direction: m.direction,
            })
            .collect();
        Certificate::new(source_length, moves)
    }

    /// Concatenation; both certificates must target the same tuple length.
    pub fn join(&self, other: &Certificate) -> Result<Self, Error> {
        if self.source_length != other.source_length {
            return Err(Error::LengthMismatch {
                left: self.source_length,
                right: other.source_length,
            });
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        Ok(Certificate {
            source_length: self.source_length,
            moves,
        })
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Applies one Hurwitz move, producing literal freely reduced entries.
pub fn apply_move(f: &Factorization, m: &HurwitzMove) -> Result<Factorization, Error> {
    if m.k == 0 || m.k >= f.len() {
        return Err(Error::MoveRange { k: m.k, len: f.len() });
    }
    let i = m.k - 1;
    let t_k = &f.entries[i];
    let t_next = &f.entries[i + 1];
    let (left, right) = match m.direction {
        MoveDirection::Forward => (
            t_k.concat(t_next)?.concat(&t_k.inverse())?,
            t_k.clone(),
        ),
        MoveDirection::Inverse => (
            t_next.clone(),
            t_next.inverse().concat(t_k)?.concat(t_next)?,
        ),
    };
    let mut entries = f.entries.clone();
    entries[i] = left;
    entries[i + 1] = right;
    Ok(Factorization {
        n: f.n,
        entries,
    })
}

/// Re-spells oversized entries from their normal forms when that shortens
/// them; the group elements are unchanged.
pub(crate) fn shorten_entries(f: Factorization) -> Factorization {
    let entries = f
        .entries
        .into_iter()
        .map(|e| {
            if e.len() > REPLAY_SHORTEN_THRESHOLD {
                let canonical = garside::normal_form(&e).canonical_word();
                if canonical.len() < e.len() {
                    return canonical;
                }
            }
            e
        })
        .collect();
    Factorization {
        n: f.n,
        entries,
    }
}

/// Applies the certificate's moves left to right.
pub fn replay(f: &Factorization, c: &Certificate) -> Result<Factorization, Error> {
    if c.source_length != f.len() {
        return Err(Error::LengthMismatch {
            left: c.source_length,
            right: f.len(),
        });
    }
    let mut current = f.clone();
    for m in &c.moves {
        current = shorten_entries(apply_move(&current, m)?);
    }
    Ok(current)
}

/// Outcome of replay verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyOutcome {
    Verified,
    /// The replayed tuple differs from the target first at this 0-based
    /// entry index.
    EntryMismatch {
        index: usize,
    },
}

impl VerifyOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, VerifyOutcome::Verified)
    }
}

/// Replays `c` on `f1` and compares entry-wise with `f2` under the
/// equality oracle. Structural problems (length or strand mismatches, bad
/// move indices) surface as errors; a clean mismatch reports the first
/// differing entry.
pub fn verify_certificate(
    f1: &Factorization,
    f2: &Factorization,
    c: &Certificate,
) -> Result<VerifyOutcome, Error> {
    if f1.n() != f2.n() {
        return Err(Error::StrandMismatch {
            left: f1.n(),
            right: f2.n(),
        });
    }
    if f1.len() != f2.len() {
        return Err(Error::LengthMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    let result = replay(f1, c)?;
    for (index, (got, want)) in result.entries().iter().zip(f2.entries()).enumerate() {
        if !garside::equal(got, want)? {
            return Ok(VerifyOutcome::EntryMismatch { index });
        }
    }
    Ok(VerifyOutcome::Verified)
}

type StateKey = Vec<NormalForm>;

struct SearchSide {
    nodes: Vec<(Factorization, Option<(usize, HurwitzMove)>)>,
    index: HashMap<StateKey, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl SearchSide {
    fn new(start: Factorization) -> Self {
        let key = state_key(&start);
        let mut index = HashMap::new();
        index.insert(key, 0);
        SearchSide {
            nodes: vec![(start, None)],
            index,
            frontier: vec![0],
            depth: 0,
        }
    }

    /// Moves from the root to this node, in application order.
    fn path_moves(&self, mut idx: usize) -> Vec<HurwitzMove> {
        let mut moves = Vec::new();
        while let Some((parent, mv)) = self.nodes[idx].1 {
            moves.push(mv);
            idx = parent;
        }
        moves.reverse();
        moves
    }
}

fn state_key(f: &Factorization) -> StateKey {
    f.entries().iter().map(garside::normal_form).collect()
}

/// Bidirectional breadth-first search for a certificate connecting two
/// factorizations of the same element.
///
/// States are keyed by the sequence of entry normal forms, so tuples that
/// agree semantically deduplicate. Expansion order is deterministic:
/// ascending move index, forward before inverse, and the side with the
/// smaller frontier expands first (source side on ties). `max_depth`
/// bounds the length of the returned certificate; running out of depth is
/// reported as [`Error::DepthExhausted`], which is weaker than a claim of
/// inequivalence, while exceeding `max_states` is [`Error::BudgetExhausted`].
pub fn orbit_search(
    f1: &Factorization,
    f2: &Factorization,
    max_depth: usize,
    max_states: usize,
) -> Result<Certificate, Error> {
    if f1.n() != f2.n() {
        return Err(Error::StrandMismatch {
            left: f1.n(),
            right: f2.n(),
        });
    }
    if f1.len() != f2.len() {
        return Err(Error::LengthMismatch {
            left: f1.len(),
            right: f2.len(),
        });
    }
    if !garside::equal(&f1.product(), &f2.product())? {
        return Err(Error::NotEquivalent(
            "tuple products differ".to_string(),
        ));
    }
    let m = f1.len();
    let start_key = state_key(f1);
    let target_key = state_key(f2);
    if start_key == target_key {
        return Ok(Certificate::empty(m));
    }

    let mut fwd = SearchSide::new(f1.clone());
    let mut bwd = SearchSide::new(f2.clone());

    let assemble = |fwd: &SearchSide, bwd: &SearchSide, f_idx: usize, b_idx: usize| {
        let mut moves = fwd.path_moves(f_idx);
        let back = bwd.path_moves(b_idx);
        moves.extend(back.into_iter().rev().map(|mv| mv.flipped()));
        Certificate {
            source_length: m,
            moves,
        }
    };

    loop {
        if fwd.depth + bwd.depth >= max_depth {
            return Err(Error::DepthExhausted { depth: max_depth });
        }
        let expand_fwd = fwd.frontier.len() <= bwd.frontier.len();
        let (side, other) = if expand_fwd {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let mut next_frontier = Vec::new();
        let mut meet: Option<(usize, usize)> = None;
        'level: for &idx in &side.frontier {
            let node = side.nodes[idx].0.clone();
            for k in 1..m {
                for direction in [MoveDirection::Forward, MoveDirection::Inverse] {
                    let mv = HurwitzMove { k, direction };
                    let neighbor = shorten_entries(apply_move(&node, &mv)?);
                    let key = state_key(&neighbor);
                    if side.index.contains_key(&key) {
                        continue;
                    }
                    let new_idx = side.nodes.len();
                    side.nodes.push((neighbor, Some((idx, mv))));
                    side.index.insert(key.clone(), new_idx);
                    if side.nodes.len() + other.nodes.len() > max_states {
                        return Err(Error::BudgetExhausted { budget: max_states });
                    }
                    if let Some(&other_idx) = other.index.get(&key) {
                        meet = Some((new_idx, other_idx));
                        break 'level;
                    }
                    next_frontier.push(new_idx);
                }
            }
        }
        if let Some((new_idx, other_idx)) = meet {
            let cert = if expand_fwd {
                assemble(&fwd, &bwd, new_idx, other_idx)
            } else {
                assemble(&fwd, &bwd, other_idx, new_idx)
            };
            return Ok(cert);
        }
        side.frontier = next_frontier;
        side.depth += 1;
        if side.frontier.is_empty() {
            // The whole reachable orbit on this side was enumerated
            // without meeting the other side.
            return Err(Error::DepthExhausted { depth: max_depth });
        }
    }
}
