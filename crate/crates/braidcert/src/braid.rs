//! Words in the Artin generators and the projection to the symmetric group.
//!
//! A braid on `n` strands is written as a word in the generators `1..=n-1`;
//! a negative letter denotes the inverse generator. Words are plain data:
//! the only rewriting done here is free reduction (cancelling adjacent
//! inverse pairs). Semantic equality lives in [`crate::garside`].

use crate::Error;

/// A word in the Artin generators of `B_n`.
///
/// Letters are nonzero integers with `1 <= |letter| <= n-1`; `+i` is the
/// positive crossing of strands `i` and `i+1`, `-i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::GeneratorRange {
                    index: l as i64,
                    n,
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// The empty word.
    pub fn identity(n: usize) -> Result<Self, Error> {
        BraidWord::new(n, Vec::new())
    }

    /// The single-letter word for the generator `i` (1-based).
    pub fn generator(n: usize, i: usize) -> Result<Self, Error> {
        BraidWord::new(n, vec![i as i32])
    }

    /// Parses whitespace-separated signed generator indices.
    ///
    /// The strand count is supplied out of band; the parsed word is not
    /// freely reduced.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::StrandCount(n));
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let l: i32 = token.parse().map_err(|_| Error::ParseToken {
                token: token.to_string(),
            })?;
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::ParseToken {
                    token: token.to_string(),
                });
            }
            letters.push(l);
        }
        BraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Cancels adjacent inverse pairs until none remain.
    ///
    /// Free reduction is confluent, so the result is the unique reduced
    /// word for the same element of the free group on the letters.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            n: self.n,
            letters: out,
        }
    }

    /// Reversed word with every letter negated.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Juxtaposition followed by free reduction.
    pub fn concat(&self, other: &Self) -> Result<Self, Error> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            n: self.n,
            letters,
        }
        .free_reduce())
    }

    /// Conjugation, written `a[b] = b⁻¹ · a · b`.
    ///
    /// The direction matters everywhere in this crate: conjugating by `b`
    /// and then by `c` is the same as conjugating by `b · c`. An inverse
    /// Hurwitz move on the pair `(u, v)` produces `(v, u[v])` under this
    /// convention.
    pub fn conjugate_by(&self, b: &Self) -> Result<Self, Error> {
        b.inverse().concat(self)?.concat(b)
    }

    /// The word repeated `k` times (no reduction needed for our callers,
    /// but reduction is applied for uniformity).
    pub fn repeat(&self, k: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            n: self.n,
            letters,
        }
        .free_reduce()
    }

    /// Serializes back to the whitespace-separated text form.
    pub fn to_text(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Image under the projection `B_n -> S_n` sending generator `i` to the
    /// adjacent transposition `(i, i+1)`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &l in &self.letters {
            p = p.then(&Permutation::adjacent_transposition(
                self.n,
                l.unsigned_abs() as usize,
            ));
        }
        p
    }
}

/// The positive half-twist word `(σ₁)(σ₂σ₁)…(σ_{n−1}…σ₁)`.
///
/// Its square is central and equals the flattened full-twist
/// factorization `(σ₁⋯σ_{n−1})ⁿ`; that identity is asserted in tests, not
/// assumed.
pub fn half_twist_word(n: usize) -> Result<BraidWord, Error> {
    if n < 2 {
        return Err(Error::StrandCount(n));
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for k in (1..=i).rev() {
            letters.push(k as i32);
        }
    }
    BraidWord::new(n, letters)
}

/// A permutation of `{0, …, n-1}` stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    pub(crate) images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping `i-1` and `i` (0-based), i.e. the image
    /// of the generator `i` (1-based).
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The order-reversing permutation `i ↦ n-1-i`, the image of the
    /// half-twist.
    pub fn order_reversal(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Internal(format!(
                    "not a bijection on 0..{n}: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    /// Composition in diagram order: apply `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when `images[i-1] > images[i]` (1-based adjacent index `i`),
    /// i.e. the generator `i` is a left divisor of this permutation braid.
    pub(crate) fn descends_at(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word for the permutation, recorded by bubble sort.
    ///
    /// The letters multiply left to right to this permutation, and the
    /// word length equals the inversion count.
    pub fn reduced_word(&self) -> Vec<i32> {
        let mut arr = self.images.clone();
        let mut word = Vec::with_capacity(self.inversions());
        loop {
            let mut swapped = false;
            for p in 0..arr.len().saturating_sub(1) {
                if arr[p] > arr[p + 1] {
                    arr.swap(p, p + 1);
                    word.push((p + 1) as i32);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word
    }

    /// Cycle lengths in decreasing order; a cheap conjugacy invariant of
    /// the underlying symmetric group element.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }
}
