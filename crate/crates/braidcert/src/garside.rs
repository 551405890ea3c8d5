//! Left-greedy normal form over permutation braids.
//!
//! Every element of `B_n` has a unique expression `Δ^r · A₁ ⋯ A_k` where Δ
//! is the half twist, each `A_i` is a permutation braid (a positive braid
//! in which every pair of strands crosses at most once, identified with its
//! underlying permutation), no factor is trivial or Δ, and every adjacent
//! pair is left-weighted: every generator that starts `A_{i+1}` already
//! finishes `A_i`. Two words are equal in `B_n` exactly when their normal
//! forms agree component-wise, which makes the normal form both the
//! equality oracle and the source of the `Δ^r · (positive part)`
//! decomposition used by the certificate generators.
//!
//! The computation is the classical local one: convert each letter to a
//! permutation-braid factor (negative letters contribute `Δ⁻¹` times the
//! complementary factor, and the `Δ⁻¹` is commuted to the front through
//! the flip automorphism), then repeatedly fix adjacent pairs by sliding
//! generators leftward until every pair is left-weighted.

use crate::braid::{half_twist_word, BraidWord, Permutation};
use crate::Error;

/// Canonical form `Δ^r · A₁ ⋯ A_k` of a braid word.
///
/// Comparing two `NormalForm` values for equality decides the word
/// problem.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    n: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Number of canonical factors (the canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// A word spelling this normal form: `|r|` copies of the half-twist
    /// word (inverted when `r < 0`) followed by a reduced word per factor.
    pub fn canonical_word(&self) -> BraidWord {
        let delta = half_twist_word(self.n).expect("normal form has n >= 2");
        let mut letters: Vec<i32> = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(delta.letters());
            }
        } else {
            let inv = delta.inverse();
            for _ in 0..-self.delta_power {
                letters.extend_from_slice(inv.letters());
            }
        }
        for f in &self.factors {
            letters.extend(f.reduced_word());
        }
        BraidWord::new(self.n, letters)
            .expect("factor words are in range")
            .free_reduce()
    }
}

/// Conjugation by the half twist: the image of generator `i` is generator
/// `n - i`. On permutation braids this is conjugation by the order
/// reversal.
fn flip(p: &Permutation) -> Permutation {
    let rev = Permutation::order_reversal(p.n());
    rev.then(p).then(&rev)
}

/// Slides generators from the front of `b` to the back of `a` until the
/// pair is left-weighted. Returns true when anything moved.
fn fix_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.n();
    let mut moved = false;
    loop {
        let inv_a = a.inverse();
        let mut pick = None;
        for i in 1..n {
            // i starts b but does not finish a.
            if b.descends_at(i) && inv_a.images[i - 1] < inv_a.images[i] {
                pick = Some(i);
                break;
            }
        }
        let Some(i) = pick else { break };
        // a · σ_i : swap the positions holding values i-1 and i.
        a.images.swap(inv_a.images[i - 1], inv_a.images[i]);
        // σ_i⁻¹ · b : swap the entries at positions i-1 and i.
        b.images.swap(i - 1, i);
        moved = true;
    }
    moved
}

/// Repeated left-to-right passes of pair fixing until every adjacent pair
/// is left-weighted. Identity factors are dropped as they appear; each fix
/// moves letters strictly leftward, so the passes terminate.
fn left_weight(factors: &mut Vec<Permutation>) {
    factors.retain(|f| !f.is_identity());
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < factors.len() {
            let (head, tail) = factors.split_at_mut(i + 1);
            let moved = fix_pair(&mut head[i], &mut tail[0]);
            if factors[i + 1].is_identity() {
                factors.remove(i + 1);
                changed = true;
                continue;
            }
            if moved {
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
}

/// Computes the left-greedy normal form of a word.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.n();
    let reversal = Permutation::order_reversal(n);
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            factors.push(Permutation::adjacent_transposition(n, i));
        } else {
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹); commuting Δ⁻¹ to the front flips
            // every factor accumulated so far.
            delta_power -= 1;
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            let u = reversal.then(&Permutation::adjacent_transposition(n, i));
            if !u.is_identity() {
                factors.push(u);
            }
        }
    }
    left_weight(&mut factors);
    while factors.first() == Some(&reversal) {
        delta_power += 1;
        factors.remove(0);
    }
    NormalForm {
        n,
        delta_power,
        factors,
    }
}

/// Decides equality in `B_n`.
pub fn equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, Error> {
    if w1.n() != w2.n() {
        return Err(Error::StrandMismatch {
            left: w1.n(),
            right: w2.n(),
        });
    }
    Ok(normal_form(w1) == normal_form(w2))
}

/// Writes `w = Δ^r · pbar` with `pbar` positive and `r` maximal.
///
/// `r` is the normal form's Δ-power and `pbar` spells its canonical
/// factors, so the decomposition recomposes to `w` exactly.
pub fn positive_decomposition(w: &BraidWord) -> (i64, BraidWord) {
    let nf = normal_form(w);
    let mut letters: Vec<i32> = Vec::new();
    for f in nf.factors() {
        letters.extend(f.reduced_word());
    }
    let pbar = BraidWord::new(w.n(), letters).expect("positive factor letters are in range");
    (nf.delta_power(), pbar)
}

/// A positive word whose conjugation action agrees with `b`'s.
///
/// Write `b = Δ^r · pbar`; since `Δ²` is central, multiplying by the
/// smallest central power `Δ^{2m}` with `r + 2m >= 0` does not change how
/// `b` conjugates, and `Δ^{r+2m} · pbar` is positive. Positive inputs are
/// returned unchanged.
pub fn positive_conjugator(b: &BraidWord) -> BraidWord {
    if b.is_positive() {
        return b.clone();
    }
    let (r, pbar) = positive_decomposition(b);
    let m = if r >= 0 { 0 } else { (-r + 1) / 2 };
    let lifted = r + 2 * m;
    debug_assert!(lifted >= 0);
    let delta = half_twist_word(b.n()).expect("word has n >= 2");
    let mut letters = Vec::new();
    for _ in 0..lifted {
        letters.extend_from_slice(delta.letters());
    }
    letters.extend_from_slice(pbar.letters());
    BraidWord::new(b.n(), letters).expect("positive letters are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::{HashMap, HashSet, VecDeque};

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn random_word(rng: &mut StdRng, n: usize, len: usize) -> BraidWord {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::new(n, letters).unwrap()
    }

    #[test]
    fn braid_relations_normalize_identically() {
        assert_eq!(normal_form(&w(3, &[1, 2, 1])), normal_form(&w(3, &[2, 1, 2])));
        assert_eq!(normal_form(&w(4, &[1, 3])), normal_form(&w(4, &[3, 1])));
    }

    #[test]
    fn identity_normal_form() {
        let nf = normal_form(&w(3, &[]));
        assert_eq!(nf.delta_power(), 0);
        assert_eq!(nf.canonical_length(), 0);
        assert!(nf.is_identity());
    }

    #[test]
    fn half_twist_and_full_twist_normal_forms() {
        let nf = normal_form(&half_twist_word(3).unwrap());
        assert_eq!(nf.delta_power(), 1);
        assert_eq!(nf.canonical_length(), 0);
        // (σ₁σ₂)³ is the square of the half twist.
        let full = w(3, &[1, 2, 1, 2, 1, 2]);
        let nf = normal_form(&full);
        assert_eq!(nf.delta_power(), 2);
        assert_eq!(nf.canonical_length(), 0);
    }

    #[test]
    fn equal_examples() {
        assert!(equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(equal(&w(3, &[1, -1]), &w(3, &[])).unwrap());
        assert!(equal(&w(3, &[1, 1, 2, 1]), &w(3, &[1, 2, 1, 2])).unwrap());
        assert!(equal(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn full_twist_is_central() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        for n in 3..=5 {
            let delta2 = half_twist_word(n).unwrap().repeat(2);
            for _ in 0..25 {
                let word = random_word(&mut rng, n, 12);
                let left = delta2.concat(&word).unwrap();
                let right = word.concat(&delta2).unwrap();
                assert!(equal(&left, &right).unwrap());
            }
        }
    }

    #[test]
    fn positive_decomposition_examples() {
        let (r, pbar) = positive_decomposition(&w(3, &[1]));
        assert_eq!(r, 0);
        assert_eq!(pbar, w(3, &[1]));

        let word = w(3, &[-1]);
        let (r, pbar) = positive_decomposition(&word);
        assert_eq!(r, -1);
        assert!(pbar.is_positive());
        assert_eq!(pbar.len(), 2);
        let delta_inv = half_twist_word(3).unwrap().inverse();
        let recomposed = delta_inv.concat(&pbar).unwrap();
        assert!(equal(&recomposed, &word).unwrap());

        let (r, pbar) = positive_decomposition(&w(4, &[]));
        assert_eq!(r, 0);
        assert!(pbar.is_empty());
    }

    #[test]
    fn positive_decomposition_recomposes_randomly() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0002);
        for _ in 0..40 {
            let word = random_word(&mut rng, 4, 10);
            let (r, pbar) = positive_decomposition(&word);
            let delta = half_twist_word(4).unwrap();
            let power = if r >= 0 {
                delta.repeat(r as usize)
            } else {
                delta.inverse().repeat((-r) as usize)
            };
            let recomposed = power.concat(&pbar).unwrap();
            assert!(equal(&recomposed, &word).unwrap());
        }
    }

    #[test]
    fn positive_conjugator_examples() {
        let b = w(3, &[1, 2]);
        assert_eq!(positive_conjugator(&b), b);

        let b = w(3, &[-1]);
        let q = positive_conjugator(&b);
        assert!(q.is_positive());
        // Any positive word acting like σ₁⁻¹ = Δ²·σ₁⁻¹ modulo the center
        // has exponent sum 5.
        assert_eq!(q.len(), 5);
        let a = w(3, &[2]);
        assert!(equal(
            &a.conjugate_by(&q).unwrap(),
            &a.conjugate_by(&b).unwrap()
        )
        .unwrap());

        assert_eq!(positive_conjugator(&w(3, &[])), w(3, &[]));
    }

    #[test]
    fn positive_conjugator_acts_like_original_randomly() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0003);
        for _ in 0..20 {
            let b = random_word(&mut rng, 4, 6);
            let q = positive_conjugator(&b);
            assert!(q.is_positive());
            let a = random_word(&mut rng, 4, 5);
            assert!(equal(
                &a.conjugate_by(&q).unwrap(),
                &a.conjugate_by(&b).unwrap()
            )
            .unwrap());
        }
    }

    /// Independent oracle: the set of positive words reachable from `word`
    /// by single applications of the commutation or triple relation. By
    /// Garside's lemma this is exactly the set of equal positive words.
    fn naive_rewrite_class(word: &[u8], n: usize) -> HashSet<Vec<u8>> {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(cur) = queue.pop_front() {
            let push = |next: Vec<u8>, seen: &mut HashSet<Vec<u8>>, queue: &mut VecDeque<Vec<u8>>| {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            };
            for p in 0..cur.len() {
                if p + 1 < cur.len() {
                    let (a, b) = (cur[p] as i32, cur[p + 1] as i32);
                    if (a - b).abs() > 1 {
                        let mut next = cur.clone();
                        next.swap(p, p + 1);
                        push(next, &mut seen, &mut queue);
                    }
                }
                if p + 2 < cur.len() {
                    let (a, b, c) = (cur[p] as i32, cur[p + 1] as i32, cur[p + 2] as i32);
                    if a == c && (a - b).abs() == 1 {
                        let mut next = cur.clone();
                        next[p] = cur[p + 1];
                        next[p + 1] = cur[p];
                        next[p + 2] = cur[p + 1];
                        push(next, &mut seen, &mut queue);
                    }
                }
            }
            let _ = n;
        }
        seen
    }

    #[test]
    fn equal_matches_naive_rewrite_classes_small() {
        // Exhaustive cross-check in B₄ for positive words of length <= 4:
        // grouping by normal form must coincide with the rewrite classes.
        let n = 4;
        for len in 1..=4usize {
            let mut words = vec![vec![]];
            for _ in 0..len {
                words = words
                    .into_iter()
                    .flat_map(|wrd: Vec<u8>| {
                        (1..n as u8).map(move |g| {
                            let mut next = wrd.clone();
                            next.push(g);
                            next
                        })
                    })
                    .collect();
            }
            let mut class_of: HashMap<Vec<u8>, usize> = HashMap::new();
            let mut next_class = 0;
            for wrd in &words {
                if class_of.contains_key(wrd) {
                    continue;
                }
                for member in naive_rewrite_class(wrd, n) {
                    class_of.insert(member, next_class);
                }
                next_class += 1;
            }
            let as_word = |v: &[u8]| {
                BraidWord::new(n, v.iter().map(|&g| g as i32).collect()).unwrap()
            };
            for w1 in &words {
                for w2 in &words {
                    let oracle = class_of[w1] == class_of[w2];
                    let ours = equal(&as_word(w1), &as_word(w2)).unwrap();
                    assert_eq!(ours, oracle, "disagreement on {w1:?} vs {w2:?}");
                }
            }
        }
    }

    fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        let g = n as i32 - 1;
        prop::collection::vec((1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]), 0..max_len)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_word_roundtrip(word in arb_word(4, 16)) {
            let nf = normal_form(&word);
            prop_assert!(equal(&word, &nf.canonical_word()).unwrap());
            prop_assert_eq!(normal_form(&nf.canonical_word()), nf);
        }

        #[test]
        fn cancellation_is_invisible(word in arb_word(5, 14)) {
            let padded = word.concat(&word.inverse()).unwrap();
            prop_assert!(normal_form(&padded).is_identity());
        }
    }
}
