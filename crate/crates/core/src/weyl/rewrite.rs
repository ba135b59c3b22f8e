//! Normal ordering by exhaustive rewriting `a·a⁺ → a⁺·a + 1`.
//!
//! This is the ground truth the closed-form product and the rook boards are
//! checked against. The result does not depend on which redex is contracted
//! first; [`RewriteStrategy`] exists so tests can exercise that.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Letter, NormalForm, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    /// Always contract the leftmost `a a⁺` of the smallest pending word.
    Leftmost,
    /// Always contract the rightmost `a a⁺` of the largest pending word.
    Rightmost,
    /// Pick the pending word and the redex uniformly at random.
    Random(u64),
}

fn redexes(word: &[Letter]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Letter::Annihilation && w[1] == Letter::Creation)
        .map(|(i, _)| i)
        .collect()
}

fn push(pending: &mut BTreeMap<Vec<Letter>, BigInt>, word: Vec<Letter>, c: &BigInt) {
    let slot = pending.entry(word).or_insert_with(BigInt::zero);
    *slot += c;
}

pub fn rewrite_normal_form(word: &WeylWord, strategy: RewriteStrategy) -> NormalForm {
    let mut rng = match strategy {
        RewriteStrategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pending: BTreeMap<Vec<Letter>, BigInt> = BTreeMap::new();
    pending.insert(word.letters().to_vec(), BigInt::from(1));
    let mut out = NormalForm::zero();

    while !pending.is_empty() {
        let key = match (&strategy, rng.as_mut()) {
            (RewriteStrategy::Rightmost, _) => pending.keys().next_back().cloned(),
            (RewriteStrategy::Random(_), Some(rng)) => {
                let i = rng.gen_range(0..pending.len());
                pending.keys().nth(i).cloned()
            }
            _ => pending.keys().next().cloned(),
        }
        .expect("pending is nonempty");
        let c = pending.remove(&key).expect("key was just read");
        if c.is_zero() {
            continue;
        }
        let spots = redexes(&key);
        if spots.is_empty() {
            let k = key.iter().take_while(|l| **l == Letter::Creation).count();
            out.add_term(k as u32, (key.len() - k) as u32, c);
            continue;
        }
        let at = match (&strategy, rng.as_mut()) {
            (RewriteStrategy::Rightmost, _) => spots[spots.len() - 1],
            (RewriteStrategy::Random(_), Some(rng)) => spots[rng.gen_range(0..spots.len())],
            _ => spots[0],
        };
        let mut swapped = key.clone();
        swapped.swap(at, at + 1);
        let mut contracted = key;
        contracted.drain(at..at + 2);
        push(&mut pending, swapped, &c);
        push(&mut pending, contracted, &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn strategies_agree_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for case in 0..100u64 {
            let len = rng.gen_range(0..=8);
            let word = WeylWord::new(
                (0..len)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            Letter::Creation
                        } else {
                            Letter::Annihilation
                        }
                    })
                    .collect(),
            );
            let reference = rewrite_normal_form(&word, RewriteStrategy::Leftmost);
            assert_eq!(
                rewrite_normal_form(&word, RewriteStrategy::Rightmost),
                reference,
                "{word}"
            );
            assert_eq!(
                rewrite_normal_form(&word, RewriteStrategy::Random(case)),
                reference,
                "{word}"
            );
        }
    }

    #[test]
    fn already_normal_word_is_untouched() {
        let word = super::super::parse_word("a+ a+ a").unwrap();
        let nf = rewrite_normal_form(&word, RewriteStrategy::Leftmost);
        assert_eq!(nf, NormalForm::monomial(2, 1, BigInt::from(1)));
    }
}
