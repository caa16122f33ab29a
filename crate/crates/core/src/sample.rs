//! Seeded random generation of elements, used by the verification suites
//! and scriptable from tests. All functions are deterministic for a fixed
//! RNG state.

use rand::prelude::IndexedRandom;
use rand::{Rng, RngExt};

use crate::decision::{GenLetter, GenWord};
use crate::prefix_codes::{codes_with_inner_count, MaximalPrefixCode};
use crate::riaut::RiAutElem;
use crate::rihom::{RiHomElem, RiIsoElem};
use crate::words::{Alphabet, Letter, Word};

/// Default seed used by the test suites; printed where results depend on it.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// A uniformly chosen code among those with inner count at most `max_level`
/// (level first, then code, both uniform).
pub fn random_code<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_level: usize,
) -> MaximalPrefixCode {
    let level = rng.random_range(0..=max_level);
    let codes = codes_with_inner_count(alphabet, level);
    codes.choose(rng).expect("nonempty enumeration").clone()
}

/// A random element with domain and image codes of the same random level
/// `<= max_level` and a uniformly random bijection between them.
pub fn random_elem<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_level: usize) -> RiAutElem {
    let level = rng.random_range(0..=max_level);
    let codes = codes_with_inner_count(alphabet, level);
    let p = codes.choose(rng).unwrap();
    let q = codes.choose(rng).unwrap();
    let mut targets: Vec<Word> = q.words().to_vec();
    shuffle(rng, &mut targets);
    let pairs = p.words().iter().cloned().zip(targets).collect();
    RiAutElem::from_pairs_unchecked(*alphabet, pairs)
}

/// A random dictionary-order preserving element (the canonical bijection of
/// a random code pair).
pub fn random_dict_elem<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_level: usize,
) -> RiAutElem {
    let level = rng.random_range(0..=max_level);
    let codes = codes_with_inner_count(alphabet, level);
    let p = codes.choose(rng).unwrap();
    let q = codes.choose(rng).unwrap();
    crate::prefix_codes::canonical_bijection(p, q).expect("equal sizes")
}

/// A random word over indices `0..gen_count`, with occasional inverses.
pub fn random_gen_word<R: Rng>(rng: &mut R, gen_count: usize, len: usize) -> GenWord {
    GenWord(
        (0..len)
            .map(|_| GenLetter {
                index: rng.random_range(0..gen_count),
                inverse: rng.random_range(0..4u8) == 0,
            })
            .collect(),
    )
}

/// A random right-ideal homomorphism: a random subset of a random maximal
/// code as domain, arbitrary short images (duplicates and comparable images
/// are intentionally possible).
pub fn random_rihom<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_level: usize) -> RiHomElem {
    let base = random_code(rng, alphabet, max_level);
    let mut pairs: Vec<(Word, Word)> = Vec::new();
    for x in base.words() {
        if rng.random_range(0..4u8) > 0 {
            pairs.push((x.clone(), random_word(rng, alphabet, 3)));
        }
    }
    RiHomElem::from_pairs(*alphabet, pairs).expect("subset of a code is a code")
}

/// A random right-ideal isomorphism between two random prefix codes of equal
/// size.
pub fn random_riiso<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_level: usize) -> RiIsoElem {
    loop {
        let level = rng.random_range(0..=max_level);
        let codes = codes_with_inner_count(alphabet, level);
        let p = codes.choose(rng).unwrap();
        let q = codes.choose(rng).unwrap();
        let keep: Vec<usize> = (0..p.len())
            .filter(|_| rng.random_range(0..4u8) > 0)
            .collect();
        let mut targets: Vec<Word> = keep.iter().map(|&i| q.words()[i].clone()).collect();
        shuffle(rng, &mut targets);
        let pairs: Vec<(Word, Word)> = keep
            .iter()
            .map(|&i| p.words()[i].clone())
            .zip(targets)
            .collect();
        if let Ok(iso) = RiIsoElem::from_pairs(*alphabet, pairs) {
            return iso;
        }
    }
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| Letter::new(rng.random_range(1..=alphabet.size())))
            .collect(),
    )
}

fn shuffle<R: Rng, T>(rng: &mut R, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, rng.random_range(0..=i));
    }
}
