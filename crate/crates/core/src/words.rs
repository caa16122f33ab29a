//! The free monoid over a finite ordered alphabet: words, the prefix
//! relation, and the dictionary order.
//!
//! Letters are identified by their 1-based index in the alphabet order
//! `a_1 < a_2 < ... < a_k`. The empty word is rendered as `^` in text I/O so
//! that empty fields are never ambiguous.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// A finite ordered alphabet `a_1 < ... < a_k` with `k >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    k: u32,
}

impl Alphabet {
    pub fn new(k: u32) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::InvalidAlphabet(k));
        }
        Ok(Alphabet { k })
    }

    /// Number of letters.
    pub fn size(&self) -> u32 {
        self.k
    }

    /// All letters in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.k).map(Letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.0 >= 1 && letter.0 <= self.k
    }

    /// The smallest letter `a_1`.
    pub fn first(&self) -> Letter {
        Letter(1)
    }

    /// The largest letter `a_k`.
    pub fn last(&self) -> Letter {
        Letter(self.k)
    }
}

/// A letter, identified by its 1-based index in the alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u32);

impl Letter {
    pub fn new(index: u32) -> Self {
        assert!(index >= 1, "letter indices are 1-based");
        Letter(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    /// The next letter in alphabet order.
    pub fn succ(self) -> Letter {
        Letter(self.0 + 1)
    }

    /// The previous letter in alphabet order.
    pub fn pred(self) -> Letter {
        assert!(self.0 > 1);
        Letter(self.0 - 1)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 <= 26 {
            write!(f, "{}", (b'a' + (self.0 - 1) as u8) as char)
        } else {
            write!(f, "({})", self.0)
        }
    }
}

/// A word of the free monoid: a finite sequence of letters, possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Concatenation `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The child word `self . letter`.
    pub fn child(&self, letter: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    /// Splits off the last letter, if any.
    pub fn parent(&self) -> Option<(Word, Letter)> {
        let (&last, init) = self.0.split_last()?;
        Some((Word(init.to_vec()), last))
    }

    /// The suffix `s` with `self = x . s`, when `x` is a prefix of `self`.
    pub fn strip_prefix(&self, x: &Word) -> Option<Word> {
        if self.0.len() < x.0.len() || self.0[..x.0.len()] != x.0[..] {
            return None;
        }
        Some(Word(self.0[x.0.len()..].to_vec()))
    }

    /// All prefixes of `self`, from the empty word to `self` itself.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.0.len()).map(move |n| Word(self.0[..n].to_vec()))
    }

    /// Checks that every letter belongs to `alphabet`.
    pub fn check_letters(&self, alphabet: &Alphabet) -> Result<(), Error> {
        for &l in &self.0 {
            if !alphabet.contains(l) {
                return Err(Error::LetterOutOfRange {
                    index: l.index(),
                    k: alphabet.size(),
                });
            }
        }
        Ok(())
    }
}

/// True iff `x` is a prefix of `y`, i.e. `x s = y` for some word `s`.
pub fn is_prefix(x: &Word, y: &Word) -> bool {
    x.0.len() <= y.0.len() && y.0[..x.0.len()] == x.0[..]
}

/// True iff `x` is a prefix of `y` or `y` is a prefix of `x`.
pub fn prefix_comparable(x: &Word, y: &Word) -> bool {
    is_prefix(x, y) || is_prefix(y, x)
}

/// The dictionary order on words.
///
/// Prefix-comparable words are ordered by the prefix order (a prefix comes
/// before its extensions). Otherwise, writing `u = p a_i x` and `v = p a_j y`
/// with `p` the longest common prefix, the order is that of `a_i` vs `a_j`.
pub fn dict_compare(u: &Word, v: &Word) -> Ordering {
    let common = u
        .0
        .iter()
        .zip(v.0.iter())
        .take_while(|(a, b)| a == b)
        .count();
    match (u.0.get(common), v.0.get(common)) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(a), Some(b)) => a.cmp(b),
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        dict_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "^");
        }
        for &l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// All words of exactly the given length, in dictionary order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet.size() as usize);
        for w in &out {
            for l in alphabet.letters() {
                next.push(w.child(l));
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `max_len`, in length-then-dictionary order.
pub fn words_up_to_length(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for n in 0..=max_len {
        out.extend(words_of_length(alphabet, n));
    }
    out
}
