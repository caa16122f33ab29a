//! General right-ideal homomorphisms: tables over prefix codes that need not
//! be maximal, with images that need not be distinct or incomparable.
//!
//! Unlike the automorphism monoid, this monoid admits a zero (the empty
//! map), and composition can be empty when the ideals miss each other. An
//! element is *prefix-code preserving* when the family of images of its
//! domain code is pairwise prefix-incomparable, two equal images counting as
//! comparable; this family reading (rather than the image set) is what makes
//! prefix-code preservation equivalent to preserving prefix codes inside the
//! whole domain ideal. A uniform-length restriction pushes every image to a
//! common length; its image *set* is then always a prefix code, though a
//! non-injective table keeps duplicate images under any restriction.

use std::fmt;

use crate::error::Error;
use crate::riaut::RiAutElem;
use crate::words::{dict_compare, is_prefix, prefix_comparable, Alphabet, Word};

/// A right-ideal homomorphism with a finite table. The domain column is a
/// prefix code (possibly empty, possibly not maximal); image words are
/// arbitrary.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RiHomElem {
    alphabet: Alphabet,
    pairs: Vec<(Word, Word)>,
}

impl RiHomElem {
    pub fn from_pairs(alphabet: Alphabet, pairs: Vec<(Word, Word)>) -> Result<Self, Error> {
        let mut pairs = pairs;
        pairs.sort_by(|a, b| dict_compare(&a.0, &b.0));
        for (x, y) in &pairs {
            x.check_letters(&alphabet)?;
            y.check_letters(&alphabet)?;
        }
        for pair in pairs.windows(2) {
            if prefix_comparable(&pair[0].0, &pair[1].0) {
                return Err(Error::NotAPrefixCode(
                    pair[0].0.to_string(),
                    pair[1].0.to_string(),
                ));
            }
        }
        Ok(RiHomElem { alphabet, pairs })
    }

    /// The zero of the monoid: the empty map.
    pub fn zero(alphabet: Alphabet) -> Self {
        RiHomElem {
            alphabet,
            pairs: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The domain code (a prefix code, not necessarily maximal).
    pub fn domain_code(&self) -> Vec<Word> {
        self.pairs.iter().map(|p| p.0.clone()).collect()
    }

    pub fn apply(&self, w: &Word) -> Option<Word> {
        for (x, y) in &self.pairs {
            if let Some(s) = w.strip_prefix(x) {
                return Some(y.concat(&s));
            }
        }
        None
    }

    /// The table of `self . other` over the code generating
    /// `Dom(other) ∩ other^{-1}(Dom(self))`. May be empty.
    pub fn compose(&self, other: &RiHomElem) -> RiHomElem {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut pairs = Vec::new();
        for (x, y) in &other.pairs {
            let mut covered = false;
            for (q, img) in &self.pairs {
                if let Some(s) = y.strip_prefix(q) {
                    pairs.push((x.clone(), img.concat(&s)));
                    covered = true;
                    break;
                }
            }
            if !covered {
                for (q, img) in &self.pairs {
                    if let Some(s) = q.strip_prefix(y) {
                        pairs.push((x.concat(&s), img.clone()));
                    }
                }
            }
        }
        RiHomElem::from_pairs(self.alphabet, pairs).expect("refinement of a prefix code")
    }

    /// Minimal generating set of the image ideal: the images of the domain
    /// code, deduplicated, with every word that has a strict prefix among
    /// them removed.
    pub fn image_code(&self) -> Vec<Word> {
        let mut images: Vec<Word> = self.pairs.iter().map(|p| p.1.clone()).collect();
        images.sort();
        images.dedup();
        images
            .iter()
            .filter(|y| {
                !images
                    .iter()
                    .any(|x| x != *y && is_prefix(x, y))
            })
            .cloned()
            .collect()
    }

    /// True iff the family of images of the domain code is pairwise
    /// prefix-incomparable, duplicates counting as comparable.
    pub fn is_pc_preserving(&self) -> bool {
        for (i, (_, y1)) in self.pairs.iter().enumerate() {
            for (_, y2) in &self.pairs[i + 1..] {
                if prefix_comparable(y1, y2) {
                    return false;
                }
            }
        }
        true
    }

    /// The restriction pushing every image to the maximal image length: each
    /// entry `(x, w)` becomes `{(x u, w u) : |w u| = max}`. The image set of
    /// the result lies in a single length level, hence is a prefix code.
    pub fn restrict_to_pc(&self) -> RiHomElem {
        let max_len = self.pairs.iter().map(|p| p.1.len()).max().unwrap_or(0);
        let mut pairs = Vec::new();
        for (x, y) in &self.pairs {
            for u in crate::words::words_of_length(&self.alphabet, max_len - y.len()) {
                pairs.push((x.concat(&u), y.concat(&u)));
            }
        }
        RiHomElem::from_pairs(self.alphabet, pairs).expect("uniform refinement")
    }
}

impl fmt::Display for RiHomElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (x, y)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}->{y}")?;
        }
        write!(f, "]")
    }
}

/// A right-ideal isomorphism between finitely generated (not necessarily
/// essential) right ideals: an injective table whose image family is
/// automatically a prefix code.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RiIsoElem {
    inner: RiHomElem,
}

impl RiIsoElem {
    pub fn from_pairs(alphabet: Alphabet, pairs: Vec<(Word, Word)>) -> Result<Self, Error> {
        let inner = RiHomElem::from_pairs(alphabet, pairs)?;
        let mut images: Vec<&Word> = inner.pairs.iter().map(|p| &p.1).collect();
        images.sort();
        for pair in images.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::NotInjective);
            }
            if prefix_comparable(pair[0], pair[1]) {
                return Err(Error::NotAPrefixCode(
                    pair[0].to_string(),
                    pair[1].to_string(),
                ));
            }
        }
        Ok(RiIsoElem { inner })
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        RiIsoElem {
            inner: RiHomElem::zero(alphabet),
        }
    }

    pub fn as_hom(&self) -> &RiHomElem {
        &self.inner
    }

    pub fn inverse(&self) -> RiIsoElem {
        let pairs = self
            .inner
            .pairs
            .iter()
            .map(|(x, y)| (y.clone(), x.clone()))
            .collect();
        RiIsoElem::from_pairs(self.inner.alphabet, pairs).expect("columns swap")
    }
}

impl From<&RiAutElem> for RiHomElem {
    fn from(phi: &RiAutElem) -> Self {
        RiHomElem {
            alphabet: phi.alphabet(),
            pairs: phi.pairs().to_vec(),
        }
    }
}

impl From<&RiAutElem> for RiIsoElem {
    fn from(phi: &RiAutElem) -> Self {
        RiIsoElem {
            inner: RiHomElem::from(phi),
        }
    }
}

impl fmt::Display for RiIsoElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
