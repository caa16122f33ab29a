//! Elements of the inverse monoid of right-ideal automorphisms, represented
//! by their tables, and the Thompson-Higman group elements obtained by
//! maximal essential extension.
//!
//! A table is a finite bijection between two maximal prefix codes; it
//! determines an isomorphism between the essential right ideals the codes
//! generate. Maps act on the left and composition is right-to-left:
//! `f.compose(&g)` applies `g` first. Two tables are the same element iff
//! they are equal as sets of pairs; an element and its maximal extension are
//! distinct elements of the monoid.

use std::fmt;

use crate::error::Error;
use crate::prefix_codes::MaximalPrefixCode;
use crate::words::{dict_compare, Alphabet, Word};

/// A right-ideal automorphism with a finite table.
///
/// Stored as the list of (domain, image) pairs sorted by dictionary order of
/// the domain column; this is also the canonical serialization order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RiAutElem {
    alphabet: Alphabet,
    pairs: Vec<(Word, Word)>,
}

impl RiAutElem {
    /// Validates a table: both columns must be maximal prefix codes of equal
    /// size over `alphabet`.
    pub fn from_pairs(alphabet: Alphabet, pairs: Vec<(Word, Word)>) -> Result<Self, Error> {
        let mut pairs = pairs;
        pairs.sort_by(|a, b| dict_compare(&a.0, &b.0));
        let domain: Vec<Word> = pairs.iter().map(|p| p.0.clone()).collect();
        let image: Vec<Word> = pairs.iter().map(|p| p.1.clone()).collect();
        let dom_code = MaximalPrefixCode::validate(alphabet, domain)?;
        let img_code = MaximalPrefixCode::validate(alphabet, image)?;
        if dom_code.len() != pairs.len() || img_code.len() != pairs.len() {
            // A duplicate in either column would have been caught as a
            // prefix-comparable pair already; this is a belt check.
            return Err(Error::NotInjective);
        }
        Ok(RiAutElem { alphabet, pairs })
    }

    pub(crate) fn from_pairs_unchecked(alphabet: Alphabet, mut pairs: Vec<(Word, Word)>) -> Self {
        pairs.sort_by(|a, b| dict_compare(&a.0, &b.0));
        let elem = RiAutElem { alphabet, pairs };
        debug_assert!(
            RiAutElem::from_pairs(alphabet, elem.pairs.clone()).is_ok(),
            "invalid table constructed internally: {elem}"
        );
        elem
    }

    /// The identity map on the whole free monoid, `[^->^]`.
    pub fn identity(alphabet: Alphabet) -> Self {
        RiAutElem {
            alphabet,
            pairs: vec![(Word::empty(), Word::empty())],
        }
    }

    /// The partial identity on the ideal generated by `code`.
    pub fn idempotent_on(code: &MaximalPrefixCode) -> Self {
        RiAutElem {
            alphabet: code.alphabet(),
            pairs: code
                .words()
                .iter()
                .map(|w| (w.clone(), w.clone()))
                .collect(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Table entries sorted by dictionary order of the domain column.
    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    /// Table size, i.e. the cardinality of the domain code.
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Inner-vertex count of the domain code; elements with equal level form
    /// one J-class.
    pub fn level(&self) -> usize {
        (self.size() - 1) / (self.alphabet.size() as usize - 1)
    }

    pub fn domain_code(&self) -> MaximalPrefixCode {
        MaximalPrefixCode::validate(self.alphabet, self.pairs.iter().map(|p| p.0.clone()).collect())
            .expect("domain column is a valid code")
    }

    pub fn image_code(&self) -> MaximalPrefixCode {
        MaximalPrefixCode::validate(self.alphabet, self.pairs.iter().map(|p| p.1.clone()).collect())
            .expect("image column is a valid code")
    }

    /// Applies the map to `w`. Returns `None` when `w` is outside the domain
    /// ideal; partiality is semantic here, not an error.
    pub fn apply(&self, w: &Word) -> Option<Word> {
        let (idx, suffix) = self.domain_entry_covering(w)?;
        Some(self.pairs[idx].1.concat(&suffix))
    }

    fn domain_entry_covering(&self, w: &Word) -> Option<(usize, Word)> {
        for p in w.prefixes() {
            if let Ok(idx) = self
                .pairs
                .binary_search_by(|pair| dict_compare(&pair.0, &p))
            {
                return Some((idx, w.strip_prefix(&p).expect("prefix")));
            }
        }
        None
    }

    /// Indices of table entries whose domain word strictly extends `w`.
    fn entries_extending(&self, w: &Word) -> std::ops::Range<usize> {
        // Extensions of w form a contiguous run in dictionary order.
        let lo = self.pairs.partition_point(|p| p.0 < *w);
        let mut hi = lo;
        while hi < self.pairs.len() && crate::words::is_prefix(w, &self.pairs[hi].0) {
            hi += 1;
        }
        lo..hi
    }

    /// The table of `self . other` (`other` applied first).
    ///
    /// Each entry `(x, y)` of `other` either maps on through an entry of
    /// `self` covering `y`, or is split along the entries of `self` that
    /// extend `y`. Essentialness of the ideals keeps the result total.
    pub fn compose(&self, other: &RiAutElem) -> RiAutElem {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut pairs = Vec::new();
        for (x, y) in &other.pairs {
            if let Some((idx, suffix)) = self.domain_entry_covering(y) {
                pairs.push((x.clone(), self.pairs[idx].1.concat(&suffix)));
            } else {
                for idx in self.entries_extending(y) {
                    let (q, img) = &self.pairs[idx];
                    let s = q.strip_prefix(y).expect("extension");
                    pairs.push((x.concat(&s), img.clone()));
                }
            }
        }
        RiAutElem::from_pairs_unchecked(self.alphabet, pairs)
    }

    /// The inverse table (columns swapped).
    pub fn inverse(&self) -> RiAutElem {
        let pairs = self.pairs.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        RiAutElem::from_pairs_unchecked(self.alphabet, pairs)
    }

    /// One essential restriction step: replaces the entry at `x` by its `k`
    /// children pairs.
    pub fn restrict_step(&self, x: &Word) -> Result<RiAutElem, Error> {
        let idx = self
            .pairs
            .binary_search_by(|pair| dict_compare(&pair.0, x))
            .map_err(|_| Error::NotInDomainCode(x.to_string()))?;
        let (dom, img) = self.pairs[idx].clone();
        let mut pairs: Vec<(Word, Word)> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, p)| p.clone())
            .collect();
        for l in self.alphabet.letters() {
            pairs.push((dom.child(l), img.child(l)));
        }
        Ok(RiAutElem::from_pairs_unchecked(self.alphabet, pairs))
    }

    /// All collapsible blocks: pairs `(x, y)` such that every `(x a_j, y a_j)`
    /// is a table entry.
    pub(crate) fn collapse_candidates(&self) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (x, y) in &self.pairs {
            let (Some((px, lx)), Some((py, ly))) = (x.parent(), y.parent()) else {
                continue;
            };
            if lx != ly || !seen.insert((px.clone(), py.clone())) {
                continue;
            }
            let complete = self.alphabet.letters().all(|l| {
                self.pairs
                    .binary_search_by(|pair| dict_compare(&pair.0, &px.child(l)))
                    .map(|idx| self.pairs[idx].1 == py.child(l))
                    .unwrap_or(false)
            });
            if complete {
                out.push((px, py));
            }
        }
        out.sort();
        out
    }

    /// Collapses the block at `(x, y)` into the single entry `(x, y)`.
    pub(crate) fn collapse_at(&self, block: &(Word, Word)) -> RiAutElem {
        let (x, y) = block;
        let mut pairs: Vec<(Word, Word)> = self
            .pairs
            .iter()
            .filter(|(d, i)| {
                !(d.len() == x.len() + 1
                    && crate::words::is_prefix(x, d)
                    && i.len() == y.len() + 1
                    && crate::words::is_prefix(y, i))
            })
            .cloned()
            .collect();
        pairs.push((x.clone(), y.clone()));
        RiAutElem::from_pairs_unchecked(self.alphabet, pairs)
    }

    pub(crate) fn max_extend_table(&self) -> RiAutElem {
        let mut current = self.clone();
        loop {
            let candidates = current.collapse_candidates();
            match candidates.first() {
                Some(block) => current = current.collapse_at(block),
                None => return current,
            }
        }
    }

    /// The unique maximal essential extension, wrapped as a group element.
    pub fn max_extend(&self) -> GroupElem {
        GroupElem {
            rep: self.max_extend_table(),
        }
    }

    /// True iff the map preserves the dictionary order. For tables over
    /// prefix codes this holds iff the image column is sorted whenever the
    /// domain column is.
    pub fn is_dict_preserving(&self) -> bool {
        self.pairs
            .windows(2)
            .all(|p| dict_compare(&p[0].1, &p[1].1) == std::cmp::Ordering::Less)
    }

    /// The natural partial order of the inverse monoid: `self <= other` iff
    /// `self` is a restriction of `other`.
    pub fn natural_leq(&self, other: &RiAutElem) -> bool {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let prefixes: std::collections::HashSet<Word> = self
            .pairs
            .iter()
            .flat_map(|(x, _)| x.prefixes())
            .collect();
        if !other.pairs.iter().all(|(q, _)| prefixes.contains(q)) {
            return false;
        }
        self.pairs
            .iter()
            .all(|(x, y)| other.apply(x).as_ref() == Some(y))
    }

    /// True iff the table is a partial identity `id_{PA*}`.
    pub fn is_partial_identity(&self) -> bool {
        self.pairs.iter().all(|(x, y)| x == y)
    }
}

impl fmt::Display for RiAutElem {
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

/// An element of the Thompson-Higman group `G_{k,1}`: a maximally extended
/// table. Dictionary-order preserving elements form the subgroup `F_{k,1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElem {
    rep: RiAutElem,
}

impl GroupElem {
    pub fn identity(alphabet: Alphabet) -> Self {
        GroupElem {
            rep: RiAutElem::identity(alphabet),
        }
    }

    /// Wraps a table already known to be maximally extended.
    pub(crate) fn from_max_extended(rep: RiAutElem) -> Self {
        debug_assert_eq!(rep.max_extend_table(), rep);
        GroupElem { rep }
    }

    /// The canonical maximally extended table.
    pub fn rep(&self) -> &RiAutElem {
        &self.rep
    }

    pub fn into_rep(self) -> RiAutElem {
        self.rep
    }

    pub fn alphabet(&self) -> Alphabet {
        self.rep.alphabet()
    }

    /// Group multiplication: compose, then maximally extend.
    pub fn multiply(&self, other: &GroupElem) -> GroupElem {
        self.rep.compose(&other.rep).max_extend()
    }

    pub fn inverse(&self) -> GroupElem {
        // Collapse blocks are column-symmetric, so the inverse of a
        // maximally extended table is maximally extended.
        GroupElem::from_max_extended(self.rep.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.rep.size() == 1
    }

    pub fn is_dict_preserving(&self) -> bool {
        self.rep.is_dict_preserving()
    }

    /// Deterministic ordering key: table size, then serialized form.
    pub fn sort_key(&self) -> (usize, String) {
        (self.rep.size(), self.rep.to_string())
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}
