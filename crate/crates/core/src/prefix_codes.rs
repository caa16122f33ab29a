//! Finite maximal prefix codes and their prefix trees.
//!
//! A maximal prefix code is a finite antichain of words whose prefix tree is
//! complete: every inner vertex has all `k` children. These codes are exactly
//! the minimal generating sets of the finitely generated essential right
//! ideals of the free monoid. The counting identities `|P| = 1 + (k-1) i` and
//! `|V| = 1 + k i`, with `i` the number of inner vertices, hold throughout
//! and are checked by the test suite.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::riaut::RiAutElem;
use crate::words::{dict_compare, is_prefix, prefix_comparable, Alphabet, Word};

/// A finite maximal prefix code, stored sorted in dictionary order.
///
/// Two codes are equal iff they contain the same words over the same
/// alphabet; input order is irrelevant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MaximalPrefixCode {
    alphabet: Alphabet,
    words: Vec<Word>,
}

/// Prefix-tree census of a maximal prefix code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixTreeStats {
    /// The inner vertices, i.e. the strict prefixes of the code words.
    pub inner_vertices: BTreeSet<Word>,
    /// The leaves of the inner tree: inner vertices none of whose children
    /// are inner.
    pub inner_leaves: BTreeSet<Word>,
    pub leaf_count: usize,
    pub inner_count: usize,
    pub vertex_count: usize,
}

impl MaximalPrefixCode {
    /// Validates a set of words as a maximal prefix code.
    ///
    /// The input is treated as a set: it is sorted and deduplicated. Fails
    /// with `NotAPrefixCode` if two words are prefix-comparable and with
    /// `NotMaximal` if some inner vertex lacks a child.
    pub fn validate(alphabet: Alphabet, words: Vec<Word>) -> Result<Self, Error> {
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        for w in &words {
            w.check_letters(&alphabet)?;
        }
        let mut words = words;
        words.sort();
        for pair in words.windows(2) {
            if pair[0] == pair[1] || is_prefix(&pair[0], &pair[1]) {
                return Err(Error::NotAPrefixCode(
                    pair[0].to_string(),
                    pair[1].to_string(),
                ));
            }
        }
        // In dictionary order any prefix-comparable pair has an adjacent
        // witness, so the antichain check above is complete.
        let mut vertices: BTreeSet<Word> = BTreeSet::new();
        for w in &words {
            for p in w.prefixes() {
                vertices.insert(p);
            }
        }
        let code_set: BTreeSet<&Word> = words.iter().collect();
        for v in &vertices {
            if code_set.contains(v) {
                continue;
            }
            for l in alphabet.letters() {
                let child = v.child(l);
                if !vertices.contains(&child) {
                    return Err(Error::NotMaximal {
                        vertex: v.to_string(),
                        child: child.to_string(),
                    });
                }
            }
        }
        Ok(MaximalPrefixCode { alphabet, words })
    }

    /// The one-word code `{^}` generating the whole free monoid.
    pub fn root(alphabet: Alphabet) -> Self {
        MaximalPrefixCode {
            alphabet,
            words: vec![Word::empty()],
        }
    }

    /// Builds the code whose prefix tree has exactly the given inner
    /// vertices. The set must be prefix-closed.
    pub fn from_inner_vertices(alphabet: Alphabet, inner: &BTreeSet<Word>) -> Self {
        if inner.is_empty() {
            return Self::root(alphabet);
        }
        let mut words = Vec::new();
        for v in inner {
            assert!(
                v.parent().is_none_or(|(p, _)| inner.contains(&p)),
                "inner vertex set must be prefix-closed"
            );
            for l in alphabet.letters() {
                let child = v.child(l);
                if !inner.contains(&child) {
                    words.push(child);
                }
            }
        }
        words.sort();
        MaximalPrefixCode { alphabet, words }
    }

    /// The code whose inner tree is the path spelled by `path` (so the code
    /// has `|path| + 1` inner vertices and a single inner leaf).
    pub fn path_code(alphabet: Alphabet, path: &Word) -> Self {
        let inner: BTreeSet<Word> = path.prefixes().collect();
        Self::from_inner_vertices(alphabet, &inner)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The code words in dictionary order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Cardinality; always positive, a valid code is nonempty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search_by(|x| dict_compare(x, w)).is_ok()
    }

    /// Number of inner vertices of the prefix tree.
    pub fn inner_count(&self) -> usize {
        let k = self.alphabet.size() as usize;
        (self.words.len() - 1) / (k - 1)
    }

    /// True iff the right ideal generated by this code contains `w`, i.e.
    /// some code word is a prefix of `w`.
    pub fn ideal_contains(&self, w: &Word) -> bool {
        self.entry_covering(w).is_some()
    }

    /// The unique code word that is a prefix of `w`, with the leftover
    /// suffix, if any.
    pub fn entry_covering(&self, w: &Word) -> Option<(usize, Word)> {
        for p in w.prefixes() {
            if let Ok(idx) = self.words.binary_search_by(|x| dict_compare(x, &p)) {
                return Some((idx, w.strip_prefix(&p).expect("prefix")));
            }
        }
        None
    }

    pub fn stats(&self) -> PrefixTreeStats {
        let mut inner_vertices: BTreeSet<Word> = BTreeSet::new();
        for w in &self.words {
            let mut p = w.clone();
            while let Some((parent, _)) = p.parent() {
                if !inner_vertices.insert(parent.clone()) {
                    break;
                }
                p = parent;
            }
        }
        let inner_leaves: BTreeSet<Word> = inner_vertices
            .iter()
            .filter(|v| {
                self.alphabet
                    .letters()
                    .all(|l| !inner_vertices.contains(&v.child(l)))
            })
            .cloned()
            .collect();
        PrefixTreeStats {
            leaf_count: self.words.len(),
            inner_count: inner_vertices.len(),
            vertex_count: inner_vertices.len() + self.words.len(),
            inner_vertices,
            inner_leaves,
        }
    }

    /// Number of code words strictly to the left of the children block of an
    /// inner leaf `z`, in dictionary order.
    pub fn left_count(&self, z: &Word) -> usize {
        let first_child = z.child(self.alphabet.first());
        self.words.partition_point(|w| w < &first_child)
    }

    /// The inner leaf whose children block starts after exactly `left`
    /// leaves, if one exists.
    pub fn inner_leaf_at(&self, left: usize) -> Option<Word> {
        self.stats()
            .inner_leaves
            .into_iter()
            .find(|z| self.left_count(z) == left)
    }

    /// Replaces the `k` children of the inner leaf `z` by `z` itself.
    pub fn collapse_leaf(&self, z: &Word) -> MaximalPrefixCode {
        debug_assert!(self.stats().inner_leaves.contains(z));
        let mut words: Vec<Word> = self
            .words
            .iter()
            .filter(|w| !(w.len() == z.len() + 1 && is_prefix(z, w)))
            .cloned()
            .collect();
        words.push(z.clone());
        words.sort();
        MaximalPrefixCode {
            alphabet: self.alphabet,
            words,
        }
    }
}

impl fmt::Display for MaximalPrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// All maximal prefix codes with exactly `i` inner vertices, in a fixed
/// leftmost-expansion-first order.
pub fn codes_with_inner_count(alphabet: &Alphabet, i: usize) -> Vec<MaximalPrefixCode> {
    fn rec(alphabet: &Alphabet, i: usize) -> Vec<Vec<Word>> {
        if i == 0 {
            return vec![vec![Word::empty()]];
        }
        let k = alphabet.size() as usize;
        let mut out = Vec::new();
        let mut comp = vec![0usize; k];
        distribute(alphabet, i - 1, 0, &mut comp, &mut out);
        return out;

        fn distribute(
            alphabet: &Alphabet,
            remaining: usize,
            part: usize,
            comp: &mut Vec<usize>,
            out: &mut Vec<Vec<Word>>,
        ) {
            let k = alphabet.size() as usize;
            if part == k - 1 {
                comp[part] = remaining;
                combine(alphabet, comp, 0, &mut Vec::new(), out);
                return;
            }
            for take in (0..=remaining).rev() {
                comp[part] = take;
                distribute(alphabet, remaining - take, part + 1, comp, out);
            }
        }

        fn combine(
            alphabet: &Alphabet,
            comp: &[usize],
            part: usize,
            acc: &mut Vec<Word>,
            out: &mut Vec<Vec<Word>>,
        ) {
            if part == comp.len() {
                out.push(acc.clone());
                return;
            }
            let letter = crate::words::Letter::new(part as u32 + 1);
            for sub in rec(alphabet, comp[part]) {
                let start = acc.len();
                for w in &sub {
                    acc.push(Word::single(letter).concat(w));
                }
                combine(alphabet, comp, part + 1, acc, out);
                acc.truncate(start);
            }
        }
    }

    rec(alphabet, i)
        .into_iter()
        .map(|mut words| {
            words.sort();
            MaximalPrefixCode {
                alphabet: *alphabet,
                words,
            }
        })
        .collect()
}

/// All maximal prefix codes of cardinality `n`, each exactly once, in a
/// deterministic order. Fails with `BadCardinality` unless
/// `n = 1 + (k-1) i` for some `i >= 0`.
pub fn enumerate_codes(alphabet: &Alphabet, n: usize) -> Result<Vec<MaximalPrefixCode>, Error> {
    let k = alphabet.size() as usize;
    if n == 0 || !(n - 1).is_multiple_of(k - 1) {
        return Err(Error::BadCardinality {
            n,
            k: alphabet.size(),
        });
    }
    Ok(codes_with_inner_count(alphabet, (n - 1) / (k - 1)))
}

/// The code generating the intersection of the two essential right ideals:
/// for every prefix-comparable pair `(p, q)` the longer of the two.
pub fn intersect(p: &MaximalPrefixCode, q: &MaximalPrefixCode) -> MaximalPrefixCode {
    assert_eq!(p.alphabet, q.alphabet, "codes over different alphabets");
    let mut words = Vec::new();
    for x in p.words() {
        for y in q.words() {
            if prefix_comparable(x, y) {
                words.push(if x.len() >= y.len() { x.clone() } else { y.clone() });
            }
        }
    }
    words.sort();
    words.dedup();
    MaximalPrefixCode {
        alphabet: p.alphabet,
        words,
    }
}

/// The dictionary-order preserving bijection pairing the i-th smallest word
/// of `p` with the i-th smallest word of `q`.
pub fn canonical_bijection(
    p: &MaximalPrefixCode,
    q: &MaximalPrefixCode,
) -> Result<RiAutElem, Error> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    let pairs = p
        .words()
        .iter()
        .cloned()
        .zip(q.words().iter().cloned())
        .collect();
    RiAutElem::from_pairs(p.alphabet(), pairs)
}

/// Builds a code of the same size as `p` that has an inner leaf with the same
/// number of leaves strictly to its left and right as `z` has in `p`, plus at
/// least one additional inner leaf.
///
/// If `p` already has two or more inner leaves it is returned unchanged.
/// Otherwise the inner tree of `p` is a path spelled by `z`, and the
/// hypothesis `|p| > 1 + (k-1)(k+1)` is required (`TooSmall` otherwise); the
/// path is rebuilt one edge shorter and a fresh inner leaf is attached so
/// that the left/right leaf counts are preserved.
pub fn two_inner_leaves(
    p: &MaximalPrefixCode,
    z: &Word,
) -> Result<MaximalPrefixCode, Error> {
    let stats = p.stats();
    if !stats.inner_leaves.contains(z) {
        return Err(Error::NotInnerLeaf(z.to_string()));
    }
    if stats.inner_leaves.len() >= 2 {
        return Ok(p.clone());
    }
    let alphabet = p.alphabet();
    let k = alphabet.size() as usize;
    let bound = 1 + (k - 1) * (k + 1);
    if p.len() <= bound {
        return Err(Error::TooSmall {
            size: p.len(),
            bound,
        });
    }
    // Single inner leaf: the inner tree is the path spelled by z, and the
    // size hypothesis gives |z| >= k+1.
    debug_assert!(z.len() > k);
    let a1 = alphabet.first();
    let ak = alphabet.last();
    let letters = z.letters();

    let (new_path, extra) = if let Some(del) = letters.iter().position(|&l| l == a1) {
        let rest: Vec<_> = letters
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != del)
            .map(|(_, &l)| l)
            .collect();
        if let Some(j) = rest.iter().rposition(|&l| l != ak) {
            // Drop one a_1 edge; attach a right sibling after the last
            // non-a_k letter of the shortened path.
            let new_path = Word::from_letters(rest.clone());
            let extra = Word::from_letters(rest[..j].to_vec()).child(rest[j].succ());
            (new_path, extra)
        } else {
            mirror_case(alphabet, letters)?
        }
    } else if letters.contains(&ak) {
        mirror_case(alphabet, letters)?
    } else {
        // No a_1 and no a_k: drop the leading a_j and shift j-1 of the
        // remaining letters up by one to preserve the left leaf count. The
        // first remaining letter is kept unshifted so the new path never
        // starts with a_k, which would swallow the fresh inner leaf.
        let j = letters[0].index() as usize;
        let mut rest: Vec<_> = letters[1..].to_vec();
        debug_assert!(rest.len() >= j);
        for l in rest.iter_mut().take(j).skip(1) {
            *l = l.succ();
        }
        (Word::from_letters(rest), Word::single(ak))
    };

    let mut inner: BTreeSet<Word> = new_path.prefixes().collect();
    debug_assert!(!inner.contains(&extra));
    inner.insert(extra);
    let q = MaximalPrefixCode::from_inner_vertices(alphabet, &inner);
    debug_assert_eq!(q.len(), p.len());
    return Ok(q);

    // z contains a_k and another letter that is not a_1: the left-right
    // mirror of the first case. Drop one a_k edge; attach a left sibling
    // before the last non-a_1 letter of the shortened path.
    fn mirror_case(
        alphabet: Alphabet,
        letters: &[crate::words::Letter],
    ) -> Result<(Word, Word), Error> {
        let a1 = alphabet.first();
        let ak = alphabet.last();
        let del = letters
            .iter()
            .position(|&l| l == ak)
            .expect("case requires an a_k");
        let rest: Vec<_> = letters
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != del)
            .map(|(_, &l)| l)
            .collect();
        let j = rest
            .iter()
            .rposition(|&l| l != a1)
            .expect("case requires another letter besides a_1");
        let new_path = Word::from_letters(rest.clone());
        let extra = Word::from_letters(rest[..j].to_vec()).child(rest[j].pred());
        Ok((new_path, extra))
    }
}

/// All maximal prefix codes `c` with `c` contained in the prefixes of `p`,
/// i.e. whose ideal contains the ideal of `p`. Includes `p` itself and the
/// root code.
pub fn coarsenings(p: &MaximalPrefixCode) -> Vec<MaximalPrefixCode> {
    fn rec(p: &MaximalPrefixCode, v: &Word) -> Vec<Vec<Word>> {
        let mut out = vec![vec![v.clone()]];
        if !p.contains(v) {
            let mut partials: Vec<Vec<Word>> = vec![Vec::new()];
            for l in p.alphabet().letters() {
                let sub = rec(p, &v.child(l));
                let mut next = Vec::new();
                for acc in &partials {
                    for s in &sub {
                        let mut merged = acc.clone();
                        merged.extend(s.iter().cloned());
                        next.push(merged);
                    }
                }
                partials = next;
            }
            out.extend(partials);
        }
        out
    }
    let mut result: Vec<MaximalPrefixCode> = rec(p, &Word::empty())
        .into_iter()
        .map(|mut words| {
            words.sort();
            MaximalPrefixCode {
                alphabet: p.alphabet(),
                words,
            }
        })
        .collect();
    result.sort_by_key(|c| (c.len(), c.to_string()));
    result.dedup();
    result
}
