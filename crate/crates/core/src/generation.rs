//! Finite generating sets and constructive factorization over them.
//!
//! The monoid is generated by its elements whose domain codes have at most 3
//! inner vertices; the dictionary-order preserving submonoid by its elements
//! with at most `k+1` inner vertices (table size at most `k^2`). `factor`
//! realizes these bounds constructively: a large table is cut at an inner
//! leaf of its domain code and an inner leaf of its image code, with one or
//! two intermediate code rows inserted, and each factor has exactly one
//! J-level less than the input.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::prefix_codes::{
    canonical_bijection, enumerate_codes, MaximalPrefixCode,
};
use crate::riaut::{GroupElem, RiAutElem};
use crate::words::{Alphabet, Letter, Word};

/// Which monoid the generators live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// The full monoid of right-ideal automorphisms.
    General,
    /// The dictionary-order preserving submonoid.
    Dict,
}

/// A finite generating set together with its inner-vertex bound.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    pub elements: Vec<RiAutElem>,
    pub mode: Mode,
    /// Maximal inner-vertex count of the domain codes: 3 in general mode,
    /// `k+1` in dictionary mode.
    pub bound: usize,
}

/// The inner-vertex bound on generators for the given mode.
pub fn generator_inner_bound(alphabet: &Alphabet, mode: Mode) -> usize {
    match mode {
        Mode::General => 3,
        Mode::Dict => alphabet.size() as usize + 1,
    }
}

/// The standard finite generating set: all elements (all dictionary-order
/// preserving elements, in dict mode) whose domain code has inner-vertex
/// count within the mode bound.
pub fn standard_generators(alphabet: &Alphabet, mode: Mode) -> GeneratingSet {
    let bound = generator_inner_bound(alphabet, mode);
    let mut elements = Vec::new();
    for level in 0..=bound {
        elements.extend(
            crate::green::enumerate_j_class_with_cap(alphabet, level, mode == Mode::Dict, bound)
                .expect("level within bound"),
        );
    }
    GeneratingSet {
        elements,
        mode,
        bound,
    }
}

/// Factors `phi` into generators within the mode bound.
///
/// Returns the factors in application order: `result[0]` applies first, and
/// folding `acc = f.compose(&acc)` over the remainder reproduces `phi`
/// exactly. Elements already within the bound factor as themselves.
pub fn factor(phi: &RiAutElem, mode: Mode) -> Result<Vec<RiAutElem>, Error> {
    if mode == Mode::Dict && !phi.is_dict_preserving() {
        return Err(Error::NotDictPreserving);
    }
    let bound = generator_inner_bound(&phi.alphabet(), mode);
    Ok(factor_rec(phi, mode, bound))
}

/// Recomposes a factor list in application order.
pub fn recompose(factors: &[RiAutElem]) -> Option<RiAutElem> {
    let mut iter = factors.iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, f| f.compose(&acc)))
}

fn factor_rec(phi: &RiAutElem, mode: Mode, bound: usize) -> Vec<RiAutElem> {
    if phi.level() <= bound {
        return vec![phi.clone()];
    }
    let parts = match mode {
        Mode::General => split_general(phi),
        Mode::Dict => split_dict(phi),
    };
    debug_assert_eq!(recompose(&parts).as_ref(), Some(phi), "split must recompose");
    parts
        .iter()
        .flat_map(|part| factor_rec(part, mode, bound))
        .collect()
}

fn smallest_inner_leaf(code: &MaximalPrefixCode) -> Word {
    code.stats()
        .inner_leaves
        .into_iter()
        .next()
        .expect("code at level >= 1 has an inner leaf")
}

/// A code with `i` inner vertices and two distinguished inner leaves: the
/// path `a_1^(i-2)` with the extra inner vertex `a_2`. Requires `i >= 3`.
fn two_leaf_code(alphabet: Alphabet, i: usize) -> (MaximalPrefixCode, Word, Word) {
    assert!(i >= 3);
    let r = Word::from_letters(vec![alphabet.first(); i - 2]);
    let s = Word::single(Letter::new(2));
    let mut inner: BTreeSet<Word> = r.prefixes().collect();
    inner.insert(s.clone());
    (
        MaximalPrefixCode::from_inner_vertices(alphabet, &inner),
        r,
        s,
    )
}

fn is_child_of(w: &Word, parent: &Word) -> bool {
    w.len() == parent.len() + 1 && crate::words::is_prefix(parent, w)
}

/// One factorization step in the full monoid: two factors when the domain
/// cut and the image cut do not share a table column, three otherwise.
fn split_general(phi: &RiAutElem) -> Vec<RiAutElem> {
    let alphabet = phi.alphabet();
    let dom = phi.domain_code();
    let img = phi.image_code();
    let u = smallest_inner_leaf(&dom);
    let v = smallest_inner_leaf(&img);
    let pairs = phi.pairs();
    let overlap = pairs
        .iter()
        .any(|(x, y)| is_child_of(x, &u) && is_child_of(y, &v));
    let (w_code, r, s) = two_leaf_code(alphabet, phi.level());

    // Assigns the middle row: fixed blocks first, then the leftover columns
    // against the leftover code words, both in dictionary order.
    let assign = |fixed: &BTreeMap<Word, Word>| -> BTreeMap<Word, Word> {
        let used: BTreeSet<&Word> = fixed.values().collect();
        let mut rest_w: Vec<Word> = w_code
            .words()
            .iter()
            .filter(|w| !used.contains(w))
            .cloned()
            .collect();
        rest_w.sort();
        let mut m = fixed.clone();
        let mut next = rest_w.into_iter();
        for (x, _) in pairs {
            if !m.contains_key(x) {
                m.insert(x.clone(), next.next().expect("size match"));
            }
        }
        m
    };

    if !overlap {
        let mut fixed = BTreeMap::new();
        for l in alphabet.letters() {
            fixed.insert(u.child(l), r.child(l));
        }
        for (x, y) in pairs {
            if let Some((_, l)) = y.parent() {
                if is_child_of(y, &v) {
                    fixed.insert(x.clone(), s.child(l));
                }
            }
        }
        let m2 = assign(&fixed);

        let mut psi1 = vec![(u.clone(), r.clone())];
        psi1.extend(
            pairs
                .iter()
                .filter(|(x, _)| !is_child_of(x, &u))
                .map(|(x, _)| (x.clone(), m2[x].clone())),
        );
        let mut psi2 = vec![(s.clone(), v.clone())];
        psi2.extend(
            pairs
                .iter()
                .filter(|(_, y)| !is_child_of(y, &v))
                .map(|(x, y)| (m2[x].clone(), y.clone())),
        );
        vec![
            RiAutElem::from_pairs_unchecked(alphabet, psi1),
            RiAutElem::from_pairs_unchecked(alphabet, psi2),
        ]
    } else {
        // The k free columns hosting the second inner-leaf block, smallest
        // domain words first.
        let free: Vec<&(Word, Word)> = pairs
            .iter()
            .filter(|(x, y)| !is_child_of(x, &u) && !is_child_of(y, &v))
            .take(alphabet.size() as usize)
            .collect();
        assert_eq!(free.len(), alphabet.size() as usize, "not enough columns");

        let mut fixed2 = BTreeMap::new();
        for l in alphabet.letters() {
            fixed2.insert(u.child(l), r.child(l));
        }
        for (j, (x, _)) in free.iter().enumerate() {
            fixed2.insert(x.clone(), s.child(Letter::new(j as u32 + 1)));
        }
        let m2 = assign(&fixed2);

        let mut fixed3 = BTreeMap::new();
        for (x, y) in pairs {
            if let Some((_, l)) = y.parent() {
                if is_child_of(y, &v) {
                    fixed3.insert(x.clone(), r.child(l));
                }
            }
        }
        for (j, (x, _)) in free.iter().enumerate() {
            fixed3.insert(x.clone(), s.child(Letter::new(j as u32 + 1)));
        }
        let m3 = assign(&fixed3);

        let free_set: BTreeSet<&Word> = free.iter().map(|(x, _)| x).collect();
        let mut psi1 = vec![(u.clone(), r.clone())];
        psi1.extend(
            pairs
                .iter()
                .filter(|(x, _)| !is_child_of(x, &u))
                .map(|(x, _)| (x.clone(), m2[x].clone())),
        );
        let mut psi2 = vec![(s.clone(), s.clone())];
        psi2.extend(
            pairs
                .iter()
                .filter(|(x, _)| !free_set.contains(x))
                .map(|(x, _)| (m2[x].clone(), m3[x].clone())),
        );
        let mut psi3 = vec![(r.clone(), v.clone())];
        psi3.extend(
            pairs
                .iter()
                .filter(|(_, y)| !is_child_of(y, &v))
                .map(|(x, y)| (m3[x].clone(), y.clone())),
        );
        vec![
            RiAutElem::from_pairs_unchecked(alphabet, psi1),
            RiAutElem::from_pairs_unchecked(alphabet, psi2),
            RiAutElem::from_pairs_unchecked(alphabet, psi3),
        ]
    }
}

/// One factorization step in the dictionary-order preserving submonoid.
///
/// Every dictionary-order preserving table is the canonical bijection of its
/// two codes, so a factorization is a chain of codes of the same size in
/// which consecutive codes share an inner-leaf position: collapsing each
/// canonical step at that shared position gives factors one J-level down,
/// and the chain recomposes exactly provided the first two collapse
/// positions differ (the first collapsed block is then re-split by the
/// second factor). The chain is the shortest walk, in the graph of position
/// pairs realized by inner leaves of a single size-`n` code, from a cut
/// position of the domain code to one of the image code.
fn split_dict(phi: &RiAutElem) -> Vec<RiAutElem> {
    let alphabet = phi.alphabet();
    let k = alphabet.size() as usize;
    let n = phi.size();
    let dom = phi.domain_code();
    let img = phi.image_code();

    // Witness code for every ordered pair of inner-leaf positions.
    let codes = enumerate_codes(&alphabet, n).expect("valid size");
    let mut witness: BTreeMap<(usize, usize), MaximalPrefixCode> = BTreeMap::new();
    for c in &codes {
        let positions: Vec<usize> = c
            .stats()
            .inner_leaves
            .iter()
            .map(|z| c.left_count(z))
            .collect();
        for &p in &positions {
            for &q in &positions {
                if p != q {
                    witness.entry((p, q)).or_insert_with(|| c.clone());
                }
            }
        }
    }

    let leaf_positions = |code: &MaximalPrefixCode| -> Vec<usize> {
        let mut v: Vec<usize> = code
            .stats()
            .inner_leaves
            .iter()
            .map(|z| code.left_count(z))
            .collect();
        v.sort_unstable();
        v
    };
    let starts = leaf_positions(&dom);
    let targets = leaf_positions(&img);

    // Shortest walk with at least one edge from a start to a target.
    let max_pos = n - k;
    let neighbors = |p: usize| -> Vec<usize> {
        (0..=max_pos)
            .filter(|&q| witness.contains_key(&(p, q)))
            .collect()
    };
    let mut dist: BTreeMap<usize, usize> = starts.iter().map(|&s| (s, 0)).collect();
    let mut pred: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue: std::collections::VecDeque<usize> = starts.iter().copied().collect();
    while let Some(p) = queue.pop_front() {
        for q in neighbors(p) {
            if !dist.contains_key(&q) {
                dist.insert(q, dist[&p] + 1);
                pred.insert(q, p);
                queue.push_back(q);
            }
        }
    }
    let best_path = targets
        .iter()
        .filter(|t| dist.get(t).is_some_and(|&d| d >= 1))
        .min_by_key(|t| (dist[t], **t))
        .map(|&t| {
            let mut path = vec![t];
            let mut cur = t;
            while let Some(&p) = pred.get(&cur) {
                path.push(p);
                cur = p;
                if dist[&cur] == 0 {
                    break;
                }
            }
            path.reverse();
            path
        });
    // A start that is also a target still needs a round trip through some
    // neighbor, since a single collapsed step would extend the element
    // rather than factor it.
    let round_trip = starts
        .iter()
        .filter(|s| targets.contains(s))
        .find_map(|&s| neighbors(s).first().map(|&x| vec![s, x, s]));
    let positions = match (best_path, round_trip) {
        (Some(p), Some(r)) => {
            if r.len() < p.len() {
                r
            } else {
                p
            }
        }
        (Some(p), None) => p,
        (None, Some(r)) => r,
        (None, None) => panic!("no factorization chain at size {n}"),
    };

    let mut chain: Vec<MaximalPrefixCode> = vec![dom];
    for pair in positions.windows(2) {
        chain.push(witness[&(pair[0], pair[1])].clone());
    }
    chain.push(img);

    positions
        .iter()
        .enumerate()
        .map(|(j, &pos)| {
            let from = &chain[j];
            let to = &chain[j + 1];
            let from_leaf = from.inner_leaf_at(pos).expect("cut position");
            let to_leaf = to.inner_leaf_at(pos).expect("cut position");
            canonical_bijection(&from.collapse_leaf(&from_leaf), &to.collapse_leaf(&to_leaf))
                .expect("collapsed codes have equal size")
        })
        .collect()
}

/// A maximally extended element whose domain code is exactly `p`.
///
/// For inner count `i >= 2` the image code is a single-path code chosen so
/// that no block of the dictionary-order bijection can collapse: the path
/// `a_1^(i-1)` puts its one inner leaf at left-count 0, the path
/// `a_1^(i-2) a_2` at left-count 1, and `p` cannot have inner leaves at both
/// positions. The result then lies in the dictionary-order preserving
/// subgroup. Level 1 has no such dictionary-order preserving element at all;
/// in general mode a cyclic letter permutation serves instead.
pub fn max_extended_with_domain(
    p: &MaximalPrefixCode,
    mode: Mode,
) -> Result<GroupElem, Error> {
    let alphabet = p.alphabet();
    let i = p.inner_count();
    match i {
        0 => Ok(GroupElem::identity(alphabet)),
        1 => match mode {
            Mode::Dict => Err(Error::DegenerateLevel),
            Mode::General => {
                let k = alphabet.size();
                let pairs = (1..=k)
                    .map(|m| {
                        (
                            Word::single(Letter::new(m)),
                            Word::single(Letter::new(m % k + 1)),
                        )
                    })
                    .collect();
                let elem = RiAutElem::from_pairs_unchecked(alphabet, pairs);
                debug_assert_eq!(elem.max_extend_table(), elem);
                Ok(GroupElem::from_max_extended(elem))
            }
        },
        _ => {
            let path = if p.inner_leaf_at(1).is_some() {
                Word::from_letters(vec![alphabet.first(); i - 1])
            } else {
                let mut letters = vec![alphabet.first(); i - 2];
                letters.push(Letter::new(2));
                Word::from_letters(letters)
            };
            let q = MaximalPrefixCode::path_code(alphabet, &path);
            let elem = canonical_bijection(p, &q)?;
            assert_eq!(
                elem.max_extend_table(),
                elem,
                "constructed bijection must be maximally extended"
            );
            Ok(GroupElem::from_max_extended(elem))
        }
    }
}
