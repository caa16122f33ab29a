//! The suffix expansion of the Thompson-Higman groups, the semidirect
//! product with the semilattice of essential right ideals, and the
//! homomorphism back down to the right-ideal automorphism monoid.
//!
//! An expansion element is a pair `(g, S)` of a group element and a finite
//! set of group elements containing `g` and the identity; it remembers the
//! set of suffix products of any word evaluating to it. The map `rho` sends
//! `(g, S)` to `g` restricted to the intersection of the domains of the
//! members of `S`; it is a finite-to-one homomorphism onto the monoid when
//! the generating set is rich enough in domain codes.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::prefix_codes::{coarsenings, enumerate_codes, intersect, MaximalPrefixCode};
use crate::riaut::{GroupElem, RiAutElem};


/// An element `(g, S)` of the suffix expansion, with `{g, 1}` always a
/// subset of `S`.
///
/// The trace set is stored sorted by `(table size, serialized table)` so
/// equal elements serialize identically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExpansionElem {
    value: GroupElem,
    trace: Vec<GroupElem>,
}

impl ExpansionElem {
    /// Builds `(value, elems ∪ {value, 1})`.
    pub fn new(value: GroupElem, elems: impl IntoIterator<Item = GroupElem>) -> Self {
        let alphabet = value.alphabet();
        let mut trace: Vec<GroupElem> = elems.into_iter().collect();
        trace.push(value.clone());
        trace.push(GroupElem::identity(alphabet));
        trace.sort_by_key(GroupElem::sort_key);
        trace.dedup();
        ExpansionElem { value, trace }
    }

    /// The generator embedding `γ -> (γ, {γ, 1})`.
    pub fn embed_generator(gamma: &GroupElem) -> Self {
        ExpansionElem::new(gamma.clone(), [])
    }

    pub fn identity(alphabet: crate::words::Alphabet) -> Self {
        ExpansionElem::new(GroupElem::identity(alphabet), [])
    }

    pub fn value(&self) -> &GroupElem {
        &self.value
    }

    pub fn trace(&self) -> &[GroupElem] {
        &self.trace
    }

    /// `(y, T) . (x, S) = (y x, T x ∪ S)`.
    pub fn multiply(&self, x: &ExpansionElem) -> ExpansionElem {
        let value = self.value.multiply(&x.value);
        let moved = self.trace.iter().map(|t| t.multiply(&x.value));
        ExpansionElem::new(value, moved.chain(x.trace.iter().cloned()))
    }

    /// The intersection of the domains of the trace members, as a code.
    pub fn trace_domain(&self) -> MaximalPrefixCode {
        let alphabet = self.value.alphabet();
        self.trace
            .iter()
            .fold(MaximalPrefixCode::root(alphabet), |acc, h| {
                intersect(&acc, &h.rep().domain_code())
            })
    }

    /// `rho (g, S) = g` restricted to the intersection of the domains of the
    /// members of `S`. Lands in the embedded copy of the monoid.
    pub fn rho(&self) -> RiAutElem {
        let code = self.trace_domain();
        let pairs = code
            .words()
            .iter()
            .map(|c| {
                let img = self
                    .value
                    .rep()
                    .apply(c)
                    .expect("trace contains the value, so its domain covers the intersection");
                (c.clone(), img)
            })
            .collect();
        RiAutElem::from_pairs_unchecked(self.value.alphabet(), pairs)
    }
}

impl fmt::Display for ExpansionElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {{", self.value)?;
        for (i, t) in self.trace.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}})")
    }
}

/// An element `(g, PA*)` of the semidirect product of the group with the
/// semilattice of essential right ideals under intersection. Unlike the
/// embedded monoid, the ideal need not be contained in the domain of `g`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemidirectElem {
    pub g: GroupElem,
    pub ideal: MaximalPrefixCode,
}

impl SemidirectElem {
    /// `(g2, P2) * (g1, P1) = (g2 g1, g1^{-1}(P2 A*) ∩ P1 A*)`.
    pub fn multiply(&self, x: &SemidirectElem) -> SemidirectElem {
        SemidirectElem {
            g: self.g.multiply(&x.g),
            ideal: intersect(&preimage_code(&x.g, &self.ideal), &x.ideal),
        }
    }

    /// The embedding of the monoid: `phi -> (max(phi), Dom(phi))`.
    pub fn embed(phi: &RiAutElem) -> SemidirectElem {
        SemidirectElem {
            g: phi.max_extend(),
            ideal: phi.domain_code(),
        }
    }

    /// The retraction back onto the monoid: `g` restricted to the ideal
    /// (splitting table entries where needed).
    pub fn retract(&self) -> RiAutElem {
        let code = intersect(&self.ideal, &self.g.rep().domain_code());
        let pairs = code
            .words()
            .iter()
            .map(|c| (c.clone(), self.g.rep().apply(c).expect("within domain")))
            .collect();
        RiAutElem::from_pairs_unchecked(self.g.alphabet(), pairs)
    }
}

impl fmt::Display for SemidirectElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.g, self.ideal)
    }
}

/// The code generating `g^{-1}(PA* ∩ Im(g))`: the table of `g` is refined
/// until its image column refines `P`, and the domain column is collected.
pub fn preimage_code(g: &GroupElem, p: &MaximalPrefixCode) -> MaximalPrefixCode {
    let mut words = Vec::new();
    for (x, y) in g.rep().pairs() {
        if p.ideal_contains(y) {
            words.push(x.clone());
        } else {
            for q in p.words() {
                if let Some(s) = q.strip_prefix(y) {
                    words.push(x.concat(&s));
                }
            }
        }
    }
    MaximalPrefixCode::validate(g.alphabet(), words)
        .expect("preimage of an essential ideal under a group element is essential")
}

/// The three-generator word whose evaluation maps onto the embedded copy of
/// `delta` under `rho`: `(g, {g,1}) (γ^{-1}, {γ^{-1},1}) (γ, {γ,1})` with
/// `g = max(delta)` and `γ` a generator sharing the domain code of `delta`.
///
/// Returned in product order (the last element applies first); evaluate with
/// [`evaluate_product`].
pub fn lift(delta: &RiAutElem, gamma_set: &[GroupElem]) -> Result<Vec<ExpansionElem>, Error> {
    let dom = delta.domain_code();
    let gamma = gamma_set
        .iter()
        .find(|g| g.rep().domain_code() == dom)
        .ok_or(Error::NoMatchingGenerator)?;
    let g = delta.max_extend();
    Ok(vec![
        ExpansionElem::embed_generator(&g),
        ExpansionElem::embed_generator(&gamma.inverse()),
        ExpansionElem::embed_generator(gamma),
    ])
}

/// Evaluates a product-order list `e_1 · e_2 · ... · e_m` (rightmost factor
/// applies first).
pub fn evaluate_product(word: &[ExpansionElem]) -> Option<ExpansionElem> {
    let mut iter = word.iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, e| acc.multiply(e)))
}

/// All maximally extended elements whose domain code coarsens `p`, i.e.
/// whose domain ideal contains the ideal of `p`.
fn extension_candidates(p: &MaximalPrefixCode) -> Vec<GroupElem> {
    let alphabet = p.alphabet();
    let mut out = Vec::new();
    for cut in coarsenings(p) {
        for target in enumerate_codes(&alphabet, cut.len()).expect("valid size") {
            for perm in crate::green::permutations(cut.len()) {
                let pairs = cut
                    .words()
                    .iter()
                    .enumerate()
                    .map(|(t, x)| (x.clone(), target.words()[perm[t]].clone()))
                    .collect();
                let elem = RiAutElem::from_pairs_unchecked(alphabet, pairs);
                if elem.max_extend_table() == elem {
                    out.push(GroupElem::from_max_extended(elem));
                }
            }
        }
    }
    out.sort_by_key(GroupElem::sort_key);
    out.dedup();
    out
}

/// The full fiber `rho^{-1}(phi)` in the expansion over the whole group:
/// all `(g, S)` with `g = max(phi)`, every member of `S` defined on the
/// domain of `phi`, and the domain intersection exactly `Dom(phi)`. The
/// fiber is finite; elements are returned in a deterministic order.
pub fn rho_fiber(phi: &RiAutElem) -> Vec<ExpansionElem> {
    let g = phi.max_extend();
    let p = phi.domain_code();
    let one = GroupElem::identity(phi.alphabet());
    let candidates = extension_candidates(&p);
    let optional: Vec<&GroupElem> = candidates
        .iter()
        .filter(|h| **h != g && **h != one)
        .collect();
    assert!(
        optional.len() < 63,
        "fiber candidate set too large to enumerate"
    );
    let mut out = Vec::new();
    for mask in 0u64..(1 << optional.len()) {
        let mut trace: Vec<GroupElem> = vec![g.clone(), one.clone()];
        for (bit, h) in optional.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                trace.push((*h).clone());
            }
        }
        let elem = ExpansionElem::new(g.clone(), trace);
        if elem.trace_domain() == p {
            out.push(elem);
        }
    }
    out.sort_by_key(|e| e.to_string());
    out.dedup();
    out
}

/// Bounded breadth-first search for a product of the embedded generators
/// mapping to `phi` under `rho`. Returns the generator indices in product
/// order, or `None` if no product of length at most `max_len` works.
///
/// Membership of `phi` in the image for a *proper* generating set is not
/// otherwise decidable here; this search is the only tool provided.
pub fn search_expansion_word(
    phi: &RiAutElem,
    gamma_set: &[GroupElem],
    max_len: usize,
) -> Option<Vec<usize>> {
    let embedded: Vec<ExpansionElem> = gamma_set
        .iter()
        .map(ExpansionElem::embed_generator)
        .collect();
    let identity = ExpansionElem::identity(phi.alphabet());
    if identity.rho() == *phi {
        return Some(Vec::new());
    }
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut frontier: Vec<(ExpansionElem, Vec<usize>)> = vec![(identity, Vec::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (elem, word) in &frontier {
            for (idx, gen) in embedded.iter().enumerate() {
                let product = elem.multiply(gen);
                if product.rho() == *phi {
                    let mut w = word.clone();
                    w.push(idx);
                    return Some(w);
                }
                if seen.insert(product.to_string()) {
                    let mut w = word.clone();
                    w.push(idx);
                    next.push((product, w));
                }
            }
        }
        frontier = next;
    }
    None
}

/// Applies `rho` to each word element and to the evaluated product; used by
/// tests to confirm multiplicativity on concrete words.
pub fn rho_of_product(word: &[ExpansionElem]) -> Option<RiAutElem> {
    evaluate_product(word).map(|e| e.rho())
}
