//! Word problems and finite quotients.
//!
//! Words over a finite generating set evaluate by plain table composition,
//! which keeps table growth additive per letter, so the word problem of the
//! monoid is decided in polynomial time. The group word problem compares
//! maximally extended canonical forms; the expansion word problem compares
//! the canonical form together with the set of suffix-product values. Rees
//! quotients over the J-chain give finite quotients separating any two
//! distinct elements.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::riaut::{GroupElem, RiAutElem};
use crate::words::Alphabet;

/// One letter of a word over a generating set: a 0-based generator index,
/// optionally inverted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenLetter {
    pub index: usize,
    pub inverse: bool,
}

/// A word over a generating set. Maps act on the left, so evaluation is
/// right-to-left: the last letter applies first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GenWord(pub Vec<GenLetter>);

impl GenWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenLetter] {
        &self.0
    }

    fn check_indices(&self, count: usize) -> Result<(), Error> {
        match self.0.iter().find(|l| l.index >= count) {
            Some(l) => Err(Error::Parse(format!(
                "generator index {} out of range (have {count})",
                l.index + 1
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "^");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}{}", l.index + 1, if l.inverse { "'" } else { "" })?;
        }
        Ok(())
    }
}

/// Evaluates a word in the monoid by composition, right-to-left. The empty
/// word evaluates to the identity.
pub fn eval_word(
    word: &GenWord,
    generators: &[RiAutElem],
    alphabet: &Alphabet,
) -> Result<RiAutElem, Error> {
    word.check_indices(generators.len())?;
    let mut acc = RiAutElem::identity(*alphabet);
    for letter in word.letters() {
        let gen = &generators[letter.index];
        let gen = if letter.inverse { gen.inverse() } else { gen.clone() };
        acc = acc.compose(&gen);
    }
    Ok(acc)
}

/// Word problem of the monoid: table equality of the two evaluations.
pub fn wp_riaut(
    u: &GenWord,
    v: &GenWord,
    generators: &[RiAutElem],
    alphabet: &Alphabet,
) -> Result<bool, Error> {
    Ok(eval_word(u, generators, alphabet)? == eval_word(v, generators, alphabet)?)
}

/// Evaluates a word in the group (compose, then maximally extend, at every
/// step).
pub fn eval_group_word(
    word: &GenWord,
    generators: &[GroupElem],
    alphabet: &Alphabet,
) -> Result<GroupElem, Error> {
    word.check_indices(generators.len())?;
    let mut acc = GroupElem::identity(*alphabet);
    for letter in word.letters() {
        let gen = &generators[letter.index];
        let gen = if letter.inverse { gen.inverse() } else { gen.clone() };
        acc = acc.multiply(&gen);
    }
    Ok(acc)
}

/// Word problem of the group: equality of maximally extended canonical
/// forms.
pub fn wp_group(
    u: &GenWord,
    v: &GenWord,
    generators: &[GroupElem],
    alphabet: &Alphabet,
) -> Result<bool, Error> {
    Ok(eval_group_word(u, generators, alphabet)? == eval_group_word(v, generators, alphabet)?)
}

/// Set word problem of the group, by the and-of-ors truth-table reduction to
/// the word problem: `U = V` iff every member of `U` equals some member of
/// `V` in the group and vice versa (`n * m` word-problem calls each way).
pub fn set_wp(
    us: &[GenWord],
    vs: &[GenWord],
    generators: &[GroupElem],
    alphabet: &Alphabet,
) -> Result<bool, Error> {
    let forward = us
        .iter()
        .map(|u| {
            vs.iter()
                .map(|v| wp_group(u, v, generators, alphabet))
                .try_fold(false, |acc, r| r.map(|b| acc || b))
        })
        .try_fold(true, |acc, r| r.map(|b| acc && b))?;
    let backward = vs
        .iter()
        .map(|v| {
            us.iter()
                .map(|u| wp_group(v, u, generators, alphabet))
                .try_fold(false, |acc, r| r.map(|b| acc || b))
        })
        .try_fold(true, |acc, r| r.map(|b| acc && b))?;
    Ok(forward && backward)
}

/// The group value of a word together with the set of values of all its
/// suffixes (including the empty suffix, i.e. the identity).
pub fn suffix_values(
    word: &GenWord,
    generators: &[GroupElem],
    alphabet: &Alphabet,
) -> Result<(GroupElem, Vec<GroupElem>), Error> {
    word.check_indices(generators.len())?;
    let mut acc = GroupElem::identity(*alphabet);
    let mut values = vec![acc.clone()];
    for letter in word.letters().iter().rev() {
        let gen = &generators[letter.index];
        let gen = if letter.inverse { gen.inverse() } else { gen.clone() };
        acc = gen.multiply(&acc);
        values.push(acc.clone());
    }
    values.sort_by_key(GroupElem::sort_key);
    values.dedup();
    Ok((acc, values))
}

/// Word problem of the suffix expansion over embedded group generators: the
/// top values must agree in the group and the suffix-value sets must be
/// equal as sets.
pub fn wp_expansion(
    u: &GenWord,
    v: &GenWord,
    generators: &[GroupElem],
    alphabet: &Alphabet,
) -> Result<bool, Error> {
    let (tu, su) = suffix_values(u, generators, alphabet)?;
    let (tv, sv) = suffix_values(v, generators, alphabet)?;
    Ok(tu == tv && su == sv)
}

/// Default cap on the number of elements materialized in a Rees quotient.
pub const DEFAULT_REES_CAP: usize = 10_000;

/// The finite Rees quotient at a J-level: all elements of level at most `i`,
/// plus an absorbing zero; a product that leaves the level range is zero.
pub struct ReesQuotient {
    alphabet: Alphabet,
    level: usize,
    elements: Vec<RiAutElem>,
    index: HashMap<RiAutElem, usize>,
    table: Vec<Vec<Option<usize>>>,
}

impl ReesQuotient {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of elements including the zero.
    pub fn order(&self) -> usize {
        self.elements.len() + 1
    }

    /// The nonzero elements in enumeration order.
    pub fn elements(&self) -> &[RiAutElem] {
        &self.elements
    }

    /// The quotient map: an element of level within range maps to itself
    /// (its index), anything else to zero (`None`).
    pub fn project(&self, phi: &RiAutElem) -> Option<usize> {
        self.index.get(phi).copied()
    }

    /// Product in the quotient; `None` is the zero, which is absorbing.
    pub fn product(&self, x: Option<usize>, y: Option<usize>) -> Option<usize> {
        self.table[x?][y?]
    }
}

/// Builds the Rees quotient at J-level `i` with the default element cap.
pub fn rees_quotient(alphabet: &Alphabet, level: usize) -> Result<ReesQuotient, Error> {
    rees_quotient_with_cap(alphabet, level, DEFAULT_REES_CAP)
}

pub fn rees_quotient_with_cap(
    alphabet: &Alphabet,
    level: usize,
    element_cap: usize,
) -> Result<ReesQuotient, Error> {
    let predicted: u128 = (0..=level)
        .map(|i| crate::green::predicted_j_class_size(alphabet, i, false))
        .sum();
    if predicted > element_cap as u128 {
        return Err(Error::TooLarge(format!(
            "Rees quotient would have {predicted} elements, cap is {element_cap}"
        )));
    }
    let elements = crate::green::enumerate_up_to_level(alphabet, level, false, level)?;
    let index: HashMap<RiAutElem, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let table = elements
        .iter()
        .map(|x| {
            elements
                .iter()
                .map(|y| index.get(&x.compose(y)).copied())
                .collect()
        })
        .collect();
    Ok(ReesQuotient {
        alphabet: *alphabet,
        level,
        elements,
        index,
        table,
    })
}

/// A residual-finiteness witness: the smallest J-level whose Rees quotient
/// keeps both elements alive (where they are distinct by construction).
/// Fails with `EqualInputs` when the elements are equal.
pub fn separate(phi: &RiAutElem, psi: &RiAutElem) -> Result<(usize, bool), Error> {
    if phi == psi {
        return Err(Error::EqualInputs);
    }
    Ok((phi.level().max(psi.level()), true))
}

/// The image of an element under the homomorphism that is the identity on
/// J-levels below `i` and maximal extension above.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EtaClass {
    /// Levels below the threshold keep their table identity.
    MonoidPart(RiAutElem),
    /// Levels at or above the threshold fall together with their maximal
    /// extension.
    GroupPart(GroupElem),
}

impl fmt::Display for EtaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaClass::MonoidPart(e) => write!(f, "MONOID-PART {e}"),
            EtaClass::GroupPart(g) => write!(f, "GROUP-PART {g}"),
        }
    }
}

pub fn eta_i_class(phi: &RiAutElem, i: usize) -> EtaClass {
    assert!(i >= 1, "the threshold level must be at least 1");
    if phi.level() < i {
        EtaClass::MonoidPart(phi.clone())
    } else {
        EtaClass::GroupPart(phi.max_extend())
    }
}
