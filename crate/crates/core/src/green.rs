//! Green relations on the right-ideal automorphism monoid.
//!
//! The J-order is determined by domain-code cardinality alone, so the
//! J-classes form an omega-chain `J_0, J_1, ...` indexed by the inner-vertex
//! count of the domain code. The R- and L-orders are inclusion of image and
//! domain ideals. Every J-comparison is witnessed constructively by a
//! two-sided factorization.

use crate::error::Error;
use crate::prefix_codes::{canonical_bijection, enumerate_codes};
use crate::riaut::RiAutElem;
use crate::words::Alphabet;

/// Default cap on the J-class level accepted by the enumeration functions.
pub const DEFAULT_LEVEL_CAP: usize = 4;

/// A J-class of the monoid, identified by its inner-vertex count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct JLevel {
    /// Inner-vertex count of the domain codes in this class.
    pub index: usize,
    /// Common table size `1 + (k-1) * index`.
    pub table_size: usize,
}

/// The J-class of an element.
pub fn j_level(phi: &RiAutElem) -> JLevel {
    JLevel {
        index: phi.level(),
        table_size: phi.size(),
    }
}

/// `phi2 <=_J phi1` iff the domain code of `phi2` is at least as large.
pub fn j_leq(phi2: &RiAutElem, phi1: &RiAutElem) -> bool {
    assert_eq!(phi2.alphabet(), phi1.alphabet(), "alphabet mismatch");
    phi2.size() >= phi1.size()
}

/// Constructive witnesses for the J-order: returns `(beta, alpha)` with
/// `beta.compose(&phi1.compose(&alpha)) == phi2`.
///
/// `phi1` is restricted at its dictionary-smallest domain entry until the
/// sizes agree, then dictionary-order bijections transport the codes. When
/// both inputs preserve the dictionary order, so do both witnesses.
pub fn j_factor(
    phi2: &RiAutElem,
    phi1: &RiAutElem,
) -> Result<(RiAutElem, RiAutElem), Error> {
    if phi2.size() < phi1.size() {
        return Err(Error::SizeOrderViolated(phi2.size(), phi1.size()));
    }
    let mut big = phi1.clone();
    while big.size() < phi2.size() {
        let smallest = big.pairs()[0].0.clone();
        big = big.restrict_step(&smallest)?;
    }
    let alpha = canonical_bijection(&phi2.domain_code(), &big.domain_code())?;
    let back = canonical_bijection(&big.domain_code(), &phi2.domain_code())?;
    let beta = phi2.compose(&back).compose(&big.inverse());
    Ok((beta, alpha))
}

/// `phi2 <=_R phi1` iff the image ideal of `phi2` is contained in the image
/// ideal of `phi1`.
pub fn r_leq(phi2: &RiAutElem, phi1: &RiAutElem) -> bool {
    assert_eq!(phi2.alphabet(), phi1.alphabet(), "alphabet mismatch");
    let img2 = phi2.image_code();
    phi1.image_code()
        .words()
        .iter()
        .all(|q| img2.words().iter().any(|w| crate::words::is_prefix(q, w)))
}

/// `phi2 <=_L phi1` iff the domain ideal of `phi2` is contained in the
/// domain ideal of `phi1`.
pub fn l_leq(phi2: &RiAutElem, phi1: &RiAutElem) -> bool {
    assert_eq!(phi2.alphabet(), phi1.alphabet(), "alphabet mismatch");
    let dom2 = phi2.domain_code();
    phi1.domain_code()
        .words()
        .iter()
        .all(|q| dom2.words().iter().any(|w| crate::words::is_prefix(q, w)))
}

/// All elements of the J-class at the given level: every bijection between
/// every ordered pair of codes of the matching size. With `dict_only` set,
/// only the dictionary-order preserving bijections (one per code pair).
/// Uses the default level cap.
pub fn enumerate_j_class(
    alphabet: &Alphabet,
    level: usize,
    dict_only: bool,
) -> Result<Vec<RiAutElem>, Error> {
    enumerate_j_class_with_cap(alphabet, level, dict_only, DEFAULT_LEVEL_CAP)
}

pub fn enumerate_j_class_with_cap(
    alphabet: &Alphabet,
    level: usize,
    dict_only: bool,
    level_cap: usize,
) -> Result<Vec<RiAutElem>, Error> {
    if level > level_cap {
        return Err(Error::TooLarge(format!(
            "J-class level {level} exceeds cap {level_cap}"
        )));
    }
    let n = 1 + (alphabet.size() as usize - 1) * level;
    let codes = enumerate_codes(alphabet, n)?;
    let mut out = Vec::new();
    for p in &codes {
        for q in &codes {
            if dict_only {
                out.push(canonical_bijection(p, q)?);
            } else {
                for perm in permutations(n) {
                    let pairs = p
                        .words()
                        .iter()
                        .enumerate()
                        .map(|(t, x)| (x.clone(), q.words()[perm[t]].clone()))
                        .collect();
                    out.push(RiAutElem::from_pairs_unchecked(*alphabet, pairs));
                }
            }
        }
    }
    Ok(out)
}

/// All elements of levels `0..=max_level`, concatenated in level order.
pub fn enumerate_up_to_level(
    alphabet: &Alphabet,
    max_level: usize,
    dict_only: bool,
    level_cap: usize,
) -> Result<Vec<RiAutElem>, Error> {
    let mut out = Vec::new();
    for i in 0..=max_level {
        out.extend(enumerate_j_class_with_cap(alphabet, i, dict_only, level_cap)?);
    }
    Ok(out)
}

/// The maximal subgroup at an idempotent `id_{PA*}`: all self-bijections of
/// `P`, a group of order `|P|!` isomorphic to the symmetric group.
pub fn maximal_subgroup_at(e: &RiAutElem) -> Result<Vec<RiAutElem>, Error> {
    if !e.is_partial_identity() {
        return Err(Error::NotIdempotent);
    }
    let code = e.domain_code();
    let n = code.len();
    if n > 8 {
        return Err(Error::TooLarge(format!("subgroup of order {n}! requested")));
    }
    let mut out = Vec::new();
    for perm in permutations(n) {
        let pairs = code
            .words()
            .iter()
            .enumerate()
            .map(|(t, x)| (x.clone(), code.words()[perm[t]].clone()))
            .collect();
        out.push(RiAutElem::from_pairs_unchecked(e.alphabet(), pairs));
    }
    Ok(out)
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

/// The J-class size predicted by counting: `(number of codes of size n)^2 * n!`
/// in general, or the square alone in the dictionary-order case.
pub fn predicted_j_class_size(alphabet: &Alphabet, level: usize, dict_only: bool) -> u128 {
    let n = 1 + (alphabet.size() as usize - 1) * level;
    let codes = count_codes(alphabet.size() as u128, level as u128);
    if dict_only {
        codes * codes
    } else {
        codes * codes * factorial(n as u128)
    }
}

/// Number of complete k-ary trees with `i` inner vertices (the Fuss-Catalan
/// number), i.e. the number of maximal prefix codes of size `1 + (k-1) i`.
pub fn count_codes(k: u128, i: u128) -> u128 {
    binomial(k * i, i) / ((k - 1) * i + 1)
}

fn binomial(n: u128, r: u128) -> u128 {
    let mut acc: u128 = 1;
    for t in 0..r {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_table;

    fn t(alphabet: &Alphabet, s: &str) -> RiAutElem {
        parse_table(s, alphabet).unwrap()
    }

    #[test]
    fn j_order_examples() {
        let a2 = Alphabet::new(2).unwrap();
        let small = t(&a2, "[a->b,b->a]");
        let big = t(&a2, "[a->bb,ba->a,bb->ba]");
        assert!(j_leq(&big, &small));
        assert!(!j_leq(&small, &big));
        assert!(j_leq(&small, &small));
    }

    #[test]
    fn j_factor_witnesses() {
        let a2 = Alphabet::new(2).unwrap();
        let small = t(&a2, "[a->b,b->a]");
        let big = t(&a2, "[a->bb,ba->a,bb->ba]");
        let (beta, alpha) = j_factor(&big, &small).unwrap();
        assert_eq!(beta.compose(&small.compose(&alpha)), big);

        let (beta, alpha) = j_factor(&small, &small).unwrap();
        assert_eq!(beta.compose(&small.compose(&alpha)), small);

        assert!(matches!(
            j_factor(&small, &big),
            Err(Error::SizeOrderViolated(2, 3))
        ));
    }

    #[test]
    fn j_factor_preserves_dict_mode() {
        let a2 = Alphabet::new(2).unwrap();
        let phi1 = t(&a2, "[aa->a,ab->ba,b->bb]");
        let phi2 = t(&a2, "[aaa->a,aab->ba,ab->bba,b->bbb]");
        assert!(phi1.is_dict_preserving() && phi2.is_dict_preserving());
        let (beta, alpha) = j_factor(&phi2, &phi1).unwrap();
        assert!(beta.is_dict_preserving());
        assert!(alpha.is_dict_preserving());
        assert_eq!(beta.compose(&phi1.compose(&alpha)), phi2);
    }

    #[test]
    fn r_and_l_orders() {
        let a2 = Alphabet::new(2).unwrap();
        let sigma = t(&a2, "[a->b,b->a]");
        let restricted = sigma.restrict_step(&sigma.pairs()[0].0.clone()).unwrap();
        assert!(r_leq(&restricted, &sigma));
        assert!(l_leq(&restricted, &sigma));
        assert!(r_leq(&sigma, &sigma) && l_leq(&sigma, &sigma));

        let id2 = t(&a2, "[a->a,b->b]");
        let id3 = t(&a2, "[aa->aa,ab->ab,b->b]");
        assert!(r_leq(&id3, &id2));
        assert!(!r_leq(&id2, &id3));
        assert!(l_leq(&id3, &id2));
        assert!(!l_leq(&id2, &id3));
    }

    #[test]
    fn r_and_l_imply_j_and_j_is_a_chain() {
        let a2 = Alphabet::new(2).unwrap();
        let mut all = Vec::new();
        for i in 0..=2 {
            all.extend(enumerate_j_class(&a2, i, false).unwrap());
        }
        for x in &all {
            for y in &all {
                assert!(j_leq(x, y) || j_leq(y, x));
                if r_leq(x, y) {
                    assert!(j_leq(x, y));
                }
                if l_leq(x, y) {
                    assert!(j_leq(x, y));
                }
            }
        }
    }

    #[test]
    fn j_factor_witnesses_exhaustive_to_size_four() {
        let a2 = Alphabet::new(2).unwrap();
        let mut all = Vec::new();
        for level in 0..=3usize {
            all.extend(enumerate_j_class(&a2, level, false).unwrap());
        }
        assert_eq!(all.len(), 627);
        for phi2 in &all {
            for phi1 in &all {
                if j_leq(phi2, phi1) {
                    let (beta, alpha) = j_factor(phi2, phi1).unwrap();
                    assert_eq!(beta.compose(&phi1.compose(&alpha)), *phi2);
                } else {
                    assert!(j_factor(phi2, phi1).is_err());
                }
            }
        }
    }

    #[test]
    fn j_class_sizes() {
        let a2 = Alphabet::new(2).unwrap();
        assert_eq!(enumerate_j_class(&a2, 0, false).unwrap().len(), 1);
        assert_eq!(enumerate_j_class(&a2, 1, false).unwrap().len(), 2);
        assert_eq!(enumerate_j_class(&a2, 2, false).unwrap().len(), 24);
        assert_eq!(enumerate_j_class(&a2, 2, true).unwrap().len(), 4);
        assert!(matches!(
            enumerate_j_class_with_cap(&a2, 3, false, 2),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn unit_group_is_trivial() {
        let a2 = Alphabet::new(2).unwrap();
        let units = enumerate_j_class(&a2, 0, false).unwrap();
        assert_eq!(units, vec![RiAutElem::identity(a2)]);
    }

    #[test]
    fn finite_j_above_counts_match_formula() {
        let a2 = Alphabet::new(2).unwrap();
        for level in 0..=3usize {
            let enumerated = enumerate_j_class(&a2, level, false).unwrap().len() as u128;
            assert_eq!(enumerated, predicted_j_class_size(&a2, level, false));
            let dict = enumerate_j_class(&a2, level, true).unwrap().len() as u128;
            assert_eq!(dict, predicted_j_class_size(&a2, level, true));
        }
    }

    #[test]
    fn maximal_subgroups() {
        let a2 = Alphabet::new(2).unwrap();
        let e = t(&a2, "[a->a,b->b]");
        let group = maximal_subgroup_at(&e).unwrap();
        assert_eq!(group.len(), 2);

        let trivial = maximal_subgroup_at(&RiAutElem::identity(a2)).unwrap();
        assert_eq!(trivial, vec![RiAutElem::identity(a2)]);

        let e3 = t(&a2, "[aa->aa,ab->ab,b->b]");
        let s3 = maximal_subgroup_at(&e3).unwrap();
        assert_eq!(s3.len(), 6);
        // Closure and inverses inside the H-class.
        for x in &s3 {
            assert!(s3.contains(&x.inverse()));
            for y in &s3 {
                assert!(s3.contains(&x.compose(y)));
            }
        }

        assert!(matches!(
            maximal_subgroup_at(&t(&a2, "[a->b,b->a]")),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn dict_subgroups_are_trivial() {
        let a2 = Alphabet::new(2).unwrap();
        for i in 0..=3 {
            for elem in enumerate_j_class(&a2, i, true).unwrap() {
                if elem.domain_code() == elem.image_code() {
                    assert!(elem.is_partial_identity(), "{elem}");
                }
            }
        }
    }

    #[test]
    fn f_inverse_at_desk_scale() {
        // Every element lies below its maximal extension, and that extension
        // is the unique maximum of its class within the enumerated universe.
        let a2 = Alphabet::new(2).unwrap();
        let mut all = Vec::new();
        for i in 0..=2 {
            all.extend(enumerate_j_class(&a2, i, false).unwrap());
        }
        for phi in &all {
            let m = phi.max_extend_table();
            assert!(phi.natural_leq(&m));
            for psi in &all {
                if psi.max_extend_table() == m && phi.natural_leq(psi) && psi.natural_leq(phi) {
                    assert_eq!(phi, psi);
                }
            }
        }
    }

    #[test]
    fn eta_is_a_homomorphism_on_small_elements() {
        let a2 = Alphabet::new(2).unwrap();
        let mut all = Vec::new();
        for i in 0..=1 {
            all.extend(enumerate_j_class(&a2, i, false).unwrap());
        }
        all.extend(enumerate_j_class(&a2, 2, false).unwrap().into_iter().take(8));
        for x in &all {
            for y in &all {
                let lhs = x.compose(y).max_extend();
                let rhs = x.max_extend().multiply(&y.max_extend());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
