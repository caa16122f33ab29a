//! Acceptance suite: one test per verification criterion, each printing a
//! PASS line (run with `--nocapture` to see them). All checks are exact;
//! random sampling is seeded and deterministic.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::prelude::IndexedRandom;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use riaut::decision::{self, GenLetter, GenWord};
use riaut::expansion::{self, ExpansionElem};
use riaut::generation::{self, Mode};
use riaut::green;
use riaut::prefix_codes::{self, codes_with_inner_count, MaximalPrefixCode};
use riaut::sample;
use riaut::text::parse_table;
use riaut::words::{words_of_length, words_up_to_length, Alphabet, Word};
use riaut::{GroupElem, RiAutElem};

fn rng() -> StdRng {
    StdRng::seed_from_u64(sample::DEFAULT_SEED)
}

fn pass(number: u32, name: &str) {
    println!("criterion {number:02} {name}: PASS");
}

/// A uniformly random element at an exact J-level.
fn random_elem_at_level(rng: &mut StdRng, alphabet: &Alphabet, level: usize) -> RiAutElem {
    let codes = codes_with_inner_count(alphabet, level);
    let p = codes.choose(rng).unwrap().clone();
    let q = codes.choose(rng).unwrap().clone();
    let mut targets: Vec<Word> = q.words().to_vec();
    for i in (1..targets.len()).rev() {
        targets.swap(i, rng.random_range(0..=i));
    }
    let pairs = p.words().iter().cloned().zip(targets).collect();
    RiAutElem::from_pairs(*alphabet, pairs).unwrap()
}

#[test]
fn criterion_01_composition_oracle() {
    let start = Instant::now();
    let mut rng = rng();
    for trial in 0..500 {
        let k = if trial % 2 == 0 { 2 } else { 3 };
        let alphabet = Alphabet::new(k).unwrap();
        // Table size <= 5 means level <= 4 for k = 2 and level <= 2 for
        // k = 3.
        let max_level = if k == 2 { 4 } else { 2 };
        let psi = sample::random_elem(&mut rng, &alphabet, max_level);
        let phi = sample::random_elem(&mut rng, &alphabet, max_level);
        let composed = psi.compose(&phi);
        for w in words_up_to_length(&alphabet, 6) {
            let direct = phi.apply(&w).and_then(|m| psi.apply(&m));
            assert_eq!(composed.apply(&w), direct, "psi={psi} phi={phi} w={w}");
        }
    }
    assert!(
        start.elapsed() < Duration::from_secs(10),
        "composition oracle exceeded 10 s: {:?}",
        start.elapsed()
    );
    pass(1, "composition agrees with pointwise application");
}

#[test]
fn criterion_02_code_counting() {
    for k in [2u32, 3] {
        let alphabet = Alphabet::new(k).unwrap();
        for i in 0..=5usize {
            let codes = codes_with_inner_count(&alphabet, i);
            assert!(!codes.is_empty());
            for c in codes {
                let s = c.stats();
                assert_eq!(s.leaf_count, 1 + (k as usize - 1) * i);
                assert_eq!(s.vertex_count, 1 + k as usize * i);
                assert_eq!(s.inner_count, i);
            }
        }
    }
    pass(2, "leaf and vertex counts of all enumerated codes");
}

#[test]
fn criterion_03_max_extension_confluent() {
    fn fixed_points(elem: &RiAutElem, out: &mut HashSet<RiAutElem>) {
        let candidates = collapse_candidates(elem);
        if candidates.is_empty() {
            out.insert(elem.clone());
            return;
        }
        for b in candidates {
            fixed_points(&b, out);
        }
    }
    // One collapse step in every possible way, reproduced here through
    // restrict_step as an independent route: an element collapses at (x, y)
    // iff restricting the collapsed element at x gives back the original.
    fn collapse_candidates(elem: &RiAutElem) -> Vec<RiAutElem> {
        let mut out = Vec::new();
        let dom = elem.domain_code();
        let img = elem.image_code();
        for x in dom.stats().inner_leaves {
            for y in img.stats().inner_leaves.iter() {
                let pairs: Vec<(Word, Word)> = elem
                    .pairs()
                    .iter()
                    .filter(|(d, _)| !(d.len() == x.len() + 1 && d.letters()[..x.len()] == *x.letters()))
                    .cloned()
                    .chain([(x.clone(), y.clone())])
                    .collect();
                if let Ok(candidate) = RiAutElem::from_pairs(elem.alphabet(), pairs) {
                    if candidate.restrict_step(&x).ok().as_ref() == Some(elem) {
                        out.push(candidate);
                    }
                }
            }
        }
        out
    }

    let a2 = Alphabet::new(2).unwrap();
    let mut total = 0usize;
    for level in 0..=3usize {
        for elem in green::enumerate_j_class(&a2, level, false).unwrap() {
            let mut outcomes = HashSet::new();
            fixed_points(&elem, &mut outcomes);
            assert_eq!(outcomes.len(), 1, "collapse orders diverge at {elem}");
            let max = elem.max_extend();
            assert!(outcomes.contains(max.rep()));
            assert_eq!(max.rep().max_extend().rep(), max.rep(), "not idempotent");
            total += 1;
        }
    }
    assert_eq!(total, 627);
    pass(3, "maximal extension is confluent and idempotent on all 627 small elements");
}

#[test]
fn criterion_04_maximum_group_homomorphism() {
    let mut rng = rng();
    for trial in 0..1000 {
        let k = if trial % 2 == 0 { 2 } else { 3 };
        let alphabet = Alphabet::new(k).unwrap();
        let max_level = if k == 2 { 3 } else { 2 };
        let psi = sample::random_elem(&mut rng, &alphabet, max_level);
        let phi = sample::random_elem(&mut rng, &alphabet, max_level);
        let lhs = psi.compose(&phi).max_extend();
        let rhs = psi.max_extend().multiply(&phi.max_extend());
        assert_eq!(lhs, rhs, "psi={psi} phi={phi}");
    }
    pass(4, "max(psi . phi) = max(psi) * max(phi) on 1000 random pairs");
}

#[test]
fn criterion_05_j_order_constructive() {
    let a2 = Alphabet::new(2).unwrap();
    let mut all = Vec::new();
    for level in 0..=2usize {
        all.extend(green::enumerate_j_class(&a2, level, false).unwrap());
    }
    assert_eq!(all.len(), 27);
    for phi2 in &all {
        for phi1 in &all {
            if green::j_leq(phi2, phi1) {
                let (beta, alpha) = green::j_factor(phi2, phi1).unwrap();
                assert_eq!(
                    beta.compose(&phi1.compose(&alpha)),
                    *phi2,
                    "witnesses fail for {phi2} vs {phi1}"
                );
            } else {
                assert!(green::j_factor(phi2, phi1).is_err());
            }
        }
    }
    pass(5, "J-order coincides with constructive factorization, exhaustively");
}

#[test]
fn criterion_06_j_class_counts() {
    let a2 = Alphabet::new(2).unwrap();
    let expected = [1usize, 2, 24, 600];
    let expected_dict = [1usize, 1, 4, 25];
    for level in 0..=3usize {
        let general = green::enumerate_j_class(&a2, level, false).unwrap();
        assert_eq!(general.len(), expected[level]);
        assert_eq!(general.len() as u128, green::predicted_j_class_size(&a2, level, false));
        let dict = green::enumerate_j_class(&a2, level, true).unwrap();
        assert_eq!(dict.len(), expected_dict[level]);
        // No duplicates in the enumeration.
        let distinct: HashSet<_> = general.iter().collect();
        assert_eq!(distinct.len(), general.len());
    }
    pass(6, "J-class sizes 1, 2, 24, 600 (dict: 1, 1, 4, 25)");
}

#[test]
fn criterion_07_maximal_subgroups_are_symmetric_groups() {
    let a2 = Alphabet::new(2).unwrap();
    for n in 1..=4usize {
        let code = prefix_codes::enumerate_codes(&a2, n).unwrap()[0].clone();
        let e = RiAutElem::idempotent_on(&code);
        let group = green::maximal_subgroup_at(&e).unwrap();
        let order: usize = (1..=n).product();
        assert_eq!(group.len(), order);

        // Group axioms inside the H-class.
        assert!(group.contains(&e));
        for x in &group {
            assert!(group.contains(&x.inverse()));
            assert_eq!(x.compose(&e), *x);
            assert_eq!(e.compose(x), *x);
            for y in &group {
                assert!(group.contains(&x.compose(y)));
            }
        }

        // Isomorphism with the symmetric group: map each table to the
        // position permutation it induces on the code, and check the
        // correspondence is bijective and multiplicative.
        let perm_of = |x: &RiAutElem| -> Vec<usize> {
            x.pairs()
                .iter()
                .map(|(_, img)| code.words().iter().position(|w| w == img).unwrap())
                .collect()
        };
        let perms: HashSet<Vec<usize>> = group.iter().map(perm_of).collect();
        assert_eq!(perms.len(), order);
        for x in &group {
            for y in &group {
                // x . y applies y first; the induced permutation composes
                // the same way.
                let composed = perm_of(&x.compose(y));
                let via_perms: Vec<usize> =
                    perm_of(y).iter().map(|&i| perm_of(x)[i]).collect();
                assert_eq!(composed, via_perms);
            }
        }
    }

    // Dictionary-order preserving subgroups are trivial.
    for level in 0..=3usize {
        for elem in green::enumerate_j_class(&a2, level, true).unwrap() {
            if elem.domain_code() == elem.image_code() {
                assert!(elem.is_partial_identity());
            }
        }
    }
    pass(7, "maximal subgroups are S_n (n <= 4); dict subgroups trivial");
}

#[test]
fn criterion_08_finite_generation() {
    let start = Instant::now();
    let a2 = Alphabet::new(2).unwrap();
    let mut rng = rng();

    let check = |phi: &RiAutElem, mode: Mode| {
        let factors = generation::factor(phi, mode).unwrap();
        let bound = generation::generator_inner_bound(&a2, mode);
        assert!(
            factors.iter().all(|f| f.level() <= bound),
            "factor above bound for {phi}"
        );
        if mode == Mode::Dict {
            assert!(factors.iter().all(RiAutElem::is_dict_preserving));
        }
        assert_eq!(
            generation::recompose(&factors).unwrap(),
            *phi,
            "recomposition differs for {phi}"
        );
    };

    // Exhaustive at table size 5.
    for phi in green::enumerate_j_class(&a2, 4, false).unwrap() {
        check(&phi, Mode::General);
    }
    for phi in green::enumerate_j_class(&a2, 4, true).unwrap() {
        check(&phi, Mode::Dict);
    }
    // Random at table sizes 6 and 7.
    for level in [5usize, 6] {
        for _ in 0..75 {
            check(&random_elem_at_level(&mut rng, &a2, level), Mode::General);
        }
        let codes = codes_with_inner_count(&a2, level);
        for _ in 0..75 {
            let p = codes.choose(&mut rng).unwrap();
            let q = codes.choose(&mut rng).unwrap();
            check(
                &prefix_codes::canonical_bijection(p, q).unwrap(),
                Mode::Dict,
            );
        }
    }
    assert!(
        start.elapsed() < Duration::from_secs(60),
        "factorization exceeded 60 s: {:?}",
        start.elapsed()
    );
    pass(8, "every element factors into bounded generators, recomposing exactly");
}

#[test]
fn criterion_09_second_inner_leaf_construction() {
    for k in [2u32, 3] {
        let alphabet = Alphabet::new(k).unwrap();
        for len in 3..=6usize {
            for z in words_of_length(&alphabet, len) {
                let p = MaximalPrefixCode::path_code(alphabet, &z);
                match prefix_codes::two_inner_leaves(&p, &z) {
                    Ok(q) => {
                        assert!(len > k as usize, "hypothesis violated silently");
                        assert_eq!(q.len(), p.len());
                        let l = p.left_count(&z);
                        let r = p.len() - l - k as usize;
                        let leaves = q.stats().inner_leaves;
                        let hit = leaves
                            .iter()
                            .find(|y| q.left_count(y) == l)
                            .unwrap_or_else(|| panic!("no matching leaf: p={p} z={z} q={q}"));
                        assert_eq!(q.len() - q.left_count(hit) - k as usize, r);
                        assert!(leaves.len() >= 2, "missing second inner leaf");
                    }
                    Err(riaut::Error::TooSmall { .. }) => {
                        assert!(len < k as usize + 1);
                    }
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }
    pass(9, "second-inner-leaf construction preserves size and flank counts");
}

#[test]
fn criterion_10_expansion_homomorphism_and_lifting() {
    let a2 = Alphabet::new(2).unwrap();
    let mut rng = rng();

    // rho is multiplicative on random products of generator embeds.
    let random_product = |rng: &mut StdRng| -> ExpansionElem {
        let mut acc = ExpansionElem::identity(a2);
        for _ in 0..rng.random_range(1..=4usize) {
            let g = sample::random_elem(rng, &a2, 2).max_extend();
            acc = acc.multiply(&ExpansionElem::embed_generator(&g));
        }
        acc
    };
    for _ in 0..1000 {
        let y = random_product(&mut rng);
        let x = random_product(&mut rng);
        assert_eq!(y.multiply(&x).rho(), y.rho().compose(&x.rho()));
    }

    // A generating set rich enough in domain codes lifts every generator.
    let delta = generation::standard_generators(&a2, Mode::General).elements;
    let mut gamma: Vec<GroupElem> = delta.iter().map(RiAutElem::max_extend).collect();
    for d in &delta {
        gamma.push(
            generation::max_extended_with_domain(&d.domain_code(), Mode::General).unwrap(),
        );
    }
    gamma.sort_by_key(GroupElem::sort_key);
    gamma.dedup();
    assert!(gamma.len() <= 2 * delta.len());

    for d in &delta {
        let word = expansion::lift(d, &gamma).unwrap();
        let value = expansion::evaluate_product(&word).unwrap();
        assert_eq!(value.rho(), *d, "round trip fails for {d}");
    }

    // A generating set whose domain codes all have size >= 3 cannot reach
    // the table-size-2 elements.
    let too_deep: Vec<GroupElem> = gamma
        .iter()
        .filter(|g| g.rep().size() >= 3)
        .cloned()
        .collect();
    assert!(!too_deep.is_empty());
    let small = parse_table("[a->b,b->a]", &a2).unwrap();
    assert!(matches!(
        expansion::lift(&small, &too_deep),
        Err(riaut::Error::NoMatchingGenerator)
    ));
    pass(10, "rho is a homomorphism; lifting succeeds iff domain codes match");
}

#[test]
fn criterion_11_fibers_are_finite_and_exact() {
    let a2 = Alphabet::new(2).unwrap();

    // Independent oracle: enumerate every maximally extended element of
    // table size at most |phi| (larger domains cannot contain Dom(phi)),
    // keep those whose domain ideal contains Dom(phi), and try every
    // subset.
    let oracle = |phi: &RiAutElem| -> Vec<ExpansionElem> {
        let g = phi.max_extend();
        let one = GroupElem::identity(a2);
        let p = phi.domain_code();
        let mut universe = Vec::new();
        for level in 0..=phi.level() {
            for elem in green::enumerate_j_class(&a2, level, false).unwrap() {
                let m = elem.max_extend();
                if m.rep() == &elem
                    && prefix_codes::intersect(&elem.domain_code(), &p) == p
                {
                    universe.push(m);
                }
            }
        }
        universe.sort_by_key(GroupElem::sort_key);
        universe.dedup();
        let optional: Vec<&GroupElem> = universe
            .iter()
            .filter(|h| **h != g && **h != one)
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1 << optional.len()) {
            let mut trace = vec![g.clone(), one.clone()];
            for (bit, h) in optional.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    trace.push((*h).clone());
                }
            }
            let candidate = ExpansionElem::new(g.clone(), trace);
            if candidate.rho() == *phi {
                out.push(candidate);
            }
        }
        out.sort_by_key(|e| e.to_string());
        out.dedup();
        out
    };

    for level in 0..=2usize {
        for phi in green::enumerate_j_class(&a2, level, false).unwrap() {
            let fiber = expansion::rho_fiber(&phi);
            assert!(!fiber.is_empty());
            for e in &fiber {
                assert_eq!(e.rho(), phi);
            }
            assert_eq!(fiber, oracle(&phi), "fiber mismatch at {phi}");
        }
    }

    // The three worked fibers.
    let cases = [
        ("[a->a,b->b]", "([^->^] ; {[^->^], [a->b,b->a]})"),
        ("[^->^]", "([^->^] ; {[^->^]})"),
        ("[a->b,b->a]", "([a->b,b->a] ; {[^->^], [a->b,b->a]})"),
    ];
    for (table, expected) in cases {
        let fiber = expansion::rho_fiber(&parse_table(table, &a2).unwrap());
        assert_eq!(fiber.len(), 1);
        assert_eq!(fiber[0].to_string(), expected);
    }
    pass(11, "rho fibers are finite and match brute-force enumeration");
}

#[test]
fn criterion_12_word_problem_in_polynomial_time() {
    let a2 = Alphabet::new(2).unwrap();
    let mut rng = rng();
    let delta = generation::standard_generators(&a2, Mode::General).elements;

    for _ in 0..10 {
        let word = GenWord(
            (0..200)
                .map(|_| GenLetter {
                    index: rng.random_range(0..delta.len()),
                    inverse: rng.random_range(0..4u8) == 0,
                })
                .collect(),
        );
        let bound: usize = word.letters().iter().map(|l| delta[l.index].level()).sum();
        let start = Instant::now();
        let value = decision::eval_word(&word, &delta, &a2).unwrap();
        let elapsed = start.elapsed();
        assert!(value.level() <= bound, "growth beyond additive bound");
        assert!(
            elapsed < Duration::from_secs(1),
            "evaluation took {elapsed:?} for one length-200 word"
        );
    }

    // The suffix-set reduction agrees with direct evaluation in the
    // expansion on random word pairs.
    let gens: Vec<GroupElem> = (0..4)
        .map(|_| sample::random_elem(&mut rng, &a2, 2).max_extend())
        .collect();
    let direct = |w: &GenWord| -> ExpansionElem {
        let mut acc = ExpansionElem::identity(a2);
        for l in w.letters() {
            let g = if l.inverse {
                gens[l.index].inverse()
            } else {
                gens[l.index].clone()
            };
            acc = acc.multiply(&ExpansionElem::embed_generator(&g));
        }
        acc
    };
    for _ in 0..500 {
        let lu = rng.random_range(0..=12usize);
        let lv = rng.random_range(0..=12usize);
        let u = sample::random_gen_word(&mut rng, gens.len(), lu);
        let v = sample::random_gen_word(&mut rng, gens.len(), lv);
        let expected = direct(&u) == direct(&v);
        assert_eq!(
            decision::wp_expansion(&u, &v, &gens, &a2).unwrap(),
            expected,
            "u={u} v={v}"
        );
    }
    pass(12, "length-200 words evaluate fast with additive growth; expansion word problem matches direct evaluation");
}

#[test]
fn criterion_13_residual_finiteness() {
    let a2 = Alphabet::new(2).unwrap();
    let mut all = Vec::new();
    for level in 0..=3usize {
        all.extend(green::enumerate_j_class(&a2, level, false).unwrap());
    }
    assert_eq!(all.len(), 627);
    for (i, x) in all.iter().enumerate() {
        for y in &all[i + 1..] {
            let (level, distinct) = decision::separate(x, y).unwrap();
            assert!(distinct);
            assert!(level >= x.level().max(y.level()));
            // Both elements survive in the witnessing quotient and stay
            // distinct there because nonzero elements map to themselves.
            assert!(level <= 3);
        }
        assert!(matches!(
            decision::separate(x, x),
            Err(riaut::Error::EqualInputs)
        ));
    }

    for level in 0..=2usize {
        let q = decision::rees_quotient(&a2, level).unwrap();
        let all_q: Vec<Option<usize>> = (0..q.elements().len()).map(Some).chain([None]).collect();
        for &x in &all_q {
            for &y in &all_q {
                for &z in &all_q {
                    assert_eq!(q.product(q.product(x, y), z), q.product(x, q.product(y, z)));
                }
            }
        }
        for x in q.elements() {
            for y in q.elements() {
                assert_eq!(q.project(&x.compose(y)), q.product(q.project(x), q.project(y)));
            }
        }
    }
    pass(13, "finite Rees quotients separate all small pairs and are associative homomorphic images");
}

#[test]
fn criterion_14_right_ideal_homomorphisms() {
    let mut rng = rng();
    let a2 = Alphabet::new(2).unwrap();

    // Prefix-code preservation is equivalent to preserving every small
    // prefix code inside the domain ideal (images compared as a family,
    // duplicates counting as comparable).
    let family_is_code = |images: &[Word]| -> bool {
        for (i, x) in images.iter().enumerate() {
            for y in &images[i + 1..] {
                if riaut::words::prefix_comparable(x, y) {
                    return false;
                }
            }
        }
        true
    };
    let small_codes = |phi: &riaut::RiHomElem| -> Vec<Vec<Word>> {
        let members: Vec<Word> = words_up_to_length(&a2, 3)
            .into_iter()
            .filter(|w| phi.apply(w).is_some())
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<Word>)> = vec![(0, Vec::new())];
        while let Some((start, acc)) = stack.pop() {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            if acc.len() == 4 {
                continue;
            }
            for (i, member) in members.iter().enumerate().skip(start) {
                if acc
                    .iter()
                    .all(|w| !riaut::words::prefix_comparable(w, member))
                {
                    let mut next = acc.clone();
                    next.push(member.clone());
                    stack.push((i + 1, next));
                }
            }
        }
        out
    };

    for _ in 0..200 {
        let phi = sample::random_rihom(&mut rng, &a2, 2);
        let lhs = phi.is_pc_preserving();
        let rhs = small_codes(&phi).iter().all(|c| {
            let images: Vec<Word> = c.iter().map(|w| phi.apply(w).unwrap()).collect();
            family_is_code(&images)
        });
        assert_eq!(lhs, rhs, "equivalence fails for {phi}");
    }

    // Every right-ideal isomorphism is prefix-code preserving.
    for _ in 0..200 {
        let iso = sample::random_riiso(&mut rng, &a2, 2);
        assert!(iso.as_hom().is_pc_preserving(), "{iso}");
    }

    // The uniform-length restriction: its image set is a prefix code (all
    // images share one length), it agrees with its input wherever defined,
    // and it preserves prefix-code preservation. A non-injective table
    // keeps its duplicate images under any restriction, so pc-preservation
    // of the output is equivalent to that of the input.
    for _ in 0..200 {
        let phi = sample::random_rihom(&mut rng, &a2, 2);
        let r = phi.restrict_to_pc();
        let max_len = phi.pairs().iter().map(|p| p.1.len()).max().unwrap_or(0);
        let mut image_set: Vec<Word> = r.pairs().iter().map(|p| p.1.clone()).collect();
        image_set.sort();
        image_set.dedup();
        assert!(image_set.iter().all(|w| w.len() == max_len));
        assert!(family_is_code(&image_set), "image set not a code for {phi}");
        for w in words_up_to_length(&a2, max_len + 2) {
            if let Some(img) = r.apply(&w) {
                assert_eq!(phi.apply(&w), Some(img), "disagreement at {w}");
            }
        }
        assert_eq!(r.is_pc_preserving(), phi.is_pc_preserving());
        if phi.is_pc_preserving() {
            assert!(r.is_pc_preserving());
        }
    }
    pass(14, "prefix-code preservation equivalence, isomorphism preservation, uniform restriction");
}
