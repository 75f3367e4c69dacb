#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sunic::elements::{Element, Group, Letter};
use sunic::perm::{level_perm, LevelPerm};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A reduced word of uniform length `0..=max_len`: letters alternate between
/// powers of `a` and nonzero B-letters, each chosen uniformly.
pub fn random_word(group: &Group, rng: &mut ChaCha8Rng, max_len: usize) -> Element {
    let len = rng.gen_range(0..=max_len);
    let p = group.p();
    let b_size = group.spec().b_size();
    let mut is_a = rng.gen_bool(0.5);
    let letters: Vec<Letter> = (0..len)
        .map(|_| {
            is_a = !is_a;
            if is_a {
                Letter::A(rng.gen_range(1..p))
            } else {
                Letter::B(rng.gen_range(1..b_size))
            }
        })
        .collect();
    let x = group.from_letters(letters);
    debug_assert_eq!(x.len(), len);
    x
}

/// A word in `a` and the dihedral witness only.
pub fn random_dihedral_word(group: &Group, rng: &mut ChaCha8Rng, max_len: usize) -> Element {
    let a = group.a();
    let b = group.dihedral_witness().unwrap();
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(group.identity(), |acc, _| if rng.gen_bool(0.5) { &acc * &a } else { &acc * &b })
}

/// A product of at most six conjugated commutators.
pub fn random_derived(group: &Group, rng: &mut ChaCha8Rng) -> Element {
    let k = rng.gen_range(1..=6);
    (0..k).fold(group.identity(), |acc, _| {
        let x = random_word(group, rng, 4);
        let y = random_word(group, rng, 4);
        let z = random_word(group, rng, 4);
        &acc * &x.commutator(&y).conj(&z)
    })
}

/// Closure of `gens` under composition, by breadth-first search.
pub fn brute_force_order(gens: &[LevelPerm]) -> usize {
    let Some(first) = gens.first() else { return 1 };
    let id = first.compose(&first.inverse());
    let mut seen = HashSet::from([id.images().to_vec()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.images().to_vec()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

pub fn generator_perms(group: &Group, n: usize) -> Vec<LevelPerm> {
    std::iter::once(group.a())
        .chain(group.b_basis())
        .map(|x| level_perm(&x, n).unwrap())
        .collect()
}

/// Trivial on every level `1..=n`.
pub fn trivial_on_levels(x: &Element, n: usize) -> bool {
    (1..=n).all(|k| level_perm(x, k).unwrap().is_identity())
}
