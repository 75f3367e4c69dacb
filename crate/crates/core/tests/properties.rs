mod common;

use proptest::prelude::*;
use sunic::boundary::{act_ray, z_action, Ray};
use sunic::perm::level_perm;
use sunic::{Element, Group, GroupSpec, Letter};

fn groups() -> Vec<Group> {
    [
        GroupSpec::grigorchuk(),
        GroupSpec::grigorchuk_erschler(),
        GroupSpec::fabrykowski_gupta(),
        GroupSpec::new(2, &[1, 1, 0]).unwrap(),
    ]
    .into_iter()
    .map(Group::new)
    .collect()
}

/// Raw letter choices, interpreted modulo the group's alphabet.
fn raw_word() -> impl Strategy<Value = Vec<(bool, u32)>> {
    prop::collection::vec((any::<bool>(), 1u32..64), 0..24)
}

fn build(group: &Group, raw: &[(bool, u32)]) -> Element {
    let p = group.p();
    let b = group.spec().b_size();
    group.from_letters(raw.iter().map(|&(is_a, k)| if is_a { Letter::A(1 + k % (p - 1)) } else { Letter::B(1 + k % (b - 1)) }))
}

fn raw_ray() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (prop::collection::vec(0u32..3, 0..6), prop::collection::vec(0u32..3, 1..4))
}

fn ray_for(group: &Group, (pre, per): &(Vec<u32>, Vec<u32>)) -> Ray {
    let p = group.p();
    Ray::new(pre.iter().map(|d| d % p).collect(), per.iter().map(|d| d % p).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn level_perms_are_homomorphic(g in 0usize..4, x in raw_word(), y in raw_word(), n in 1usize..6) {
        let group = &groups()[g];
        let (x, y) = (build(group, &x), build(group, &y));
        let lhs = level_perm(&(&x * &y), n).unwrap();
        let rhs = level_perm(&x, n).unwrap().compose(&level_perm(&y, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trivial_words_act_trivially(g in 0usize..4, x in raw_word()) {
        let group = &groups()[g];
        let x = build(group, &x);
        let n = if group.p() == 2 { 10 } else { 6 };
        if x.is_trivial() {
            prop_assert!(common::trivial_on_levels(&x, n));
        }
        prop_assert!((&x * &x.inverse()).is_trivial());
    }

    #[test]
    fn sections_agree_with_the_action(g in 0usize..4, x in raw_word(), v in prop::collection::vec(0u32..3, 1..8)) {
        let group = &groups()[g];
        let x = build(group, &x);
        let v: Vec<u32> = v.iter().map(|d| d % group.p()).collect();
        let image = x.act_on_vertex(&v).unwrap();
        prop_assert_eq!(image[0], (v[0] + x.root()) % group.p());
        let rest = x.section(v[0]).act_on_vertex(&v[1..]).unwrap();
        prop_assert_eq!(&image[1..], &rest[..]);
    }

    #[test]
    fn ray_action_is_a_left_action(g in 0usize..4, x in raw_word(), y in raw_word(), r in raw_ray()) {
        let group = &groups()[g];
        let (x, y) = (build(group, &x), build(group, &y));
        let r = ray_for(group, &r);
        let composed = act_ray(&(&x * &y), &r).unwrap();
        prop_assert_eq!(&composed, &act_ray(&x, &act_ray(&y, &r).unwrap()).unwrap());
        prop_assert_eq!(composed.prefix(20), (&x * &y).act_on_vertex(&r.prefix(20)).unwrap());
    }

    #[test]
    fn rays_round_trip_through_text(g in 0usize..4, r in raw_ray()) {
        let group = &groups()[g];
        let r = ray_for(group, &r);
        prop_assert_eq!(r.to_string().parse::<Ray>().unwrap(), r);
    }

    #[test]
    fn z_action_is_an_action(x in raw_word(), y in raw_word(), n in -40i64..40) {
        let group = &groups()[1];
        let (x, y) = (build(group, &x), build(group, &y));
        let inner = z_action(&y, n).unwrap();
        prop_assert_eq!(z_action(&(&x * &y), n).unwrap(), z_action(&x, inner).unwrap());
    }

    #[test]
    fn words_round_trip_through_text(g in 0usize..4, x in raw_word()) {
        let group = &groups()[g];
        let x = build(group, &x);
        prop_assert_eq!(group.parse(&x.to_word()).unwrap(), x);
    }

    #[test]
    fn abelianization_is_homomorphic(g in 0usize..4, x in raw_word(), y in raw_word()) {
        let group = &groups()[g];
        let (x, y) = (build(group, &x), build(group, &y));
        prop_assert!(x.commutator(&y).abelianize().is_zero());
    }
}

#[test]
fn spec_files_round_trip() {
    for group in groups() {
        let spec = group.spec();
        assert_eq!(&GroupSpec::parse_spec_file(&spec.to_spec_file()).unwrap(), spec);
    }
}
