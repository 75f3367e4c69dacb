//! Independent brute-force oracles for the stabilizer-chain and boundary code.

mod common;

use std::collections::HashSet;

use common::*;
use num_bigint::BigUint;
use sunic::analysis::{count_finite_index_maximals, hq, subdirect_lift};
use sunic::boundary::{act_ray, certificate_samples, z_action, zeta, Ray};
use sunic::perm::{chain_from, level_perm, LevelPerm, SubgroupDesc};
use sunic::{Group, GroupSpec};

fn all_elements(gens: &[LevelPerm]) -> Vec<LevelPerm> {
    let id = gens[0].compose(&gens[0].inverse());
    let mut seen = HashSet::from([id.images().to_vec()]);
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.images().to_vec()) {
                out.push(y.clone());
                frontier.push(y);
            }
        }
    }
    out
}

fn specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::grigorchuk(),
        GroupSpec::grigorchuk_erschler(),
        GroupSpec::fabrykowski_gupta(),
        GroupSpec::new(2, &[1, 1, 0]).unwrap(),
    ]
}

#[test]
fn whole_group_orders_match_closure() {
    for spec in specs() {
        let group = Group::new(spec.clone());
        let max = if spec.p() == 2 { 4 } else { 3 };
        for n in 1..=max {
            let chain = chain_from(&SubgroupDesc::whole(&group), n).unwrap();
            let brute = brute_force_order(&generator_perms(&group, n));
            assert_eq!(chain.order(), BigUint::from(brute), "{spec} n={n}");
        }
    }
}

#[test]
fn derived_orders_match_closure() {
    for spec in specs() {
        let group = Group::new(spec.clone());
        let n = if spec.p() == 2 { 3 } else { 2 };
        let elements = all_elements(&generator_perms(&group, n));
        let mut commutators = Vec::new();
        for x in &elements {
            for y in &elements {
                commutators.push(x.commutator(y));
            }
        }
        let closure: HashSet<Vec<u32>> = all_elements(&commutators).into_iter().map(|x| x.images().to_vec()).collect();
        let chain = chain_from(&SubgroupDesc::derived(&group), n).unwrap();
        assert_eq!(chain.order(), BigUint::from(closure.len()), "{spec} n={n}");
        for x in &elements {
            assert_eq!(chain.contains(x).unwrap(), closure.contains(x.images()));
        }
    }
}

#[test]
fn membership_matches_closure() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let n = 4;
    let h = hq(&group, 3).unwrap();
    let h_perms: Vec<LevelPerm> = h.generators.iter().map(|x| level_perm(x, n).unwrap()).collect();
    let closure: HashSet<Vec<u32>> = all_elements(&h_perms).into_iter().map(|x| x.images().to_vec()).collect();
    let chain = chain_from(&h.subgroup(), n).unwrap();
    assert_eq!(chain.order(), BigUint::from(closure.len()));
    for x in all_elements(&generator_perms(&group, n)).iter().step_by(7) {
        assert_eq!(chain.contains(x).unwrap(), closure.contains(x.images()));
    }
}

#[test]
fn maximal_subgroups_are_distinct_and_have_index_p() {
    for spec in specs() {
        let group = Group::new(spec.clone());
        // the level must be deep enough for π_n(G) to see all of G/G'
        let n = if spec.p() == 2 { spec.m() + 1 } else { 2 };
        let elements = all_elements(&generator_perms(&group, n));
        let whole = brute_force_order(&generator_perms(&group, n));
        let report = count_finite_index_maximals(&group).unwrap();
        let mut seen = HashSet::new();
        for d in &report.descriptors {
            let chain = chain_from(&d.subgroup(&group), n).unwrap();
            assert_eq!(chain.order() * BigUint::from(spec.p()), BigUint::from(whole), "{spec} {:?}", d.functional);
            let members: Vec<bool> = elements.iter().map(|x| chain.contains(x).unwrap()).collect();
            assert!(seen.insert(members), "{spec}: repeated kernel {:?}", d.functional);
        }
        let p = spec.p() as u64;
        assert_eq!(report.count, (p.pow(spec.m() as u32 + 1) - 1) / (p - 1));
    }
}

#[test]
fn zeta_matches_prefix_action() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let ab = &group.a() * &group.dihedral_witness().unwrap();
    let ones = Ray::ones(2);
    for n in -20i64..=20 {
        let r = zeta(&group, n).unwrap();
        let direct = ab.pow(n).act_on_vertex(&ones.prefix(40)).unwrap();
        assert_eq!(r.prefix(40), direct, "n={n}");
        assert_eq!(act_ray(&ab.pow(n), &ones).unwrap(), r);
    }
}

#[test]
fn certificate_identities_on_samples() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let b = group.dihedral_witness().unwrap();
    let ab = &group.a() * &b;
    for q in [3i64, 5, 7] {
        for n in certificate_samples(q) {
            assert_eq!(z_action(&ab.pow(q), n).unwrap(), n + q);
            assert_eq!(z_action(&b, n).unwrap(), -n);
        }
    }
}

#[test]
fn subdirect_lifts_on_random_words() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let h = hq(&group, 3).unwrap();
    let mut rng = rng(31);
    for _ in 0..30 {
        let g = random_word(&group, &mut rng, 16);
        let lift = subdirect_lift(&group, 3, &g).unwrap();
        assert_eq!(lift.s.root(), 0);
        assert!(lift.s.section(0).equals(&(&g * &lift.h0)));
        assert!(lift.s.section(1).equals(&h.ab().pow(3 * lift.n)));
    }
}
