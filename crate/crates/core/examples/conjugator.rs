//! The self-similar element `g = ((ba)^{(q-1)/2} g, g)` conjugating `H(q)` onto `G`.

use sunic::recursion::RecSystem;
use sunic::{Group, GroupSpec};

fn main() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let a = group.a();
    let b = group.dihedral_witness().unwrap();
    for q in [3, 5, 7] {
        let g = RecSystem::build_conjugator(&group, q).unwrap();
        let x = &(&a * &b).pow(q) * &b;
        let depth = 12;
        let to_a = g.conjugation_check(&x, &a, depth).unwrap();
        let fixes_b = group.b_basis().iter().all(|y| g.conjugation_check(y, y, depth).unwrap());
        println!("q={q}: (ab)^{q}b -> a {to_a}, B fixed {fixes_b}, states {:?}", g.state_counts(6));
        println!("   first vertices: {:?}", (0..8u32).map(|v| g.act_on_vertex(&[v >> 2 & 1, v >> 1 & 1, v & 1]).unwrap()).collect::<Vec<_>>());
    }
}
