//! The orbit of `1^∞` as a copy of `ℤ`, and the certificate that `H(q)` is proper.

use sunic::boundary::{hq_properness_certificate, z_action, zeta, zeta_inv, ZETA_SEARCH_BOUND};
use sunic::{Group, GroupSpec};

fn main() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    for n in -4..=4 {
        let r = zeta(&group, n).unwrap();
        let back = zeta_inv(&group, &r, ZETA_SEARCH_BOUND).unwrap();
        println!("zeta({n:>2}) = {r:<10} zeta_inv = {back}");
    }
    let b0 = group.b(0);
    let moved: Vec<i64> = (-4..=4).map(|n| z_action(&b0, n).unwrap()).collect();
    println!("b0 on -4..4: {moved:?}");
    for q in [1, 3, 5, 7, 9, 11] {
        let r = hq_properness_certificate(&group, q).unwrap();
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!("H({q:>2}) proper: {verdict}  {}  samples={}", r.witness(), r.samples.len());
    }
}
