//! The lift `φ(x) = (*, x)` into the first-level stabilizer and subdirect lifts through `H(q)`.

use sunic::analysis::subdirect_lift;
use sunic::{Group, GroupSpec};

fn main() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let (c, d) = group.cd().unwrap();
    println!("c = {c} = ({}, {}),  d = {d}", c.section(0), c.section(1));
    for w in ["a", "b0", "b1", "a b0 a b1", "b a b0"] {
        let x = group.parse(w).unwrap();
        let y = x.phi_lift().unwrap();
        println!("phi({w}) = {y}  sections ({}, {})", y.section(0), y.section(1));
    }
    for w in ["a", "b0 a b1", "a b a b0 a"] {
        let g = group.parse(w).unwrap();
        let lift = subdirect_lift(&group, 3, &g).unwrap();
        println!("lift of {w}: s = ({w} * {}, (ab)^(3*{}))", lift.h0, lift.n);
    }
}
