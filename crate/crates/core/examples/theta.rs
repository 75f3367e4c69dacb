//! Iterating `Θ(z) = a z_0 a z_1` on commutators until the orbit repeats.

use sunic::{Group, GroupSpec};

fn main() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    for w in ["[a,b0]", "[a,b1]^3", "[a,b] [b0,a]^(a b1)", "[a,b]^4", "[b1 a, b0 a b]^2 [a,b0]"] {
        let z = group.parse(w).unwrap();
        let t = z.theta_stabilize(64).unwrap();
        let lengths: Vec<usize> = std::iter::once(&z).chain(&t.trace).map(|x| x.b_length()).collect();
        println!("{w:<26} b-lengths {lengths:?} -> {} ({:?})", t.stable, t.class);
    }
}
