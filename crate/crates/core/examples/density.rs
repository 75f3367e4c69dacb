//! `H(q) = <(ab)^q, B>` maps onto every level quotient of the Grigorchuk–Erschler group.
//!
//! Usage: `cargo run --release --example density -- [max_level]`

use std::time::Instant;

use sunic::analysis::hq;
use sunic::perm::density_check;
use sunic::{Group, GroupSpec};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    for q in [3, 5, 7] {
        let h = hq(&group, q).unwrap().subgroup();
        for n in 1..=max {
            let t = Instant::now();
            let r = density_check(&h, n).unwrap();
            println!("H({q}) n={n:<2} |pi_n(H)| = |pi_n(G)|: {} ({:.2?})", r.dense(), t.elapsed());
        }
    }
}
