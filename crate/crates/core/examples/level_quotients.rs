//! Orders of the level quotients π_n(G) for the reference groups.

use std::time::Instant;

use sunic::perm::{chain_from, SubgroupDesc};
use sunic::{Group, GroupSpec};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for spec in [GroupSpec::grigorchuk(), GroupSpec::grigorchuk_erschler(), GroupSpec::fabrykowski_gupta()] {
        let group = Group::new(spec.clone());
        let cap = if spec.p() == 2 { max } else { max.min(6) };
        for n in 1..=cap {
            let t = Instant::now();
            let chain = chain_from(&SubgroupDesc::whole(&group), n).expect("level fits");
            println!("{spec} n={n} |pi_n| = {}^{} ({:.2?})", spec.p(), chain.rank(), t.elapsed());
        }
    }
}
