//! Identity, stabilizer, branching and rigid stabilizer suites for the reference groups.

use sunic::analysis::{verify, Status};
use sunic::{Group, GroupSpec};

fn main() {
    for spec in [GroupSpec::grigorchuk(), GroupSpec::grigorchuk_erschler(), GroupSpec::fabrykowski_gupta()] {
        let records = verify(&Group::new(spec.clone())).unwrap();
        let failed = records.iter().filter(|r| r.status == Status::Fail).count();
        println!("{spec}: {} checks, {failed} failed", records.len());
        for r in records.iter().filter(|r| matches!(r.suite.as_str(), "csp" | "branch" | "rist")) {
            println!("  {r}");
        }
    }
}
