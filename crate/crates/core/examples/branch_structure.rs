//! Finite-level congruence and branching data: level stabilizers inside
//! derived subgroups, `K × K ≤ K`, and rigid vertex stabilizers.

use sunic::perm::{branch_pair_check, rigid_stab_report, stab_in_derived_check};
use sunic::{Group, GroupSpec};

fn main() {
    for (spec, levels) in [(GroupSpec::grigorchuk(), 5..=7), (GroupSpec::grigorchuk_erschler(), 5..=7), (GroupSpec::fabrykowski_gupta(), 5..=5)] {
        let group = Group::new(spec.clone());
        for n in levels {
            let r = stab_in_derived_check(&group, n).unwrap();
            println!("{spec} n={n}: St({}) <= G' {} (|St| = {}, |G'| = {})", r.level, r.in_derived, r.stab_order, r.derived_order);
            if let Some((level, stab, d2, ok)) = &r.second {
                println!("    St({level}) <= G'' {ok} (|St| = {stab}, |G''| = {d2})");
            }
        }
        let br = branch_pair_check(&group, 4).unwrap();
        println!("  {} branching at n=4: {} checks, {} failures", br.subgroup, br.checked, br.failures);
        let rist = rigid_stab_report(&group, 0, 4).unwrap();
        println!("  rist(0) at n=4 has order {}", rist.rist.order());
    }
}
