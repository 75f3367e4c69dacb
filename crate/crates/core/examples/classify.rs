//! Classification of a few groups: torsion, dihedral witness, maximal subgroups.

use sunic::analysis::{classify, count_finite_index_maximals};
use sunic::{Group, GroupSpec};

fn main() {
    let specs = [
        GroupSpec::grigorchuk(),
        GroupSpec::grigorchuk_erschler(),
        GroupSpec::fabrykowski_gupta(),
        GroupSpec::infinite_dihedral(),
        GroupSpec::new(2, &[1, 1, 0]).unwrap(),
        GroupSpec::new(2, &[1, 0, 0, 1]).unwrap(),
        GroupSpec::new(3, &[1, 1]).unwrap(),
        GroupSpec::new(5, &[2]).unwrap(),
    ];
    println!("{:<20} {:>8} {:>12} {:>10}", "group", "torsion", "dihedral", "maximals");
    for spec in specs {
        let c = classify(&spec).expect("valid spec");
        let torsion = c.torsion.map_or("-".to_string(), |t| t.to_string());
        let dihedral = c.dihedral.map_or("-".to_string(), |v| format!("{:?}", v.coords()));
        let maximals = c.maximals.map_or("-".to_string(), |m| m.to_string());
        println!("{:<20} {torsion:>8} {dihedral:>12} {maximals:>10}", spec.to_string());
    }

    let group = Group::new(GroupSpec::grigorchuk());
    println!("\nmaximal subgroups of {}:", group.spec());
    for d in count_finite_index_maximals(&group).unwrap().descriptors {
        let gens: Vec<String> = d.generators.iter().map(|g| g.to_string()).collect();
        println!("  ker {:?} = <<{}>>", d.functional, gens.join(", "));
    }
}
