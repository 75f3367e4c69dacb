//! Length-reduction traces for elements screened outside `H(3)`.
//!
//! The screen only certifies non-membership; elements it cannot certify are skipped.

use sunic::analysis::{reduction_trace, z_screen};
use sunic::{Group, GroupSpec};

fn main() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    for w in ["a b", "a b0 a b1 a b", "(b1 a b0 a)^3 b a", "b0 a b1 a b a b0 a b1 a b0 a b1", "b0"] {
        let g = group.parse(w).unwrap();
        println!("{w}: screen {:?}", z_screen(&g, 3).unwrap());
        match reduction_trace(&g, 3, 32) {
            Ok(t) => {
                for s in &t.steps {
                    println!("  depth {} lambda_hat {} -> {:?}  {}", s.depth, s.lambda_hat, s.next_lambda_hat, s.adjustments.join("; "));
                }
                println!("  reached {} contraction {}", t.reached, t.contraction_holds());
            }
            Err(e) => println!("  {e}"),
        }
    }
}
