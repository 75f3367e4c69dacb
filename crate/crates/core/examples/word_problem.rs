//! Normal forms, wreath recursion, equality and orders of words.
//!
//! Usage: `cargo run --example word_problem -- [word ...]`

use sunic::elements::OrderProbe;
use sunic::{Group, GroupSpec};

fn main() {
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["a b0", "(a b0)^4", "a b", "[a,b0]", "b0^(a b1)", "c", "d"].map(String::from).to_vec();
    }
    println!("{}", group.spec());
    for w in &words {
        let x = match group.parse(w) {
            Ok(x) => x,
            Err(e) => {
                println!("{w}: {e}");
                continue;
            }
        };
        let w_form = x.wreath();
        let sections: Vec<String> = w_form.sections.iter().map(|s| s.to_string()).collect();
        let order = match x.order_probe(1 << 12) {
            OrderProbe::Finite(k) => k.to_string(),
            OrderProbe::ExceedsBound => "> 4096".into(),
        };
        println!("{w:>12}  =  {x:<20} psi = a^{} ({})  order {order}", w_form.root, sections.join(", "));
    }
    let x = group.parse("a b0 a b1 a b0").unwrap();
    let y = group.parse("(b0 a b1 a b0 a)^-1").unwrap();
    println!("a b0 a b1 a b0 == (b0 a b1 a b0 a)^-1 : {}", x.equals(&y));
}
