//! Writes a ball of the orbital graph of `1^∞` as DOT to stdout.
//!
//! Usage: `cargo run --example schreier_dot -- [radius] [full] > ball.dot`

use sunic::boundary::{schreier_ball, Ray, SchreierGens};
use sunic::{Group, GroupSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let radius: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let gens = if args.next().as_deref() == Some("full") { SchreierGens::Full } else { SchreierGens::Dihedral };
    let group = Group::new(GroupSpec::grigorchuk_erschler());
    let ball = schreier_ball(&group, &Ray::ones(2), radius, gens).unwrap();
    eprintln!("{} vertices, {} edges, loops {:?}", ball.vertices.len(), ball.edges.len(), ball.loops());
    if let Some(labels) = ball.path_labels() {
        eprintln!("path: {}", labels.join(" "));
    }
    print!("{}", ball.to_dot());
}
