//! Command-line front end. Human output goes to `out`; `--records <path>`
//! additionally writes `key=value` lines. Exit codes: 0 success, 1 failed
//! check or runtime error, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::analysis::{self, Record, Status};
use crate::boundary::{self, Ray, SchreierGens};
use crate::elements::{Group, OrderProbe};
use crate::error::{Error, Result};
use crate::perm::{chain_from, density_check, SubgroupDesc};
use crate::recursion::RecSystem;
use crate::GroupSpec;

#[derive(Parser, Debug)]
#[command(name = "sunic", about = "Exact computations in Šunić groups G_{p,f}")]
struct Cli {
    /// Also write machine records (`key=value` lines) to this file.
    #[arg(long, global = true)]
    records: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Torsion, dihedral witness, maximal subgroup count.
    Classify { spec: String },
    /// Normal form, wreath recursion and abelianization of a word.
    Eval {
        spec: String,
        word: String,
        /// Vertex to act on, as a digit string like `0110`.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Decides equality of two words.
    Equal { spec: String, w1: String, w2: String },
    /// Order of a word, probing `p`-powers up to the bound.
    Order {
        spec: String,
        word: String,
        #[arg(long, default_value_t = 1 << 20)]
        bound: u64,
    },
    /// Orders of the level quotients `π_n(G)`.
    Levels {
        spec: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// `π_n(H(q)) = π_n(G)` for `n = 1..max`.
    Density {
        spec: String,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Certificate that `H(q)` is a proper subgroup.
    Proper {
        spec: String,
        #[arg(long)]
        q: i64,
    },
    /// Ball in the orbital graph of `1^∞`.
    Schreier {
        spec: String,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Write the ball as a DOT graph.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Center ray `u(v)`; defaults to `1^∞`.
        #[arg(long)]
        center: Option<String>,
        /// Use only `a` and the dihedral witness `b` as edge labels.
        #[arg(long)]
        dihedral: bool,
    },
    /// Checks the conjugator `g = ((ba)^{(q-1)/2} g, g)` to a depth.
    Conjugator {
        spec: String,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Iterates `Θ(z) = a z_0 a z_1` and classifies the limit.
    Theta {
        spec: String,
        word: String,
        #[arg(long, default_value_t = 64)]
        iters: usize,
    },
    /// Maximal subgroups of finite index.
    Maximals { spec: String },
    /// Identity, stabilizer and branching suites.
    Verify { spec: String },
    /// Length-reduction trace of a non-member of `H(q)` (heuristic screen).
    Reduce {
        spec: String,
        #[arg(long)]
        q: i64,
        word: String,
        #[arg(long, default_value_t = 32)]
        max_steps: usize,
    },
}

/// Built-in specs, usable in place of a spec file path.
pub const BUILTIN_SPECS: [(&str, fn() -> GroupSpec); 4] = [
    ("grigorchuk", GroupSpec::grigorchuk),
    ("grigorchuk-erschler", GroupSpec::grigorchuk_erschler),
    ("fabrykowski-gupta", GroupSpec::fabrykowski_gupta),
    ("infinite-dihedral", GroupSpec::infinite_dihedral),
];

/// Reads a spec file, falling back to a built-in name when no such file exists.
pub fn load_spec(arg: &str) -> Result<GroupSpec> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some((_, f)) = BUILTIN_SPECS.iter().find(|(name, _)| *name == arg) {
            return Ok(f());
        }
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    GroupSpec::parse_spec_file(&text)
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    records: Vec<String>,
    failed: bool,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn record(&mut self, r: Record) {
        if r.status == Status::Fail {
            self.failed = true;
        }
        self.records.push(r.to_string());
    }

    fn check(&mut self, suite: &str, item: impl Into<String>, ok: bool, witness: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.record(Record::new(suite, item, status, witness));
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut ctx = Ctx { out, records: Vec::new(), failed: false };
    let result = dispatch(cli.command, &mut ctx);
    if let Some(path) = &cli.records {
        let mut text = ctx.records.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        if let Err(e) = std::fs::write(path, text) {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return 2;
        }
    }
    match result {
        Ok(()) if ctx.failed => 1,
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } | Error::Io(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> Result<()> {
    match command {
        Command::Classify { spec } => {
            let c = analysis::classify(&load_spec(&spec)?)?;
            let opt = |x: Option<String>| x.unwrap_or_else(|| "n/a".into());
            ctx.line(format!("group        {}", c.spec));
            ctx.line(format!("faithful     {}", c.faithful));
            ctx.line(format!("torsion      {}", opt(c.torsion.map(|t| t.to_string()))));
            ctx.line(format!("dihedral     {}", opt(c.dihedral.as_ref().map(|v| format!("{:?}", v.coords())))));
            ctx.line(format!("(x+1) | f    {}", c.divisible_by_x_plus_one));
            ctx.line(format!("maximals     {}", opt(c.maximals.map(|m| m.to_string()))));
            ctx.line(format!("degenerate   {}", c.degenerate));
            for r in c.records() {
                ctx.record(r);
            }
        }
        Command::Eval { spec, word, vertex } => {
            let group = Group::new(load_spec(&spec)?);
            let x = group.parse(&word)?;
            let w = x.wreath();
            let sections: Vec<String> = w.sections.iter().map(|s| s.to_string()).collect();
            let ab = x.abelianize();
            ctx.line(format!("normal form  {x}"));
            ctx.line(format!("wreath       a^{} ({})", w.root, sections.join(", ")));
            ctx.line(format!("abelian      a^{} B{:?}", ab.a_exp, ab.b_sum.coords()));
            ctx.line(format!("b-length     {}", x.b_length()));
            ctx.line(format!("trivial      {}", x.is_trivial()));
            ctx.records.push(format!("word={:?} normal_form={:?} trivial={}", word, x.to_string(), x.is_trivial()));
            if let Some(v) = vertex {
                let digits = parse_vertex(&v)?;
                let image: String = x.act_on_vertex(&digits)?.iter().map(|d| d.to_string()).collect();
                ctx.line(format!("image of {v}  {image}"));
                ctx.records.push(format!("vertex={v} image={image}"));
            }
        }
        Command::Equal { spec, w1, w2 } => {
            let group = Group::new(load_spec(&spec)?);
            let eq = group.parse(&w1)?.equals(&group.parse(&w2)?);
            ctx.line(eq.to_string());
            ctx.records.push(format!("w1={w1:?} w2={w2:?} equal={eq}"));
        }
        Command::Order { spec, word, bound } => {
            let group = Group::new(load_spec(&spec)?);
            let x = group.parse(&word)?;
            match x.order_probe(bound) {
                OrderProbe::Finite(k) => {
                    ctx.line(format!("order {k}"));
                    ctx.records.push(format!("word={word:?} order={k}"));
                }
                OrderProbe::ExceedsBound => {
                    ctx.line(format!("order > {bound} (no p-power up to the bound kills it)"));
                    ctx.records.push(format!("word={word:?} order=>{bound}"));
                }
            }
        }
        Command::Levels { spec, max } => {
            let group = Group::new(load_spec(&spec)?);
            let p = group.p();
            for n in 1..=max {
                let chain = chain_from(&SubgroupDesc::whole(&group), n)?;
                ctx.line(format!("n={n:<3} |pi_n(G)| = {p}^{}", chain.rank()));
                ctx.records.extend(chain.summary().to_records("G"));
            }
        }
        Command::Density { spec, q, max } => {
            let group = Group::new(load_spec(&spec)?);
            let h = analysis::hq(&group, q)?;
            for n in 1..=max {
                let r = density_check(&h.subgroup(), n)?;
                ctx.line(format!("n={n:<3} |pi_n(H({q}))| = {}  |pi_n(G)| = {}  dense={}", r.order_h, r.order_g, r.dense()));
                ctx.check("density", format!("H({q}) n={n}"), r.dense(), format!("{}/{}", r.order_h, r.order_g));
            }
        }
        Command::Proper { spec, q } => {
            let group = Group::new(load_spec(&spec)?);
            let r = boundary::hq_properness_certificate(&group, q)?;
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            ctx.line(format!("{verdict} H({q}) is proper: witness {}", r.witness()));
            ctx.line(format!("  (ab)^{q}·n = n+{q} on samples: {}", r.translation));
            ctx.line(format!("  b·n = -n on samples: {}", r.reflection));
            ctx.line(format!("  x·n = ±n for basis x of B: {}", r.basis_signs));
            for f in &r.failures {
                ctx.line(format!("  failure: {f}"));
            }
            ctx.check("proper", format!("H({q})"), r.passed(), r.witness());
        }
        Command::Schreier { spec, radius, dot, center, dihedral } => {
            let group = Group::new(load_spec(&spec)?);
            let center = match center {
                Some(c) => c.parse::<Ray>()?,
                None => Ray::ones(group.p()),
            };
            let gens = if dihedral { SchreierGens::Dihedral } else { SchreierGens::Full };
            let ball = boundary::schreier_ball(&group, &center, radius, gens)?;
            for (i, v) in ball.vertices.iter().enumerate() {
                ctx.line(format!("{i:>4}  d={:<3} {v}", ball.distances[i]));
            }
            for (u, v, l) in &ball.edges {
                ctx.line(format!("  {u} -{l}- {v}"));
                ctx.records.push(format!("from={} to={} label={l}", ball.vertices[*u], ball.vertices[*v]));
            }
            if let Some(path) = dot {
                std::fs::write(&path, ball.to_dot()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
        }
        Command::Conjugator { spec, q, depth } => {
            let group = Group::new(load_spec(&spec)?);
            let r = RecSystem::build_conjugator(&group, q)?;
            let b = group.dihedral_witness()?;
            let x = &(&group.a() * &b).pow(q) * &b;
            let ok = r.conjugation_check(&x, &group.a(), depth)?;
            ctx.line(format!("g^-1 (ab)^{q} b g = a to depth {depth}: {ok}"));
            ctx.check("conjugator", format!("(ab)^{q}b -> a"), ok, format!("depth={depth}"));
            for (i, y) in group.b_basis().iter().enumerate() {
                let ok = r.conjugation_check(y, y, depth)?;
                ctx.line(format!("g^-1 b{i} g = b{i} to depth {depth}: {ok}"));
                ctx.check("conjugator", format!("b{i} -> b{i}"), ok, format!("depth={depth}"));
            }
            let counts = r.state_counts(depth);
            ctx.line(format!("states per level: {counts:?}"));
        }
        Command::Theta { spec, word, iters } => {
            let group = Group::new(load_spec(&spec)?);
            let z = group.parse(&word)?;
            let t = z.theta_stabilize(iters)?;
            ctx.line(format!("z = {z}  (b-length {})", z.b_length()));
            for (i, y) in t.trace.iter().enumerate() {
                ctx.line(format!("Θ^{} = {y}  (b-length {})", i + 1, y.b_length()));
            }
            ctx.line(format!("class {:?}", t.class));
            let stable = t.class != crate::elements::ThetaClass::Unstabilized;
            ctx.check("theta", word, stable, format!("{:?}", t.class));
        }
        Command::Maximals { spec } => {
            let group = Group::new(load_spec(&spec)?);
            let r = analysis::count_finite_index_maximals(&group)?;
            ctx.line(format!("{} maximal subgroups of finite index, each of index {}", r.count, group.p()));
            ctx.line(format!("({} nonzero functionals on G/G', {} per kernel)", r.nonzero_functionals, group.p() - 1));
            for d in &r.descriptors {
                let gens: Vec<String> = d.generators.iter().map(|g| g.to_string()).collect();
                ctx.line(format!("  ker {:?}: normal closure of <{}>", d.functional, gens.join(", ")));
                ctx.records.push(format!("functional={:?} generators={:?}", d.functional, gens.join(";")));
            }
            if r.descriptors.len() < r.count as usize {
                ctx.line(format!("  ... {} more not listed", r.count as usize - r.descriptors.len()));
            }
            ctx.records.push(format!("count={} nonzero_functionals={}", r.count, r.nonzero_functionals));
        }
        Command::Verify { spec } => {
            let group = Group::new(load_spec(&spec)?);
            for r in analysis::verify(&group)? {
                ctx.line(format!("{:<5} {:<12} {}  {}", r.status, r.suite, r.item, r.witness));
                ctx.record(r);
            }
        }
        Command::Reduce { spec, q, word, max_steps } => {
            let group = Group::new(load_spec(&spec)?);
            let g = group.parse(&word)?;
            let t = analysis::reduction_trace(&g, q, max_steps)?;
            ctx.line(format!("HEURISTIC: membership in H({q}) is screened through the Z-action only"));
            ctx.line(format!("screen: {:?}", t.initial_screen));
            for s in &t.steps {
                ctx.line(format!(
                    "depth {:<3} lambda_hat {:<4} {}  [{}]",
                    s.depth,
                    s.lambda_hat,
                    s.element,
                    s.adjustments.join("; ")
                ));
                ctx.records.push(format!("depth={} lambda_hat={} heuristic=true", s.depth, s.lambda_hat));
            }
            ctx.check("reduce", word, t.reached && t.contraction_holds(), format!("final={}", t.final_lambda_hat()));
        }
    }
    Ok(())
}

fn parse_vertex(v: &str) -> Result<Vec<u32>> {
    v.chars()
        .enumerate()
        .map(|(i, c)| c.to_digit(10).ok_or_else(|| Error::parse(i + 1, format!("unexpected `{c}` in vertex"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("sunic").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn basic_commands() {
        let (code, out, _) = run_str(&["equal", "grigorchuk-erschler", "(a b0)^4", "1"]);
        assert_eq!((code, out.trim()), (0, "true"));
        let (code, out, _) = run_str(&["proper", "grigorchuk-erschler", "--q", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("PASS") && out.contains("z_action(ab,0)=1"));
        let (code, _, _) = run_str(&["proper", "grigorchuk-erschler", "--q", "1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["eval", "grigorchuk", "a x"]).0, 2);
        assert_eq!(run_str(&["classify", "/no/such/file"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["levels", "grigorchuk", "--bogus"]).0, 2);
        assert_eq!(run_str(&["conjugator", "grigorchuk", "--q", "3"]).0, 1);
    }
}
