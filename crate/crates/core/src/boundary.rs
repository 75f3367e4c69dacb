//! Eventually periodic boundary rays `u v^∞`, the transducer action of the
//! group on them, the orbital graph of `1^∞` and the numbering `ζ` of that
//! orbit by the integers.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::elements::{Element, Group, Letter};
use crate::error::{Error, Result};
use crate::GroupSpec;

/// Default number of integers `zeta_inv` tries before giving up.
pub const ZETA_SEARCH_BOUND: u64 = 10_000;

/// An eventually periodic ray `pre · per^∞`, kept canonical: the period is
/// primitive and the preperiod as short as possible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray {
    pre: Vec<u32>,
    per: Vec<u32>,
}

impl Ray {
    pub fn new(pre: Vec<u32>, per: Vec<u32>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::StructureError("ray period must be nonempty".into()));
        }
        Ok(Ray::canonical(pre, per))
    }

    /// `x^∞`.
    pub fn constant(x: u32) -> Self {
        Ray { pre: Vec::new(), per: vec![x] }
    }

    /// `1^∞` for the binary tree, `(p-1)^∞` in general.
    pub fn ones(p: u32) -> Self {
        Ray::constant(p - 1)
    }

    fn canonical(mut pre: Vec<u32>, mut per: Vec<u32>) -> Self {
        let len = per.len();
        if let Some(d) = (1..len).find(|&d| len % d == 0 && (d..len).all(|i| per[i] == per[i - d])) {
            per.truncate(d);
        }
        while pre.last().is_some_and(|&x| Some(&x) == per.last()) {
            pre.pop();
            per.rotate_right(1);
        }
        Ray { pre, per }
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.pre
    }

    pub fn period(&self) -> &[u32] {
        &self.per
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Vec<u32> {
        self.pre.iter().chain(self.per.iter().cycle()).take(n).copied().collect()
    }

    fn check(&self, p: u32) -> Result<()> {
        if self.pre.iter().chain(&self.per).any(|&x| x >= p) {
            return Err(Error::InvalidVertex(self.to_string()));
        }
        Ok(())
    }
}

/// Structural equality of canonical forms.
pub fn ray_equal(r1: &Ray, r2: &Ray) -> bool {
    r1 == r2
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |w: &[u32]| w.iter().map(|x| x.to_string()).collect::<String>();
        write!(f, "{}({})", s(&self.pre), s(&self.per))
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ray({self})")
    }
}

/// Reads `u(v)`, e.g. `0(1)` for `0 1^∞`; letters are single digits.
impl FromStr for Ray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| Error::parse(s.len() + 1, "expected `(`"))?;
        if !s.ends_with(')') {
            return Err(Error::parse(s.len() + 1, "expected `)`"));
        }
        let digits = |w: &str, offset: usize| -> Result<Vec<u32>> {
            w.chars()
                .enumerate()
                .map(|(i, c)| c.to_digit(10).ok_or_else(|| Error::parse(offset + i + 1, format!("unexpected `{c}`"))))
                .collect()
        };
        let pre = digits(&s[..open], 0)?;
        let per = digits(&s[open + 1..s.len() - 1], open + 1)?;
        if per.is_empty() {
            return Err(Error::parse(open + 2, "empty period"));
        }
        Ray::new(pre, per)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum State {
    B(u32),
    Shift(u32),
    Copy,
}

fn step(spec: &GroupSpec, state: State, x: u32) -> (u32, State) {
    let p = spec.p();
    match state {
        State::B(c) if x == 0 => {
            let w = spec.omega_code(c);
            (0, if w == 0 { State::Copy } else { State::Shift(w) })
        }
        State::B(c) if x == p - 1 => (x, State::B(spec.rho_code(c))),
        State::Shift(k) => ((x + k) % p, State::Copy),
        _ => (x, State::Copy),
    }
}

fn act_letter_ray(spec: &GroupSpec, letter: Letter, r: &Ray) -> Ray {
    let p = spec.p();
    match letter {
        Letter::A(e) => {
            let (mut pre, mut per) = (r.pre.clone(), r.per.clone());
            if pre.is_empty() {
                pre.push(per[0]);
                per.rotate_left(1);
            }
            pre[0] = (pre[0] + e) % p;
            Ray::canonical(pre, per)
        }
        Letter::B(c) => {
            let mut out = Vec::with_capacity(r.pre.len() + r.per.len());
            let mut state = State::B(c);
            for (i, &x) in r.pre.iter().enumerate() {
                if state == State::Copy {
                    out.extend_from_slice(&r.pre[i..]);
                    return Ray::canonical(out, r.per.clone());
                }
                let (y, s) = step(spec, state, x);
                out.push(y);
                state = s;
            }
            // Pass over the period until the state at its start repeats.
            let mut seen = HashMap::new();
            loop {
                if state == State::Copy {
                    return Ray::canonical(out, r.per.clone());
                }
                if let Some(&start) = seen.get(&state) {
                    let per = out.split_off(start);
                    return Ray::canonical(out, per);
                }
                seen.insert(state, out.len());
                for (i, &x) in r.per.iter().enumerate() {
                    if state == State::Copy {
                        out.extend_from_slice(&r.per[i..]);
                        break;
                    }
                    let (y, s) = step(spec, state, x);
                    out.push(y);
                    state = s;
                }
            }
        }
    }
}

/// Image of a ray; the rightmost letter acts first.
pub fn act_ray(x: &Element, r: &Ray) -> Result<Ray> {
    r.check(x.group().p())?;
    let spec = x.spec();
    Ok(x.letters().iter().rev().fold(r.clone(), |r, &l| act_letter_ray(spec, l, &r)))
}

/// Which generators label the edges of a Schreier ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SchreierGens {
    /// `a` and every nonzero element of `B`.
    #[default]
    Full,
    /// `a` and the dihedral witness `b` only.
    Dihedral,
}

#[derive(Clone, Debug)]
pub struct SchreierBall {
    pub center: Ray,
    pub radius: usize,
    /// In BFS order, the center first.
    pub vertices: Vec<Ray>,
    pub distances: Vec<usize>,
    /// `(from, to, label)`; for `p = 2` every generator is an involution and
    /// each edge is listed once with `from <= to`.
    pub edges: Vec<(usize, usize, String)>,
    /// Distinct neighbours of each vertex in the whole graph, the vertex
    /// itself included when it carries a loop.
    pub degrees: Vec<usize>,
    undirected: bool,
}

fn labelled_generators(group: &Group, gens: SchreierGens) -> Result<Vec<(String, Element)>> {
    let spec = group.spec();
    let mut out = vec![("a".to_string(), group.a())];
    match gens {
        SchreierGens::Dihedral => out.push(("b".into(), group.dihedral_witness()?)),
        SchreierGens::Full => {
            let witness = spec.dihedral_witness()?.map(|v| spec.encode(&v));
            for code in 1..spec.b_size() {
                let x = group.from_letters([Letter::B(code)]);
                let label = if Some(code) == witness { "b".to_string() } else { x.to_string() };
                out.push((label, x));
            }
        }
    }
    Ok(out)
}

/// Breadth-first ball of the orbital graph around `center`.
pub fn schreier_ball(group: &Group, center: &Ray, radius: usize, gens: SchreierGens) -> Result<SchreierBall> {
    center.check(group.p())?;
    let gens = labelled_generators(group, gens)?;
    let undirected = group.p() == 2;
    let mut index = HashMap::from([(center.clone(), 0usize)]);
    let mut vertices = vec![center.clone()];
    let mut distances = vec![0];
    let mut degrees = Vec::new();
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut neighbours = BTreeSet::new();
        for (label, g) in &gens {
            let image = act_ray(g, &vertices[i])?;
            let j = match index.get(&image) {
                Some(&j) => Some(j),
                None if distances[i] < radius => {
                    let j = vertices.len();
                    index.insert(image.clone(), j);
                    vertices.push(image.clone());
                    distances.push(distances[i] + 1);
                    queue.push_back(j);
                    Some(j)
                }
                None => None,
            };
            if let Some(j) = j {
                let (u, v) = if undirected { (i.min(j), i.max(j)) } else { (i, j) };
                edges.insert((u, v, label.clone()));
            }
            neighbours.insert(image);
        }
        degrees.push(neighbours.len());
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)).then_with(|| x.2.cmp(&y.2)));
    Ok(SchreierBall { center: center.clone(), radius, vertices, distances, edges, degrees, undirected })
}

impl SchreierBall {
    pub fn loops(&self) -> Vec<(usize, &str)> {
        self.edges.iter().filter(|e| e.0 == e.1).map(|e| (e.0, e.2.as_str())).collect()
    }

    pub fn distance_to(&self, r: &Ray) -> Option<usize> {
        self.vertices.iter().position(|v| v == r).map(|i| self.distances[i])
    }

    /// Edge labels along the ball when, ignoring loops, it is a simple path
    /// starting at the center (parallel edges merged, labels joined by `|`).
    pub fn path_labels(&self) -> Option<Vec<String>> {
        let mut next: HashMap<usize, (usize, Vec<&str>)> = HashMap::new();
        for (u, v, l) in self.edges.iter().filter(|e| e.0 != e.1) {
            let (u, v) = if self.distances[*u] <= self.distances[*v] { (*u, *v) } else { (*v, *u) };
            if self.distances[v] != self.distances[u] + 1 {
                return None;
            }
            let entry = next.entry(u).or_insert((v, Vec::new()));
            if entry.0 != v {
                return None;
            }
            entry.1.push(l);
        }
        let mut labels = Vec::new();
        let mut cur = 0;
        while let Some((v, ls)) = next.get(&cur) {
            labels.push(ls.join("|"));
            cur = *v;
        }
        (labels.len() + 1 == self.vertices.len()).then_some(labels)
    }

    /// DOT text: node labels `u(v)`, BFS node order, `label` edge attributes.
    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.undirected { ("graph", "--") } else { ("digraph", "->") };
        let mut out = format!("{kind} schreier {{\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{v}\"];\n"));
        }
        for (u, v, l) in &self.edges {
            out.push_str(&format!("  n{u} {arrow} n{v} [label=\"{l}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn ab_pair(group: &Group) -> Result<(Element, Element)> {
    let b = group.dihedral_witness()?;
    let ab = &group.a() * &b;
    Ok((ab.clone(), ab.inverse()))
}

/// `ζ(n) = (ab)^n · 1^∞`.
pub fn zeta(group: &Group, n: i64) -> Result<Ray> {
    let (ab, ba) = ab_pair(group)?;
    let g = if n >= 0 { ab } else { ba };
    let mut r = Ray::ones(group.p());
    for _ in 0..n.unsigned_abs() {
        r = act_ray(&g, &r)?;
    }
    Ok(r)
}

/// The `n` with `ζ(n) = r`, searching `0, 1, -1, 2, -2, ...` up to `|n| <= bound`.
pub fn zeta_inv(group: &Group, r: &Ray, bound: u64) -> Result<i64> {
    let (ab, ba) = ab_pair(group)?;
    r.check(group.p())?;
    let mut up = Ray::ones(group.p());
    let mut down = up.clone();
    if &up == r {
        return Ok(0);
    }
    for k in 1..=bound as i64 {
        up = act_ray(&ab, &up)?;
        if &up == r {
            return Ok(k);
        }
        down = act_ray(&ba, &down)?;
        if &down == r {
            return Ok(-k);
        }
    }
    Err(Error::NotInOrbit(bound))
}

/// `x · n = ζ^{-1}(x · ζ(n))`.
pub fn z_action(x: &Element, n: i64) -> Result<i64> {
    let group = x.group();
    let image = act_ray(x, &zeta(group, n)?)?;
    zeta_inv(group, &image, ZETA_SEARCH_BOUND.max(n.unsigned_abs() * 4 + 64))
}

/// The integers the properness certificate checks: `0, ±1, ..., ±3q`.
pub fn certificate_samples(q: i64) -> Vec<i64> {
    let mut s = vec![0];
    for k in 1..=3 * q.abs() {
        s.push(k);
        s.push(-k);
    }
    s
}

#[derive(Clone, Debug)]
pub struct ProperReport {
    pub q: i64,
    pub samples: Vec<i64>,
    /// `(ab)^q · n = n + q` on every sample.
    pub translation: bool,
    /// `b · n = -n` on every sample.
    pub reflection: bool,
    /// `x · n = ±n` for every basis element `x` of `B`.
    pub basis_signs: bool,
    /// Images of `qℤ`-samples under the generators stay in `qℤ`.
    pub orbit_in_qz: bool,
    /// `ab · 0`.
    pub ab_image_of_zero: i64,
    pub failures: Vec<String>,
}

impl ProperReport {
    /// All checks hold and `ab · 0` leaves `qℤ`, so `ab ∉ H(q)`.
    pub fn passed(&self) -> bool {
        self.translation && self.reflection && self.basis_signs && self.orbit_in_qz && self.ab_image_of_zero.rem_euclid(self.q) != 0
    }

    pub fn witness(&self) -> String {
        format!("z_action(ab,0)={}", self.ab_image_of_zero)
    }
}

/// Certificate that `H(q) = <(ab)^q, B>` is proper: `H(q)` maps `0` into
/// `qℤ`, while `ab` moves `0` to `1`.
pub fn hq_properness_certificate(group: &Group, q: i64) -> Result<ProperReport> {
    if q % 2 == 0 {
        return Err(Error::EvenQ(q));
    }
    if q < 1 {
        return Err(Error::InvalidQ(q));
    }
    let b = group.dihedral_witness()?;
    let ab = &group.a() * &b;
    let abq = ab.pow(q);
    let basis = group.b_basis();
    let samples = certificate_samples(q);
    let mut report = ProperReport {
        q,
        samples: samples.clone(),
        translation: true,
        reflection: true,
        basis_signs: true,
        orbit_in_qz: true,
        ab_image_of_zero: z_action(&ab, 0)?,
        failures: Vec::new(),
    };
    for &n in &samples {
        let t = z_action(&abq, n)?;
        if t != n + q {
            report.translation = false;
            report.failures.push(format!("(ab)^{q}·{n} = {t}"));
        }
        let r = z_action(&b, n)?;
        if r != -n {
            report.reflection = false;
            report.failures.push(format!("b·{n} = {r}"));
        }
        let mut images = vec![t];
        for (i, x) in basis.iter().enumerate() {
            let y = z_action(x, n)?;
            if y != n && y != -n {
                report.basis_signs = false;
                report.failures.push(format!("b{i}·{n} = {y}"));
            }
            images.push(y);
        }
        if n % q == 0 && images.iter().any(|y| y % q != 0) {
            report.orbit_in_qz = false;
            report.failures.push(format!("generator image of {n} leaves {q}Z"));
        }
    }
    if report.ab_image_of_zero.rem_euclid(q) == 0 {
        report.failures.push(format!("ab·0 = {} lies in {q}Z", report.ab_image_of_zero));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ge() -> Group {
        Group::new(GroupSpec::grigorchuk_erschler())
    }

    fn ray(s: &str) -> Ray {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert!(ray_equal(&ray("1(1)"), &ray("(1)")));
        assert!(ray_equal(&ray("(10)"), &ray("1(01)")));
        assert!(ray_equal(&ray("(1010)"), &ray("(10)")));
        assert!(!ray_equal(&ray("(1)"), &ray("0(1)")));
        assert_eq!(ray("0110(110)").to_string(), "(011)");
        assert_eq!(ray("0(10)").to_string(), "(01)");
        assert_eq!(ray("01(1)").prefix(4), vec![0, 1, 1, 1]);
        assert!("01".parse::<Ray>().is_err());
        assert!("0()".parse::<Ray>().is_err());
    }

    #[test]
    fn generator_actions() {
        let g = ge();
        let b = g.dihedral_witness().unwrap();
        assert_eq!(act_ray(&b, &ray("(1)")).unwrap(), ray("(1)"));
        assert_eq!(act_ray(&b, &ray("0(1)")).unwrap(), ray("00(1)"));
        assert_eq!(act_ray(&g.a(), &ray("(1)")).unwrap(), ray("0(1)"));
        // adds 1 right after the first 0
        assert_eq!(act_ray(&b, &ray("11(0)")).unwrap(), ray("1101(0)"));
        assert_eq!(act_ray(&b, &ray("(01)")).unwrap(), ray("00(01)"));
    }

    #[test]
    fn ray_action_agrees_with_prefix_action() {
        let g = Group::new(GroupSpec::new(3, &[1, 2]).unwrap());
        let x = g.parse("a b0 a^2 B<1,2> a b1").unwrap();
        for r in ["(2)", "01(21)", "(012)", "2(0)", "22(20)"] {
            let r = ray(r);
            let image = act_ray(&x, &r).unwrap();
            assert_eq!(image.prefix(12), x.act_on_vertex(&r.prefix(12)).unwrap());
        }
    }

    #[test]
    fn zeta_values() {
        let g = ge();
        assert_eq!(zeta(&g, 0).unwrap(), ray("(1)"));
        assert_eq!(zeta(&g, 1).unwrap(), ray("0(1)"));
        assert_eq!(zeta(&g, -1).unwrap(), ray("00(1)"));
        assert_eq!(zeta_inv(&g, &ray("0(1)"), 100).unwrap(), 1);
        assert_eq!(zeta_inv(&g, &zeta(&g, 7).unwrap(), 100).unwrap(), 7);
        assert_eq!(zeta_inv(&g, &ray("(0)"), 50).unwrap_err(), Error::NotInOrbit(50));
        let b = g.dihedral_witness().unwrap();
        assert_eq!(z_action(&(&g.a() * &b), 0).unwrap(), 1);
        assert_eq!(z_action(&b, 5).unwrap(), -5);
        let grig = Group::new(GroupSpec::grigorchuk());
        assert_eq!(zeta(&grig, 1).unwrap_err(), Error::NoDihedralWitness);
    }

    #[test]
    fn small_balls() {
        let g = ge();
        let ball = schreier_ball(&g, &Ray::ones(2), 3, SchreierGens::Dihedral).unwrap();
        let names: Vec<String> = ball.vertices.iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["(1)", "0(1)", "00(1)", "10(1)"]);
        assert_eq!(ball.path_labels().unwrap(), ["a", "b", "a"]);
        assert_eq!(ball.loops(), vec![(0, "b")]);
        assert!(ball.degrees.iter().all(|&d| d == 2));
        let zero = schreier_ball(&g, &Ray::ones(2), 0, SchreierGens::Full).unwrap();
        assert_eq!(zero.vertices.len(), 1);
        assert!(zero.edges.iter().all(|e| e.0 == 0 && e.1 == 0));
        let full = schreier_ball(&g, &Ray::ones(2), 6, SchreierGens::Full).unwrap();
        // same orbit, but some elements of B fix a vertex that b moves
        assert_eq!(full.vertices.len(), 7);
        assert!(full.degrees.iter().all(|&d| d <= 3));
        assert!(full.to_dot().starts_with("graph schreier {\n  n0 [label=\"(1)\"];"));
    }

    #[test]
    fn certificate() {
        let g = ge();
        let r = hq_properness_certificate(&g, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.witness(), "z_action(ab,0)=1");
        assert!(!hq_properness_certificate(&g, 1).unwrap().passed());
        assert_eq!(hq_properness_certificate(&g, 4).unwrap_err(), Error::EvenQ(4));
    }
}
