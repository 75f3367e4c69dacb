use std::fmt;

use super::{count_finite_index_maximals, hq_stab_gens};
use crate::algebra::{BVec, GroupSpec};
use crate::elements::{Element, Group};
use crate::error::{Error, Result};
use crate::perm::{branch_pair_check, rigid_stab_report, stab_in_derived_check};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One line of a report: `suite=... item=... status=... witness=...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub suite: String,
    pub item: String,
    pub status: Status,
    pub witness: String,
}

impl Record {
    pub fn new(suite: &str, item: impl Into<String>, status: Status, witness: impl Into<String>) -> Self {
        Record { suite: suite.into(), item: item.into(), status, witness: witness.into() }
    }

    fn check(suite: &str, item: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        Record::new(suite, item, if ok { Status::Pass } else { Status::Fail }, witness)
    }
}

fn quote(s: &str) -> String {
    if !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || c == '"' || c == '=') {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} item={} status={} witness={}",
            quote(&self.suite),
            quote(&self.item),
            self.status,
            quote(&self.witness)
        )
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub spec: GroupSpec,
    pub faithful: bool,
    /// `None` for the infinite dihedral group, where the criterion does not apply.
    pub torsion: Option<bool>,
    pub dihedral: Option<BVec>,
    pub divisible_by_x_plus_one: bool,
    pub maximals: Option<u64>,
    pub degenerate: bool,
}

impl Classification {
    pub fn records(&self) -> Vec<Record> {
        let s = "classify";
        let opt = |x: Option<String>| x.unwrap_or_else(|| "n/a".into());
        vec![
            Record::new(s, "spec", Status::Pass, self.spec.to_string()),
            Record::check(s, "faithful", self.faithful, self.faithful.to_string()),
            Record::new(s, "torsion", Status::Pass, opt(self.torsion.map(|t| t.to_string()))),
            Record::new(s, "dihedral", Status::Pass, opt(self.dihedral.as_ref().map(|v| format!("{:?}", v.coords())))),
            Record::new(s, "x+1_divides_f", Status::Pass, self.divisible_by_x_plus_one.to_string()),
            Record::new(s, "maximals", Status::Pass, opt(self.maximals.map(|m| m.to_string()))),
            Record::new(s, "degenerate", Status::Pass, self.degenerate.to_string()),
        ]
    }
}

pub fn classify(spec: &GroupSpec) -> Result<Classification> {
    let group = Group::new(spec.clone());
    let degenerate = spec.is_degenerate();
    Ok(Classification {
        spec: spec.clone(),
        faithful: spec.is_faithful(),
        torsion: if degenerate { None } else { Some(spec.is_torsion()?) },
        dihedral: spec.dihedral_witness().unwrap_or(None),
        divisible_by_x_plus_one: spec.divisible_by_x_plus_one(),
        maximals: if degenerate { None } else { Some(count_finite_index_maximals(&group)?.count) },
        degenerate,
    })
}

/// `ψ(x) = (root; sections)` as exact group equalities.
fn wreath_is(x: &Element, root: u32, sections: &[Element]) -> bool {
    x.root() == root && x.sections().iter().zip(sections).all(|(s, t)| s.equals(t))
}

/// Fixed list of identities from the structure theory, each decided exactly.
pub fn identity_suite(group: &Group) -> Vec<Record> {
    let spec = group.spec();
    let (p, m) = (spec.p(), spec.m());
    let a = group.a();
    let basis = group.b_basis();
    let mut out = Vec::new();
    let rel = "relations";
    out.push(Record::check(rel, "a^p=1", a.pow(p as i64).is_trivial(), format!("p={p}")));
    for (i, b) in basis.iter().enumerate() {
        out.push(Record::check(rel, format!("b{i}^p=1"), b.pow(p as i64).is_trivial(), ""));
        for (j, c) in basis.iter().enumerate().skip(i + 1) {
            out.push(Record::check(rel, format!("[b{i},b{j}]=1"), b.commutator(c).is_trivial(), ""));
        }
    }
    // ψ(b_i) = (a^{ω(b_i)}, 1, ..., 1, ρ(b_i))
    for (i, b) in basis.iter().enumerate() {
        let v = BVec::basis(m, i);
        let mut sections = vec![group.identity(); p as usize];
        sections[0] = group.a_pow(spec.omega_apply(&v) as i64);
        sections[p as usize - 1] = group.b_vec(&spec.rho_apply(&v));
        out.push(Record::check("wreath", format!("psi(b{i})"), wreath_is(b, 0, &sections), b.to_string()));
    }
    if p != 2 || m < 2 {
        out.push(Record::new("binary", "*", Status::Skip, "needs p = 2 and m >= 2"));
        return out;
    }
    let s = "projections";
    for i in 0..m {
        let x = a.commutator(&basis[i]).section(1);
        if i + 1 < m {
            out.push(Record::check(s, format!("phi1([a,b{i}])=b{}", i + 1), x.equals(&basis[i + 1]), x.to_string()));
        } else {
            let want = &a * &group.b_vec(&spec.rho_apply(&BVec::basis(m, i)));
            out.push(Record::check(s, format!("phi1([a,b{i}])=a rho(b{i})"), x.equals(&want), x.to_string()));
        }
    }
    let last = BVec::basis(m, m - 1);
    let rho_last = spec.rho_apply(&last);
    let sq = a.commutator(&basis[m - 1]).pow(2).section(1).section(1);
    let want = &group.a_pow(spec.omega_apply(&rho_last) as i64) * &group.b_vec(&spec.rho_apply(&rho_last));
    out.push(Record::check(s, format!("phi11([a,b{}]^2)", m - 1), sq.equals(&want), sq.to_string()));

    match group.cd() {
        Ok((c, d)) => {
            out.push(Record::check("lift", "c=(a,d)", wreath_is(&c, 0, &[a.clone(), d.clone()]), c.to_string()));
            out.push(Record::check("lift", "(ad)^4=1", (&a * &d).pow(4).is_trivial(), d.to_string()));
            for (name, x) in std::iter::once(("a".to_string(), a.clone()))
                .chain(basis.iter().enumerate().map(|(i, b)| (format!("b{i}"), b.clone())))
            {
                let ok = x.phi_lift().is_ok_and(|y| y.root() == 0 && y.section(1).equals(&x));
                out.push(Record::check("lift", format!("phi({name}) = (*, {name})"), ok, ""));
            }
        }
        Err(e) => out.push(Record::new("lift", "*", Status::Skip, e.to_string())),
    }

    let Ok(b) = group.dihedral_witness() else {
        out.push(Record::new("dihedral", "*", Status::Skip, "no b = (a, b)"));
        return out;
    };
    let ds = "dihedral";
    out.push(Record::check(ds, "b=(a,b)", wreath_is(&b, 0, &[a.clone(), b.clone()]), b.to_string()));
    let ab = &a * &b;
    let ba = &b * &a;
    for q in [3i64, 5] {
        let x = ab.pow(2 * q);
        out.push(Record::check(ds, format!("psi((ab)^{})", 2 * q), wreath_is(&x, 0, &[ba.pow(q), ab.pow(q)]), ""));
        let h = (q - 1) / 2;
        let y = &(&(&ba.pow(h) * &ab.pow(q)) * &b) * &ab.pow(h);
        out.push(Record::check(ds, format!("a=(ba)^{h}(ab)^{q}b(ab)^{h}"), y.equals(&a), ""));
        let gens = hq_stab_gens(group, q).expect("witness exists");
        for (i, y) in gens[m..].iter().enumerate() {
            let v = BVec::basis(m, i);
            let rho = group.b_vec(&spec.rho_apply(&v));
            let omega = group.a_pow(spec.omega_apply(&v) as i64);
            let ok = wreath_is(y, 0, &[rho.conj(&ab.pow(h)), omega.conj(&ba.pow(h))]);
            out.push(Record::check(ds, format!("psi(b{i}^(a(ba)^{})) q={q}", q - 1), ok, ""));
        }
    }
    out
}

/// Identity suite plus finite-level stabilizer, branching and rigid
/// stabilizer checks at desk-scale levels. Degenerate groups get the identity
/// suite only.
pub fn verify(group: &Group) -> Result<Vec<Record>> {
    let mut out = identity_suite(group);
    let spec = group.spec();
    if spec.is_degenerate() {
        out.push(Record::new("csp", "*", Status::Skip, Error::DegenerateCase.to_string()));
        return Ok(out);
    }
    let m = spec.m();
    let (csp_n, branch_n) = if spec.p() == 2 { (m + 3, 6) } else { (m + 4, 3) };
    let r = stab_in_derived_check(group, csp_n)?;
    out.push(Record::check(
        "csp",
        format!("St({})<=G' at n={csp_n}", r.level),
        r.in_derived,
        format!("|St|={} |G'|={}", r.stab_order, r.derived_order),
    ));
    if let Some((level, stab, d2, ok)) = &r.second {
        out.push(Record::check("csp", format!("St({level})<=G'' at n={csp_n}"), *ok, format!("|St|={stab} |G''|={d2}")));
    }
    let br = branch_pair_check(group, branch_n)?;
    out.push(Record::check(
        "branch",
        format!("{}x..x{} <= {} at n={branch_n}", br.subgroup, br.subgroup, br.subgroup),
        br.passed(),
        format!("checked={} failures={}", br.checked, br.failures),
    ));
    let rist = rigid_stab_report(group, spec.p() - 1, branch_n)?;
    let fmt_opt = |x: Option<bool>| x.map_or("n/a".to_string(), |b| b.to_string());
    out.push(Record::new(
        "rist",
        format!("rist({}) at n={branch_n}", spec.p() - 1),
        Status::Pass,
        format!(
            "order={} contains_expected={} contained_in_expected={}",
            rist.rist.order(),
            fmt_opt(rist.contains_expected),
            fmt_opt(rist.contained_in_expected)
        ),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_table() {
        let g = classify(&GroupSpec::grigorchuk()).unwrap();
        assert_eq!((g.torsion, g.dihedral.is_none(), g.maximals), (Some(true), true, Some(7)));
        let ge = classify(&GroupSpec::grigorchuk_erschler()).unwrap();
        assert_eq!((ge.torsion, ge.dihedral.map(|v| v.coords().to_vec()), ge.maximals), (Some(false), Some(vec![1, 1]), Some(7)));
        let d = classify(&GroupSpec::infinite_dihedral()).unwrap();
        assert!(d.degenerate && d.maximals.is_none());
    }

    #[test]
    fn suites_pass() {
        for spec in [GroupSpec::grigorchuk(), GroupSpec::grigorchuk_erschler(), GroupSpec::fabrykowski_gupta(), GroupSpec::infinite_dihedral()] {
            let records = identity_suite(&Group::new(spec.clone()));
            let failed: Vec<_> = records.iter().filter(|r| r.status == Status::Fail).collect();
            assert!(failed.is_empty(), "{spec}: {failed:?}");
        }
    }

    #[test]
    fn record_lines() {
        let r = Record::new("s", "x y", Status::Pass, "");
        assert_eq!(r.to_string(), "suite=s item=\"x y\" status=PASS witness=\"\"");
    }
}
