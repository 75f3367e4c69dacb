//! Drivers around the subgroups `H(q) = <(ab)^q, B>` of binary groups with a
//! dihedral witness `b = (a, b)`, plus group-level reports.

mod maximals;
mod reduce;
mod suite;

pub use maximals::{count_finite_index_maximals, MaximalDesc, MaximalsReport, MAX_LISTED_MAXIMALS};
pub use reduce::{lambda_form, reduction_trace, z_screen, LambdaForm, ReductionTrace, ScreenVerdict, TraceStep};
pub use suite::{classify, identity_suite, verify, Classification, Record, Status};

use crate::elements::{Element, Group, Letter};
use crate::error::{Error, Result};
use crate::perm::SubgroupDesc;

/// `H(q)` with its generators `(ab)^q, b_0, ..., b_{m-1}`.
#[derive(Clone, Debug)]
pub struct HqDesc {
    pub q: i64,
    pub witness: Element,
    pub generators: Vec<Element>,
}

fn check_q(q: i64) -> Result<()> {
    if q % 2 == 0 {
        return Err(Error::EvenQ(q));
    }
    if q < 1 {
        return Err(Error::InvalidQ(q));
    }
    Ok(())
}

pub fn hq(group: &Group, q: i64) -> Result<HqDesc> {
    check_q(q)?;
    let b = group.dihedral_witness()?;
    let ab = &group.a() * &b;
    let generators = std::iter::once(ab.pow(q)).chain(group.b_basis()).collect();
    Ok(HqDesc { q, witness: b, generators })
}

impl HqDesc {
    pub fn group(&self) -> &Group {
        self.witness.group()
    }

    pub fn ab(&self) -> Element {
        &self.group().a() * &self.witness
    }

    pub fn subgroup(&self) -> SubgroupDesc {
        SubgroupDesc::new(format!("H({})", self.q), self.group(), self.generators.clone(), false)
            .expect("generators come from the same group")
    }
}

/// `{x, x^{a(ba)^{q-1}} | x in the basis of B}`, generating `St_{H(q)}(1)`.
pub fn hq_stab_gens(group: &Group, q: i64) -> Result<Vec<Element>> {
    let h = hq(group, q)?;
    let t = &group.a() * &(&h.witness * &group.a()).pow(q - 1);
    let basis = group.b_basis();
    Ok(basis.iter().cloned().chain(basis.iter().map(|x| x.conj(&t))).collect())
}

/// `s ∈ St_G(1)` with `s = (g h0, h1)`, `h0, h1 ∈ H(q)`, `h1 = (ab)^{q n}`.
#[derive(Clone, Debug)]
pub struct SubdirectLift {
    pub s: Element,
    pub h0: Element,
    pub h1: Element,
    /// `h1 = (ab)^{q·n}`.
    pub n: i64,
}

/// Reads `y ∈ <a, b>` as `(ab)^l a^f`.
fn dihedral_coords(y: &Element, b_code: u32) -> Result<(i64, bool)> {
    let (mut l, mut f) = (0i64, false);
    for &x in y.letters() {
        match x {
            Letter::A(_) => f = !f,
            Letter::B(c) if c == b_code => {
                // (ab)^l b = (ab)^{l-1} a and (ab)^l a b = (ab)^{l+1}
                if f {
                    l += 1;
                } else {
                    l -= 1;
                }
                f = !f;
            }
            _ => return Err(Error::Internal(format!("{y} is not in <a, b>"))),
        }
    }
    Ok((l, f))
}

/// Builds `s = s1 s2`: `s1 = (g, y)` by `a -> b`, `x -> a ρ^{-1}(x) a`, then
/// `s2` built from `(acab)^{4m}` corrects `y` to a power of `(ab)^q`.
pub fn subdirect_lift(group: &Group, q: i64, g: &Element) -> Result<SubdirectLift> {
    let h = hq(group, q)?;
    if g.group() != group {
        return Err(Error::SpecMismatch);
    }
    let spec = group.spec();
    let b = h.witness.clone();
    let b_code = match b.letters() {
        [Letter::B(c)] => *c,
        _ => return Err(Error::Internal("witness is not a single letter".into())),
    };
    let (c, _) = group.cd()?;
    let a = group.a();
    let mut s1 = Vec::new();
    for &x in g.letters() {
        match x {
            Letter::A(_) => s1.push(Letter::B(b_code)),
            Letter::B(v) => s1.extend([Letter::A(1), Letter::B(spec.rho_inv_code(v)), Letter::A(1)]),
        }
    }
    let s1 = group.from_letters(s1);
    let (l, f) = dihedral_coords(&s1.section(1), b_code)?;
    // 4m + l = qn, with n taken in 0..4
    let n = (l * q).rem_euclid(4);
    let m = (q * n - l) / 4;
    let acab = &(&(&a * &c) * &a) * &b;
    let mut s2 = acab.pow(4 * m);
    let mut h0 = group.identity();
    if f {
        s2 = &(&(&a * &b) * &a) * &s2;
        h0 = b.clone();
    }
    let s = &s1 * &s2;
    let h1 = h.ab().pow(q * n);
    if s.root() != 0 || !s.section(0).equals(&(g * &h0)) || !s.section(1).equals(&h1) {
        return Err(Error::Internal(format!("subdirect lift of {g} failed its postcondition")));
    }
    Ok(SubdirectLift { s, h0, h1, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupSpec;

    fn ge() -> Group {
        Group::new(GroupSpec::grigorchuk_erschler())
    }

    #[test]
    fn hq_generators() {
        let g = ge();
        let h = hq(&g, 3).unwrap();
        assert_eq!(h.generators, vec![g.parse("(a b)^3").unwrap(), g.b(0), g.b(1)]);
        assert_eq!(hq(&g, 1).unwrap().generators[0], g.parse("a b").unwrap());
        assert_eq!(hq(&g, 2).unwrap_err(), Error::EvenQ(2));
        let grig = Group::new(GroupSpec::grigorchuk());
        assert_eq!(hq(&grig, 3).unwrap_err(), Error::NoDihedralWitness);
    }

    #[test]
    fn stabilizer_generators() {
        let g = ge();
        let gens = hq_stab_gens(&g, 3).unwrap();
        assert_eq!(gens.len(), 4);
        assert_eq!(gens[2], g.parse("b0^(a (b a)^2)").unwrap());
        let half = g.parse("(b a)").unwrap();
        for i in 0..2 {
            let v = crate::BVec::basis(2, i);
            let y = &gens[2 + i];
            assert_eq!(y.root(), 0);
            let rho = g.b_vec(&g.spec().rho_apply(&v));
            let omega = g.a_pow(g.spec().omega_apply(&v) as i64);
            assert!(y.section(0).equals(&rho.conj(&half.inverse())));
            assert!(y.section(1).equals(&omega.conj(&half)));
        }
    }

    #[test]
    fn subdirect_lifts() {
        let g = ge();
        for w in ["1", "a", "b0", "a b1 a b0", "b1 a b0 a b1 a"] {
            let x = g.parse(w).unwrap();
            let lift = subdirect_lift(&g, 3, &x).unwrap();
            assert!(lift.s.section(0).equals(&(&x * &lift.h0)));
            assert!(lift.h1.equals(&hq(&g, 3).unwrap().ab().pow(3 * lift.n)));
        }
    }
}
