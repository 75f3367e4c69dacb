//! The lift `φ: G -> St_G(1)` with `φ(g) = (g', g)` for binary Šunić groups.

use super::{Element, Group, Letter};
use crate::algebra::{BVec, GroupSpec};
use crate::error::{Error, Result};

/// The pair `c ∈ B_{-1} \ B_0`, `d ∈ B_0 \ B_1` with `c = (a, d)`.
///
/// `d` is the lexicographically smallest element of `B_0 \ B_1`; `c` is
/// `ρ^{-1}(d)` when that has `ω = 1`, otherwise the smallest `c` with
/// `ω(c) = 1` and `ρ(c) ∈ B_0 \ B_1`.
pub fn find_cd(spec: &GroupSpec) -> Result<(BVec, BVec)> {
    if spec.p() != 2 {
        return Err(Error::WrongCharacteristic(spec.p()));
    }
    if spec.m() < 2 {
        return Err(Error::StructureError("B_0 \\ B_1 is empty for m = 1".into()));
    }
    let b0 = spec.subspace_b(0);
    let b1 = spec.subspace_b(1);
    let in_diff = |v: &BVec| b0.contains(v) && !b1.contains(v);
    let d = (1..spec.b_size())
        .map(|c| spec.decode(c))
        .find(|v| in_diff(v))
        .ok_or_else(|| Error::StructureError("B_0 \\ B_1 is empty".into()))?;
    let candidate = spec.rho_inv_apply(&d);
    let (c, d) = if spec.omega_apply(&candidate) == 1 {
        (candidate, d)
    } else {
        (1..spec.b_size())
            .map(|code| spec.decode(code))
            .find(|c| spec.omega_apply(c) == 1 && in_diff(&spec.rho_apply(c)))
            .map(|c| {
                let d = spec.rho_apply(&c);
                (c, d)
            })
            .ok_or_else(|| Error::StructureError("no c with c = (a, d)".into()))?
    };
    if spec.omega_apply(&c) != 1 || spec.rho_apply(&c) != d {
        return Err(Error::StructureError("c does not satisfy c = (a, d)".into()));
    }
    Ok((c, d))
}

impl Group {
    /// The elements `c` and `d` of [`find_cd`].
    pub fn cd(&self) -> Result<(Element, Element)> {
        let (c, d) = find_cd(self.spec())?;
        Ok((self.b_vec(&c), self.b_vec(&d)))
    }
}

impl Element {
    /// `φ(a) = aca`, `φ(x) = ρ^{-1}(x)` on B, extended multiplicatively.
    pub fn phi_lift(&self) -> Result<Element> {
        let spec = self.spec();
        if spec.p() != 2 {
            return Err(Error::WrongCharacteristic(spec.p()));
        }
        if spec.m() < 2 {
            return Err(Error::DegenerateCase);
        }
        let (c, _) = find_cd(spec)?;
        let c = spec.encode(&c);
        let group = self.group();
        let mut out = Vec::with_capacity(self.len() * 3);
        for &l in self.letters() {
            match l {
                Letter::A(_) => out.extend([Letter::A(1), Letter::B(c), Letter::A(1)]),
                Letter::B(v) => out.push(Letter::B(spec.rho_inv_code(v))),
            }
        }
        Ok(group.from_letters(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cd_pairs() {
        let ge = GroupSpec::grigorchuk_erschler();
        assert_eq!(find_cd(&ge), Ok((BVec::new(vec![0, 1]), BVec::new(vec![1, 0]))));
        let grig = GroupSpec::grigorchuk();
        let (c, d) = find_cd(&grig).unwrap();
        assert_eq!(d, BVec::new(vec![1, 0]));
        assert_eq!(c, BVec::new(vec![1, 1]));
        let g = Group::new(grig);
        let w = g.b_vec(&c).wreath();
        assert_eq!(w.root, 0);
        assert_eq!(w.sections, vec![g.a(), g.b_vec(&d)]);
        assert!(matches!(find_cd(&GroupSpec::infinite_dihedral()), Err(Error::StructureError(_))));
    }

    #[test]
    fn lift_examples() {
        let g = Group::new(GroupSpec::grigorchuk_erschler());
        assert!(g.identity().phi_lift().unwrap().is_empty());
        let (c, d) = g.cd().unwrap();
        let lifted = g.a().phi_lift().unwrap();
        assert_eq!(lifted, &(&g.a() * &c) * &g.a());
        let w = lifted.wreath();
        assert_eq!(w.root, 0);
        assert_eq!(w.sections, vec![d, g.a()]);
        let lifted = g.b(1).phi_lift().unwrap();
        assert_eq!(lifted, g.b(0));
        assert_eq!(lifted.section(1), g.b(1));
        let dih = Group::new(GroupSpec::infinite_dihedral());
        assert_eq!(dih.a().phi_lift(), Err(Error::DegenerateCase));
    }
}
