//! Finite-level experiments on `π_n(G)`: orders, density, derived series,
//! rigid stabilizers and the branching structure. All checks verify necessary
//! consequences at level `n`, never the infinite statements themselves.

use num_bigint::BigUint;

use super::chain::{LayerSpec, PermChain};
use super::{level_perm, vertex_of, LevelPerm};
use crate::elements::{Element, Group};
use crate::error::{Error, Result};

/// A subgroup of `G` given by generators, optionally closed normally in `G`.
#[derive(Clone, Debug)]
pub struct SubgroupDesc {
    pub name: String,
    pub group: Group,
    pub generators: Vec<Element>,
    pub normal_closure: bool,
}

impl SubgroupDesc {
    pub fn new(name: impl Into<String>, group: &Group, generators: Vec<Element>, normal_closure: bool) -> Result<Self> {
        if generators.iter().any(|g| g.group() != group) {
            return Err(Error::SpecMismatch);
        }
        Ok(SubgroupDesc { name: name.into(), group: group.clone(), generators, normal_closure })
    }

    /// `G = ⟨a, b_0, ..., b_{m-1}⟩`.
    pub fn whole(group: &Group) -> Self {
        SubgroupDesc { name: "G".into(), group: group.clone(), generators: standard_generators(group), normal_closure: false }
    }

    /// `G' = ⟨[a, b_i]⟩^G`.
    pub fn derived(group: &Group) -> Self {
        let a = group.a();
        let gens = group.b_basis().iter().map(|b| a.commutator(b)).collect();
        SubgroupDesc { name: "G'".into(), group: group.clone(), generators: gens, normal_closure: true }
    }

    /// `K = ⟨[a, x] | x ∈ B_1⟩^G`.
    pub fn branching_k(group: &Group) -> Self {
        let spec = group.spec();
        let a = group.a();
        let gens = spec
            .subspace_b(1)
            .basis()
            .iter()
            .map(|v| a.commutator(&group.b_vec(&crate::algebra::BVec::new(v.clone()))))
            .collect();
        SubgroupDesc { name: "K".into(), group: group.clone(), generators: gens, normal_closure: true }
    }

    /// Normal closure of `B_1`.
    pub fn b1_closure(group: &Group) -> Self {
        let spec = group.spec();
        let gens =
            spec.subspace_b(1).basis().iter().map(|v| group.b_vec(&crate::algebra::BVec::new(v.clone()))).collect();
        SubgroupDesc { name: "B1^G".into(), group: group.clone(), generators: gens, normal_closure: true }
    }
}

pub(crate) fn standard_generators(group: &Group) -> Vec<Element> {
    std::iter::once(group.a()).chain(group.b_basis()).collect()
}

fn perms(xs: &[Element], n: usize) -> Result<Vec<LevelPerm>> {
    xs.iter().map(|x| level_perm(x, n)).collect()
}

/// The chain of `π_n(H)`.
pub fn chain_from(desc: &SubgroupDesc, n: usize) -> Result<PermChain> {
    let p = desc.group.p();
    let gens = perms(&desc.generators, n)?;
    if desc.normal_closure {
        let ambient = perms(&standard_generators(&desc.group), n)?;
        PermChain::generate(p, n, &gens, Some(&ambient))
    } else {
        PermChain::generate(p, n, &gens, None)
    }
}

pub fn member(chain: &PermChain, perm: &LevelPerm) -> Result<bool> {
    chain.contains(perm)
}

/// The `k`-th derived subgroup of the finite group held by `chain`.
pub fn derived_chain(chain: &PermChain, k: usize) -> Result<PermChain> {
    let mut cur = chain.clone();
    for _ in 0..k {
        // Entries always generate the group, whatever the chain was built from.
        let gens = cur.entries();
        let mut comms = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let c = gens[i].commutator(&gens[j]);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        cur = PermChain::generate(cur.p(), cur.n(), &comms, Some(&gens))?;
    }
    Ok(cur)
}

#[derive(Clone, Debug)]
pub struct StabDerivedReport {
    pub n: usize,
    /// Level whose stabilizer is tested against `π_n(G)'`.
    pub level: usize,
    pub stab_order: BigUint,
    pub derived_order: BigUint,
    pub in_derived: bool,
    /// Odd `p`: the level-`(m+3)` stabilizer against `π_n(G)''`.
    pub second: Option<(usize, BigUint, BigUint, bool)>,
}

impl StabDerivedReport {
    pub fn passed(&self) -> bool {
        self.in_derived && self.second.as_ref().is_none_or(|s| s.3)
    }
}

fn contains_all(chain: &PermChain, xs: &[LevelPerm]) -> Result<bool> {
    for x in xs {
        if !chain.contains(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `St(m+1) ⊆ π_n(G)'`, and for odd `p` also `St(m+3) ⊆ π_n(G)''`.
pub fn stab_in_derived_check(group: &Group, n: usize) -> Result<StabDerivedReport> {
    let spec = group.spec();
    if spec.is_degenerate() {
        return Err(Error::DegenerateCase);
    }
    let m = spec.m();
    let need = if spec.p() == 2 { m + 1 } else { m + 3 };
    if n <= need {
        return Err(Error::LevelMismatch { expected: need + 1, got: n });
    }
    let g = chain_from(&SubgroupDesc::whole(group), n)?;
    let d1 = chain_from(&SubgroupDesc::derived(group), n)?;
    let stab = g.entries_from_layer(m + 1);
    let in_derived = contains_all(&d1, &stab)?;
    let second = if spec.p() == 2 {
        None
    } else {
        let d2 = derived_chain(&d1, 1)?;
        let stab3 = g.entries_from_layer(m + 3);
        let ok = contains_all(&d2, &stab3)?;
        Some((m + 3, g.tail(m + 3).order(), d2.order(), ok))
    };
    Ok(StabDerivedReport {
        n,
        level: m + 1,
        stab_order: g.tail(m + 1).order(),
        derived_order: d1.order(),
        in_derived,
        second,
    })
}

#[derive(Clone, Debug)]
pub struct RigidReport {
    pub rist: PermChain,
    /// The expected projection is contained in the projected rigid stabilizer.
    pub contains_expected: Option<bool>,
    /// The projected rigid stabilizer is contained in the expected group.
    pub contained_in_expected: Option<bool>,
}

/// Elements of the group held by `chain` supported on the subtree below `v`.
pub fn rigid_stab_level(chain: &PermChain, v: &[u32]) -> Result<PermChain> {
    let (p, n) = (chain.p(), chain.n());
    let l = v.len();
    if l >= n || v.iter().any(|&x| x >= p) {
        return Err(Error::InvalidVertex(format!("{v:?}")));
    }
    if l == 0 {
        return Ok(chain.clone());
    }
    let stab = chain.entries_from_layer(l);
    let inside = |k: usize, i: u32| -> bool {
        let prefix = vertex_of(p, k, i);
        prefix[..l] == *v
    };
    let mut layers = Vec::new();
    for k in l..n {
        let cols = (0..p.pow(k as u32)).filter(|&i| !inside(k, i)).map(|i| (k, i)).collect();
        layers.push(LayerSpec { columns: cols });
    }
    let outside_layers = layers.len();
    for k in l..n {
        let cols = (0..p.pow(k as u32)).filter(|&i| inside(k, i)).map(|i| (k, i)).collect();
        layers.push(LayerSpec { columns: cols });
    }
    let mut table = PermChain::with_layers(p, n, l, layers);
    table.extend(&stab, &stab)?;
    Ok(table.tail(outside_layers))
}

/// Rigid stabilizer of a first-level vertex compared with `π_{n-1}` of the
/// normal closure of `B_1` (binary groups with `m >= 2`).
pub fn rigid_stab_report(group: &Group, v: u32, n: usize) -> Result<RigidReport> {
    let spec = group.spec();
    let g = chain_from(&SubgroupDesc::whole(group), n)?;
    let rist = rigid_stab_level(&g, &[v])?;
    if spec.p() != 2 || spec.m() < 2 {
        return Ok(RigidReport { rist, contains_expected: None, contained_in_expected: None });
    }
    let expected = chain_from(&SubgroupDesc::b1_closure(group), n - 1)?;
    let mut contains = true;
    for x in expected.entries() {
        if !rist.contains(&x.embed_at(spec.p(), n, &[v])?)? {
            contains = false;
            break;
        }
    }
    let mut contained = true;
    for x in rist.entries() {
        let proj = x.project_at(&[v]).ok_or_else(|| Error::Internal("rigid element leaves its subtree".into()))?;
        if !expected.contains(&proj)? {
            contained = false;
            break;
        }
    }
    Ok(RigidReport { rist, contains_expected: Some(contains), contained_in_expected: Some(contained) })
}

#[derive(Clone, Debug)]
pub struct BranchReport {
    pub n: usize,
    pub subgroup: String,
    pub checked: usize,
    pub failures: usize,
}

impl BranchReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `π_{n-1}(K)` placed on any single first-level subtree lies in `π_n(K)`,
/// where `K` is the branching subgroup (`K` for binary groups, `G'` for odd `p`).
pub fn branch_pair_check(group: &Group, n: usize) -> Result<BranchReport> {
    let spec = group.spec();
    if spec.is_degenerate() {
        return Err(Error::DegenerateCase);
    }
    if n < 2 {
        return Err(Error::LevelMismatch { expected: 2, got: n });
    }
    let desc = if spec.p() == 2 { SubgroupDesc::branching_k(group) } else { SubgroupDesc::derived(group) };
    let big = chain_from(&desc, n)?;
    let small = chain_from(&desc, n - 1)?;
    let mut checked = 0;
    let mut failures = 0;
    let gens = perms(&desc.generators, n - 1)?;
    for k in gens.iter().chain(small.entries().iter()) {
        for x in 0..spec.p() {
            checked += 1;
            if !big.contains(&k.embed_at(spec.p(), n, &[x])?)? {
                failures += 1;
            }
        }
    }
    Ok(BranchReport { n, subgroup: desc.name, checked, failures })
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub n: usize,
    pub order_h: BigUint,
    pub order_g: BigUint,
    pub generators_in_h: bool,
}

impl DensityReport {
    pub fn dense(&self) -> bool {
        self.order_h == self.order_g && self.generators_in_h
    }
}

/// `π_n(H) = π_n(G)`.
pub fn density_check(desc: &SubgroupDesc, n: usize) -> Result<DensityReport> {
    let h = chain_from(desc, n)?;
    let g = chain_from(&SubgroupDesc::whole(&desc.group), n)?;
    density_against(&h, &g, &desc.group)
}

pub(crate) fn density_against(h: &PermChain, g: &PermChain, group: &Group) -> Result<DensityReport> {
    let n = h.n();
    let gens = perms(&standard_generators(group), n)?;
    Ok(DensityReport { n, order_h: h.order(), order_g: g.order(), generators_in_h: contains_all(h, &gens)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupSpec;

    #[test]
    fn small_orders() {
        let g = Group::new(GroupSpec::grigorchuk());
        let c1 = chain_from(&SubgroupDesc::whole(&g), 1).unwrap();
        assert_eq!(c1.order(), BigUint::from(2u32));
        let c3 = chain_from(&SubgroupDesc::whole(&g), 3).unwrap();
        assert_eq!(c3.order(), BigUint::from(128u32));
        // |π_n(Γ)| = 2^{5·2^{n-3}+2} for n ≥ 3
        let c5 = chain_from(&SubgroupDesc::whole(&g), 5).unwrap();
        assert_eq!(c5.rank(), 22);
        let empty = SubgroupDesc::new("1", &g, vec![], false).unwrap();
        assert_eq!(chain_from(&empty, 3).unwrap().order(), BigUint::from(1u32));
    }

    #[test]
    fn derived_of_cyclic_is_trivial() {
        let g = Group::new(GroupSpec::grigorchuk());
        let c1 = chain_from(&SubgroupDesc::whole(&g), 1).unwrap();
        assert_eq!(derived_chain(&c1, 1).unwrap().rank(), 0);
        let b = SubgroupDesc::new("B", &g, g.b_basis(), false).unwrap();
        let cb = chain_from(&b, 4).unwrap();
        assert_eq!(derived_chain(&cb, 1).unwrap().rank(), 0);
    }

    #[test]
    fn abelianization_index() {
        for spec in [GroupSpec::grigorchuk(), GroupSpec::grigorchuk_erschler(), GroupSpec::fabrykowski_gupta()] {
            let g = Group::new(spec.clone());
            let n = spec.m() + 2;
            let whole = chain_from(&SubgroupDesc::whole(&g), n).unwrap();
            let d = chain_from(&SubgroupDesc::derived(&g), n).unwrap();
            assert_eq!(whole.rank() - d.rank(), spec.m() + 1, "{spec}");
            assert_eq!(derived_chain(&whole, 1).unwrap().rank(), d.rank());
        }
    }

    #[test]
    fn rigid_stabilizers() {
        let g = Group::new(GroupSpec::grigorchuk());
        let chain = chain_from(&SubgroupDesc::whole(&g), 4).unwrap();
        assert_eq!(rigid_stab_level(&chain, &[]).unwrap().rank(), chain.rank());
        let r = rigid_stab_level(&chain, &[0]).unwrap();
        for x in r.entries() {
            assert!(x.project_at(&[0]).is_some());
            assert!(x.project_at(&[1]).unwrap().is_identity());
            assert!(chain.contains(&x).unwrap());
        }
        let trivial = PermChain::empty(2, 4);
        assert_eq!(rigid_stab_level(&trivial, &[1]).unwrap().rank(), 0);
        let rep = rigid_stab_report(&g, 0, 5).unwrap();
        assert_eq!(rep.contains_expected, Some(true));
    }

    #[test]
    fn density_examples() {
        let g = Group::new(GroupSpec::grigorchuk_erschler());
        assert!(density_check(&SubgroupDesc::whole(&g), 4).unwrap().dense());
        let b = SubgroupDesc::new("B", &g, g.b_basis(), false).unwrap();
        assert!(!density_check(&b, 1).unwrap().dense());
    }
}
